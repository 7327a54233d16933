# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import typing as t

import pytest

import korbit
from korbit.claims.checks import (
    CLAIMS,
    check_block_kernel_normal,
    check_direct_product_ld_intransitive,
    check_div4,
    check_fixes_at_most_one,
    check_ld,
    check_nmd_imprimitive,
    check_primitive_odd_not_simple,
    check_regular_subgroup,
    check_stabilizer_semiregular,
    find_regular_element,
    verify_witness,
)
from korbit.claims.report import CLAIM_IDS, ClaimReport, parse_subgroup_text
from korbit.core.group import (
    PermutationGroup,
    coset_action,
    direct_product,
    generate,
)

Build = t.Callable[..., PermutationGroup]

FROBENIUS = ["F21", "F21r", "F55", "F39"]

ODD_PRIMITIVE_CHECKS = [
    check_primitive_odd_not_simple,
    check_fixes_at_most_one,
    check_stabilizer_semiregular,
    check_regular_subgroup,
    check_ld,
]


def test_every_claim_is_registered() -> None:
    assert set(CLAIMS) == set(CLAIM_IDS)
    assert CLAIMS["C7-div4"].description.startswith("The order")
    assert CLAIMS["LD-direct-product"].arity == "pair"
    assert CLAIMS["H1-hunt"].arity == "catalog"


@pytest.mark.parametrize("group_id", FROBENIUS)
@pytest.mark.parametrize("check", ODD_PRIMITIVE_CHECKS)
def test_frobenius_groups_hold(
    group: Build, group_id: str, check: t.Callable[..., ClaimReport]
) -> None:
    report = check(group(group_id))
    assert report.verdict == "holds", report.reason
    assert report.group_id == group_id
    assert report.elapsed >= 0


@pytest.mark.parametrize(
    ("group_id", "reason"),
    [
        ("S3", "even order 6"),
        ("C5", "abelian"),
        ("C3xC3", "not transitive"),
        ("D5", "even order 10"),
    ],
)
@pytest.mark.parametrize("check", ODD_PRIMITIVE_CHECKS)
def test_odd_primitive_filter(
    group: Build,
    group_id: str,
    reason: str,
    check: t.Callable[..., ClaimReport],
) -> None:
    report = check(group(group_id))
    assert report.verdict == "not-applicable"
    assert report.reason == reason


def test_odd_imprimitive_is_filtered(group: Build) -> None:
    regular = coset_action(group("F21"), generate([], 7)).image()
    assert regular.degree == 21
    assert regular.order == 21
    report = check_fixes_at_most_one(regular)
    assert report.verdict == "not-applicable"
    assert report.reason == "imprimitive"


def test_regular_normal_subgroup_witness(group: Build) -> None:
    f21 = group("F21")
    report = check_primitive_odd_not_simple(f21)
    assert report.witness_kind == "subgroup"
    [gens] = parse_subgroup_text(report.witness or "", 7)
    kernel = f21.subgroup(gens)
    assert kernel.order == 7
    assert report.reason == "regular normal subgroup of order 7"


def test_regular_subgroup_text(group: Build) -> None:
    report = check_regular_subgroup(group("F55"))
    assert report.reason == (
        "10 regular elements close into a normal regular subgroup"
    )
    [gens] = parse_subgroup_text(report.witness or "", 11)
    assert group("F55").subgroup(gens).order == 11


def test_stabilizer_reason(group: Build) -> None:
    report = check_stabilizer_semiregular(group("F39"))
    assert report.reason == (
        "stabilizers of order 3 < 13, semiregular on the other 12 points"
    )


@pytest.mark.parametrize(
    ("group_id", "verdict"),
    [
        ("D4", "holds"),
        ("C4", "holds"),
        ("C2xC2", "holds"),
        ("Q8", "holds"),
        ("S3reg", "holds"),
        ("D6", "holds"),
        ("S4", "not-applicable"),
        ("F21", "not-applicable"),
    ],
)
def test_block_kernels(group: Build, group_id: str, verdict: str) -> None:
    assert check_block_kernel_normal(group(group_id)).verdict == verdict


def test_block_kernel_notes_non_md(group: Build) -> None:
    report = check_block_kernel_normal(group("S3reg"))
    assert "not an md-representation: kernels may be trivial" in report.notes
    assert report.reason.startswith("4 minimal block system(s)")


def test_block_kernel_without_lattice(group: Build) -> None:
    d8 = group("D8", config=korbit.config(lattice_cap=4))
    report = check_block_kernel_normal(d8)
    assert report.verdict == "holds"
    assert any(n.startswith("md status undecided") for n in report.notes)


@pytest.mark.parametrize(
    ("group_id", "verdict", "reason"),
    [
        ("A5", "holds", "order 60 = 4 * 15"),
        ("PSL27", "holds", "order 168 = 4 * 42"),
        ("C5", "not-applicable", "abelian"),
        ("S4", "not-applicable", "not simple"),
        ("F21", "not-applicable", "not simple"),
    ],
)
def test_div4(group: Build, group_id: str, verdict: str, reason: str) -> None:
    report = check_div4(group(group_id))
    assert (report.verdict, report.reason) == (verdict, reason)


@pytest.mark.parametrize(
    "group_id", ["C4", "S4", "A4", "D5", "Q8", "S3reg", "PSL27", "F39"]
)
def test_regular_element_found(group: Build, group_id: str) -> None:
    g = group(group_id)
    report = find_regular_element(g)
    assert report.verdict == "holds"
    assert report.witness_kind == "element"
    assert "not a proof" in report.notes[0]
    element = korbit.parse_cycles(report.witness or "", g.degree)
    assert element in g
    assert element.is_regular()
    assert not element.is_identity()


def test_regular_element_not_applicable(group: Build) -> None:
    assert find_regular_element(group("C1")).reason == "trivial group"
    product = direct_product(group("C2"), group("C3"), name="C2xC3")
    assert find_regular_element(product).reason == "not transitive"


@pytest.mark.parametrize(
    ("first", "second", "degree", "transitive"),
    [
        ("C2", "C2", 4, 4),
        ("C3", "C3", 6, 9),
        ("C2", "C3", 5, 6),
        ("S3", "C2", 5, 6),
    ],
)
def test_direct_product_ld(
    group: Build, first: str, second: str, degree: int, transitive: int
) -> None:
    report = check_direct_product_ld_intransitive(
        group(first), group(second)
    )
    assert report.verdict == "holds"
    assert report.group_id == f"{first}x{second}"
    assert report.reason.startswith(f"minimal faithful degree {degree} = ")
    assert report.reason.endswith("intransitive")
    assert report.notes == (f"best transitive degree {transitive}",)


@pytest.mark.parametrize(
    ("group_id", "verdict"),
    [
        ("S3reg", "holds"),
        ("Q8", "not-applicable"),
        ("D4", "not-applicable"),
        ("S4", "not-applicable"),
        ("C2xC2", "not-applicable"),
    ],
)
def test_nmd_imprimitive(group: Build, group_id: str, verdict: str) -> None:
    assert check_nmd_imprimitive(group(group_id)).verdict == verdict


def test_nmd_witness_is_overgroup(group: Build) -> None:
    s3 = group("S3reg")
    report = check_nmd_imprimitive(s3)
    [gens] = parse_subgroup_text(report.witness or "", 6)
    assert s3.subgroup(gens).order == 2
    assert "blocks of size 2" in report.reason


def test_caps_give_undecided(group: Build) -> None:
    f21 = group("F21", config=korbit.config(element_cap=10))
    report = check_regular_subgroup(f21)
    assert report.verdict == "undecided"
    assert "element cap of 10" in report.reason

    capped = group("F21", config=korbit.config(lattice_cap=10))
    assert check_ld(capped).verdict == "undecided"


def failed(
    claim_id: str, group_id: str, witness: str, kind: str
) -> ClaimReport:
    return ClaimReport(
        claim_id=claim_id,
        group_id=group_id,
        verdict="fails",
        witness=witness,
        witness_kind=kind,  # type: ignore[arg-type]
    )


@pytest.mark.parametrize(
    ("report", "group_id", "expected"),
    [
        (failed("L3-fix-at-most-one", "S4", "(0 1)", "element"), "S4", True),
        (
            failed("L3-fix-at-most-one", "F21", "(0 1 2 3 4 5 6)", "element"),
            "F21",
            False,
        ),
        (failed("C4-stab-semiregular", "S4", "0", "point"), "S4", True),
        (failed("C4-stab-semiregular", "F21", "0", "point"), "F21", False),
        (failed("C5-regular-subgroup", "S4", "9", "count"), "S4", True),
        (failed("C7-div4", "A5", "60", "order"), "A5", False),
        (
            failed("L1-block-kernel", "D4", "0 2 | 1 3", "block-system"),
            "D4",
            False,
        ),
        (failed("T2-odd-primitive", "F21", "<()>", "group"), "F21", False),
    ],
)
def test_verify_witness(
    group: Build, report: ClaimReport, group_id: str, expected: bool
) -> None:
    assert verify_witness(report, group(group_id)) is expected


def test_verify_witness_rejects_passing_report(group: Build) -> None:
    report = check_div4(group("A5"))
    with pytest.raises(ValueError, match="did not fail"):
        verify_witness(report, group("A5"))


def test_fails_requires_witness() -> None:
    with pytest.raises(ValueError, match="fails without witness"):
        ClaimReport(claim_id="C7-div4", group_id="X", verdict="fails")
