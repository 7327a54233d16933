# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Claims about primitive groups of odd order, block kernels and
minimal-degree representations, each checked on a single group.

Every check is registered with :py:func:`claim`, which labels its
:py:class:`.Finding` with the claim id and group name, records wall-clock
time and turns a cap overrun into an ``undecided`` verdict.
"""

from __future__ import annotations

import dataclasses
import functools as ft
import logging
import math
import time
import typing as t

from korbit._internal import _docstring
from korbit.claims.report import (
    ClaimReport,
    Finding,
    WitnessKind,
    parse_subgroup_text,
    subgroup_text,
)
from korbit.core.blocks import (
    BlockSystem,
    block_kernel,
    is_primitive,
    minimal_block_systems,
)
from korbit.core.group import (
    PermutationGroup,
    Subgroup,
    conjugacy_classes,
    core_of,
    direct_product,
    is_normal,
    is_transitive,
    normal_closure,
    point_stabilizer,
)
from korbit.core.lattice import (
    Reading,
    all_subgroups,
    is_md_representation,
    is_simple,
    minimal_faithful_degree,
)
from korbit.core.permutation import Permutation, parse_cycles
from korbit.exceptions import CapExceededError, NotSubgroupError

__all__ = [
    "CLAIMS",
    "Claim",
    "check_block_kernel_normal",
    "check_direct_product_ld_intransitive",
    "check_div4",
    "check_fixes_at_most_one",
    "check_ld",
    "check_nmd_imprimitive",
    "check_primitive_odd_not_simple",
    "check_regular_subgroup",
    "check_stabilizer_semiregular",
    "claim",
    "find_regular_element",
    "verify_witness",
]

logger = logging.getLogger(__name__)

Arity = t.Literal["group", "pair", "catalog"]

READINGS: tuple[Reading, ...] = ("core-free-maximal", "maximal-core-free")

_SAMPLED = "sampled search for a regular element, not a proof"


@dataclasses.dataclass(frozen=True)
class Claim:
    """Registered claim check."""

    claim_id: str
    check: t.Callable[..., t.Any]
    #: What the check takes: one group, a pair of groups or a catalog.
    arity: Arity = "group"

    @property
    def description(self) -> str:
        return _docstring.get_description(self.check, short=True) or ""


#: Registered claims by id.
CLAIMS: dict[str, Claim] = {}


def claim(
    claim_id: str, *, arity: Arity = "group"
) -> t.Callable[
    [t.Callable[..., Finding]], t.Callable[..., ClaimReport]
]:
    """Register a check under ``claim_id``.

    The decorated function takes one or more groups and returns a
    :py:class:`.Finding`; the registered wrapper returns a
    :py:class:`.ClaimReport` named after the groups, joined by ``x``.
    """

    def decorator(
        func: t.Callable[..., Finding],
    ) -> t.Callable[..., ClaimReport]:
        @ft.wraps(func)
        def wrapper(*groups: PermutationGroup) -> ClaimReport:
            group_id = "x".join(g.name or "?" for g in groups)
            start = time.perf_counter()
            try:
                report = func(*groups).report(claim_id, group_id)
            except CapExceededError as e:
                report = ClaimReport(
                    claim_id=claim_id,
                    group_id=group_id,
                    verdict="undecided",
                    reason=str(e),
                )
            elapsed = time.perf_counter() - start
            logger.info(
                "%s on %s: %s in %.3fs",
                claim_id,
                group_id,
                report.verdict,
                elapsed,
            )
            return report.model_copy(update={"elapsed": elapsed})

        CLAIMS[claim_id] = Claim(claim_id, wrapper, arity)
        return wrapper

    return decorator


def _odd_primitive_filter(group: PermutationGroup) -> str | None:
    if not is_transitive(group):
        return "not transitive"
    if group.order % 2 == 0:
        return f"even order {group.order}"
    if group.is_abelian():
        return "abelian"
    if not is_primitive(group):
        return "imprimitive"
    return None


def _fixed_point_free(group: PermutationGroup) -> list[Permutation]:
    return [g for g in group.elements if not g.fixed_points()]


def _regular_kernel(group: PermutationGroup) -> Subgroup | None:
    """Fixed-point-free elements with the identity, if they form a
    subgroup.
    """

    def build() -> Subgroup | None:
        members = [group.identity, *_fixed_point_free(group)]
        try:
            return group.subgroup_from_elements(members)
        except NotSubgroupError:
            return None

    return group.memoize("regular-kernel", build)


def _md_readings(
    group: PermutationGroup, stabilizer: PermutationGroup
) -> tuple[bool, tuple[str, ...]]:
    """md status under the default reading, with a note if the readings
    disagree.
    """
    values = [
        is_md_representation(group, stabilizer, reading=r) for r in READINGS
    ]
    if len(set(values)) == 1:
        return values[0], ()
    shown = ", ".join(
        f"{r}={v}" for r, v in zip(READINGS, values, strict=True)
    )
    return values[0], (f"md readings differ: {shown}",)


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % p for p in range(2, math.isqrt(n) + 1))


@claim("L1-block-kernel")
def check_block_kernel_normal(group: PermutationGroup) -> Finding:
    """Kernels of minimal block systems are normal, and nontrivial for
    md-representations.
    """
    if not is_transitive(group):
        return Finding.not_applicable("not transitive")
    systems = minimal_block_systems(group)
    if not systems:
        return Finding.not_applicable("primitive: no nontrivial block system")

    notes: tuple[str, ...] = ()
    md: bool | None
    try:
        md, notes = _md_readings(group, point_stabilizer(group, 0))
    except CapExceededError as e:
        md = None
        notes = (f"md status undecided: {e}",)
    if md is False:
        notes = (*notes, "not an md-representation: kernels may be trivial")

    orders = []
    for system in systems:
        kernel = block_kernel(group, system)
        if not is_normal(group, kernel):
            return Finding(
                "fails",
                f"kernel of {system} is not normal",
                str(system),
                "block-system",
                notes,
            )
        if md and kernel.order == 1:
            return Finding(
                "fails",
                f"kernel of {system} is trivial",
                str(system),
                "block-system",
                notes,
            )
        orders.append(str(kernel.order))
    return Finding(
        "holds",
        f"{len(systems)} minimal block system(s), "
        f"normal kernels of order {', '.join(orders)}",
        notes=notes,
    )


@claim("T2-odd-primitive")
def check_primitive_odd_not_simple(group: PermutationGroup) -> Finding:
    """A non-abelian primitive group of odd order has a proper nontrivial
    normal subgroup.
    """
    if reason := _odd_primitive_filter(group):
        return Finding.not_applicable(reason)
    kernel = _regular_kernel(group)
    if (
        kernel is not None
        and kernel.order == group.degree
        and is_transitive(kernel)
        and is_normal(group, kernel)
    ):
        return Finding(
            "holds",
            f"regular normal subgroup of order {kernel.order}",
            subgroup_text(kernel),
            "subgroup",
        )
    for cls in conjugacy_classes(group):
        x = cls[0]
        if not _is_prime(x.order):
            continue
        closure = normal_closure(group, [x])
        if closure.order < group.order:
            return Finding(
                "holds",
                f"normal closure of {x} has order {closure.order}",
                subgroup_text(closure),
                "subgroup",
                ("fixed-point-free elements are not a normal subgroup",),
            )
    return Finding(
        "fails",
        "no proper nontrivial normal subgroup",
        subgroup_text(group),
        "group",
    )


@claim("L3-fix-at-most-one")
def check_fixes_at_most_one(group: PermutationGroup) -> Finding:
    """In a non-abelian primitive group of odd order every non-identity
    element fixes at most one point.
    """
    if reason := _odd_primitive_filter(group):
        return Finding.not_applicable(reason)
    for g in group.elements:
        fixed = g.fixed_points()
        if not g.is_identity() and len(fixed) > 1:
            return Finding(
                "fails", f"{g} fixes {len(fixed)} points", str(g), "element"
            )
    return Finding(
        "holds",
        f"all {group.order - 1} non-identity elements fix at most one point",
    )


@claim("C4-stab-semiregular")
def check_stabilizer_semiregular(group: PermutationGroup) -> Finding:
    """Point stabilizers are smaller than the degree and semiregular on
    the remaining points.
    """
    if reason := _odd_primitive_filter(group):
        return Finding.not_applicable(reason)
    n = group.degree
    for v in range(n):
        stab = point_stabilizer(group, v)
        if stab.order >= n:
            return Finding(
                "fails",
                f"stabilizer of {v} has order {stab.order} >= {n}",
                str(v),
                "point",
            )
        for h in stab.elements:
            if not h.is_identity() and h.fixed_points() != {v}:
                return Finding(
                    "fails",
                    f"{h} fixes {v} and another point",
                    str(h),
                    "element",
                )
    size = point_stabilizer(group, 0).order
    return Finding(
        "holds",
        f"stabilizers of order {size} < {n}, "
        f"semiregular on the other {n - 1} points",
    )


@claim("C5-regular-subgroup")
def check_regular_subgroup(group: PermutationGroup) -> Finding:
    """The n-1 fixed-point-free elements are regular and close with the
    identity into a normal regular subgroup.
    """
    if reason := _odd_primitive_filter(group):
        return Finding.not_applicable(reason)
    n = group.degree
    free = _fixed_point_free(group)
    if len(free) != n - 1:
        return Finding(
            "fails",
            f"{len(free)} fixed-point-free elements, expected {n - 1}",
            str(len(free)),
            "count",
        )
    for g in free:
        if not g.is_regular():
            return Finding(
                "fails",
                f"{g} has cycle type {g.cycle_type()}",
                str(g),
                "element",
            )
    kernel = _regular_kernel(group)
    if kernel is None:
        return Finding(
            "fails",
            "fixed-point-free elements and the identity are not a subgroup",
            subgroup_text(group),
            "group",
        )
    stab = point_stabilizer(group, 0)
    if not (
        is_transitive(kernel)
        and is_normal(group, kernel)
        and kernel.order > stab.order
    ):
        return Finding(
            "fails",
            "not a normal transitive subgroup larger than a stabilizer",
            subgroup_text(kernel),
            "subgroup",
        )
    return Finding(
        "holds",
        f"{n - 1} regular elements close into a normal regular subgroup",
        subgroup_text(kernel),
        "subgroup",
    )


@claim("C6-ld")
def check_ld(group: PermutationGroup) -> Finding:
    """The natural action of a non-abelian primitive group of odd order
    has the lowest faithful degree.
    """
    if reason := _odd_primitive_filter(group):
        return Finding.not_applicable(reason)
    faithful = minimal_faithful_degree(group)
    text = " + ".join(subgroup_text(s) for s in faithful.subgroups)
    if faithful.degree == group.degree:
        return Finding(
            "holds",
            f"minimal faithful degree {faithful.degree}",
            text,
            "collection",
        )
    return Finding(
        "fails",
        f"faithful degree {faithful.degree} < {group.degree}",
        text,
        "collection",
    )


@claim("C7-div4")
def check_div4(group: PermutationGroup) -> Finding:
    """The order of a non-abelian simple group is divisible by 4."""
    if group.is_abelian():
        return Finding.not_applicable("abelian")
    if not is_simple(group):
        return Finding.not_applicable("not simple")
    if group.order % 4 == 0:
        quarter = group.order // 4
        return Finding("holds", f"order {group.order} = 4 * {quarter}")
    return Finding(
        "fails",
        f"order {group.order} is not divisible by 4",
        str(group.order),
        "order",
    )


@claim("P-regular-element")
def find_regular_element(group: PermutationGroup) -> Finding:
    """A transitive group has a non-identity element whose cycles all have
    the same length.
    """
    if not is_transitive(group):
        return Finding.not_applicable("not transitive")
    if group.order == 1:
        return Finding.not_applicable("trivial group")
    for g in group.elements:
        if not g.is_identity() and g.is_regular():
            return Finding(
                "holds",
                f"cycle type {g.cycle_type()}",
                str(g),
                "element",
                (_SAMPLED,),
            )
    return Finding(
        "fails",
        "no non-identity element has uniform cycle type",
        subgroup_text(group),
        "group",
        (_SAMPLED,),
    )


@claim("LD-direct-product", arity="pair")
def check_direct_product_ld_intransitive(
    first: PermutationGroup, second: PermutationGroup
) -> Finding:
    """The lowest-degree representation of a direct product acting on
    disjoint points is intransitive.
    """
    product = direct_product(first, second)
    faithful = minimal_faithful_degree(product)
    text = " + ".join(subgroup_text(s) for s in faithful.subgroups)
    indices = " + ".join(
        str(product.order // s.order) for s in faithful.subgroups
    )
    notes: tuple[str, ...] = ()
    if faithful.transitive_degree is not None:
        notes = (f"best transitive degree {faithful.transitive_degree}",)
    if faithful.intransitive:
        return Finding(
            "holds",
            f"minimal faithful degree {faithful.degree} = {indices}, "
            "intransitive",
            text,
            "collection",
            notes,
        )
    return Finding(
        "fails",
        f"minimal faithful degree {faithful.degree} is only reached "
        "transitively",
        text,
        "collection",
        notes,
    )


def _core_free_overgroup(
    group: PermutationGroup, subgroup: PermutationGroup
) -> Subgroup | None:
    for candidate in all_subgroups(group):
        if (
            subgroup.element_set < candidate.element_set
            and core_of(group, candidate).order == 1
        ):
            return candidate
    return None


@claim("R-nmd-imprimitive")
def check_nmd_imprimitive(group: PermutationGroup) -> Finding:
    """A transitive action whose point stabilizer is not an md-stabilizer
    is imprimitive.
    """
    if not is_transitive(group):
        return Finding.not_applicable("not transitive")
    stab = point_stabilizer(group, 0)
    md, notes = _md_readings(group, stab)
    if md:
        return Finding.not_applicable(
            "point stabilizer is an md-stabilizer"
        ).with_notes(*notes)
    overgroup = _core_free_overgroup(group, stab)
    # a non-md core-free stabilizer always has a core-free overgroup
    assert overgroup is not None  # noqa: S101
    blocks = overgroup.order // stab.order
    if not is_primitive(group):
        return Finding(
            "holds",
            f"imprimitive; core-free overgroup of order {overgroup.order} "
            f"gives blocks of size {blocks}",
            subgroup_text(overgroup),
            "subgroup",
            notes,
        )
    return Finding(
        "fails",
        f"primitive although a core-free overgroup of order "
        f"{overgroup.order} exists",
        subgroup_text(overgroup),
        "subgroup",
        notes,
    )


WitnessCheck = t.Callable[[str, PermutationGroup], bool]


def _element(witness: str, group: PermutationGroup) -> Permutation | None:
    g = parse_cycles(witness, group.degree)
    return g if g in group else None


def _fixes_two(witness: str, group: PermutationGroup) -> bool:
    g = _element(witness, group)
    return g is not None and len(g.fixed_points()) > 1


def _free_irregular(witness: str, group: PermutationGroup) -> bool:
    g = _element(witness, group)
    return g is not None and not g.fixed_points() and not g.is_regular()


def _large_stabilizer(witness: str, group: PermutationGroup) -> bool:
    return point_stabilizer(group, int(witness)).order >= group.degree


def _free_count(witness: str, group: PermutationGroup) -> bool:
    count = len(_fixed_point_free(group))
    return count == int(witness) != group.degree - 1


def _odd_order(witness: str, group: PermutationGroup) -> bool:
    return int(witness) == group.order and group.order % 4 != 0


def _bad_kernel(witness: str, group: PermutationGroup) -> bool:
    system = BlockSystem.from_blocks(
        map(int, part.split()) for part in witness.split("|")
    )
    kernel = block_kernel(group, system)
    if not is_normal(group, kernel):
        return True
    stab = point_stabilizer(group, 0)
    return kernel.order == 1 and is_md_representation(group, stab)


def _primitive_with_overgroup(
    witness: str, group: PermutationGroup
) -> bool:
    [gens] = parse_subgroup_text(witness, group.degree)
    overgroup = group.subgroup(gens)
    stab = point_stabilizer(group, 0)
    return (
        stab.element_set < overgroup.element_set
        and core_of(group, overgroup).order == 1
        and is_primitive(group)
    )


def _transitive_optimum(witness: str, group: PermutationGroup) -> bool:
    faithful = minimal_faithful_degree(group)
    text = " + ".join(subgroup_text(s) for s in faithful.subgroups)
    return not faithful.intransitive and text == witness


_WITNESS_CHECKS: dict[tuple[str, WitnessKind], WitnessCheck] = {
    ("L1-block-kernel", "block-system"): _bad_kernel,
    ("L3-fix-at-most-one", "element"): _fixes_two,
    ("C4-stab-semiregular", "element"): _fixes_two,
    ("C4-stab-semiregular", "point"): _large_stabilizer,
    ("C5-regular-subgroup", "element"): _free_irregular,
    ("C5-regular-subgroup", "count"): _free_count,
    ("C7-div4", "order"): _odd_order,
    ("R-nmd-imprimitive", "subgroup"): _primitive_with_overgroup,
    ("LD-direct-product", "collection"): _transitive_optimum,
}


def verify_witness(report: ClaimReport, group: PermutationGroup) -> bool:
    """Re-check the witness of a ``fails`` report against ``group``.

    Element, point, count, order and block-system witnesses are checked
    directly; any other witness is checked by running the claim again and
    comparing verdict and witness. For ``LD-direct-product`` pass the
    product group.

    Parameters
    ----------
    report:
        Report with verdict ``fails``.

    group:
        The group the report was produced for.

    Returns
    -------
    bool
        Whether the witness reproduces the failure.

    Raises
    ------
    ValueError
        If the report does not have verdict ``fails``.
    """
    if report.verdict != "fails" or report.witness is None:
        msg = f"report {report.claim_id} on {report.group_id} did not fail"
        raise ValueError(msg)
    if report.witness_kind is not None:
        check = _WITNESS_CHECKS.get((report.claim_id, report.witness_kind))
        if check is not None:
            return check(report.witness, group)
    rerun = CLAIMS[report.claim_id].check(group)
    return (rerun.verdict, rerun.witness) == (
        report.verdict,
        report.witness,
    )
