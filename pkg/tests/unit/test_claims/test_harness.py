# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import pytest

import korbit
from korbit.catalog.spec import GroupSpec
from korbit.claims.harness import (
    has_failures,
    plan,
    resolve_claims,
    run_claims,
)
from korbit.claims.report import CLAIM_IDS, ClaimReport
from korbit.exceptions import UnknownClaimError

CATALOG = ["C2", "C3", "S3", "F21", "S3reg"]


@pytest.fixture
def catalog(specs: dict[str, GroupSpec]) -> list[GroupSpec]:
    return [specs[group_id] for group_id in CATALOG]


def test_resolve_claims() -> None:
    assert resolve_claims("all") == list(CLAIM_IDS)
    assert resolve_claims("C7-div4") == ["C7-div4"]
    with pytest.raises(UnknownClaimError, match="unknown claim"):
        resolve_claims("C8-nothing")


def test_plan_order(catalog: list[GroupSpec]) -> None:
    units = plan(
        ["C7-div4", "LD-direct-product", "H1-hunt"],
        catalog,
        config=korbit.config(),
    )
    assert [(u[0], tuple(s.id for s in u[1])) for u in units] == [
        ("C7-div4", ("C2",)),
        ("C7-div4", ("C3",)),
        ("C7-div4", ("S3",)),
        ("C7-div4", ("F21",)),
        ("C7-div4", ("S3reg",)),
        ("LD-direct-product", ("C2", "C2")),
        ("LD-direct-product", ("C3", "C3")),
        ("LD-direct-product", ("C2", "C3")),
        ("LD-direct-product", ("S3", "C2")),
    ]


def test_run_claims_report_order(catalog: list[GroupSpec]) -> None:
    reports = run_claims(["L3-fix-at-most-one", "C7-div4"], catalog)
    assert [(r.claim_id, r.group_id) for r in reports] == [
        (claim_id, group_id)
        for claim_id in ["L3-fix-at-most-one", "C7-div4"]
        for group_id in CATALOG
    ]
    assert not has_failures(reports)


def test_run_claims_hunt_reach(catalog: list[GroupSpec]) -> None:
    reports = run_claims(["H1-hunt"], catalog)
    assert [r.group_id for r in reports] == ["S3", "F21"]
    assert run_claims(["H1-hunt"], catalog, degree_max=3)[0].group_id == "S3"


def test_unknown_claim(catalog: list[GroupSpec]) -> None:
    with pytest.raises(UnknownClaimError):
        run_claims(["Z9"], catalog)


def test_empty_catalog() -> None:
    reports = run_claims(list(CLAIM_IDS), [])
    assert reports == []
    assert not has_failures(reports)


def test_jobs_do_not_change_reports(catalog: list[GroupSpec]) -> None:
    claims = ["T2-odd-primitive", "C5-regular-subgroup", "LD-direct-product"]
    serial = run_claims(claims, catalog, jobs=1)
    parallel = run_claims(claims, catalog, jobs=2)
    assert [r.model_dump() for r in serial] == [
        r.model_dump() for r in parallel
    ]


def test_has_failures() -> None:
    fails = ClaimReport(
        claim_id="C7-div4",
        group_id="X",
        verdict="fails",
        witness="15",
        witness_kind="order",
    )
    holds = ClaimReport(claim_id="C7-div4", group_id="Y", verdict="holds")
    assert has_failures([holds, fails])
    assert not has_failures([holds])
