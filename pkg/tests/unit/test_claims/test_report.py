# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import json
import typing as t

import pydantic as pyd
import pytest

from korbit.claims.report import (
    ClaimReport,
    Finding,
    format_table,
    parse_subgroup_text,
    subgroup_text,
)
from korbit.core.group import PermutationGroup, generate


def test_subgroup_text(group: t.Callable[..., PermutationGroup]) -> None:
    assert subgroup_text(group("S3")) == "<(0 1 2), (0 1)>"
    assert subgroup_text(generate([], 4)) == "<()>"


def test_parse_subgroup_text(helpers: t.Any) -> None:
    parsed = parse_subgroup_text("<(0 1 2), (0 1)> + <()>", 3)
    assert parsed == [
        [helpers.perm("(0 1 2)", 3), helpers.perm("(0 1)", 3)],
        [helpers.perm("()", 3)],
    ]


def test_finding_report() -> None:
    finding = Finding.not_applicable("abelian").with_notes("a", "b")
    report = finding.report("C7-div4", "C5")
    assert report.verdict == "not-applicable"
    assert report.notes == ("a", "b")
    assert report.witness is None


def test_json_excludes_elapsed() -> None:
    report = ClaimReport(
        claim_id="C7-div4",
        group_id="A5",
        verdict="holds",
        reason="order 60 = 4 * 15",
        elapsed=1.5,
    )
    data = json.loads(report.model_dump_json())
    assert "elapsed" not in data
    assert data["verdict"] == "holds"
    assert data["provenance"] == {}


def test_report_is_frozen() -> None:
    report = ClaimReport(claim_id="C7-div4", group_id="A5", verdict="holds")
    with pytest.raises(pyd.ValidationError):
        report.verdict = "fails"  # type: ignore[misc]


def test_unknown_verdict() -> None:
    with pytest.raises(pyd.ValidationError):
        ClaimReport(
            claim_id="C7-div4",
            group_id="A5",
            verdict="maybe",  # type: ignore[arg-type]
        )


def test_format_table() -> None:
    reports = [
        ClaimReport(claim_id="C7-div4", group_id="A5", verdict="holds"),
        ClaimReport(
            claim_id="L3-fix-at-most-one",
            group_id="S4",
            verdict="fails",
            witness="(0 1)",
            witness_kind="element",
            elapsed=0.25,
        ),
    ]
    assert format_table(reports).splitlines() == [
        "claim               group  verdict  witness",
        "C7-div4             A5     holds    -",
        "L3-fix-at-most-one  S4     fails    (0 1)",
    ]
    timed = format_table(reports, timings=True).splitlines()
    assert timed[0].endswith("seconds")
    assert timed[2].endswith("0.250")
