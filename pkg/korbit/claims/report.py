# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Claim reports and their text forms."""

from __future__ import annotations

import dataclasses
import re
import typing as t

import pydantic as pyd

from korbit.core.group import PermutationGroup
from korbit.core.permutation import Permutation, parse_cycles

__all__ = [
    "CLAIM_IDS",
    "ClaimReport",
    "Finding",
    "Verdict",
    "WitnessKind",
    "format_table",
    "parse_subgroup_text",
    "subgroup_text",
]

Verdict = t.Literal["holds", "fails", "not-applicable", "undecided"]

WitnessKind = t.Literal[
    "element",
    "subgroup",
    "collection",
    "block-system",
    "point",
    "count",
    "order",
    "pair",
    "group",
]

Provenance = t.Literal["computed", "declared"]

#: Claim identifiers in report order.
CLAIM_IDS: tuple[str, ...] = (
    "L1-block-kernel",
    "T2-odd-primitive",
    "L3-fix-at-most-one",
    "C4-stab-semiregular",
    "C5-regular-subgroup",
    "C6-ld",
    "C7-div4",
    "H1-hunt",
    "P-regular-element",
    "LD-direct-product",
    "R-nmd-imprimitive",
)


class ClaimReport(pyd.BaseModel):
    """Verdict of one claim on one group (or bucket of groups).

    A ``fails`` verdict always carries a witness that
    :py:func:`.verify_witness` can re-check.
    """

    model_config = pyd.ConfigDict(frozen=True)

    claim_id: str
    group_id: str
    verdict: Verdict
    witness: str | None = None
    witness_kind: WitnessKind | None = None
    reason: str = ""
    notes: tuple[str, ...] = ()
    provenance: dict[str, Provenance] = pyd.Field(default_factory=dict)

    #: Wall-clock seconds, never serialized.
    elapsed: float = pyd.Field(default=0.0, exclude=True)

    @pyd.model_validator(mode="after")
    def check_witness(self) -> ClaimReport:
        if self.verdict == "fails" and self.witness is None:
            msg = f"{self.claim_id} on {self.group_id}: fails without witness"
            raise ValueError(msg)
        return self


@dataclasses.dataclass(frozen=True)
class Finding:
    """What a check found, before it is labelled with claim and group."""

    verdict: Verdict
    reason: str
    witness: str | None = None
    witness_kind: WitnessKind | None = None
    notes: tuple[str, ...] = ()

    @classmethod
    def not_applicable(cls, reason: str) -> Finding:
        return cls("not-applicable", reason)

    def with_notes(self, *notes: str) -> Finding:
        return dataclasses.replace(self, notes=(*self.notes, *notes))

    def report(self, claim_id: str, group_id: str) -> ClaimReport:
        return ClaimReport(
            claim_id=claim_id,
            group_id=group_id,
            verdict=self.verdict,
            witness=self.witness,
            witness_kind=self.witness_kind,
            reason=self.reason,
            notes=self.notes,
        )


def subgroup_text(group: PermutationGroup) -> str:
    """Generators in angle brackets, e.g. ``<(0 1 2), (0 1)>``."""
    gens = [str(g) for g in group.generators if not g.is_identity()]
    return "<" + ", ".join(gens or ["()"]) + ">"


_SUBGROUP = re.compile(r"<([^>]*)>")


def parse_subgroup_text(text: str, degree: int) -> list[list[Permutation]]:
    """Generators of every ``<...>`` group in ``text``, in order."""
    return [
        [parse_cycles(chunk, degree) for chunk in body.split(",")]
        for body in _SUBGROUP.findall(text)
    ]


def format_table(
    reports: t.Sequence[ClaimReport], *, timings: bool = False
) -> str:
    """Aligned summary table, one report per row."""
    header = ["claim", "group", "verdict", "witness"]
    if timings:
        header.append("seconds")
    rows = [header]
    for r in reports:
        row = [r.claim_id, r.group_id, r.verdict, r.witness or "-"]
        if timings:
            row.append(f"{r.elapsed:.3f}")
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths, strict=True))
        .rstrip()
        for row in rows
    )
