# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Run claims over a catalog.

Work units carry catalog specs and caps, never built groups, so they can be
shipped to worker processes. Reports come back in claim order, then catalog
order, whatever order the workers finish in.
"""

from __future__ import annotations

import collections
import logging
import typing as t

from korbit._internal._pool import run_ordered
from korbit.catalog.spec import GroupSpec
from korbit.claims.checks import CLAIMS
from korbit.claims.hunt import hunt_hypothesis
from korbit.claims.report import CLAIM_IDS, ClaimReport
from korbit.config import DEFAULT_CONFIG, Config
from korbit.exceptions import UnknownClaimError

__all__ = [
    "PRODUCT_PAIRS",
    "WorkUnit",
    "has_failures",
    "plan",
    "resolve_claims",
    "run_claims",
    "run_unit",
]

logger = logging.getLogger(__name__)

#: Factor ids for the direct-product claim, looked up in the catalog.
PRODUCT_PAIRS: tuple[tuple[str, str], ...] = (
    ("C2", "C2"),
    ("C3", "C3"),
    ("C2", "C3"),
    ("S3", "C2"),
)

WorkUnit = tuple[str, tuple[GroupSpec, ...], Config]


def resolve_claims(selector: str) -> list[str]:
    """Claim ids for a claim id or ``"all"``.

    Raises
    ------
    UnknownClaimError
        If ``selector`` is neither ``"all"`` nor a registered claim.
    """
    if selector == "all":
        return list(CLAIM_IDS)
    if selector not in CLAIMS:
        msg = f"unknown claim {selector!r}, expected one of {CLAIM_IDS}"
        raise UnknownClaimError(msg)
    return [selector]


def plan(
    claim_ids: t.Iterable[str],
    specs: t.Sequence[GroupSpec],
    *,
    config: Config,
) -> list[WorkUnit]:
    """Work units for per-group and per-pair claims, in report order."""
    by_id = {spec.id: spec for spec in specs}
    units: list[WorkUnit] = []
    for claim_id in claim_ids:
        arity = CLAIMS[claim_id].arity
        if arity == "group":
            units.extend((claim_id, (spec,), config) for spec in specs)
        elif arity == "pair":
            units.extend(
                (claim_id, (by_id[a], by_id[b]), config)
                for a, b in PRODUCT_PAIRS
                if a in by_id and b in by_id
            )
    return units


def run_unit(unit: WorkUnit) -> ClaimReport:
    claim_id, specs, config = unit
    groups = [spec.build(config=config) for spec in specs]
    return CLAIMS[claim_id].check(*groups)


def run_claims(
    claim_ids: t.Sequence[str],
    specs: t.Sequence[GroupSpec],
    *,
    config: Config | None = None,
    jobs: int = 1,
    degree_max: int | None = None,
) -> list[ClaimReport]:
    """Run claims over a catalog.

    Parameters
    ----------
    claim_ids:
        Claims to run, in report order.

    specs:
        Catalog entries, in report order.

    config:
        Caps for every group.

    jobs:
        Worker processes. ``1`` runs everything in this process.

    degree_max:
        Largest degree searched by ``H1-hunt``, defaulting to the largest
        degree in ``specs``.

    Returns
    -------
    list[ClaimReport]
        Reports grouped by claim in ``claim_ids`` order.
    """
    config = config or DEFAULT_CONFIG
    for claim_id in claim_ids:
        resolve_claims(claim_id)
    units = plan(claim_ids, specs, config=config)
    logger.info("running %d checks on %d jobs", len(units), jobs)

    by_claim: dict[str, list[ClaimReport]] = collections.defaultdict(list)
    for report in run_ordered(run_unit, units, jobs=jobs):
        by_claim[report.claim_id].append(report)

    reports: list[ClaimReport] = []
    for claim_id in claim_ids:
        if CLAIMS[claim_id].arity == "catalog":
            reach = degree_max
            if reach is None:
                reach = max((spec.degree for spec in specs), default=0)
            reports.extend(
                hunt_hypothesis(specs, reach, config=config, jobs=jobs)
            )
        else:
            reports.extend(by_claim[claim_id])
    return reports


def has_failures(reports: t.Iterable[ClaimReport]) -> bool:
    return any(report.verdict == "fails" for report in reports)
