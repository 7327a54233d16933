# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Search for primitive md-groups that share degree and order but whose
n-orbits are not isomorphic.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import typing as t

from korbit._internal._pool import run_ordered
from korbit.catalog.spec import GroupSpec, find_spec
from korbit.claims.checks import CLAIMS, Claim
from korbit.claims.report import ClaimReport, Provenance
from korbit.config import DEFAULT_CONFIG, Config
from korbit.core.blocks import is_primitive
from korbit.core.group import is_transitive, point_stabilizer
from korbit.core.lattice import is_md_representation
from korbit.core.norbit import IsomorphismResult, n_orbit, n_orbits_isomorphic
from korbit.exceptions import CapExceededError

__all__ = ["GroupFlags", "group_flags", "hunt_hypothesis", "verify_pair"]

logger = logging.getLogger(__name__)

CLAIM_ID = "H1-hunt"


@dataclasses.dataclass(frozen=True)
class GroupFlags:
    """Order, primitivity and md status of a catalog group.

    A flag is ``"declared"`` when it was read from the spec tags because
    the lattice cap prevented computing it. The point stabilizer of a
    primitive group is maximal and core-free, so md is always computed
    for primitive groups.
    """

    spec: GroupSpec
    order: int
    primitive: bool
    primitive_provenance: Provenance
    md: bool
    md_provenance: Provenance
    #: Declared tags contradicting computed flags.
    discrepancies: tuple[str, ...] = ()

    def provenance(self) -> dict[str, Provenance]:
        return {
            f"{self.spec.id}.primitive": self.primitive_provenance,
            f"{self.spec.id}.md": self.md_provenance,
        }


def group_flags(unit: tuple[GroupSpec, Config]) -> GroupFlags:
    """Compute the hunt flags of one spec."""
    spec, config = unit
    group = spec.build(config=config)
    transitive_primitive = is_primitive(group)
    primitive = transitive_primitive and not group.is_abelian()
    discrepancies = []
    if spec.has_tag("primitive-declared") and not primitive:
        discrepancies.append(
            f"{spec.id}: declared primitive but computed "
            "imprimitive or abelian"
        )

    md_provenance: Provenance = "computed"
    if not is_transitive(group):
        md = False
    elif transitive_primitive:
        md = True
    elif group.order <= config.lattice_cap:
        md = is_md_representation(group, point_stabilizer(group, 0))
        if spec.has_tag("md-declared") and not md:
            discrepancies.append(
                f"{spec.id}: declared md but the point "
                "stabilizer is not an md-stabilizer"
            )
    else:
        md, md_provenance = spec.has_tag("md-declared"), "declared"
    return GroupFlags(
        spec=spec,
        order=group.order,
        primitive=primitive,
        primitive_provenance="computed",
        md=md,
        md_provenance=md_provenance,
        discrepancies=tuple(discrepancies),
    )


def _compare(
    unit: tuple[GroupSpec, GroupSpec, Config],
) -> IsomorphismResult:
    first, second, config = unit
    try:
        x = n_orbit(first.build(config=config))
        y = n_orbit(second.build(config=config))
    except CapExceededError as e:
        return IsomorphismResult(None, None, 0, str(e))
    return n_orbits_isomorphic(x, y, config=config)


def _bucket_report(
    members: list[GroupFlags],
    results: list[IsomorphismResult],
) -> ClaimReport:
    ids = [f.spec.id for f in members]
    pairs = list(itertools.combinations(ids, 2))
    notes = [d for f in members for d in f.discrepancies]
    provenance: dict[str, Provenance] = {}
    for f in members:
        provenance.update(f.provenance())

    failure = None
    undecided = []
    for (a, b), result in zip(pairs, results, strict=True):
        if result.isomorphic:
            notes.append(f"{a} ~ {b} via {result.witness}")
        elif result.isomorphic is None:
            undecided.append(f"{a} / {b}")
            notes.append(f"undecided: {a} / {b}: {result.reason}")
        elif failure is None:
            failure = (f"{a} / {b}", result.reason)

    degree, order = members[0].spec.degree, members[0].order
    common: dict[str, t.Any] = {
        "claim_id": CLAIM_ID,
        "group_id": ",".join(ids),
        "notes": tuple(notes),
        "provenance": provenance,
    }
    if failure is not None:
        witness, reason = failure
        return ClaimReport(
            **common,
            verdict="fails",
            witness=witness,
            witness_kind="pair",
            reason=f"degree {degree}, order {order}: {reason}",
        )
    if undecided:
        return ClaimReport(
            **common,
            verdict="undecided",
            reason=f"{len(undecided)} pair(s) undecided",
        )
    if len(members) == 1:
        reason = f"degree {degree}, order {order}: single group"
    else:
        reason = (
            f"degree {degree}, order {order}: all {len(pairs)} pairs "
            "isomorphic"
        )
    return ClaimReport(**common, verdict="holds", reason=reason)


def hunt_hypothesis(
    specs: t.Sequence[GroupSpec],
    degree_max: int,
    *,
    config: Config | None = None,
    jobs: int = 1,
) -> list[ClaimReport]:
    """Primitive md-groups of equal degree and order have isomorphic
    n-orbits.

    Groups of degree at most ``degree_max`` that are primitive
    (non-abelian) and whose point stabilizer is an md-stabilizer are
    bucketed by ``(degree, order)``; every pair in a bucket is tested for
    n-orbit isomorphism. When the lattice is over the cap the md flag is
    taken from the ``md-declared`` tag. That only happens for
    imprimitive groups, which never enter a bucket, and is logged as a
    warning.

    Parameters
    ----------
    specs:
        Catalog to search.

    degree_max:
        Largest degree included.

    config:
        Caps for every group and isomorphism test.

    jobs:
        Worker processes.

    Returns
    -------
    list[ClaimReport]
        One report per bucket, ordered by degree then order. A bucket
        fails with a non-isomorphic pair as witness.
    """
    config = config or DEFAULT_CONFIG
    population = [s for s in specs if s.degree <= degree_max]
    flags = run_ordered(
        group_flags, [(s, config) for s in population], jobs=jobs
    )
    for f in flags:
        if f.md_provenance == "declared":
            logger.warning(
                "hunt: md status of %s taken from tags (%s), order %d is "
                "over the lattice cap",
                f.spec.id,
                "md" if f.md else "not md",
                f.order,
            )
    buckets: dict[tuple[int, int], list[GroupFlags]] = {}
    for f in flags:
        if f.primitive and f.md:
            buckets.setdefault((f.spec.degree, f.order), []).append(f)
    logger.info(
        "hunt: %d of %d groups in %d buckets",
        sum(map(len, buckets.values())),
        len(population),
        len(buckets),
    )

    keys = sorted(buckets)
    units = [
        (a.spec, b.spec, config)
        for key in keys
        for a, b in itertools.combinations(buckets[key], 2)
    ]
    results = iter(run_ordered(_compare, units, jobs=jobs))
    reports = []
    for key in keys:
        members = buckets[key]
        count = len(members) * (len(members) - 1) // 2
        reports.append(
            _bucket_report(members, list(itertools.islice(results, count)))
        )
    return reports


def verify_pair(
    report: ClaimReport,
    specs: t.Sequence[GroupSpec],
    *,
    config: Config | None = None,
) -> bool:
    """Re-run the isomorphism test on the witness pair of a failed hunt
    report.

    Raises
    ------
    ValueError
        If the report is not a failed hunt report.
    """
    if report.claim_id != CLAIM_ID or report.verdict != "fails":
        msg = f"{report.claim_id} on {report.group_id} is not a failed hunt"
        raise ValueError(msg)
    assert report.witness is not None  # noqa: S101
    first, second = report.witness.split(" / ")
    result = _compare(
        (
            find_spec(specs, first),
            find_spec(specs, second),
            config or DEFAULT_CONFIG,
        )
    )
    return result.isomorphic is False


CLAIMS[CLAIM_ID] = Claim(CLAIM_ID, hunt_hypothesis, "catalog")
