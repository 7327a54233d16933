# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Tasks for regenerating test oracles independently of korbit."""

from __future__ import annotations

import itertools
import json
from pathlib import Path

from invoke.config import Config
from invoke.tasks import task

Perm = tuple[int, ...]
Group = frozenset[Perm]

COUNTS_PATH = Path("tests") / "data" / "transitive_counts.json"


def _close(gens: list[Perm], degree: int) -> Group:
    elements = {tuple(range(degree))}
    frontier = list(elements)
    while frontier:
        fresh = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in elements:
                    elements.add(q)
                    fresh.append(q)
        frontier = fresh
    return frozenset(elements)


def _canonical(group: Group, degree: int) -> tuple[Perm, ...]:
    # smallest sorted element list over all relabellings
    best = None
    for s in itertools.permutations(range(degree)):
        inv = [0] * degree
        for i, x in enumerate(s):
            inv[x] = i
        relabelled = tuple(
            sorted(tuple(s[p[inv[i]]] for i in range(degree)) for p in group)
        )
        if best is None or relabelled < best:
            best = relabelled
    assert best is not None  # noqa: S101
    return best


def subgroup_classes(degree: int) -> list[Group]:
    """One subgroup of ``S_degree`` per conjugacy class.

    Starting from the trivial group, every class representative is joined
    with every element of ``S_degree`` until no new class appears, so
    subgroups needing any number of generators are reached.
    """
    sym = list(itertools.permutations(range(degree)))
    canon: dict[Group, tuple[Perm, ...]] = {}
    trivial = _close([], degree)
    reps = {_canonical(trivial, degree): (trivial, [])}
    frontier: list[tuple[Group, list[Perm]]] = [(trivial, [])]
    while frontier:
        fresh = []
        for group, gens in frontier:
            for g in sym:
                if g in group:
                    continue
                joined = _close([*gens, g], degree)
                if joined not in canon:
                    canon[joined] = _canonical(joined, degree)
                key = canon[joined]
                if key not in reps:
                    reps[key] = (joined, [*gens, g])
                    fresh.append(reps[key])
        frontier = fresh
    return [group for group, _ in reps.values()]


def transitive_classes(degree: int) -> int:
    """Number of conjugacy classes of transitive subgroups of
    ``S_degree``.
    """
    return sum(
        len({p[0] for p in group}) == degree
        for group in subgroup_classes(degree)
    )


@task
def transitive(_c: Config, *, max_degree: int = 6) -> None:
    """Write brute-force counts of transitive groups by degree."""
    counts = {
        str(d): transitive_classes(d) for d in range(1, max_degree + 1)
    }
    COUNTS_PATH.write_text(json.dumps(counts) + "\n", encoding="utf-8")
