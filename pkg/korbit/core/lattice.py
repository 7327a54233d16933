# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Subgroup lattices at desk scale, md-stabilizers, minimal faithful
degree and suborbits.

The lattice is computed on raw image tuples: every cyclic subgroup is a
seed, and seeds are joined with cyclic subgroups of prime-power order until
nothing new appears. Subgroups are compared by element set and ordered by
``(order, sorted elements)``.
"""

from __future__ import annotations

import dataclasses
import logging
import typing as t

from korbit._internal import _chain
from korbit.core.group import (
    PermutationGroup,
    Subgroup,
    _require_transitive,
    conjugacy_classes,
    core_of,
    normal_closure,
    orbits,
    point_stabilizer,
)
from korbit.core.permutation import Permutation
from korbit.exceptions import CapExceededError, NotSubgroupError

__all__ = [
    "AutomorphicNumbers",
    "FaithfulDegree",
    "Reading",
    "SubgroupClass",
    "SubgroupLattice",
    "all_subgroups",
    "automorphic_numbers",
    "is_md_representation",
    "is_simple",
    "md_stabilizers",
    "minimal_faithful_degree",
    "normal_subgroups",
    "subgroup_classes",
    "suborbits",
]

logger = logging.getLogger(__name__)

Images = _chain.Images
ElementSet = frozenset[Images]

#: Readings of "maximal core-free subgroup".
Reading = t.Literal["core-free-maximal", "maximal-core-free"]


@dataclasses.dataclass(frozen=True)
class SubgroupClass:
    """Conjugacy class of subgroups."""

    #: Smallest member in ``(order, sorted elements)`` order.
    representative: Subgroup
    #: Element sets of every member, sorted like the representative.
    conjugates: tuple[frozenset[Permutation], ...]

    @property
    def order(self) -> int:
        return self.representative.order

    @property
    def size(self) -> int:
        return len(self.conjugates)

    def is_normal(self) -> bool:
        return self.size == 1

    def __contains__(self, subgroup: object) -> bool:
        if not isinstance(subgroup, PermutationGroup):
            return False
        return subgroup.element_set in self.conjugates


@dataclasses.dataclass(frozen=True)
class SubgroupLattice:
    """Every subgroup of a group, with conjugacy-class grouping."""

    group: PermutationGroup
    subgroups: tuple[Subgroup, ...]
    classes: tuple[SubgroupClass, ...]

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> t.Iterator[Subgroup]:
        return iter(self.subgroups)

    def class_of(self, subgroup: PermutationGroup) -> SubgroupClass:
        for cls in self.classes:
            if subgroup in cls:
                return cls
        msg = f"{subgroup!r} is not a subgroup of {self.group!r}"
        raise NotSubgroupError(msg)


@dataclasses.dataclass(frozen=True)
class FaithfulDegree:
    """Lowest degree of a faithful permutation representation."""

    #: Sum of the indices of ``subgroups``.
    degree: int
    #: Subgroups whose coset actions together give the representation.
    subgroups: tuple[Subgroup, ...]
    #: Lowest index of a core-free subgroup, i.e. the best transitive degree.
    transitive_degree: int | None

    @property
    def intransitive(self) -> bool:
        return len(self.subgroups) > 1


@dataclasses.dataclass(frozen=True)
class AutomorphicNumbers:
    """Orbit sizes of subgroups, labelled with how they were collected.

    ``"lattice"`` means all orbits of all subgroups were scanned,
    ``"suborbits"`` means only orbits of point stabilizers were.
    """

    values: frozenset[int]
    mode: t.Literal["lattice", "suborbits"]


def _sort_key(elements: t.Collection[t.Any]) -> tuple[int, list[t.Any]]:
    return len(elements), sorted(elements)


def _require_lattice(group: PermutationGroup) -> None:
    if group.order > group.config.lattice_cap:
        cap = group.config.lattice_cap
        raise CapExceededError("lattice", cap, group.order)


def _cyclic_subgroups(
    group: PermutationGroup, *, prime_power: bool = False
) -> dict[ElementSet, Images]:
    identity = group.identity.images
    cyclic: dict[ElementSet, Images] = {}
    for p in group.elements:
        g = p.images
        if g == identity or (prime_power and not _is_prime_power(p.order)):
            continue
        powers = {identity}
        h = g
        while h != identity:
            powers.add(h)
            h = _chain.mul(g, h)
        cyclic.setdefault(frozenset(powers), g)
    return cyclic


def _is_prime_power(n: int) -> bool:
    p = next(d for d in range(2, n + 1) if n % d == 0)
    while n % p == 0:
        n //= p
    return n == 1


def _conjugates(
    elements: ElementSet, generators: list[tuple[Images, Images]]
) -> set[ElementSet]:
    orbit = {elements}
    queue = [elements]
    for h in queue:
        for g, g_inv in generators:
            k = frozenset(_chain.mul(_chain.mul(g, x), g_inv) for x in h)
            if k not in orbit:
                orbit.add(k)
                queue.append(k)
    return orbit


def _conjugators(group: PermutationGroup) -> list[tuple[Images, Images]]:
    return [(g.images, _chain.inv(g.images)) for g in group.generators]


def _join(
    elements: ElementSet, gens: list[Images], extra: Images
) -> ElementSet:
    return frozenset(_chain.extend_closure(set(elements), gens, extra))


def _build_classes(
    group: PermutationGroup,
    orbits_: t.Iterable[t.Iterable[ElementSet]],
    wrap: t.Callable[[ElementSet], Subgroup],
) -> tuple[SubgroupClass, ...]:
    lookup = {p.images: p for p in group.elements}
    classes = []
    for orbit in orbits_:
        members = sorted(orbit, key=_sort_key)
        classes.append(
            SubgroupClass(
                representative=wrap(members[0]),
                conjugates=tuple(
                    frozenset(lookup[x] for x in m) for m in members
                ),
            )
        )
    return tuple(
        sorted(classes, key=lambda c: (c.order, c.representative.elements))
    )


def all_subgroups(group: PermutationGroup) -> SubgroupLattice:
    """Every subgroup of ``group``.

    Parameters
    ----------
    group:
        Group of order at most ``config.lattice_cap``.

    Returns
    -------
    SubgroupLattice
        Subgroups ordered by ``(order, sorted elements)`` and their
        conjugacy classes.

    Raises
    ------
    CapExceededError
        If the order exceeds ``config.lattice_cap``.
    """
    _require_lattice(group)
    return group.memoize("lattice", lambda: _lattice(group))


def _lattice(group: PermutationGroup) -> SubgroupLattice:
    identity = group.identity.images
    joiners = _cyclic_subgroups(group, prime_power=True)
    found: dict[ElementSet, list[Images]] = {frozenset([identity]): []}
    for elements, g in _cyclic_subgroups(group).items():
        found.setdefault(elements, [g])

    queue = list(found)
    for h in queue:
        for g in joiners.values():
            if g in h:
                continue
            joined = _join(h, found[h], g)
            if joined not in found:
                found[joined] = [*found[h], g]
                queue.append(joined)
    logger.debug(
        "lattice of %r: %d subgroups from %d seeds",
        group.name,
        len(found),
        len(joiners),
    )

    ordered = sorted(found, key=_sort_key)
    lookup = {p.images: p for p in group.elements}
    wrapped = {
        s: group.subgroup_from_elements(lookup[x] for x in s) for s in ordered
    }

    conjugators = _conjugators(group)
    seen: set[ElementSet] = set()
    class_orbits = []
    for s in ordered:
        if s not in seen:
            orbit = _conjugates(s, conjugators)
            seen |= orbit
            class_orbits.append(orbit)

    return SubgroupLattice(
        group=group,
        subgroups=tuple(wrapped[s] for s in ordered),
        classes=_build_classes(group, class_orbits, wrapped.__getitem__),
    )


def subgroup_classes(group: PermutationGroup) -> tuple[SubgroupClass, ...]:
    """Conjugacy classes of subgroups, without listing every subgroup.

    Only one representative per class is extended by cyclic subgroups, so
    this reaches groups beyond ``config.lattice_cap`` (e.g. ``S_6``). The
    element list must still be materializable.

    Parameters
    ----------
    group:
        Group whose elements fit within ``config.element_cap``.

    Returns
    -------
    tuple[SubgroupClass, ...]
        Classes ordered by representative.
    """
    identity = group.identity.images
    joiners = _cyclic_subgroups(group, prime_power=True)
    conjugators = _conjugators(group)
    class_id: dict[ElementSet, int] = {}
    reps: list[tuple[ElementSet, list[Images]]] = []
    class_orbits: list[set[ElementSet]] = []

    def register(elements: ElementSet, gens: list[Images]) -> None:
        if elements in class_id:
            return
        orbit = _conjugates(elements, conjugators)
        for member in orbit:
            class_id[member] = len(reps)
        reps.append((elements, gens))
        class_orbits.append(orbit)

    register(frozenset([identity]), [])
    for elements, g in _cyclic_subgroups(group).items():
        register(elements, [g])

    for elements, gens in reps:
        for g in joiners.values():
            if g not in elements:
                register(_join(elements, gens, g), [*gens, g])
    logger.debug("%d subgroup classes of %r", len(reps), group.name)

    lookup = {p.images: p for p in group.elements}
    return _build_classes(
        group,
        class_orbits,
        lambda s: group.subgroup_from_elements(lookup[x] for x in s),
    )


def normal_subgroups(group: PermutationGroup) -> list[Subgroup]:
    """Normal subgroups ordered by ``(order, sorted elements)``."""
    return [
        cls.representative
        for cls in all_subgroups(group).classes
        if cls.is_normal()
    ]


def is_simple(group: PermutationGroup) -> bool:
    """Whether ``group`` is nontrivial with no proper nontrivial normal
    subgroup.

    The normal closure of every cyclic subgroup (one per conjugacy class of
    elements) must be the whole group.
    """
    if group.order == 1:
        return False
    return all(
        normal_closure(group, [cls[0]]).order == group.order
        for cls in conjugacy_classes(group)
        if not cls[0].is_identity()
    )


def _is_core_free(group: PermutationGroup, subgroup: PermutationGroup) -> bool:
    return core_of(group, subgroup).order == 1


def _core_free_sets(
    group: PermutationGroup, lattice: SubgroupLattice
) -> list[frozenset[Permutation]]:
    return [
        member
        for cls in lattice.classes
        if _is_core_free(group, cls.representative)
        for member in cls.conjugates
    ]


def md_stabilizers(
    group: PermutationGroup,
    *,
    reading: Reading = "core-free-maximal",
) -> list[Subgroup]:
    """Representatives of the conjugacy classes of md-stabilizers.

    Parameters
    ----------
    group:
        Group whose subgroup lattice is feasible.

    reading:
        ``"core-free-maximal"`` keeps core-free subgroups not properly
        contained in another core-free subgroup. ``"maximal-core-free"``
        keeps maximal subgroups of ``group`` that are core-free.

    Returns
    -------
    list[Subgroup]
        Representatives, largest order first.

    Raises
    ------
    ValueError
        If ``reading`` is not recognised.
    """
    lattice = all_subgroups(group)
    free = [
        cls
        for cls in lattice.classes
        if _is_core_free(group, cls.representative)
    ]
    if reading == "core-free-maximal":
        above = [member for cls in free for member in cls.conjugates]
    elif reading == "maximal-core-free":
        above = [
            s.element_set for s in lattice.subgroups if s.order < group.order
        ]
        if group.order > 1:
            free = [cls for cls in free if cls.order < group.order]
    else:
        msg = f"unknown md-stabilizer reading {reading!r}"
        raise ValueError(msg)

    result = [
        cls.representative
        for cls in free
        if not any(cls.representative.element_set < b for b in above)
    ]
    return sorted(result, key=lambda s: (-s.order, s.elements))


def is_md_representation(
    group: PermutationGroup,
    subgroup: PermutationGroup,
    *,
    reading: Reading = "core-free-maximal",
) -> bool:
    """Whether ``subgroup`` is an md-stabilizer of ``group``.

    Subgroups with nontrivial core are never md-stabilizers.
    """
    if not _is_core_free(group, subgroup):
        return False
    return any(subgroup in md_cls for md_cls in _md_classes(group, reading))


def _md_classes(
    group: PermutationGroup, reading: Reading
) -> list[SubgroupClass]:
    lattice = all_subgroups(group)
    return [
        lattice.class_of(rep)
        for rep in md_stabilizers(group, reading=reading)
    ]


def minimal_faithful_degree(group: PermutationGroup) -> FaithfulDegree:
    """Lowest degree of a faithful, possibly intransitive, representation.

    A collection ``A_1, ..., A_m`` of subgroups acts faithfully on the union
    of its coset spaces when the cores of the ``A_i`` meet trivially; its
    degree is the sum of the indices. Only the largest subgroup with a
    given core is a useful candidate, and a branch-and-bound search over
    candidates (each one strictly shrinking the running core intersection)
    finds the optimum. Among optimal collections, more subgroups win.

    Parameters
    ----------
    group:
        Group whose subgroup lattice is feasible.

    Returns
    -------
    FaithfulDegree
        Optimum degree, the achieving collection and the best transitive
        degree.
    """
    lattice = all_subgroups(group)
    if group.order == 1:
        return FaithfulDegree(1, (lattice.subgroups[0],), 1)

    by_core: dict[frozenset[Permutation], Subgroup] = {}
    for cls in lattice.classes:
        core = core_of(group, cls.representative).element_set
        current = by_core.get(core)
        if current is None or cls.order > current.order:
            by_core[core] = cls.representative
    candidates = sorted(
        (
            (group.order // sub.order, core, sub)
            for core, sub in by_core.items()
        ),
        key=lambda c: (c[0], c[2].elements),
    )

    best: tuple[int, int] | None = None
    best_choice: list[Subgroup] = []
    chosen: list[Subgroup] = []
    nodes = 0

    def search(
        start: int, intersection: frozenset[Permutation], degree: int
    ) -> None:
        nonlocal best, best_choice, nodes
        nodes += 1
        if len(intersection) == 1:
            key = (degree, -len(chosen))
            if best is None or key < best:
                best, best_choice = key, list(chosen)
            return
        for i in range(start, len(candidates)):
            index, core, sub = candidates[i]
            if best is not None and degree + index > best[0]:
                break
            narrowed = intersection & core
            if narrowed == intersection:
                continue
            chosen.append(sub)
            search(i + 1, narrowed, degree + index)
            chosen.pop()

    search(0, group.element_set, 0)
    logger.debug("faithful degree search on %r: %d nodes", group.name, nodes)

    # the trivial subgroup is core-free, so a solution always exists
    assert best is not None  # noqa: S101
    transitive = [index for index, core, _ in candidates if len(core) == 1]
    return FaithfulDegree(
        degree=best[0],
        subgroups=tuple(best_choice),
        transitive_degree=min(transitive, default=None),
    )


def suborbits(group: PermutationGroup, point: int) -> list[frozenset[int]]:
    """Orbits of the stabilizer of ``point``, sorted by minimum.

    Raises
    ------
    IntransitiveGroupError
        If ``group`` is not transitive.
    """
    _require_transitive(group)
    return orbits(point_stabilizer(group, point))


def automorphic_numbers(group: PermutationGroup) -> AutomorphicNumbers:
    """Sizes of orbits of subgroups of ``group``.

    Every subgroup is scanned when the lattice is within
    ``config.lattice_cap``; otherwise only point stabilizers are, one per
    orbit of ``group``.
    """
    if group.order <= group.config.lattice_cap:
        lattice = all_subgroups(group)
        sizes = {len(o) for sub in lattice.subgroups for o in orbits(sub)}
        return AutomorphicNumbers(frozenset(sizes), "lattice")
    sizes = set()
    for orbit in orbits(group):
        stabilizer = point_stabilizer(group, min(orbit))
        sizes |= {len(o) for o in orbits(stabilizer)}
    return AutomorphicNumbers(frozenset(sizes), "suborbits")
