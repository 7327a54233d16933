# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Permutation groups, subgroups, orbits, stabilizers, normality, cores and
coset actions.

A :py:class:`.PermutationGroup` is built from generators and is queried
through two tiers: a stabilizer chain (order, membership, point
stabilizers) that never enumerates the group, and a sorted element list
(filters, intersections, cosets) that is materialized on demand and only
while the order stays within ``Config.element_cap``.
"""

from __future__ import annotations

import dataclasses
import functools as ft
import logging
import random
import threading
import typing as t

from korbit._internal import _chain
from korbit.config import DEFAULT_CONFIG, Config
from korbit.core.permutation import Permutation, compose, inverse
from korbit.exceptions import (
    CapExceededError,
    DegreeMismatchError,
    IntransitiveGroupError,
    NotSubgroupError,
)

__all__ = [
    "CosetAction",
    "PermutationGroup",
    "Subgroup",
    "brute_force_closure",
    "centre",
    "conjugacy_classes",
    "conjugate_group",
    "coset_action",
    "core_of",
    "direct_product",
    "generate",
    "is_normal",
    "is_transitive",
    "left_cosets",
    "normal_closure",
    "orbits",
    "point_stabilizer",
    "pointwise_stabilizer",
    "right_cosets",
    "setwise_stabilizer",
]

logger = logging.getLogger(__name__)

T = t.TypeVar("T")


class PermutationGroup:
    """Group generated by permutations of ``0..degree-1``.

    The group is immutable after construction. Its stabilizer chain and
    element list are built lazily, under a lock, the first time they are
    needed.

    Parameters
    ----------
    generators:
        Generating permutations, all of degree ``degree``.

    degree:
        Number of points acted on.

    config:
        Caps used by operations on this group.

    name:
        Identifier used in reports.

    Raises
    ------
    DegreeMismatchError
        If a generator has a different degree.
    """

    def __init__(
        self,
        generators: t.Iterable[Permutation],
        degree: int,
        *,
        config: Config | None = None,
        name: str | None = None,
    ) -> None:
        gens = tuple(generators)
        for g in gens:
            if g.degree != degree:
                msg = (
                    f"generator {g} has degree {g.degree}, "
                    f"expected {degree}"
                )
                raise DegreeMismatchError(msg)
        self.degree = degree
        self.generators = gens
        self.config = config or DEFAULT_CONFIG
        self.name = name
        self._lock = threading.RLock()
        self._chain: _chain.StabilizerChain | None = None
        self._elements: tuple[Permutation, ...] | None = None
        self._element_set: frozenset[Permutation] | None = None
        self._memo: dict[str, t.Any] = {}

    def __repr__(self) -> str:
        gens = ", ".join(map(str, self.generators)) or "()"
        return f"{type(self).__name__}([{gens}], degree={self.degree})"

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> t.Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, perm: object) -> bool:
        if not isinstance(perm, Permutation) or perm.degree != self.degree:
            return False
        if self._element_set is not None:
            return perm in self._element_set
        return self.chain.contains(perm.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.order == other.order
            and all(g in self for g in other.generators)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def chain(self) -> _chain.StabilizerChain:
        with self._lock:
            if self._chain is None:
                self._chain = _chain.build_chain(
                    (g.images for g in self.generators), self.degree
                )
            return self._chain

    @property
    def order(self) -> int:
        if self._elements is not None:
            return len(self._elements)
        return self.chain.order

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def elements(self) -> tuple[Permutation, ...]:
        """All elements in sorted (lexicographic image) order.

        Raises
        ------
        CapExceededError
            If the order exceeds ``config.element_cap``.
        """
        with self._lock:
            if self._elements is None:
                order = self.chain.order
                if order > self.config.element_cap:
                    raise CapExceededError(
                        "element", self.config.element_cap, order
                    )
                self._elements = tuple(
                    sorted(
                        Permutation._trusted(g)  # noqa: SLF001
                        for g in self.chain.elements()
                    )
                )
                logger.debug(
                    "materialized %d elements of %r", order, self.name
                )
            return self._elements

    @property
    def element_set(self) -> frozenset[Permutation]:
        with self._lock:
            if self._element_set is None:
                self._element_set = frozenset(self.elements)
            return self._element_set

    def memoize(self, key: str, factory: t.Callable[[], T]) -> T:
        """Compute a derived value once per group, under the group lock."""
        with self._lock:
            if key not in self._memo:
                self._memo[key] = factory()
            return self._memo[key]

    def is_materializable(self) -> bool:
        return self.order <= self.config.element_cap

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            compose(a, b) == compose(b, a)
            for i, a in enumerate(gens)
            for b in gens[i + 1 :]
        )

    def is_subgroup(self, other: PermutationGroup) -> bool:
        """Whether every element of ``self`` lies in ``other``."""
        if self.degree != other.degree or other.order % self.order:
            return False
        return all(g in other for g in self.generators)

    def index(self, subgroup: PermutationGroup) -> int:
        if not subgroup.is_subgroup(self):
            msg = "index is only defined for subgroups"
            raise NotSubgroupError(msg)
        return self.order // subgroup.order

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        queue = [point]
        for x in queue:
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._trusted(  # noqa: SLF001
            self.chain.random_element(rng)
        )

    def subgroup(
        self, generators: t.Iterable[Permutation], *, name: str | None = None
    ) -> Subgroup:
        return Subgroup(self, generators, name=name)

    def subgroup_from_elements(
        self,
        elements: t.Iterable[Permutation],
        *,
        name: str | None = None,
    ) -> Subgroup:
        """Wrap a set of elements known to form a subgroup.

        A small generating set is picked greedily in sorted element order and
        the element list is cached on the result.
        """
        members = sorted(set(elements))
        images = {p.images for p in members}
        generated: set[tuple[int, ...]] = {self.identity.images}
        gens: list[Permutation] = []
        for p in members:
            if p.images not in generated:
                generated = _chain.extend_closure(
                    generated, [g.images for g in gens], p.images
                )
                gens.append(p)
        if generated != images:
            msg = "elements do not form a subgroup"
            raise NotSubgroupError(msg)
        sub = Subgroup(self, gens, name=name, check=False)
        sub._elements = tuple(members)  # noqa: SLF001
        return sub


class Subgroup(PermutationGroup):
    """Subgroup of a :py:class:`.PermutationGroup`.

    Raises
    ------
    NotSubgroupError
        If a generator is not a member of ``parent``, or the order does not
        divide the parent order.
    """

    def __init__(
        self,
        parent: PermutationGroup,
        generators: t.Iterable[Permutation],
        *,
        name: str | None = None,
        check: bool = True,
    ) -> None:
        super().__init__(
            generators, parent.degree, config=parent.config, name=name
        )
        self.parent = parent
        if check:
            for g in self.generators:
                if g not in parent:
                    msg = f"{g} is not an element of {parent!r}"
                    raise NotSubgroupError(msg)
            if parent.order % self.order:
                msg = (
                    f"order {self.order} does not divide "
                    f"parent order {parent.order}"
                )
                raise NotSubgroupError(msg)


@dataclasses.dataclass(frozen=True)
class CosetAction:
    """Action of a group on the left cosets of a subgroup."""

    parent: PermutationGroup
    subgroup: PermutationGroup
    #: Left cosets ordered by minimal element, ``subgroup`` first.
    cosets: tuple[tuple[Permutation, ...], ...]
    #: Image of each generator of ``parent`` as a permutation of cosets.
    images: dict[Permutation, Permutation]
    kernel: Subgroup

    @property
    def degree(self) -> int:
        return len(self.cosets)

    def image(self) -> PermutationGroup:
        """The permutation group induced on the cosets."""
        return PermutationGroup(
            (self.images[g] for g in self.parent.generators),
            self.degree,
            config=self.parent.config,
            name=self.parent.name and f"{self.parent.name}-cosets",
        )

    @ft.cached_property
    def coset_index(self) -> dict[Permutation, int]:
        """Index of the coset containing each element of ``parent``."""
        return _coset_lookup(self.cosets)

    def act(self, element: Permutation) -> Permutation:
        """Permutation of coset indices induced by ``element``."""
        index = self.coset_index
        return Permutation._trusted(  # noqa: SLF001
            tuple(index[compose(element, c[0])] for c in self.cosets)
        )


def generate(
    generators: t.Iterable[Permutation],
    degree: int,
    *,
    config: Config | None = None,
    name: str | None = None,
) -> PermutationGroup:
    """Generate the permutation group spanned by ``generators``.

    Parameters
    ----------
    generators:
        Generating permutations of degree ``degree``. May be empty.

    degree:
        Number of points.

    config:
        Caps for operations on the group.

    name:
        Identifier used in reports.

    Returns
    -------
    PermutationGroup
        The generated group.

    Examples
    --------
    >>> from korbit.core.permutation import parse_cycles
    >>> gens = [parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)]
    >>> generate(gens, 3).order
    6
    """
    return PermutationGroup(generators, degree, config=config, name=name)


def brute_force_closure(
    generators: t.Iterable[Permutation], degree: int
) -> frozenset[Permutation]:
    """Close ``generators`` under composition without a stabilizer chain."""
    return frozenset(
        Permutation._trusted(g)  # noqa: SLF001
        for g in _chain.closure((p.images for p in generators), degree)
    )


def orbits(group: PermutationGroup) -> list[frozenset[int]]:
    """Orbits of ``group`` on its points, sorted by minimum."""
    seen: set[int] = set()
    result: list[frozenset[int]] = []
    for point in range(group.degree):
        if point not in seen:
            orbit = group.orbit(point)
            seen |= orbit
            result.append(orbit)
    return result


def is_transitive(group: PermutationGroup) -> bool:
    return group.degree == 0 or len(group.orbit(0)) == group.degree


def _require_transitive(group: PermutationGroup) -> None:
    if not is_transitive(group):
        msg = f"{group.name or group!r} is not transitive"
        raise IntransitiveGroupError(msg)


def pointwise_stabilizer(
    group: PermutationGroup, points: t.Sequence[int]
) -> Subgroup:
    """Subgroup fixing every point of ``points``.

    Computed from a stabilizer chain whose base starts with ``points``, so
    the group is never enumerated.
    """
    chain = _chain.build_chain(
        (g.images for g in group.generators), group.degree, base=points
    )
    gens = chain.stabilizer_generators(len(points))
    return Subgroup(
        group,
        (Permutation._trusted(g) for g in gens),  # noqa: SLF001
        check=False,
    )


def point_stabilizer(group: PermutationGroup, point: int) -> Subgroup:
    """Subgroup ``{g : g(point) = point}``.

    Examples
    --------
    >>> from korbit.core.permutation import parse_cycles
    >>> gens = [parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)", 3)]
    >>> s3 = generate(gens, 3)
    >>> point_stabilizer(s3, 0).order
    2
    """
    return pointwise_stabilizer(group, [point])


def setwise_stabilizer(
    group: PermutationGroup, points: t.Iterable[int]
) -> Subgroup:
    """Subgroup ``{g : g(U) = U}`` for the point set ``U``."""
    subset = frozenset(points)
    return group.subgroup_from_elements(
        g for g in group.elements if subset == frozenset(g.apply(subset))
    )


def is_normal(group: PermutationGroup, subgroup: PermutationGroup) -> bool:
    """Whether ``g H g^-1 = H`` for every generator ``g`` of ``group``."""
    return all(
        h.conjugate(g) in subgroup
        for g in group.generators
        for h in subgroup.generators
    )


def normal_closure(
    group: PermutationGroup, generators: t.Iterable[Permutation]
) -> Subgroup:
    """Smallest normal subgroup of ``group`` containing ``generators``."""
    gens = [g for g in generators if not g.is_identity()]
    closure = Subgroup(group, gens, check=False)
    changed = True
    while changed:
        changed = False
        for g in group.generators:
            for h in list(closure.generators):
                conj = h.conjugate(g)
                if conj not in closure:
                    gens.append(conj)
                    closure = Subgroup(group, gens, check=False)
                    changed = True
    return closure


def core_of(group: PermutationGroup, subgroup: PermutationGroup) -> Subgroup:
    """Largest normal subgroup of ``group`` contained in ``subgroup``.

    Computed as the intersection of the conjugates ``g A g^-1`` over one
    representative ``g`` of each left coset ``gA``.
    """
    if subgroup.order == 1 and subgroup.degree == group.degree:
        return group.subgroup_from_elements([group.identity])
    core = set(subgroup.element_set)
    for coset in left_cosets(group, subgroup):
        if len(core) == 1:
            break
        g = coset[0]
        g_inv = inverse(g)
        core &= {compose(compose(g, a), g_inv) for a in subgroup.elements}
    return group.subgroup_from_elements(core)


def _check_index(group: PermutationGroup, subgroup: PermutationGroup) -> int:
    if not subgroup.is_subgroup(group):
        msg = "cosets are only defined for subgroups"
        raise NotSubgroupError(msg)
    index = group.order // subgroup.order
    if index > group.config.index_cap:
        raise CapExceededError("index", group.config.index_cap, index)
    return index


def _cosets(
    group: PermutationGroup,
    subgroup: PermutationGroup,
    *,
    left: bool,
) -> tuple[tuple[Permutation, ...], ...]:
    _check_index(group, subgroup)
    assigned: set[Permutation] = set()
    cosets: list[tuple[Permutation, ...]] = []
    # elements are sorted, so each new coset starts at its minimal element
    for g in group.elements:
        if g in assigned:
            continue
        if left:
            coset = tuple(sorted(compose(g, a) for a in subgroup.elements))
        else:
            coset = tuple(sorted(compose(a, g) for a in subgroup.elements))
        assigned.update(coset)
        cosets.append(coset)
    return tuple(cosets)


def left_cosets(
    group: PermutationGroup, subgroup: PermutationGroup
) -> tuple[tuple[Permutation, ...], ...]:
    """Left cosets ``gA`` ordered by minimal element, ``A`` first."""
    return _cosets(group, subgroup, left=True)


def right_cosets(
    group: PermutationGroup, subgroup: PermutationGroup
) -> tuple[tuple[Permutation, ...], ...]:
    """Right cosets ``Ag`` ordered by minimal element, ``A`` first."""
    return _cosets(group, subgroup, left=False)


def _coset_lookup(
    cosets: t.Sequence[t.Sequence[Permutation]],
) -> dict[Permutation, int]:
    return {g: i for i, coset in enumerate(cosets) for g in coset}


def coset_action(
    group: PermutationGroup, subgroup: PermutationGroup
) -> CosetAction:
    """Action of ``group`` on the left cosets of ``subgroup`` by left
    multiplication.

    Parameters
    ----------
    group:
        Acting group ``F``.

    subgroup:
        Subgroup ``A`` of ``group``.

    Returns
    -------
    CosetAction
        Ordered cosets, generator images and the kernel of the action.

    Raises
    ------
    CapExceededError
        If the index exceeds ``config.index_cap``.

    NotSubgroupError
        If ``subgroup`` is not contained in ``group``.
    """
    cosets = left_cosets(group, subgroup)
    lookup = _coset_lookup(cosets)
    reps = [c[0] for c in cosets]

    def act(f: Permutation) -> Permutation:
        return Permutation._trusted(  # noqa: SLF001
            tuple(lookup[compose(f, r)] for r in reps)
        )

    images = {g: act(g) for g in group.generators}
    # f acts trivially iff f r A = r A for every representative r
    kernel = group.subgroup_from_elements(
        f
        for f in subgroup.elements
        if all(lookup[compose(f, r)] == i for i, r in enumerate(reps))
    )
    return CosetAction(group, subgroup, cosets, images, kernel)


def direct_product(
    first: PermutationGroup,
    second: PermutationGroup,
    *,
    name: str | None = None,
) -> PermutationGroup:
    """Direct product acting on disjoint point sets, ``first`` on
    ``0..m-1`` and ``second`` on ``m..m+n-1``.
    """
    m, n = first.degree, second.degree
    gens = [
        Permutation._trusted(g.images + tuple(range(m, m + n)))  # noqa: SLF001
        for g in first.generators
    ]
    gens += [
        Permutation._trusted(  # noqa: SLF001
            tuple(range(m)) + tuple(x + m for x in g.images)
        )
        for g in second.generators
    ]
    return PermutationGroup(gens, m + n, config=first.config, name=name)


def conjugate_group(
    group: PermutationGroup, sigma: Permutation, *, name: str | None = None
) -> PermutationGroup:
    """Relabel ``group`` by ``sigma``: ``{sigma g sigma^-1 : g in group}``."""
    return PermutationGroup(
        (g.conjugate(sigma) for g in group.generators),
        group.degree,
        config=group.config,
        name=name,
    )


def centre(group: PermutationGroup) -> Subgroup:
    """Elements commuting with every generator of ``group``."""
    return group.subgroup_from_elements(
        z
        for z in group.elements
        if all(compose(z, g) == compose(g, z) for g in group.generators)
    )


def conjugacy_classes(
    group: PermutationGroup,
) -> list[tuple[Permutation, ...]]:
    """Conjugacy classes of elements, each sorted, ordered by minimum.

    The identity class comes first.
    """
    conjugators = [(g, inverse(g)) for g in group.generators]
    seen: set[Permutation] = set()
    classes: list[tuple[Permutation, ...]] = []
    for x in group.elements:
        if x in seen:
            continue
        cls = {x}
        queue = [x]
        for y in queue:
            for g, g_inv in conjugators:
                z = compose(compose(g, y), g_inv)
                if z not in cls:
                    cls.add(z)
                    queue.append(z)
        seen |= cls
        classes.append(tuple(sorted(cls)))
    return classes
