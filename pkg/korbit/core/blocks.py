# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Block systems (systems of imprimitivity) of transitive groups."""

from __future__ import annotations

import dataclasses
import typing as t

from korbit.core.group import (
    PermutationGroup,
    Subgroup,
    _require_transitive,
    is_transitive,
)
from korbit.core.permutation import Permutation
from korbit.exceptions import BlockSystemError

__all__ = [
    "BlockSystem",
    "block_action",
    "block_kernel",
    "is_primitive",
    "is_primitive_nonabelian",
    "minimal_block_system",
    "minimal_block_systems",
]


@dataclasses.dataclass(frozen=True)
class BlockSystem:
    """Partition of the points into blocks of equal size.

    Blocks are stored sorted by their minimal point.
    """

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        sizes = {len(b) for b in self.blocks}
        points = [p for b in self.blocks for p in b]
        if len(sizes) > 1 or len(points) != len(set(points)):
            msg = "blocks must be disjoint and of equal size"
            raise BlockSystemError(msg)
        if sorted(points) != list(range(len(points))):
            msg = "blocks must cover every point"
            raise BlockSystemError(msg)

    @classmethod
    def from_blocks(cls, blocks: t.Iterable[t.Iterable[int]]) -> BlockSystem:
        return cls(tuple(sorted((frozenset(b) for b in blocks), key=min)))

    @property
    def degree(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def is_trivial(self) -> bool:
        return self.block_size in (1, self.degree)

    def block_of(self, point: int) -> frozenset[int]:
        return next(b for b in self.blocks if point in b)

    def is_invariant(self, group: PermutationGroup) -> bool:
        """Whether every generator maps every block onto a block."""
        blocks = set(self.blocks)
        return all(
            frozenset(g.apply(block)) in blocks
            for g in group.generators
            for block in self.blocks
        )

    def __str__(self) -> str:
        return " | ".join(
            " ".join(map(str, sorted(block))) for block in self.blocks
        )


def minimal_block_system(
    group: PermutationGroup, a: int, b: int
) -> BlockSystem:
    """Finest block system in which ``a`` and ``b`` share a block.

    Union-find merging of the classes of ``g(x)`` and ``g(y)`` for every
    merged pair ``(x, y)`` and generator ``g``.
    """
    parent = list(range(group.degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(a, b)
    queue = [(a, b)]
    for x, y in queue:
        for g in group.generators:
            gx, gy = g.images[x], g.images[y]
            if union(gx, gy):
                queue.append((gx, gy))

    classes: dict[int, list[int]] = {}
    for point in range(group.degree):
        classes.setdefault(find(point), []).append(point)
    return BlockSystem.from_blocks(classes.values())


def minimal_block_systems(group: PermutationGroup) -> list[BlockSystem]:
    """All minimal nontrivial block systems of a transitive group.

    For each ``b != 0`` the finest system joining ``0`` and ``b`` is
    computed; the nontrivial ones whose block through ``0`` contains no
    smaller nontrivial block through ``0`` are kept.

    Parameters
    ----------
    group:
        Transitive permutation group.

    Returns
    -------
    list[BlockSystem]
        Distinct minimal systems, ordered by block size then blocks.

    Raises
    ------
    IntransitiveGroupError
        If ``group`` is not transitive.
    """
    _require_transitive(group)
    candidates: dict[frozenset[int], BlockSystem] = {}
    for b in range(1, group.degree):
        system = minimal_block_system(group, 0, b)
        if not system.is_trivial():
            candidates.setdefault(system.block_of(0), system)
    minimal = [
        system
        for block, system in candidates.items()
        if not any(other < block for other in candidates)
    ]
    return sorted(
        minimal,
        key=lambda s: (s.block_size, [sorted(b) for b in s.blocks]),
    )


def is_primitive(group: PermutationGroup) -> bool:
    """Whether ``group`` is transitive with no nontrivial block system.

    Intransitive groups are not primitive; this predicate does not raise.
    """
    if not is_transitive(group):
        return False
    return not any(
        not minimal_block_system(group, 0, b).is_trivial()
        for b in range(1, group.degree)
    )


def is_primitive_nonabelian(group: PermutationGroup) -> bool:
    """Primitive in the non-abelian sense: primitive and non-abelian."""
    return is_primitive(group) and not group.is_abelian()


def _require_invariant(group: PermutationGroup, system: BlockSystem) -> None:
    if system.degree != group.degree or not system.is_invariant(group):
        msg = f"{system} is not a block system of {group.name or group!r}"
        raise BlockSystemError(msg)


def block_kernel(group: PermutationGroup, system: BlockSystem) -> Subgroup:
    """Subgroup fixing every block of ``system`` setwise.

    Raises
    ------
    BlockSystemError
        If ``system`` is not ``group``-invariant.
    """
    _require_invariant(group, system)
    block_index = {p: i for i, b in enumerate(system.blocks) for p in b}
    return group.subgroup_from_elements(
        g
        for g in group.elements
        if all(
            block_index[g.images[p]] == block_index[p]
            for p in range(group.degree)
        )
    )


def block_action(
    group: PermutationGroup, system: BlockSystem
) -> PermutationGroup:
    """Group induced by ``group`` on the blocks of ``system``."""
    _require_invariant(group, system)
    block_index = {p: i for i, b in enumerate(system.blocks) for p in b}
    gens = [
        Permutation._trusted(  # noqa: SLF001
            tuple(block_index[g.images[min(b)]] for b in system.blocks)
        )
        for g in group.generators
    ]
    return PermutationGroup(gens, system.block_count, config=group.config)
