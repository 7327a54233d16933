# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""n-orbit matrices, their k-projections, and n-orbit isomorphism.

The n-orbit of a degree-``n`` group ``G`` is the ``|G| x n`` matrix whose
rows are the image tuples ``(g(0), ..., g(n-1))``. Rows are kept in
lexicographic order as a read-only :py:class:`numpy.ndarray`.

Two n-orbits are isomorphic when some ``sigma`` in ``S_n`` conjugates the
group of one onto the group of the other, i.e. the represented groups are
permutation equivalent.
"""

from __future__ import annotations

import dataclasses
import logging
import typing as t
from collections import Counter

import numpy as np
import numpy.typing as npt
import pydantic as pyd

from korbit.config import DEFAULT_CONFIG, Config
from korbit.core.group import PermutationGroup, coset_action
from korbit.core.permutation import Permutation
from korbit.exceptions import CapExceededError, ColumnError

__all__ = [
    "IsomorphismResult",
    "KOrbit",
    "NOrbitMatrix",
    "aut_of_n_orbit",
    "conjugates_onto",
    "k_projection",
    "n_orbit",
    "n_orbit_from_cosets",
    "n_orbits_isomorphic",
]

logger = logging.getLogger(__name__)

Rows = npt.NDArray[np.int64]


class MatrixDocument(pyd.BaseModel):
    """JSON form of an n-orbit or a k-orbit."""

    model_config = pyd.ConfigDict(frozen=True)

    group_id: str | None
    degree: int
    order: int
    columns: list[int] | None = None
    rows: list[list[int]]


def _freeze(rows: npt.ArrayLike, width: int) -> Rows:
    array = np.asarray(rows, dtype=np.int64).reshape(-1, width)
    if len(array):
        array = np.unique(array, axis=0)
    array.setflags(write=False)
    return array


def _text(rows: Rows) -> str:
    return "\n".join(" ".join(map(str, row)) for row in rows.tolist())


@dataclasses.dataclass(frozen=True, eq=False)
class NOrbitMatrix:
    """Set of image tuples of a permutation group, one row per element."""

    degree: int
    #: Distinct rows in lexicographic order.
    rows: Rows

    @classmethod
    def from_rows(
        cls, rows: t.Iterable[t.Sequence[int]], degree: int
    ) -> NOrbitMatrix:
        return cls(degree, _freeze(list(rows), degree))

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return self.row_count

    def __iter__(self) -> t.Iterator[tuple[int, ...]]:
        return (tuple(row) for row in self.rows.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NOrbitMatrix):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(
            self.rows, other.rows
        )

    __hash__ = None  # type: ignore[assignment]

    def row_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self)

    def permutations(self) -> list[Permutation]:
        """Rows read as permutations."""
        return [Permutation(row) for row in self]

    def contains_identity(self) -> bool:
        return tuple(range(self.degree)) in self.row_set()

    def is_closed(self) -> bool:
        """Whether composing any two rows gives a row."""
        rows = self.rows
        return all(
            np.array_equal(_freeze(row[rows], self.degree), rows)
            for row in rows
        )

    def group(self, *, config: Config | None = None) -> PermutationGroup:
        """Permutation group generated by the rows."""
        return PermutationGroup(
            self.permutations(), self.degree, config=config
        )

    def to_text(self) -> str:
        """One row per line, points separated by spaces."""
        return _text(self.rows)

    def to_json(self, group_id: str | None = None) -> str:
        return MatrixDocument(
            group_id=group_id,
            degree=self.degree,
            order=self.row_count,
            rows=self.rows.tolist(),
        ).model_dump_json()


@dataclasses.dataclass(frozen=True, eq=False)
class KOrbit:
    """Projection of an n-orbit onto an ordered tuple of columns."""

    #: Column indices, distinct, in projection order.
    columns: tuple[int, ...]
    #: Distinct projected tuples in lexicographic order.
    tuples: Rows
    #: Degree of the projected n-orbit.
    degree: int

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> t.Iterator[tuple[int, ...]]:
        return (tuple(row) for row in self.tuples.tolist())

    def tuple_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(self)

    def to_text(self) -> str:
        return _text(self.tuples)

    def to_json(self, group_id: str | None = None) -> str:
        return MatrixDocument(
            group_id=group_id,
            degree=self.degree,
            order=len(self),
            columns=list(self.columns),
            rows=self.tuples.tolist(),
        ).model_dump_json()


def n_orbit(group: PermutationGroup) -> NOrbitMatrix:
    """The n-orbit of ``group``.

    Raises
    ------
    CapExceededError
        If the group cannot be materialized.
    """
    rows = np.array(
        [g.images for g in group.elements], dtype=np.int64
    ).reshape(-1, group.degree)
    rows.setflags(write=False)
    return NOrbitMatrix(group.degree, rows)


def n_orbit_from_cosets(
    group: PermutationGroup, subgroup: PermutationGroup
) -> NOrbitMatrix:
    """n-orbit of the action of ``group`` on the left cosets of
    ``subgroup``.

    Row ``f`` lists the coset indices of ``f g_1 A, ..., f g_n A`` for the
    ordered cosets ``g_i A``; duplicates collapse, leaving one row per
    element of ``group / core``.
    """
    return n_orbit(coset_action(group, subgroup).image())


def k_projection(matrix: NOrbitMatrix, columns: t.Sequence[int]) -> KOrbit:
    """Project an n-orbit onto ``columns`` and deduplicate.

    Parameters
    ----------
    matrix:
        n-orbit to project.

    columns:
        Distinct column indices.

    Returns
    -------
    KOrbit
        The orbit of the tuple ``columns`` under the represented group.

    Raises
    ------
    ColumnError
        If ``columns`` is empty, repeats a column, or names a column outside
        ``0..degree-1``.
    """
    cols = tuple(columns)
    if not cols:
        msg = "at least one column is required"
        raise ColumnError(msg)
    if len(set(cols)) != len(cols):
        msg = f"columns {list(cols)} are not distinct"
        raise ColumnError(msg)
    for c in cols:
        if not 0 <= c < matrix.degree:
            msg = f"column {c} out of range for degree {matrix.degree}"
            raise ColumnError(msg)
    return KOrbit(
        columns=cols,
        tuples=_freeze(matrix.rows[:, list(cols)], len(cols)),
        degree=matrix.degree,
    )


def aut_of_n_orbit(
    matrix: NOrbitMatrix, *, config: Config | None = None
) -> PermutationGroup:
    """Permutations ``sigma`` with ``{sigma . row} = X``, among the rows.

    Each row, read as a permutation, is a candidate; it is kept when
    composing it with every row permutes the row set.

    Raises
    ------
    CapExceededError
        If the row count exceeds ``config.element_cap``.
    """
    config = config or DEFAULT_CONFIG
    if matrix.row_count > config.element_cap:
        cap = config.element_cap
        raise CapExceededError("element", cap, matrix.row_count)
    rows = matrix.rows
    kept = [
        Permutation(tuple(sigma))
        for sigma in rows.tolist()
        if np.array_equal(
            _freeze(np.asarray(sigma)[rows], matrix.degree), rows
        )
    ]
    return PermutationGroup(kept, matrix.degree, config=config)


def conjugates_onto(
    x: NOrbitMatrix, y: NOrbitMatrix, sigma: Permutation
) -> bool:
    """Whether ``{sigma . row . sigma^-1 : row in x}`` equals ``y``."""
    if x.degree != y.degree or sigma.degree != x.degree:
        return False
    s = np.asarray(sigma.images, dtype=np.int64)
    s_inv = np.argsort(s)
    return np.array_equal(_freeze(s[x.rows[:, s_inv]], x.degree), y.rows)


@dataclasses.dataclass(frozen=True)
class IsomorphismResult:
    """Outcome of an n-orbit isomorphism test.

    ``isomorphic`` is ``None`` when the node budget ran out first.
    """

    isomorphic: bool | None
    witness: Permutation | None
    nodes: int
    reason: str

    @property
    def verdict(self) -> str:
        if self.isomorphic is None:
            return "undecided"
        return "isomorphic" if self.isomorphic else "non-isomorphic"


class _Side:
    """Invariants of one group used by the backtrack."""

    def __init__(self, matrix: NOrbitMatrix) -> None:
        self.rows = matrix.rows
        self.n = n = matrix.degree
        self.cycle_types = Counter(
            str(p.cycle_type()) for p in matrix.permutations()
        )
        # orbital[x, y] identifies the orbit of the pair (x, y)
        self.orbital = np.full((n, n), -1, dtype=np.int64)
        self.orbital_size: list[int] = []
        for x in range(n):
            for y in range(n):
                if self.orbital[x, y] >= 0:
                    continue
                images = np.unique(self.rows[:, x] * n + self.rows[:, y])
                pair_id = len(self.orbital_size)
                self.orbital[images // n, images % n] = pair_id
                self.orbital_size.append(len(images))
        sizes = self.orbit_sizes(self.rows)
        self.point_invariant = [
            (
                int(sizes[x]),
                tuple(sorted(self.orbit_sizes(self.stabilizer([x], [x])))),
            )
            for x in range(n)
        ]

    def stabilizer(self, points: list[int], images: list[int]) -> Rows:
        """Rows sending ``points`` to ``images`` pointwise."""
        if not points:
            return self.rows
        mask = (self.rows[:, points] == images).all(axis=1)
        return self.rows[mask]

    @staticmethod
    def orbit_sizes(rows: Rows) -> npt.NDArray[np.int64]:
        # rows form a group, so column x lists the orbit of x
        return np.array(
            [len(np.unique(rows[:, x])) for x in range(rows.shape[1])],
            dtype=np.int64,
        )


class _Backtrack:
    def __init__(self, x: _Side, y: _Side, budget: int) -> None:
        self.x = x
        self.y = y
        self.budget = budget
        self.nodes = 0
        self.y_rows = y.rows

    def run(self) -> Permutation | None:
        return self._extend([], [], {}, {})

    def _next_point(self, points: list[int], stab: Rows) -> int:
        sizes = _Side.orbit_sizes(stab)
        free = [p for p in range(self.x.n) if p not in points]
        moving = [p for p in free if sizes[p] > 1]
        if moving:
            return min(moving, key=lambda p: (sizes[p], p))
        return free[0]

    def _consistent(
        self,
        points: list[int],
        images: list[int],
        fwd: dict[int, int],
        bwd: dict[int, int],
    ) -> bool:
        b, c = points[-1], images[-1]
        for b2, c2 in zip(points, images, strict=True):
            for (i, j), (k, l) in (((b, b2), (c, c2)), ((b2, b), (c2, c))):
                oi = int(self.x.orbital[i, j])
                oj = int(self.y.orbital[k, l])
                if self.x.orbital_size[oi] != self.y.orbital_size[oj]:
                    return False
                if fwd.setdefault(oi, oj) != oj:
                    return False
                if bwd.setdefault(oj, oi) != oi:
                    return False
        return True

    def _extend(
        self,
        points: list[int],
        images: list[int],
        fwd: dict[int, int],
        bwd: dict[int, int],
    ) -> Permutation | None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhaustedError
        x_stab = self.x.stabilizer(points, points)
        y_stab = self.y.stabilizer(images, images)
        if len(x_stab) != len(y_stab):
            return None
        x_sizes = _Side.orbit_sizes(x_stab)
        y_sizes = _Side.orbit_sizes(y_stab)
        if sorted(x_sizes) != sorted(y_sizes):
            return None
        if len(points) == self.x.n:
            return self._leaf(points, images)

        b = self._next_point(points, x_stab)
        for c in range(self.y.n):
            if (
                c in images
                or y_sizes[c] != x_sizes[b]
                or self.y.point_invariant[c] != self.x.point_invariant[b]
            ):
                continue
            fwd2, bwd2 = dict(fwd), dict(bwd)
            if not self._consistent([*points, b], [*images, c], fwd2, bwd2):
                continue
            found = self._extend([*points, b], [*images, c], fwd2, bwd2)
            if found is not None:
                return found
        return None

    def _leaf(
        self, points: list[int], images: list[int]
    ) -> Permutation | None:
        sigma = [0] * self.x.n
        for b, c in zip(points, images, strict=True):
            sigma[b] = c
        s = np.asarray(sigma, dtype=np.int64)
        conj = _freeze(s[self.x.rows[:, np.argsort(s)]], self.x.n)
        if np.array_equal(conj, self.y_rows):
            return Permutation(tuple(sigma))
        return None


class _BudgetExhaustedError(Exception):
    pass


def n_orbits_isomorphic(
    x: NOrbitMatrix,
    y: NOrbitMatrix,
    *,
    node_budget: int | None = None,
    config: Config | None = None,
) -> IsomorphismResult:
    """Decide whether ``x`` and ``y`` are isomorphic n-orbits.

    Cheap invariants (degree, row count, cycle-type multiset, per-point
    orbit and suborbit sizes) are compared first. Otherwise ``sigma`` is
    built point by point along a base of ``x``; a partial map survives
    while pointwise stabilizers on both sides have equal orders and orbit
    sizes and orbitals correspond bijectively. A full map is accepted when
    it conjugates every row of ``x`` into ``y``.

    Parameters
    ----------
    x:
        First n-orbit.

    y:
        Second n-orbit.

    node_budget:
        Search nodes allowed before giving up. Defaults to
        ``config.node_budget``.

    config:
        Supplies the default node budget.

    Returns
    -------
    IsomorphismResult
        Verdict, a witness ``sigma`` with ``sigma x sigma^-1 = y`` when
        isomorphic, and the number of nodes visited.
    """
    budget = node_budget
    if budget is None:
        budget = (config or DEFAULT_CONFIG).node_budget
    if x.degree != y.degree:
        return IsomorphismResult(False, None, 0, "degrees differ")
    if x.row_count != y.row_count:
        return IsomorphismResult(False, None, 0, "row counts differ")

    x_side, y_side = _Side(x), _Side(y)
    if x_side.cycle_types != y_side.cycle_types:
        return IsomorphismResult(False, None, 0, "cycle types differ")
    if sorted(x_side.point_invariant) != sorted(y_side.point_invariant):
        return IsomorphismResult(
            False, None, 0, "orbit or suborbit sizes differ"
        )
    if sorted(x_side.orbital_size) != sorted(y_side.orbital_size):
        return IsomorphismResult(False, None, 0, "orbital sizes differ")

    search = _Backtrack(x_side, y_side, budget)
    try:
        witness = search.run()
    except _BudgetExhaustedError:
        logger.info("isomorphism test gave up after %d nodes", budget)
        return IsomorphismResult(
            None, None, search.nodes, f"node budget of {budget} exhausted"
        )
    logger.debug("isomorphism backtrack visited %d nodes", search.nodes)
    if witness is None:
        return IsomorphismResult(
            False, None, search.nodes, "no conjugating permutation"
        )
    return IsomorphismResult(True, witness, search.nodes, "witness found")
