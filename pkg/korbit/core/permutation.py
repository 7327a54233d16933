# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Permutations of the point set ``0..n-1`` and their cycle structure.

Composition is written right-to-left: ``p * q`` applies ``q`` first and
then ``p``, i.e. ``(p * q)(i) == p(q(i))``.
"""

from __future__ import annotations

import dataclasses
import math
import re
import typing as t
from collections import Counter

from korbit.exceptions import (
    DegreeMismatchError,
    InvalidPermutationError,
    SpecRangeError,
    SpecSyntaxError,
)

__all__ = [
    "CycleType",
    "Permutation",
    "compose",
    "cycle_decomposition",
    "fixed_points",
    "identity",
    "inverse",
    "is_regular_element",
    "parse_cycles",
    "rebuild",
]

Cycle = tuple[int, ...]


@dataclasses.dataclass(frozen=True, slots=True)
class CycleType:
    """Multiset of cycle lengths of a permutation."""

    #: Cycle lengths in non-increasing order, 1-cycles included.
    cycle_lengths: tuple[int, ...]

    #: Number of 1-cycles (fixed points).
    fixed_count: int

    @classmethod
    def from_lengths(cls, lengths: t.Iterable[int]) -> CycleType:
        ordered = tuple(sorted(lengths, reverse=True))
        return cls(cycle_lengths=ordered, fixed_count=ordered.count(1))

    @property
    def degree(self) -> int:
        return sum(self.cycle_lengths)

    def is_uniform(self) -> bool:
        """Whether every cycle has the same length."""
        return len(set(self.cycle_lengths)) <= 1

    def __str__(self) -> str:
        counts = Counter(self.cycle_lengths)
        return " ".join(
            f"{length}^{counts[length]}"
            for length in sorted(counts, reverse=True)
        )


@dataclasses.dataclass(frozen=True, slots=True, order=True)
class Permutation:
    """Dense image map on the points ``0..n-1``.

    ``images[i]`` is the image of point ``i``. Permutations are immutable,
    hashable and ordered lexicographically by their image tuples, which is
    the element order used throughout Korbit.

    Examples
    --------
    >>> p = Permutation.from_cycles([(0, 1, 2)], degree=3)
    >>> q = Permutation.from_cycles([(0, 1)], degree=3)
    >>> str(p * q)
    '(0 2)'
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            msg = f"{self.images!r} is not a bijection of 0..n-1"
            raise InvalidPermutationError(msg)

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # skips the bijection check, callers guarantee validity
        perm = object.__new__(cls)
        object.__setattr__(perm, "images", images)
        return perm

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._trusted(tuple(range(degree)))

    @classmethod
    def from_cycles(
        cls, cycles: t.Iterable[t.Sequence[int]], *, degree: int
    ) -> Permutation:
        """Build a permutation from disjoint cycles.

        Parameters
        ----------
        cycles:
            Disjoint cycles, each a sequence of points.

        degree:
            Number of points.

        Returns
        -------
        Permutation
            The permutation mapping each cycle entry to its successor.

        Raises
        ------
        InvalidPermutationError
            If a point is out of range or appears in two cycles.
        """
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 0 <= point < degree:
                    msg = f"point {point} out of range for degree {degree}"
                    raise InvalidPermutationError(msg)
                if point in seen:
                    msg = f"point {point} appears in more than one cycle"
                    raise InvalidPermutationError(msg)
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls._trusted(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else inverse(self)
        result = Permutation.identity(self.degree)
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = compose(result, base)
            base = compose(base, base)
            exponent >>= 1
        return result

    def __str__(self) -> str:
        cycles = [c for c in self.cycles() if len(c) > 1]
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self!s}, degree={self.degree})"

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.images))

    def cycles(self) -> list[Cycle]:
        """Cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.degree
        cycles: list[Cycle] = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            point = self.images[start]
            while point != start:
                seen[point] = True
                cycle.append(point)
                point = self.images[point]
            cycles.append(tuple(cycle))
        return cycles

    def cycle_type(self) -> CycleType:
        return CycleType.from_lengths(len(c) for c in self.cycles())

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    @property
    def sign(self) -> int:
        cycles = self.cycles()
        return 1 - 2 * ((self.degree - len(cycles)) % 2)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(
            i for i, image in enumerate(self.images) if i != image
        )

    def fixed_points(self) -> frozenset[int]:
        return fixed_points(self)

    def is_regular(self) -> bool:
        return is_regular_element(self)

    def conjugate(self, sigma: Permutation) -> Permutation:
        """Return ``sigma * self * sigma**-1``."""
        return compose(compose(sigma, self), inverse(sigma))

    def apply(self, points: t.Iterable[int]) -> tuple[int, ...]:
        return tuple(self.images[p] for p in points)


def identity(degree: int) -> Permutation:
    """Return the identity permutation on ``degree`` points."""
    return Permutation.identity(degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Compose two permutations, applying ``q`` first and then ``p``.

    Parameters
    ----------
    p:
        Permutation applied second.

    q:
        Permutation applied first.

    Returns
    -------
    Permutation
        The product with ``result(i) == p(q(i))``.

    Raises
    ------
    DegreeMismatchError
        If the degrees differ.
    """
    if p.degree != q.degree:
        msg = f"cannot compose degree {p.degree} with degree {q.degree}"
        raise DegreeMismatchError(msg)
    pi = p.images
    return Permutation._trusted(tuple(pi[j] for j in q.images))  # noqa: SLF001


def inverse(p: Permutation) -> Permutation:
    """Return the inverse permutation."""
    images = [0] * p.degree
    for i, image in enumerate(p.images):
        images[image] = i
    return Permutation._trusted(tuple(images))  # noqa: SLF001


def cycle_decomposition(p: Permutation) -> tuple[list[Cycle], CycleType]:
    """Decompose a permutation into disjoint cycles.

    Every point occurs in exactly one cycle, fixed points as 1-cycles.

    Parameters
    ----------
    p:
        Permutation to decompose.

    Returns
    -------
    tuple[list[tuple[int, ...]], CycleType]
        The cycles (each starting at its minimum, sorted by minimum) and the
        corresponding cycle type.
    """
    cycles = p.cycles()
    return cycles, CycleType.from_lengths(len(c) for c in cycles)


def rebuild(cycles: t.Iterable[t.Sequence[int]], degree: int) -> Permutation:
    """Inverse of :py:func:`cycle_decomposition`."""
    return Permutation.from_cycles(cycles, degree=degree)


def fixed_points(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, image in enumerate(p.images) if i == image)


def is_regular_element(p: Permutation) -> bool:
    """Whether all cycles of ``p`` have the same length.

    The identity counts as regular (all of its cycles have length 1).
    """
    return p.cycle_type().is_uniform()


_TOKEN = re.compile(r"\s*(?:(?P<open>\()|(?P<close>\))|(?P<point>\d+))")


def parse_cycles(
    text: str, degree: int, *, line: int = 1, offset: int = 0
) -> Permutation:
    """Parse cycle notation such as ``"(0 1 2)(3 4)"`` or ``"()"``.

    Parameters
    ----------
    text:
        Cycle notation, whitespace separated points inside parentheses.

    degree:
        Number of points of the permutation.

    line:
        Line number reported in errors.

    offset:
        Column offset of ``text`` within its line, reported in errors.

    Returns
    -------
    Permutation
        The parsed permutation.

    Raises
    ------
    SpecSyntaxError
        If the text is not well-formed cycle notation, or cycles overlap.

    SpecRangeError
        If a point is not smaller than ``degree``.
    """
    cycles: list[list[int]] = []
    current: list[int] | None = None
    seen: set[int] = set()
    pos = 0
    stripped_end = len(text.rstrip())
    if stripped_end == 0:
        raise SpecSyntaxError(
            "expected a cycle", line=line, column=offset + 1
        )
    while pos < stripped_end:
        match = _TOKEN.match(text, pos)
        gap = len(text[pos:]) - len(text[pos:].lstrip())
        column = offset + pos + gap + 1
        if match is None:
            raise SpecSyntaxError(
                f"unexpected character {text[pos:].lstrip()[:1]!r}",
                line=line,
                column=column,
            )
        if match["open"]:
            if current is not None:
                raise SpecSyntaxError(
                    "nested '('", line=line, column=column
                )
            current = []
        elif match["close"]:
            if current is None:
                raise SpecSyntaxError(
                    "unmatched ')'", line=line, column=column
                )
            cycles.append(current)
            current = None
        else:
            if current is None:
                raise SpecSyntaxError(
                    "point outside of a cycle", line=line, column=column
                )
            point = int(match["point"])
            if point >= degree:
                msg = (
                    f"line {line}, column {column}: point {point} out of "
                    f"range for degree {degree}"
                )
                raise SpecRangeError(msg)
            if point in seen:
                raise SpecSyntaxError(
                    f"point {point} repeated", line=line, column=column
                )
            seen.add(point)
            current.append(point)
        pos = match.end()
    if current is not None:
        raise SpecSyntaxError(
            "unterminated cycle, expected ')'",
            line=line,
            column=offset + stripped_end + 1,
        )
    return Permutation.from_cycles(cycles, degree=degree)
