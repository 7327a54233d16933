# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Package exceptions."""

from __future__ import annotations

__all__ = [
    "BlockSystemError",
    "CapExceededError",
    "ColumnError",
    "DegreeMismatchError",
    "IntransitiveGroupError",
    "InvalidPermutationError",
    "KorbitError",
    "NotSubgroupError",
    "SpecRangeError",
    "SpecSyntaxError",
    "UnknownClaimError",
    "UnknownGroupError",
]


class KorbitError(Exception):
    """Base class for all exceptions raised by Korbit."""


class CapExceededError(KorbitError):
    """An exception indicating that a computation would exceed one of the
    configured caps (see :py:class:`.Config`).
    """

    def __init__(self, cap_name: str, cap: int, requested: int) -> None:
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested
        super().__init__(
            f"{cap_name} cap of {cap} exceeded (requested {requested})"
        )


class DegreeMismatchError(KorbitError):
    """Permutations or groups of different degrees were combined."""


class InvalidPermutationError(KorbitError):
    """An image sequence is not a bijection of ``0..n-1``."""


class NotSubgroupError(KorbitError):
    """A set of permutations was expected to lie in a given group."""


class IntransitiveGroupError(KorbitError):
    """An operation that requires a transitive group received an
    intransitive one.
    """


class BlockSystemError(KorbitError):
    """A partition is not a block system of the group it was used with."""


class SpecSyntaxError(KorbitError):
    """A catalog line could not be parsed.

    The position of the offending character is available as ``line`` and
    ``column`` (both 1-based).
    """

    def __init__(self, message: str, *, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SpecRangeError(KorbitError):
    """A catalog entry has an out-of-range value, or declares an order
    its generators do not produce.
    """


class UnknownGroupError(KorbitError):
    """A group identifier is not present in the loaded catalog."""


class UnknownClaimError(KorbitError):
    """A claim identifier is not registered."""


class ColumnError(KorbitError):
    """Projection columns are repeated or out of range."""
