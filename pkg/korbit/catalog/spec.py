# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Line-oriented group specifications.

One group per line::

    group <id> deg <n> gens <cycles>[, <cycles>]* [order <n>] [tags <t> ...]

Points are 0-based decimals, the identity generator is written ``()``,
blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import logging
import re
import typing as t
from pathlib import Path

import pydantic as pyd

from korbit.config import Config
from korbit.core.group import PermutationGroup
from korbit.core.permutation import Permutation, parse_cycles
from korbit.exceptions import (
    SpecRangeError,
    SpecSyntaxError,
    UnknownGroupError,
)

__all__ = [
    "GroupSpec",
    "Source",
    "find_spec",
    "load_catalog",
    "parse_catalog",
    "parse_spec",
    "print_spec",
]

logger = logging.getLogger(__name__)

Source = t.Literal["builtin", "file", "enumerated"]

#: Tags with a meaning to the claim harness.
KNOWN_TAGS = frozenset(
    {"odd-order", "primitive-declared", "md-declared", "simple-declared"}
)


class GroupSpec(pyd.BaseModel):
    """Catalog entry for a permutation group.

    Generators are stored in canonical cycle notation, so printing a parsed
    spec reproduces its canonical line.
    """

    model_config = pyd.ConfigDict(frozen=True)

    id: str
    degree: pyd.PositiveInt
    generators: tuple[str, ...]
    order: pyd.PositiveInt | None = None
    tags: frozenset[str] = frozenset()
    source: Source = "file"

    @pyd.field_serializer("tags")
    def serialize_tags(self, tags: frozenset[str]) -> list[str]:
        return sorted(tags)

    def permutations(self) -> list[Permutation]:
        return [parse_cycles(g, self.degree) for g in self.generators]

    def build(self, *, config: Config | None = None) -> PermutationGroup:
        """Generate the group, named after the spec id."""
        return PermutationGroup(
            self.permutations(), self.degree, config=config, name=self.id
        )

    def verified(self, *, config: Config | None = None) -> GroupSpec:
        """Copy of the spec with its order computed and recorded.

        Raises
        ------
        SpecRangeError
            If a declared order differs from the generated order.
        """
        order = self.build(config=config).order
        if self.order is not None and self.order != order:
            msg = (
                f"group {self.id} declares order {self.order} but its "
                f"generators produce order {order}"
            )
            raise SpecRangeError(msg)
        return self.model_copy(update={"order": order})

    def has_tag(self, tag: str) -> bool:
        return tag in self.tags


_WORD = re.compile(r"\s*(\S+)")
_TAIL = re.compile(r"\s(order|tags)(?=\s|$)")


class _Scanner:
    def __init__(self, text: str, line: int) -> None:
        self.text = text
        self.line = line
        self.pos = 0

    def fail(self, message: str, column: int) -> t.NoReturn:
        raise SpecSyntaxError(message, line=self.line, column=column)

    def at_end(self) -> bool:
        return not self.text[self.pos :].strip()

    def word(self, what: str) -> tuple[str, int]:
        match = _WORD.match(self.text, self.pos)
        if match is None:
            self.fail(f"expected {what}", len(self.text.rstrip()) + 1)
        self.pos = match.end()
        return match[1], match.start(1) + 1

    def keyword(self, keyword: str) -> None:
        token, column = self.word(repr(keyword))
        if token != keyword:
            self.fail(f"expected {keyword!r}, found {token!r}", column)

    def try_keyword(self, keyword: str) -> bool:
        match = _WORD.match(self.text, self.pos)
        if match is None or match[1] != keyword:
            return False
        self.pos = match.end()
        return True

    def integer(self, what: str) -> tuple[int, int]:
        token, column = self.word(what)
        if not token.isdigit():
            self.fail(f"expected {what}, found {token!r}", column)
        return int(token), column


def parse_spec(
    text: str, *, line: int = 1, source: Source = "file"
) -> GroupSpec:
    """Parse one ``group`` line.

    Parameters
    ----------
    text:
        The line, without its trailing newline.

    line:
        Line number reported in errors.

    source:
        Where the line came from.

    Returns
    -------
    GroupSpec
        The parsed entry, generators in canonical cycle notation.

    Raises
    ------
    SpecSyntaxError
        If the line does not follow the grammar.

    SpecRangeError
        If the degree is zero or a point is outside ``0..deg-1``.

    Examples
    --------
    >>> line = "group F21 deg 7 gens (0 1 2 3 4 5 6), (1 2 4)(3 6 5)"
    >>> spec = parse_spec(line)
    >>> spec.id, spec.degree, spec.generators
    ('F21', 7, ('(0 1 2 3 4 5 6)', '(1 2 4)(3 6 5)'))
    """
    scanner = _Scanner(text, line)
    scanner.keyword("group")
    group_id, _ = scanner.word("a group id")
    scanner.keyword("deg")
    degree, column = scanner.integer("a degree")
    if degree < 1:
        msg = f"line {line}, column {column}: degree must be positive"
        raise SpecRangeError(msg)
    scanner.keyword("gens")

    tail = _TAIL.search(text, scanner.pos)
    end = tail.start() if tail else len(text)
    generators = []
    offset = scanner.pos
    for chunk in text[scanner.pos : end].split(","):
        perm = parse_cycles(chunk, degree, line=line, offset=offset)
        generators.append(str(perm))
        offset += len(chunk) + 1
    scanner.pos = end

    order = None
    if scanner.try_keyword("order"):
        order, column = scanner.integer("an order")
        if order < 1:
            msg = f"line {line}, column {column}: order must be positive"
            raise SpecRangeError(msg)
    tags = set()
    if scanner.try_keyword("tags"):
        while not scanner.at_end():
            tag, _ = scanner.word("a tag")
            tags.add(tag)
    if not scanner.at_end():
        token, column = scanner.word("end of line")
        scanner.fail(f"unexpected {token!r}", column)

    unknown = tags - KNOWN_TAGS
    if unknown:
        logger.debug(
            "group %s has free-form tags %s", group_id, sorted(unknown)
        )
    return GroupSpec(
        id=group_id,
        degree=degree,
        generators=tuple(generators),
        order=order,
        tags=frozenset(tags),
        source=source,
    )


def print_spec(spec: GroupSpec) -> str:
    """Canonical ``group`` line of ``spec``."""
    parts = [
        f"group {spec.id} deg {spec.degree} gens",
        ", ".join(spec.generators),
    ]
    if spec.order is not None:
        parts.append(f"order {spec.order}")
    if spec.tags:
        parts.append(" ".join(["tags", *sorted(spec.tags)]))
    return " ".join(parts)


def parse_catalog(
    text: str,
    *,
    source: Source = "file",
    reserved: t.Collection[str] = (),
) -> list[GroupSpec]:
    """Parse a whole catalog, skipping blank lines and ``#`` comments.

    Ids in ``reserved`` count as already taken.

    Raises
    ------
    SpecSyntaxError
        If a line is malformed or a group id repeats.
    """
    specs: list[GroupSpec] = []
    seen: set[str] = set(reserved)
    for number, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        spec = parse_spec(raw, line=number, source=source)
        if spec.id in seen:
            raise SpecSyntaxError(
                f"duplicate group id {spec.id!r}",
                line=number,
                column=raw.index(spec.id, raw.index("group") + 5) + 1,
            )
        seen.add(spec.id)
        specs.append(spec)
    return specs


def load_catalog(paths: t.Iterable[str | Path]) -> list[GroupSpec]:
    """Read catalog files in order; later ids may not repeat earlier ones.

    Raises
    ------
    SpecSyntaxError
        If a line is malformed or a group id repeats across files.
    """
    specs: list[GroupSpec] = []
    seen: set[str] = set()
    for path in paths:
        text = Path(path).read_text(encoding="utf-8")
        loaded = parse_catalog(text, reserved=seen)
        seen.update(spec.id for spec in loaded)
        specs.extend(loaded)
        logger.info("loaded catalog %s", path)
    return specs


def find_spec(specs: t.Iterable[GroupSpec], group_id: str) -> GroupSpec:
    """Look up a spec by id.

    Raises
    ------
    UnknownGroupError
        If no spec has that id.
    """
    for spec in specs:
        if spec.id == group_id:
            return spec
    msg = f"unknown group {group_id!r}"
    raise UnknownGroupError(msg)
