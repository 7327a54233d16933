# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import pytest
from hypothesis import given
from hypothesis import strategies as st

from korbit.core.permutation import (
    Permutation,
    compose,
    cycle_decomposition,
    inverse,
    is_regular_element,
    parse_cycles,
    rebuild,
)
from korbit.exceptions import (
    DegreeMismatchError,
    InvalidPermutationError,
    SpecRangeError,
    SpecSyntaxError,
)


def permutations(degree: int) -> st.SearchStrategy[Permutation]:
    return st.permutations(range(degree)).map(
        lambda images: Permutation(tuple(images))
    )


degrees = st.integers(min_value=1, max_value=9)

pairs = degrees.flatmap(lambda n: st.tuples(permutations(n), permutations(n)))

triples = degrees.flatmap(
    lambda n: st.tuples(permutations(n), permutations(n), permutations(n))
)

singles = degrees.flatmap(permutations)


def test_compose_applies_right_factor_first() -> None:
    p = parse_cycles("(0 1 2)", 3)
    q = parse_cycles("(0 1)", 3)
    assert str(compose(p, q)) == "(0 2)"
    assert all(compose(p, q)(i) == p(q(i)) for i in range(3))
    assert str(p * q) == str(compose(p, q))


def test_compose_degree_mismatch() -> None:
    with pytest.raises(DegreeMismatchError):
        compose(Permutation.identity(2), Permutation.identity(3))


@pytest.mark.parametrize(
    ("text", "degree", "canonical"),
    [
        ("(1 0)", 2, "(0 1)"),
        ("(2 0 1)(3)", 4, "(0 1 2)"),
        ("()", 3, "()"),
        ("(4 3)(1 2 0)", 5, "(0 1 2)(3 4)"),
        ("  ( 5 0 )  ", 6, "(0 5)"),
    ],
)
def test_canonical_string(text: str, degree: int, canonical: str) -> None:
    assert str(parse_cycles(text, degree)) == canonical


@pytest.mark.parametrize(
    ("text", "column"),
    [("(0 1", 5), ("(0 1))", 6), ("(0 (1))", 4), ("0 1", 1), ("", 1)],
)
def test_parse_syntax_error(text: str, column: int) -> None:
    with pytest.raises(SpecSyntaxError) as e:
        parse_cycles(text, 3)
    assert e.value.column == column
    assert e.value.line == 1


def test_parse_repeated_point() -> None:
    with pytest.raises(SpecSyntaxError, match="point 1 repeated"):
        parse_cycles("(0 1)(1 2)", 3)


def test_parse_out_of_range() -> None:
    with pytest.raises(SpecRangeError, match="point 9 out of range"):
        parse_cycles("(0 9)", 7)


def test_parse_reports_offset() -> None:
    with pytest.raises(SpecSyntaxError) as e:
        parse_cycles("(0 x)", 3, line=4, offset=10)
    assert (e.value.line, e.value.column) == (4, 14)


@pytest.mark.parametrize("images", [(0, 0), (1, 2), (0, 2, 1, 4)])
def test_invalid_images(images: tuple[int, ...]) -> None:
    with pytest.raises(InvalidPermutationError):
        Permutation(images)


def test_from_cycles_rejects_overlap() -> None:
    with pytest.raises(InvalidPermutationError):
        Permutation.from_cycles([(0, 1), (1, 2)], degree=3)


def test_cycle_type() -> None:
    p = parse_cycles("(0 1)(2 3 4)", 6)
    cycles, cycle_type = cycle_decomposition(p)
    assert cycles == [(0, 1), (2, 3, 4), (5,)]
    assert cycle_type.cycle_lengths == (3, 2, 1)
    assert cycle_type.fixed_count == 1
    assert str(cycle_type) == "3^1 2^1 1^1"
    assert not cycle_type.is_uniform()


@pytest.mark.parametrize(
    ("text", "degree", "regular"),
    [
        ("()", 4, True),
        ("(0 1)(2 3)", 4, True),
        ("(0 1 2 3 4 5 6)", 7, True),
        ("(0 1 2)(3 4 5)", 7, False),
        ("(0 1)", 3, False),
    ],
)
def test_is_regular_element(text: str, degree: int, *, regular: bool) -> None:
    assert is_regular_element(parse_cycles(text, degree)) is regular


def test_attributes() -> None:
    p = parse_cycles("(0 1 2)(3 4)", 6)
    assert p.order == 6
    assert p.sign == -1
    assert p.support == frozenset(range(5))
    assert p.fixed_points() == frozenset({5})
    assert p ** 6 == Permutation.identity(6)
    assert p ** -1 == inverse(p)
    assert p.apply([0, 3]) == (1, 4)


@given(singles)
def test_inverse(p: Permutation) -> None:
    assert (p * inverse(p)).is_identity()
    assert (inverse(p) * p).is_identity()
    assert inverse(inverse(p)) == p


@given(triples)
def test_associative(ps: tuple[Permutation, Permutation, Permutation]) -> None:
    p, q, r = ps
    assert (p * q) * r == p * (q * r)


@given(pairs)
def test_sign_is_multiplicative(ps: tuple[Permutation, Permutation]) -> None:
    p, q = ps
    assert (p * q).sign == p.sign * q.sign


@given(singles)
def test_rebuild_from_cycles(p: Permutation) -> None:
    cycles, cycle_type = cycle_decomposition(p)
    assert rebuild(cycles, p.degree) == p
    assert cycle_type.degree == p.degree
    assert cycle_type == p.cycle_type()


@given(singles)
def test_order(p: Permutation) -> None:
    assert (p ** p.order).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order))


@given(singles)
def test_canonical_text_parses_back(p: Permutation) -> None:
    assert parse_cycles(str(p), p.degree) == p


@given(pairs)
def test_conjugate_keeps_cycle_type(
    ps: tuple[Permutation, Permutation],
) -> None:
    p, sigma = ps
    conj = p.conjugate(sigma)
    assert conj.cycle_type() == p.cycle_type()
    assert all(conj(sigma(i)) == sigma(p(i)) for i in range(p.degree))
