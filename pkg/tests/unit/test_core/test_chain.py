# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import math
import random

import pytest

from korbit._internal import _chain


def cycle(*points: int, degree: int) -> tuple[int, ...]:
    images = list(range(degree))
    for i, p in enumerate(points):
        images[p] = points[(i + 1) % len(points)]
    return tuple(images)


@pytest.mark.parametrize(
    ("gens", "degree", "order"),
    [
        ([], 3, 1),
        ([cycle(0, 1, 2, degree=3), cycle(0, 1, degree=3)], 3, 6),
        ([cycle(0, 1, 2, 3, 4, degree=5), cycle(0, 1, degree=5)], 5, 120),
        ([cycle(0, 1, 2, degree=5), cycle(2, 3, 4, degree=5)], 5, 60),
        ([cycle(*range(8), degree=8), cycle(0, 1, degree=8)], 8, 40320),
    ],
)
def test_order(gens: list[tuple[int, ...]], degree: int, order: int) -> None:
    chain = _chain.build_chain(gens, degree)
    assert chain.order == order
    assert math.prod(len(o) for o in chain.fundamental_orbits) == order


def test_matches_closure() -> None:
    gens = [cycle(0, 1, 2, 3, degree=4), cycle(1, 3, degree=4)]
    chain = _chain.build_chain(gens, 4)
    elements = set(chain.elements())
    assert elements == _chain.closure(gens, 4)
    assert len(elements) == chain.order == 8


def test_prescribed_base() -> None:
    gens = [cycle(0, 1, 2, 3, degree=4), cycle(0, 1, degree=4)]
    chain = _chain.build_chain(gens, 4, base=[2])
    assert chain.base[0] == 2
    stabilizer = _chain.closure(chain.stabilizer_generators(1), 4)
    assert len(stabilizer) == 6
    assert all(g[2] == 2 for g in stabilizer)


def test_fixed_base_point_is_kept() -> None:
    gens = [cycle(0, 1, degree=3)]
    chain = _chain.build_chain(gens, 3, base=[2])
    assert chain.base[0] == 2
    assert len(chain.transversals[0]) == 1
    assert chain.order == 2


def test_contains() -> None:
    gens = [cycle(0, 1, 2, degree=4), cycle(1, 2, 3, degree=4)]
    chain = _chain.build_chain(gens, 4)
    assert chain.contains(gens[0])
    assert not chain.contains(cycle(0, 1, degree=4))
    assert chain.contains(_chain.mul(gens[0], gens[1]))


def test_random_element_is_member() -> None:
    gens = [cycle(0, 1, 2, 3, 4, 5, 6, degree=7), cycle(1, 2, 4, degree=7)]
    chain = _chain.build_chain(gens, 7)
    rng = random.Random(7)
    for _ in range(50):
        assert chain.contains(chain.random_element(rng))


def test_mul_inv() -> None:
    p = cycle(0, 1, 2, degree=4)
    q = cycle(2, 3, degree=4)
    assert _chain.mul(p, q) == tuple(p[j] for j in q)
    assert _chain.mul(p, _chain.inv(p)) == (0, 1, 2, 3)
