# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import typing as t

import pytest

from korbit.catalog.builtin import builtin_catalog
from korbit.core.blocks import (
    BlockSystem,
    block_action,
    block_kernel,
    is_primitive,
    is_primitive_nonabelian,
    minimal_block_system,
    minimal_block_systems,
)
from korbit.core.group import (
    PermutationGroup,
    direct_product,
    is_normal,
    is_transitive,
)
from korbit.exceptions import BlockSystemError, IntransitiveGroupError

Build = t.Callable[..., PermutationGroup]

TRANSITIVE_IDS = [
    spec.id for spec in builtin_catalog() if is_transitive(spec.build())
]


@pytest.mark.parametrize(
    ("group_id", "expected"),
    [
        ("D4", ["0 2 | 1 3"]),
        ("C4", ["0 2 | 1 3"]),
        ("C2xC2", ["0 1 | 2 3", "0 2 | 1 3", "0 3 | 1 2"]),
        ("C6", ["0 3 | 1 4 | 2 5", "0 2 4 | 1 3 5"]),
        ("S4", []),
        ("F21", []),
    ],
)
def test_minimal_block_systems(
    group: Build, group_id: str, expected: list[str]
) -> None:
    systems = minimal_block_systems(group(group_id))
    assert [str(s) for s in systems] == expected


def test_regular_s3_systems(group: Build) -> None:
    systems = minimal_block_systems(group("S3reg"))
    assert [s.block_size for s in systems] == [2, 2, 2, 3]


@pytest.mark.parametrize("group_id", TRANSITIVE_IDS)
def test_systems_are_invariant(group: Build, group_id: str) -> None:
    g = group(group_id)
    for system in minimal_block_systems(g):
        assert system.is_invariant(g)
        assert not system.is_trivial()
        assert system.degree == g.degree
        assert is_normal(g, block_kernel(g, system))


def test_minimal_block_system_joins_points(group: Build) -> None:
    system = minimal_block_system(group("D4"), 1, 3)
    assert system.block_of(1) == frozenset({1, 3})
    assert minimal_block_system(group("S4"), 0, 1).is_trivial()


@pytest.mark.parametrize(
    ("group_id", "primitive", "nonabelian"),
    [
        ("C2", True, False),
        ("C5", True, False),
        ("C4", False, False),
        ("S3", True, True),
        ("S4", True, True),
        ("A5", True, True),
        ("D4", False, False),
        ("D5", True, True),
        ("F21", True, True),
        ("PSL27", True, True),
        ("Q8", False, False),
    ],
)
def test_primitivity(
    group: Build, group_id: str, primitive: bool, nonabelian: bool
) -> None:
    g = group(group_id)
    assert is_primitive(g) is primitive
    assert is_primitive_nonabelian(g) is nonabelian


def test_intransitive(group: Build) -> None:
    product = direct_product(group("C2"), group("C3"))
    assert not is_primitive(product)
    with pytest.raises(IntransitiveGroupError):
        minimal_block_systems(product)


def test_block_kernel_and_action(group: Build) -> None:
    d4 = group("D4")
    system = BlockSystem.from_blocks([[1, 3], [0, 2]])
    assert str(system) == "0 2 | 1 3"
    assert block_kernel(d4, system).order == 4
    assert block_action(d4, system).order == 2

    s3 = group("S3reg")
    (thirds,) = [
        s for s in minimal_block_systems(s3) if s.block_size == 3
    ]
    assert block_kernel(s3, thirds).order == 3
    assert block_action(s3, thirds).order == 2


@pytest.mark.parametrize(
    "blocks", [[[0, 1], [2]], [[0, 1], [1, 2]], [[0, 1], [3, 4]]]
)
def test_invalid_system(blocks: list[list[int]]) -> None:
    with pytest.raises(BlockSystemError):
        BlockSystem.from_blocks(blocks)


def test_kernel_of_non_invariant_system(group: Build) -> None:
    system = BlockSystem.from_blocks([[0, 1], [2, 3]])
    with pytest.raises(BlockSystemError):
        block_kernel(group("S4"), system)
    with pytest.raises(BlockSystemError):
        block_action(group("D5"), BlockSystem.from_blocks([[0, 1]]))
