# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

import pickle

import pytest

import korbit
from korbit.config import DEFAULT_CONFIG, Config


def test_defaults() -> None:
    config = korbit.config()
    assert config.element_cap == 200_000
    assert config.lattice_cap == 500
    assert config.index_cap == 10_000
    assert config.node_budget == 1_000_000
    assert config == DEFAULT_CONFIG


def test_none_keeps_defaults() -> None:
    config = korbit.config(
        element_cap=None, lattice_cap=None, index_cap=None, node_budget=None
    )
    assert config == DEFAULT_CONFIG


def test_override() -> None:
    config = korbit.config(lattice_cap=10, node_budget=5)
    assert config.lattice_cap == 10
    assert config.node_budget == 5
    assert config.element_cap == 200_000


def test_base() -> None:
    base = korbit.config(lattice_cap=10)
    config = korbit.config(base=base, node_budget=5)
    assert config.lattice_cap == 10
    assert config.node_budget == 5
    assert korbit.config(base=base) == base


def test_positive_caps() -> None:
    with pytest.raises(ValueError, match="greater than 0"):
        korbit.config(element_cap=0)


def test_frozen() -> None:
    config = korbit.config()
    with pytest.raises(ValueError, match="frozen"):
        config.lattice_cap = 1  # type: ignore[misc]


def test_pickles() -> None:
    config = korbit.config(index_cap=7)
    assert pickle.loads(pickle.dumps(config)) == config


def test_init_create() -> None:
    """Should not be able to instantiate korbit.Config."""
    with pytest.raises(RuntimeError):
        Config()
