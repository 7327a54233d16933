# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

from __future__ import annotations

import typing as t

import pytest

from korbit.catalog.builtin import builtin_catalog
from korbit.catalog.spec import GroupSpec
from korbit.core.group import PermutationGroup
from korbit.core.permutation import Permutation, parse_cycles

#: Builtin ids, for parametrization.
BUILTIN_IDS = [spec.id for spec in builtin_catalog()]


class Helpers:
    @staticmethod
    def perm(text: str, degree: int) -> Permutation:
        return parse_cycles(text, degree)

    @staticmethod
    def elements(
        texts: t.Iterable[str], degree: int
    ) -> frozenset[Permutation]:
        return frozenset(parse_cycles(text, degree) for text in texts)


@pytest.fixture(scope="session")
def helpers() -> type[Helpers]:
    return Helpers


@pytest.fixture(scope="session")
def specs() -> dict[str, GroupSpec]:
    return {spec.id: spec for spec in builtin_catalog()}


@pytest.fixture
def group(
    specs: dict[str, GroupSpec],
) -> t.Callable[..., PermutationGroup]:
    """Build a fresh builtin group by id."""

    def build(group_id: str, **kwargs: t.Any) -> PermutationGroup:
        return specs[group_id].build(**kwargs)

    return build
