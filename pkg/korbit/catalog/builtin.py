# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Seed catalog shipped with Korbit."""

from __future__ import annotations

import functools as ft
import importlib.resources
import logging

from korbit.catalog.spec import GroupSpec, parse_catalog

__all__ = ["builtin_catalog"]

logger = logging.getLogger(__name__)


@ft.cache
def _load() -> tuple[GroupSpec, ...]:
    text = (
        importlib.resources.files("korbit.catalog")
        .joinpath("builtin.groups")
        .read_text(encoding="utf-8")
    )
    specs = tuple(
        spec.verified() for spec in parse_catalog(text, source="builtin")
    )
    logger.debug("verified %d builtin groups", len(specs))
    return specs


def builtin_catalog() -> list[GroupSpec]:
    """Cyclic and dihedral groups up to degree 8, small symmetric and
    alternating groups, direct products, Frobenius groups, ``PSL(2, 7)`` on
    the Fano plane and a faithful action of ``S_3`` that is not of minimal
    degree.

    Every entry's order is computed on first load and must match the order
    recorded in the catalog file.

    Returns
    -------
    list[GroupSpec]
        Entries in file order.
    """
    return list(_load())
