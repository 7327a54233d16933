# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Transitive groups of small degree, up to conjugacy in ``S_d``."""

from __future__ import annotations

import functools as ft
import logging

from korbit.catalog.spec import GroupSpec
from korbit.config import DEFAULT_CONFIG, Config
from korbit.core.group import PermutationGroup, is_transitive
from korbit.core.lattice import all_subgroups, subgroup_classes
from korbit.core.permutation import Permutation
from korbit.exceptions import CapExceededError, SpecRangeError

__all__ = ["MAX_DEGREE", "enumerate_transitive", "symmetric_group"]

logger = logging.getLogger(__name__)

#: Largest degree enumerated exhaustively.
MAX_DEGREE = 6


def symmetric_group(
    degree: int, *, config: Config | None = None
) -> PermutationGroup:
    """``S_degree`` generated by an n-cycle and a transposition."""
    gens = []
    if degree > 1:
        gens = [
            Permutation.from_cycles([range(degree)], degree=degree),
            Permutation.from_cycles([(0, 1)], degree=degree),
        ]
    return PermutationGroup(gens, degree, config=config, name=f"S{degree}")


def enumerate_transitive(
    degree: int, *, config: Config | None = None
) -> list[GroupSpec]:
    """Transitive subgroups of ``S_degree``, one per conjugacy class.

    Classes come from the full subgroup lattice of ``S_degree`` when its
    order is within ``config.lattice_cap``, otherwise from class-wise
    cyclic extension. Results are ordered by group order and then by sorted
    elements, and are named ``T<degree>.<k>``.

    Parameters
    ----------
    degree:
        Number of points, at most :py:data:`MAX_DEGREE`.

    config:
        Caps for the lattice computation.

    Returns
    -------
    list[GroupSpec]
        Specs with recorded orders and source ``"enumerated"``.

    Raises
    ------
    CapExceededError
        If ``degree`` exceeds :py:data:`MAX_DEGREE`.

    SpecRangeError
        If ``degree`` is not positive.
    """
    if degree > MAX_DEGREE:
        raise CapExceededError("enumeration degree", MAX_DEGREE, degree)
    if degree < 1:
        msg = f"degree must be positive, got {degree}"
        raise SpecRangeError(msg)
    return list(_enumerate(degree, config or DEFAULT_CONFIG))


# one enumeration per degree and config
@ft.cache
def _enumerate(degree: int, config: Config) -> tuple[GroupSpec, ...]:
    sym = symmetric_group(degree, config=config)
    if sym.order <= config.lattice_cap:
        classes = all_subgroups(sym).classes
    else:
        classes = subgroup_classes(sym)

    reps = [
        c.representative
        for c in classes
        if is_transitive(c.representative)
    ]
    logger.info(
        "degree %d: %d transitive classes of %d",
        degree,
        len(reps),
        len(classes),
    )
    return tuple(
        GroupSpec(
            id=f"T{degree}.{k}",
            degree=degree,
            generators=tuple(str(g) for g in rep.generators) or ("()",),
            order=rep.order,
            source="enumerated",
        )
        for k, rep in enumerate(reps, start=1)
    )
