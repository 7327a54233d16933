# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

from __future__ import annotations

import concurrent.futures as cf
import logging
import typing as t

logger = logging.getLogger(__name__)

T = t.TypeVar("T")
R = t.TypeVar("R")


def run_ordered(
    func: t.Callable[[T], R], items: t.Iterable[T], *, jobs: int = 1
) -> list[R]:
    """Apply ``func`` to every item, results in input order.

    With ``jobs > 1`` items are shipped to a process pool, so ``func`` must
    be a module-level function and items must pickle.
    """
    units = list(items)
    if jobs <= 1 or len(units) <= 1:
        return [func(unit) for unit in units]
    logger.debug("running %d units on %d processes", len(units), jobs)
    with cf.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(func, units))
