# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Caps shared by every :py:class:`.PermutationGroup` and the operations
computed on it.
"""

from __future__ import annotations

import inspect
import typing as t

import pydantic as pyd

__all__ = ["DEFAULT_CONFIG", "Config", "config"]


class Config(pyd.BaseModel, frozen=True):
    """Class representing a reusable set of caps for group computations.

    .. warning::

        This class should **NOT** be instantiated directly ---
        :py:func:`.config` should be used to create a :py:class:`.Config`
        instead.
    """

    #: Maximum number of elements a group may materialize.
    element_cap: pyd.PositiveInt = 200_000

    #: Maximum group order for which the subgroup lattice is computed.
    lattice_cap: pyd.PositiveInt = 500

    #: Maximum index (degree) of a coset action.
    index_cap: pyd.PositiveInt = 10_000

    #: Maximum number of backtrack nodes for n-orbit isomorphism.
    node_budget: pyd.PositiveInt = 1_000_000

    def __init__(self, **kwargs: t.Any) -> None:
        caller: str | None = None
        frame = inspect.currentframe()
        if frame and frame.f_back:
            caller = frame.f_back.f_code.co_name
        if caller != Config._create.__name__:
            msg = (
                "The korbit.Config class should not be instantiated "
                "directly, the korbit.config function should be used instead."
            )
            raise RuntimeError(msg)
        super().__init__(**kwargs)

    @classmethod
    def _create(cls, base: Config | None = None, **kwargs: t.Any) -> Config:
        config_kwargs = base.model_dump(exclude_unset=True) if base else {}
        for field in cls.model_fields:
            value: t.Any | None = kwargs.get(field)
            if value is not None:
                config_kwargs[field] = value
        return cls(**config_kwargs)


def config(
    *,
    base: Config | None = None,
    element_cap: int | None = None,
    lattice_cap: int | None = None,
    index_cap: int | None = None,
    node_budget: int | None = None,
) -> Config:
    """Create a reusable configuration of caps.

    See :py:class:`.Config` for the underlying configuration class.

    Parameters
    ----------
    base:
        Configuration to inherit unspecified caps from.

    element_cap:
        Maximum number of elements a group may materialize.

    lattice_cap:
        Maximum group order for which the subgroup lattice is computed.

    index_cap:
        Maximum index (degree) of a coset action.

    node_budget:
        Maximum number of backtrack nodes for n-orbit isomorphism.

    Returns
    -------
    Config
        The reusable configuration.

    Examples
    --------
    >>> import korbit
    >>> cfg = korbit.config(lattice_cap=1000)
    >>> cfg.lattice_cap, cfg.element_cap
    (1000, 200000)
    >>> korbit.config(base=cfg, node_budget=10).lattice_cap
    1000
    """
    return Config._create(  # noqa: SLF001
        base=base,
        element_cap=element_cap,
        lattice_cap=lattice_cap,
        index_cap=index_cap,
        node_budget=node_budget,
    )


#: Configuration used when none is supplied.
DEFAULT_CONFIG: Config = config()
