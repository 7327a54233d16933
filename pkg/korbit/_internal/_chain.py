# Copyright (c) 2026 Korbit Developers.
# Distributed under the terms of the MIT License (see the LICENSE file).
# SPDX-License-Identifier: MIT
# This source code is part of the Korbit project.

"""Base and strong generating set (deterministic Schreier-Sims).

Everything here works on raw image tuples, the hot path of the engine.
``mul(p, q)`` applies ``q`` first, matching :py:func:`.compose`.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
import math
import random
import typing as t

logger = logging.getLogger(__name__)

Images = tuple[int, ...]


def mul(p: Images, q: Images) -> Images:
    return tuple([p[x] for x in q])


def inv(p: Images) -> Images:
    images = [0] * len(p)
    for i, image in enumerate(p):
        images[image] = i
    return tuple(images)


def fixes(g: Images, points: t.Iterable[int]) -> bool:
    return all(g[b] == b for b in points)


def closure(generators: t.Iterable[Images], degree: int) -> set[Images]:
    """Brute-force closure of a generating set under composition."""
    gens = list(generators)
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    for g in frontier:
        for s in gens:
            h = mul(s, g)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


def extend_closure(
    elements: set[Images], generators: list[Images], extra: Images
) -> set[Images]:
    """Closure of ``elements`` (a group generated by ``generators``)
    together with ``extra``.
    """
    if extra in elements:
        return elements
    gens = [*generators, extra]
    seen = set(elements)
    frontier = list(elements)
    for g in frontier:
        for s in gens:
            h = mul(s, g)
            if h not in seen:
                seen.add(h)
                frontier.append(h)
    return seen


def _transversal(
    gens: list[Images], alpha: int, identity: Images
) -> dict[int, Images]:
    # maps each point of the orbit of alpha to an element sending alpha there
    transversal = {alpha: identity}
    queue = [alpha]
    for beta in queue:
        u = transversal[beta]
        for s in gens:
            gamma = s[beta]
            if gamma not in transversal:
                transversal[gamma] = mul(s, u)
                queue.append(gamma)
    return transversal


@dataclasses.dataclass
class StabilizerChain:
    """Base, strong generators per level, fundamental orbits and
    transversals of a permutation group.
    """

    degree: int
    base: list[int]
    level_generators: list[list[Images]]
    transversals: list[dict[int, Images]]

    @property
    def identity(self) -> Images:
        return tuple(range(self.degree))

    @property
    def order(self) -> int:
        return math.prod(len(t_) for t_ in self.transversals)

    @property
    def fundamental_orbits(self) -> list[list[int]]:
        return [sorted(t_) for t_ in self.transversals]

    @property
    def strong_generators(self) -> list[Images]:
        return self.level_generators[0] if self.level_generators else []

    def strip(self, g: Images, start: int = 0) -> tuple[Images, int]:
        """Sift ``g`` through the chain from level ``start``.

        Returns the residue and the level at which sifting stopped
        (``len(base)`` when every level was passed).
        """
        for level in range(start, len(self.base)):
            beta = g[self.base[level]]
            u = self.transversals[level].get(beta)
            if u is None:
                return g, level
            g = mul(inv(u), g)
        return g, len(self.base)

    def contains(self, g: Images) -> bool:
        residue, _ = self.strip(g)
        return residue == self.identity

    def stabilizer_generators(self, depth: int) -> list[Images]:
        """Generators of the pointwise stabilizer of ``base[:depth]``."""
        if depth >= len(self.base):
            return []
        return list(self.level_generators[depth])

    def elements(self) -> t.Iterator[Images]:
        """Every element exactly once, as products of transversal entries."""
        if not self.base:
            yield self.identity
            return
        for factors in itertools.product(
            *(list(t_.values()) for t_ in self.transversals)
        ):
            g = factors[-1]
            for u in reversed(factors[:-1]):
                g = mul(u, g)
            yield g

    def random_element(self, rng: random.Random) -> Images:
        g = self.identity
        for transversal in self.transversals:
            g = mul(g, transversal[rng.choice(sorted(transversal))])
        return g


def build_chain(
    generators: t.Iterable[Images],
    degree: int,
    *,
    base: t.Sequence[int] = (),
) -> StabilizerChain:
    """Run Schreier-Sims on ``generators``, extending ``base`` as needed.

    Parameters
    ----------
    generators:
        Generating images.

    degree:
        Number of points.

    base:
        Prefix of the base to use, e.g. ``[v]`` so that level 1 generates
        the stabilizer of ``v``.

    Returns
    -------
    StabilizerChain
        The completed chain.
    """
    identity = tuple(range(degree))
    gens: list[Images] = []
    for g in generators:
        if g != identity and g not in gens:
            gens.append(g)

    chain_base = list(base)
    for g in gens:
        if fixes(g, chain_base):
            chain_base.append(next(x for x in range(degree) if g[x] != x))

    levels = [
        [g for g in gens if fixes(g, chain_base[:i])]
        for i in range(len(chain_base))
    ]
    transversals = [
        _transversal(levels[i], chain_base[i], identity)
        for i in range(len(chain_base))
    ]
    chain = StabilizerChain(degree, chain_base, levels, transversals)

    i = len(chain_base) - 1
    while i >= 0:
        found = _new_strong_generator(chain, i)
        if found is None:
            i -= 1
            continue
        h, j = found
        if j == len(chain.base):
            chain.base.append(next(x for x in range(degree) if h[x] != x))
            chain.level_generators.append([])
            chain.transversals.append({})
        for level in range(i + 1, j + 1):
            chain.level_generators[level].append(h)
            chain.transversals[level] = _transversal(
                chain.level_generators[level], chain.base[level], identity
            )
        logger.debug(
            "schreier-sims: new generator at levels %d..%d, base %s",
            i + 1,
            j,
            chain.base,
        )
        i = j

    # trailing levels with trivial orbits carry no information
    while chain.base and len(chain.transversals[-1]) == 1 and len(
        chain.base
    ) > len(base):
        chain.base.pop()
        chain.level_generators.pop()
        chain.transversals.pop()
    return chain


def _new_strong_generator(
    chain: StabilizerChain, level: int
) -> tuple[Images, int] | None:
    identity = chain.identity
    transversal = chain.transversals[level]
    for beta, u_beta in list(transversal.items()):
        for s in chain.level_generators[level]:
            u_image = transversal[s[beta]]
            schreier = mul(inv(u_image), mul(s, u_beta))
            if schreier == identity:
                continue
            h, j = chain.strip(schreier, level + 1)
            if h != identity:
                return h, j
    return None
