"""Shared generators for the randomized suites."""

import random

from auratopo import (
    AuraSpace,
    FiniteTopSpace,
    PointUniverse,
    ScopeFunction,
    enumerate_auras,
    enumerate_topologies,
    generate_topology,
)

LABELS = "abcdefgh"


def rand_space(rng: random.Random, n: int) -> AuraSpace:
    """Random space: a generated topology plus a random scope choice."""
    universe = PointUniverse(list(LABELS[:n]))
    count = rng.randrange(0, n + 2)
    subbasis = [rng.randrange(0, 1 << n) for _ in range(count)]
    topology = generate_topology(universe, subbasis)
    opens = sorted(topology.mask_set)
    scopes = []
    for i in range(n):
        fiber = [m for m in opens if (m >> i) & 1]
        scopes.append(rng.choice(fiber))
    return AuraSpace(FiniteTopSpace(universe, topology), ScopeFunction(universe, scopes))


def all_small_spaces(max_n: int):
    for n in range(max_n + 1):
        for top in enumerate_topologies(n):
            yield from enumerate_auras(top)
