"""Seeded random instances for tests and the benchmark runner."""

from __future__ import annotations

import random

from .graph import CapacitatedInstance, Graph

CAPACITY_CHOICES = (0, 1, 2, 3)


def gnp_graph(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p); pair order and RNG use are fixed, so one seed
    always yields one graph."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_instance(n: int, p: float, seed,
                    caps=CAPACITY_CHOICES) -> CapacitatedInstance:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    g = gnp_graph(n, p, rng)
    capacity = tuple(rng.choice(caps) for _ in range(n))
    return CapacitatedInstance(g, capacity)
