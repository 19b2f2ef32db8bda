"""Shared fixtures and reference helpers for the test suite."""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest
from hypothesis import settings

from domirr.bitsets import to_mask

settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")
from domirr.graph import CapacitatedInstance, Graph, load_instance
from domirr.matching import Matching, verify_capacitated
from domirr.restricted import RestrictedInstance, RestrictedSolution

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Letter names for the ten-vertex fixture instance, for readable tests.
FIG1_IDS = {name: i for i, name in enumerate("ABCDEFHKLM")}


@pytest.fixture(scope="session")
def fig1() -> CapacitatedInstance:
    return load_instance(FIXTURES / "fig1.cds")


@pytest.fixture(scope="session")
def p4() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3)])


def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(k: int) -> Graph:
    return Graph(k, list(itertools.combinations(range(k), 2)))


def graph_from_code(n: int, code: int) -> Graph:
    """Decode an edge-subset integer into a labelled graph on n vertices."""
    edges = []
    p = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> p) & 1:
                edges.append((i, j))
            p += 1
    return Graph(n, edges)


def all_graphs(n: int):
    for code in range(1 << (n * (n - 1) // 2)):
        yield graph_from_code(n, code)


def fig_set(names: str) -> frozenset[int]:
    return frozenset(FIG1_IDS[c] for c in names)


# --- restricted-problem reference helpers ---------------------------------

def capped_instance(ri: RestrictedInstance) -> CapacitatedInstance:
    """Same instance with non-core capacities capped at one assignee, so
    plain capacitated feasibility decides restricted feasibility."""
    caps = tuple(c if v in ri.forced else min(c, 1)
                 for v, c in enumerate(ri.inst.capacity))
    return CapacitatedInstance(ri.inst.graph, caps)


def brute_restricted_min(ri: RestrictedInstance) -> int:
    """Reference optimum: smallest superset of the core that is feasible."""
    inst = capped_instance(ri)
    n = inst.n
    rest = sorted(set(range(n)) - ri.forced)
    for extra in range(len(rest) + 1):
        for combo in itertools.combinations(rest, extra):
            members = ri.forced | set(combo)
            if verify_capacitated(inst, members) is not None:
                return len(members)
    raise AssertionError("unreachable: the full vertex set is feasible")


def random_feasible_solution(ri: RestrictedInstance,
                             rng: random.Random) -> RestrictedSolution:
    inst = capped_instance(ri)
    for _ in range(40):
        extra = {v for v in range(ri.n) if rng.random() < rng.random()}
        members = frozenset(ri.forced | extra)
        witness = verify_capacitated(inst, members)
        if witness is not None:
            return RestrictedSolution(members, witness)
    members = frozenset(range(ri.n))
    witness = verify_capacitated(inst, members)
    return RestrictedSolution(members, witness)


def random_matching(g: Graph, rng: random.Random) -> Matching:
    edges = g.edges()
    rng.shuffle(edges)
    used: set[int] = set()
    out = []
    for u, v in edges:
        if u not in used and v not in used and rng.random() < 0.75:
            out.append((u, v))
            used.update((u, v))
    return Matching.from_pairs(out)


def brute_min_dominating_sets(g: Graph):
    """All inclusion-minimal dominating sets (tiny n only)."""
    from domirr.graph import is_dominating
    dominating = [to_mask(s, g.n) for size in range(g.n + 1)
                  for s in itertools.combinations(range(g.n), size)
                  if is_dominating(g, s)]
    dom_set = set(dominating)
    minimal = []
    for mask in dominating:
        if not any((mask & ~(1 << v)) in dom_set
                   for v in range(g.n) if (mask >> v) & 1):
            minimal.append(mask)
    return minimal
