"""Irredundance predicates and the doubled-graph edge correspondence.

A set is irredundant when every member privately dominates some vertex.  In
the doubled bipartite graph (each vertex gets a twin on the right; left u and
twin v' are adjacent iff u dominates v) irredundant sets of size k correspond
exactly to *independent edge sets* of size k: matchings whose endpoints span
no further edges.  The correspondence preserves cardinality, not
inclusion-maximality, so it serves the largest-set search only.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from . import kernels
from .bitsets import iter_bits, to_mask
from .graph import Graph


@dataclass(frozen=True)
class IrredundantWitness:
    """For each member, a vertex it dominates that nobody else in the set does."""

    unique_of: Mapping[int, int]

    def is_valid_for(self, g: Graph, members: Iterable[int]) -> bool:
        s_mask = to_mask(members, g.n)
        if set(self.unique_of) != set(iter_bits(s_mask)):
            return False
        for v, u in self.unique_of.items():
            if ((g.closed_mask(v) >> u) & 1) == 0:
                return False
            others = 0
            for w in iter_bits(s_mask & ~(1 << v)):
                others |= g.closed_mask(w)
            if (others >> u) & 1:
                return False
        return True


def is_irredundant(g: Graph,
                   members: Iterable[int]) -> IrredundantWitness | None:
    """Witness with the lowest-id private vertex per member, or None."""
    s_mask = to_mask(members, g.n)
    kernels.require_fits(g.n, f"graph with n={g.n}")
    K = kernels.get()
    nbar = kernels.mask_vector(g.closed_mask(v) for v in range(g.n))
    if not K.irr_check(nbar, g.n, s_mask):
        return None
    unique: dict[int, int] = {}
    for v in iter_bits(s_mask):
        others = 0
        for w in iter_bits(s_mask & ~(1 << v)):
            others |= g.closed_mask(w)
        private = g.closed_mask(v) & ~others
        unique[v] = next(iter_bits(private))
    return IrredundantWitness(unique)


def is_maximal_irredundant(g: Graph, members: Iterable[int]) -> bool:
    """True iff no proper superset is irredundant; requires an irredundant set."""
    s_mask = to_mask(members, g.n)
    kernels.require_fits(g.n, f"graph with n={g.n}")
    K = kernels.get()
    nbar = kernels.mask_vector(g.closed_mask(v) for v in range(g.n))
    if not K.irr_check(nbar, g.n, s_mask):
        raise ValueError("set is not irredundant")
    for v in range(g.n):
        if ((s_mask >> v) & 1) == 0:
            if K.irr_check(nbar, g.n, s_mask | (1 << v)):
                return False
    return True


@dataclass(frozen=True)
class DoubledGraph:
    """Bipartite graph on 2n ids: vertex v on the left, its twin n+v on the right."""

    base_n: int
    graph: Graph

    def left(self, v: int) -> int:
        return v

    def right(self, v: int) -> int:
        return self.base_n + v

    def is_left(self, node: int) -> bool:
        return node < self.base_n


def build_doubled_graph(g: Graph) -> DoubledGraph:
    kernels.require_fits(2 * g.n, f"doubled graph of n={g.n}")
    out = kernels.mask_buffer(max(2 * g.n, 1))
    K = kernels.get()
    if g.n:
        K.doubled_masks(kernels.mask_vector(g.adj_masks), g.n, out)
    edges = []
    for u in range(g.n):
        for t in iter_bits(int(out[u])):
            edges.append((u, t))
    return DoubledGraph(g.n, Graph(2 * g.n, edges))


@dataclass(frozen=True)
class IndependentEdgeSet:
    """Matching of the doubled graph whose endpoints span no extra edges."""

    edges: frozenset[tuple[int, int]]  # (left, right) pairs

    @property
    def size(self) -> int:
        return len(self.edges)


def _as_pairs(h: DoubledGraph, edges) -> frozenset[tuple[int, int]]:
    if isinstance(edges, IndependentEdgeSet):
        edges = edges.edges
    out = set()
    for a, b in edges:
        a, b = int(a), int(b)
        left, right = (a, b) if a < h.base_n else (b, a)
        if not (h.is_left(left) and not h.is_left(right)):
            raise ValueError(f"edge ({a},{b}) does not join the two sides")
        out.add((left, right))
    return frozenset(out)


def is_independent_edge_set(h: DoubledGraph, edges) -> bool:
    """Matching + no edge of the doubled graph joins two matched endpoints."""
    pairs = _as_pairs(h, edges)
    seen: set[int] = set()
    for a, b in pairs:
        if not h.graph.has_edge(a, b):
            return False
        if a in seen or b in seen:
            return False
        seen.add(a)
        seen.add(b)
    for a1, b1 in pairs:
        for a2, b2 in pairs:
            if (a1, b1) >= (a2, b2):
                continue
            if h.graph.has_edge(a1, b2) or h.graph.has_edge(a2, b1):
                return False
    return True


def edge_set_to_irset(h: DoubledGraph, edges) -> frozenset[int]:
    """Left endpoints of an independent edge set; irredundant, same size."""
    pairs = _as_pairs(h, edges)
    if not is_independent_edge_set(h, pairs):
        raise ValueError("edges are not an independent edge set")
    return frozenset(a for a, _ in pairs)


def irset_to_edge_set(h: DoubledGraph, members: Iterable[int],
                      witness: IrredundantWitness) -> IndependentEdgeSet:
    """Pair every member with the twin of its private vertex; same size."""
    s_mask = to_mask(members, h.base_n)
    if set(witness.unique_of) != set(iter_bits(s_mask)):
        raise ValueError("witness does not cover exactly the member set")
    pairs = frozenset((v, h.right(u)) for v, u in witness.unique_of.items())
    ies = IndependentEdgeSet(pairs)
    if not is_independent_edge_set(h, pairs):
        raise ValueError("witness does not induce an independent edge set")
    return ies
