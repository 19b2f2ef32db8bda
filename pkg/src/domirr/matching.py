"""Maximum matching on general graphs and capacitated-domination checking.

The copy graphs built by :mod:`domirr.restricted` are not bipartite (two
positive-capacity vertices outside the forced core may be adjacent), so the
matcher handles odd cycles via blossom contraction.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from . import kernels
from .bitsets import to_mask
from .graph import CapacitatedInstance, DominationWitness, Graph


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges, stored as (min, max) pairs."""

    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Matching":
        norm = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"degenerate edge ({u},{v})")
            norm.add((min(u, v), max(u, v)))
        return cls(frozenset(norm))

    @property
    def size(self) -> int:
        return len(self.edges)

    def covered(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def is_matching_of(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False
            if u in seen or v in seen:
                return False
            seen.add(u)
            seen.add(v)
        return True


def _blossom_scratch(n: int):
    K = kernels
    return tuple(K.int_buffer(max(n, 1)) for _ in range(6)) + \
        (K.int_buffer(2 * max(n, 1) + 4),)


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g`` (deterministic for fixed input)."""
    if g.n == 0:
        return Matching(frozenset())
    K = kernels.get()
    indptr, adjcsr = g.csr()
    match, parent, base, used, in_blossom, lca_mark, q = _blossom_scratch(g.n)
    K.blossom_max_matching(g.n, indptr, adjcsr, match, parent, base, q, used,
                           in_blossom, lca_mark)
    pairs = [(v, int(match[v])) for v in range(g.n) if match[v] > v]
    return Matching.from_pairs(pairs)


def _capdom_buffers(inst: CapacitatedInstance):
    n = inst.n
    max_units = sum(min(c, n) for c in inst.capacity)
    max_nodes = n + max_units
    max_deg = max((inst.graph.degree(v) for v in range(n)), default=0)
    max_entries = 2 * (2 * inst.graph.m + max_units * max(max_deg, 1)) + 2
    K = kernels
    return {
        "assign": K.int_buffer(max(n, 1)),
        "left_vertex": K.int_buffer(max(n, 1)),
        "left_id": K.int_buffer(max(n, 1)),
        "unit_start": K.int_buffer(max(n, 1)),
        "unit_cnt": K.int_buffer(max(n, 1)),
        "unit_owner": K.int_buffer(max_nodes + 1),
        "indptr": K.int_buffer(max_nodes + 2),
        "adjcsr": K.int_buffer(max_entries),
        "match": K.int_buffer(max_nodes + 1),
        "parent": K.int_buffer(max_nodes + 1),
        "base": K.int_buffer(max_nodes + 1),
        "q": K.int_buffer(2 * max_nodes + 4),
        "used": K.int_buffer(max_nodes + 1),
        "in_blossom": K.int_buffer(max_nodes + 1),
        "lca_mark": K.int_buffer(max_nodes + 1),
    }


def verify_capacitated(inst: CapacitatedInstance,
                       members: Iterable[int]) -> DominationWitness | None:
    """Witness that ``members`` dominates within capacities, or None.

    Feasibility is decided by expanding each member into one node per unit of
    capacity and matching the outside vertices into those units; the set is
    feasible exactly when the matching saturates the outside.
    """
    s_mask = to_mask(members, inst.n)
    if inst.n == 0 or s_mask == inst.graph.full_mask():
        return DominationWitness({})
    kernels.require_fits(inst.n, f"instance with n={inst.n}")
    K = kernels.get()
    adj = kernels.mask_vector(inst.graph.adj_masks)
    caps = kernels.int_buffer(inst.n)
    for v, c in enumerate(inst.capacity):
        caps[v] = c
    b = _capdom_buffers(inst)
    ok = K.capdom_feasible(inst.n, adj, caps, s_mask, b["assign"],
                           b["left_vertex"], b["left_id"], b["unit_start"],
                           b["unit_cnt"], b["unit_owner"], b["indptr"],
                           b["adjcsr"], b["match"], b["parent"], b["base"],
                           b["q"], b["used"], b["in_blossom"], b["lca_mark"])
    if not ok:
        return None
    assignment = {v: int(b["assign"][v])
                  for v in range(inst.n) if ((s_mask >> v) & 1) == 0}
    return DominationWitness(assignment)


def brute_max_matching_size(g: Graph) -> int:
    """Subset-DP maximum matching size; independent oracle for tests."""
    if g.n == 0:
        return 0
    if g.n > 20:
        raise ValueError("brute matching oracle limited to n <= 20")
    K = kernels.get()
    adj = kernels.mask_vector(g.adj_masks)
    memo = np.zeros(1 << g.n, dtype=np.int8)
    return int(K.matching_brute_size(adj, g.n, memo))
