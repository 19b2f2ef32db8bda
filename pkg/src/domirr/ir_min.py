"""Smallest inclusion-maximal irredundant set by iterative-deepening DFS.

Each sweep enumerates the irredundant sets up to the sweep budget in
canonical order (members added in ascending id, non-irredundant extensions
pruned — sound because irredundance is closed under subsets) and tests the
budget-sized sets for maximality; the first hit at the shallowest budget
wins.  Isolated vertices belong to every maximal irredundant set and are
forced up front.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass

from . import kernels
from .bitsets import from_mask, iter_bits
from .graph import Graph
from .irredundance import IrredundantWitness, is_irredundant


@dataclass(frozen=True)
class IrMinResult:
    size: int
    members: frozenset[int]
    witness: IrredundantWitness
    sets_visited: int
    elapsed: float


VisitFn = Callable[[frozenset[int], IrredundantWitness], object]


def enumerate_irredundant(g: Graph, k: int,
                          visit: VisitFn | None = None) -> int:
    """Call ``visit`` once per irredundant set of size <= k; return the count.

    Sets appear in canonical depth-first order (grown by ascending vertex
    id), starting with the empty set.  A visit returning False stops the
    enumeration early.
    """
    if k < 0:
        raise ValueError("size budget must be non-negative")
    nbar = [g.closed_mask(v) for v in range(g.n)]
    visited = 0

    def emit(s_mask: int) -> bool:
        nonlocal visited
        visited += 1
        if visit is None:
            return True
        witness = is_irredundant(g, from_mask(s_mask))
        assert witness is not None
        return visit(from_mask(s_mask), witness) is not False

    def rec(s_mask: int, c1: int, c2: int, start: int, size: int) -> bool:
        if not emit(s_mask):
            return False
        if size == k:
            return True
        for v in range(start, g.n):
            nb = nbar[v]
            nc2 = c2 | (c1 & nb)
            nc1 = c1 | nb
            once = nc1 & ~nc2
            if nb & once == 0:
                continue
            ok = True
            for w in iter_bits(s_mask):
                if nbar[w] & once == 0:
                    ok = False
                    break
            if ok and not rec(s_mask | (1 << v), nc1, nc2, v + 1, size + 1):
                return False
        return True

    rec(0, 0, 0, 0, 0)
    return visited


def solve_ir_min(g: Graph) -> IrMinResult:
    """Smallest inclusion-maximal irredundant set of ``g``."""
    start = time.perf_counter()
    if g.n == 0:
        return IrMinResult(0, frozenset(), IrredundantWitness({}), 1, 0.0)
    kernels.require_fits(g.n, f"graph with n={g.n}")
    K = kernels.get()
    nbar = kernels.mask_vector(g.closed_mask(v) for v in range(g.n))
    m = sum(1 for v in range(g.n) if g.degree(v) > 0)
    cap = (m + 2) * (m + 2)
    cand = kernels.int_buffer(g.n + 1)
    st_set = kernels.mask_buffer(cap)
    st_c1 = kernels.mask_buffer(cap)
    st_c2 = kernels.mask_buffer(cap)
    st_idx = kernels.int_buffer(cap)
    st_depth = kernels.int_buffer(cap)
    size, mask, seen = K.ir_min_solve(nbar, g.n, cand, st_set, st_c1, st_c2,
                                      st_idx, st_depth)
    size, mask, seen = int(size), int(mask), int(seen)
    if size < 0:
        raise RuntimeError("deepening sweep exhausted without a maximal set")
    members = from_mask(mask)
    witness = is_irredundant(g, members)
    if witness is None or len(members) != size:
        raise RuntimeError("sweep witness failed irredundance re-check")
    return IrMinResult(size, members, witness, seen,
                       time.perf_counter() - start)
