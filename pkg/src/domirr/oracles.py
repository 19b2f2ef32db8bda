"""Exhaustive reference solvers: ground truth for tests and acceptance runs.

Each oracle sweeps the full powerset (increasing cardinality with early exit
for the domination one) and decides feasibility with the same predicate
kernels the real solvers use, so a solver/oracle disagreement points at
search logic, not at the predicates.  A hard size limit guards against
accidentally exponential invocations.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .bitsets import from_mask
from .graph import CapacitatedInstance, Graph
from .matching import _capdom_buffers

DEFAULT_LIMIT = 16
OPTIMA_CAP = 64


class SizeLimitError(ValueError):
    """Instance too large for an exhaustive reference sweep."""


@dataclass(frozen=True)
class OracleResult:
    size: int
    all_optima: tuple[frozenset[int], ...]
    enumerated: int


def _guard(n: int, limit: int) -> None:
    if n > limit:
        raise SizeLimitError(
            f"exhaustive oracle refused: n={n} exceeds limit {limit}")


def brute_cds(inst: CapacitatedInstance, *, limit: int = DEFAULT_LIMIT,
              optima_cap: int = OPTIMA_CAP) -> OracleResult:
    """Smallest capacitatedly-dominating set by increasing-cardinality scan."""
    _guard(inst.n, limit)
    if inst.n == 0:
        return OracleResult(0, (frozenset(),), 1)
    K = kernels.get()
    adj = kernels.mask_vector(inst.graph.adj_masks)
    caps = kernels.int_buffer(inst.n)
    for v, c in enumerate(inst.capacity):
        caps[v] = c
    b = _capdom_buffers(inst)
    comb = kernels.int_buffer(inst.n + 1)
    optima = kernels.int_buffer(optima_cap + 1)
    size, n_opt, examined = K.brute_cds_scan(
        inst.n, adj, caps, comb, optima, optima_cap, b["assign"],
        b["left_vertex"], b["left_id"], b["unit_start"], b["unit_cnt"],
        b["unit_owner"], b["indptr"], b["adjcsr"], b["match"], b["parent"],
        b["base"], b["q"], b["used"], b["in_blossom"], b["lca_mark"])
    found = tuple(from_mask(int(optima[i]))
                  for i in range(min(int(n_opt), optima_cap)))
    return OracleResult(int(size), found, int(examined))


def _nbar_vector(g: Graph):
    return kernels.mask_vector(g.closed_mask(v) for v in range(g.n))


def brute_ir_max(g: Graph, *, limit: int = DEFAULT_LIMIT,
                 optima_cap: int = OPTIMA_CAP) -> OracleResult:
    """Largest irredundant set over the full powerset."""
    _guard(g.n, limit)
    K = kernels.get()
    nbar = _nbar_vector(g)
    best, _, _ = K.brute_ir_scan(nbar, g.n)
    best = int(best)
    optima = []
    for mask in range(1 << g.n):
        if mask.bit_count() == best and K.irr_check(nbar, g.n, mask):
            optima.append(from_mask(mask))
            if len(optima) >= optima_cap:
                break
    return OracleResult(best, tuple(optima), 1 << g.n)


def brute_ir_min(g: Graph, *, limit: int = DEFAULT_LIMIT,
                 optima_cap: int = OPTIMA_CAP) -> OracleResult:
    """Smallest inclusion-maximal irredundant set over the full powerset."""
    _guard(g.n, limit)
    K = kernels.get()
    nbar = _nbar_vector(g)
    _, best, _ = K.brute_ir_scan(nbar, g.n)
    best = int(best)
    optima = []
    for mask in range(1 << g.n):
        if mask.bit_count() == best and K.maximal_irr_check(nbar, g.n, mask):
            optima.append(from_mask(mask))
            if len(optima) >= optima_cap:
                break
    return OracleResult(best, tuple(optima), 1 << g.n)
