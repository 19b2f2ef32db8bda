"""Exact and approximate capacitated-dominating-set solvers.

Both solvers sweep forced cores in increasing cardinality (lexicographic
within a cardinality) and solve the restricted problem for each core by
maximum matching.  The exact solver may stop early once a valid lower bound
is met; pass ``early_exit=False`` to force the full sweep.
"""

from __future__ import annotations

import numbers
import time
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .graph import CapacitatedInstance, DominationWitness
from .restricted import RestrictedInstance, solve_restricted


@dataclass(frozen=True)
class CdsResult:
    members: frozenset[int]
    witness: DominationWitness
    subsets_examined: int
    elapsed: float

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ApproxBound:
    """Closed-form worst-case ratios for a core-budget fraction c."""

    c: Fraction
    scheme_ratio: Fraction
    trivial_ratio: Fraction


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, numbers.Integral):
        return Fraction(int(c))
    if isinstance(c, float):
        # recover the intended rational from a float like 1/6
        return Fraction(c).limit_denominator(10**6)
    if isinstance(c, numbers.Rational):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"cannot interpret {c!r} as a fraction")


def _check_range(c: Fraction) -> Fraction:
    if not (0 < c < Fraction(1, 3)):
        raise ValueError(f"budget fraction must lie in (0, 1/3), got {c}")
    return c


def approx_ratio_bound(c) -> ApproxBound:
    """Worst-case ratio of the core-budget scheme, and of the trivial sweep.

    The scheme ratio is 1/(4c)+c up to c=1/4 and 2-3c beyond; internally the
    closed form is cross-checked against a numeric maximization of
    1+(1-cx)(x-2) over x in [3, 1/c] (concave, peak at x0 = 1/(2c)+1), which
    must agree to 1e-9.
    """
    c = _check_range(_as_fraction(c))
    if c <= Fraction(1, 4):
        scheme = Fraction(1, 1) / (4 * c) + c
    else:
        scheme = 2 - 3 * c
    trivial = Fraction(1, 1) / c - 1

    cf = float(c)
    lo, hi = 3.0, 1.0 / cf

    def val(x: float) -> float:
        return 1.0 + (1.0 - cf * x) * (x - 2.0)

    for _ in range(200):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if val(m1) < val(m2):
            lo = m1
        else:
            hi = m2
    numeric = max(val(lo), val(hi), val(3.0), val(1.0 / cf))
    x0 = 1.0 / (2.0 * cf) + 1.0
    if lo <= x0 <= hi or 3.0 <= x0 <= 1.0 / cf:
        numeric = max(numeric, val(min(max(x0, 3.0), 1.0 / cf)))
    if abs(numeric - float(scheme)) > 1e-9:
        raise RuntimeError(
            f"ratio-bound self-check failed: closed form {float(scheme)} vs "
            f"numeric maximum {numeric}")
    return ApproxBound(c, scheme, trivial)


def _sweep(inst: CapacitatedInstance, kmax: int,
           early_exit: bool) -> tuple[int, int, int]:
    """Best restricted optimum over all cores of size <= kmax.

    Returns (best size, best core mask, cores examined)."""
    n = inst.n
    kernels.require_fits(n, f"instance with n={n}")
    K = kernels.get()
    adj = kernels.mask_vector(inst.graph.adj_masks)
    caps = kernels.int_buffer(n)
    for v, c in enumerate(inst.capacity):
        caps[v] = c
    max_cap = max(inst.capacity, default=0)
    lower = max(1, -(-n // (1 + max_cap)))
    max_units = sum(min(c, n - 1) for c in inst.capacity)
    max_nodes = n + max_units + 1
    max_deg = max((inst.graph.degree(v) for v in range(n)), default=0)
    max_entries = 2 * (2 * inst.graph.m + max_units * max(max_deg, 1)) + 2
    comb = kernels.int_buffer(n + 1)
    plain_id = kernels.int_buffer(n + 1)
    vertex_of = kernels.int_buffer(max_nodes)
    copy_start = kernels.int_buffer(n + 1)
    copy_cnt = kernels.int_buffer(n + 1)
    indptr = kernels.int_buffer(max_nodes + 1)
    adjcsr = kernels.int_buffer(max_entries)
    scratch = [kernels.int_buffer(max_nodes) for _ in range(6)]
    q = kernels.int_buffer(2 * max_nodes + 4)
    match, parent, base, used, in_blossom, lca_mark = scratch
    best_size, best_u, examined = K.cds_enumerate(
        n, adj, caps, kmax, lower, 1 if early_exit else 0, comb,
        plain_id, vertex_of, copy_start, copy_cnt, indptr, adjcsr,
        match, parent, base, q, used, in_blossom, lca_mark)
    return int(best_size), int(best_u), int(examined)


def _solve_with_budget(inst: CapacitatedInstance, kmax: int,
                       early_exit: bool) -> CdsResult:
    start = time.perf_counter()
    if inst.n == 0:
        return CdsResult(frozenset(), DominationWitness({}), 1, 0.0)
    best_size, best_u, examined = _sweep(inst, kmax, early_exit)
    forced = frozenset(v for v in range(inst.n) if (best_u >> v) & 1)
    sol = solve_restricted(RestrictedInstance(inst, forced))
    if len(sol.members) != best_size:
        raise RuntimeError(
            f"solver self-check failed: sweep size {best_size} vs "
            f"reconstructed size {len(sol.members)}")
    return CdsResult(sol.members, sol.witness, examined,
                     time.perf_counter() - start)


def solve_exact(inst: CapacitatedInstance, *,
                early_exit: bool = True) -> CdsResult:
    """Minimum capacitated dominating set (cores up to floor(n/3))."""
    return _solve_with_budget(inst, inst.n // 3, early_exit)


def solve_approx(inst: CapacitatedInstance, c, *,
                 early_exit: bool = True) -> CdsResult:
    """Feasible set from the core budget floor(c*n); optimal when that
    budget reaches floor(n/3).  ``c`` must lie strictly inside (0, 1/3)."""
    frac = _check_range(_as_fraction(c))
    kmax = int(frac * inst.n)  # exact rational floor
    return _solve_with_budget(inst, kmax, early_exit)
