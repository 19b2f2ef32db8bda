"""Largest irredundant set via branch-and-reduce on the doubled graph,
plus numeric verification of every branching inequality.

The search maximizes the independent edge set of the doubled graph with
eight reduction/branching rules applied first-match (isolated vertex; pendant
pair; pendant vertex; degree >= 8; adjacent degree-2 pair; degree-2 vertex;
adjacent degree-3 pair; remaining degree-3..7 vertex with all neighbours of
degree >= 4).  The verifier evaluates, for a candidate growth base alpha, the
inequality 1 >= sum(multiplicity * alpha^(-removed)) of every rule over its
full parameter range.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, getcontext

from . import kernels
from .graph import Graph
from .irredundance import (DoubledGraph, IndependentEdgeSet,
                           IrredundantWitness, build_doubled_graph,
                           edge_set_to_irset, is_irredundant)

#: Smallest base known to satisfy every branching inequality below.
DEFAULT_ALPHA = 1.40202

#: Degree-2 and degree-3 rules bind the analysis; margins are ~1e-5 there,
#: so anything inside this band is reported as inconclusive, not pass/fail.
NOISE_BAND = Decimal("1e-12")


@dataclass(frozen=True)
class IrMaxResult:
    size: int
    members: frozenset[int]
    witness: IrredundantWitness
    edge_set: IndependentEdgeSet
    nodes_explored: int
    elapsed: float


def _branch(h: DoubledGraph) -> tuple[int, IndependentEdgeSet, int]:
    n2 = 2 * h.base_n
    kernels.require_fits(n2, f"doubled graph on {n2} ids")
    K = kernels.get()
    adjh = kernels.mask_vector(h.graph.adj_masks)
    cap = n2 * 80 + 16
    st_live = kernels.mask_buffer(cap)
    st_drop = kernels.mask_buffer(cap)
    st_clen = kernels.int_buffer(cap)
    st_e = kernels.int_buffer2(cap, 4)
    ce_a = kernels.int_buffer(n2 + 1)
    ce_b = kernels.int_buffer(n2 + 1)
    best_a = kernels.int_buffer(n2 + 1)
    best_b = kernels.int_buffer(n2 + 1)
    deg = kernels.int_buffer(n2 + 1)
    size, nodes = K.ir_branch(adjh, n2, st_live, st_clen, st_e, st_drop,
                              ce_a, ce_b, best_a, best_b, deg)
    size, nodes = int(size), int(nodes)
    if size < 0:
        raise RuntimeError("branch search hit an inconsistent state "
                           "(rule dispatch fell through)")
    pairs = []
    for i in range(size):
        a, b = int(best_a[i]), int(best_b[i])
        left, right = (a, b) if a < h.base_n else (b, a)
        pairs.append((left, right))
    return size, IndependentEdgeSet(frozenset(pairs)), nodes


def max_independent_edge_set(h: DoubledGraph) -> tuple[int, IndependentEdgeSet]:
    """Optimum cardinality and a witness edge set."""
    size, ies, _ = _branch(h)
    return size, ies


def solve_ir_max(g: Graph) -> IrMaxResult:
    """Largest irredundant set of ``g`` with witness and search stats."""
    start = time.perf_counter()
    if g.n == 0:
        return IrMaxResult(0, frozenset(), IrredundantWitness({}),
                           IndependentEdgeSet(frozenset()), 0, 0.0)
    h = build_doubled_graph(g)
    size, ies, nodes = _branch(h)
    members = edge_set_to_irset(h, ies)
    witness = is_irredundant(g, members)
    if witness is None or len(members) != size:
        raise RuntimeError("branch witness failed irredundance re-check")
    return IrMaxResult(size, members, witness, ies, nodes,
                       time.perf_counter() - start)


# --------------------------------------------------------------------------
# branching-inequality verification
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RecurrenceCase:
    """One branching inequality: rule tag, parameters, and its branch list
    as (multiplicity, vertices removed) pairs."""

    rule: str
    params: tuple[int, ...]
    branches: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CaseOutcome:
    case: RecurrenceCase
    margin: float
    status: str  # "pass" | "fail" | "inconclusive"


@dataclass(frozen=True)
class RecurrenceReport:
    alpha: float
    outcomes: tuple[CaseOutcome, ...]
    min_margin: float
    binding: RecurrenceCase
    all_pass: bool

    def failing(self) -> list[CaseOutcome]:
        return [o for o in self.outcomes if o.status == "fail"]


def recurrence_cases() -> list[RecurrenceCase]:
    """Every inequality the branching analysis relies on, full ranges."""
    cases: list[RecurrenceCase] = []
    cases.append(RecurrenceCase("R3", (), ((1, 2), (1, 3))))
    # degree >= 8: the removal term shrinks with k once alpha > (k+1)/k,
    # so k=8 is the only case to check (plus that side condition).
    cases.append(RecurrenceCase("R4", (8,), ((1, 1), (8, 10))))
    cases.append(RecurrenceCase("R5", (), ((3, 4),)))
    for du in range(3, 8):
        for dw in range(3, 8):
            for k in range(0, min(du, dw)):
                cases.append(RecurrenceCase(
                    "R6", (du, dw, k),
                    ((1, du + 2), (1, dw + 2), (1, 3),
                     ((du - k - 1) * (dw - k - 1), du + dw + 2 - k))))
    for i1 in range(3, 8):
        for i2 in range(3, 8):
            for ku in range(0, min(i1, i2)):
                for j1 in range(1, 8):
                    for j2 in range(1, 8):
                        for kv in range(0, min(j1, j2)):
                            cases.append(RecurrenceCase(
                                "R7", (i1, i2, j1, j2, ku, kv),
                                ((5, 6),
                                 ((i1 - ku - 1) * (i2 - ku - 1),
                                  i1 + i2 - ku + 3),
                                 ((j1 - kv - 1) * (j2 - kv - 1),
                                  j1 + j2 - kv + 6))))
    for i in range(3, 8):
        cases.append(RecurrenceCase("R8", (i,), ((1, 1), (i, i + 4))))
    return cases


def verify_recurrences(alpha=DEFAULT_ALPHA) -> RecurrenceReport:
    """Check every branching inequality at the given base.

    Margins are 1 - sum(multiplicity * alpha^(-removed)), evaluated in
    50-digit decimal arithmetic; |margin| <= 1e-12 is flagged inconclusive.
    The degree >= 8 side condition alpha > 9/8 is reported as its own case.
    """
    getcontext().prec = 50
    try:
        a = Decimal(str(alpha))
    except InvalidOperation:
        raise ValueError(f"cannot interpret {alpha!r} as a base") from None
    if a <= 1:
        raise ValueError(f"base must exceed 1, got {alpha}")
    max_removed = 24
    inv_pow = [Decimal(1)] * (max_removed + 1)
    inv = Decimal(1) / a
    for r in range(1, max_removed + 1):
        inv_pow[r] = inv_pow[r - 1] * inv

    outcomes: list[CaseOutcome] = []

    def classify(margin: Decimal) -> str:
        if abs(margin) <= NOISE_BAND:
            return "inconclusive"
        return "pass" if margin > 0 else "fail"

    side_margin = a - Decimal(9) / Decimal(8)
    side = RecurrenceCase("R4-side", (8,), ())
    outcomes.append(CaseOutcome(side, float(side_margin),
                                classify(side_margin)))

    for case in recurrence_cases():
        total = Decimal(0)
        for mult, removed in case.branches:
            if mult:
                total += mult * inv_pow[removed]
        margin = Decimal(1) - total
        outcomes.append(CaseOutcome(case, float(margin), classify(margin)))

    binding = min(outcomes, key=lambda o: o.margin)
    return RecurrenceReport(
        alpha=float(a),
        outcomes=tuple(outcomes),
        min_margin=binding.margin,
        binding=binding.case,
        all_pass=all(o.status == "pass" for o in outcomes),
    )
