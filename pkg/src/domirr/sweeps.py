"""Exhaustive small-graph verification sweeps.

`verify_ir_exhaustive` runs both irredundance solvers against the powerset
reference on every connected labelled graph up to a vertex count, entirely
inside the kernel layer (the per-graph Python overhead would dominate
otherwise: there are ~1.9M connected labelled graphs on 7 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels


@dataclass(frozen=True)
class SweepResult:
    graphs_checked: int
    mismatches: int
    first_bad: tuple[int, int] | None  # (n, edge code) of the first failure


def verify_ir_exhaustive(max_n: int = 7) -> SweepResult:
    """Compare the branch and deepening solvers (including their witnesses)
    against the powerset reference on every connected labelled graph with
    1..max_n vertices."""
    K = kernels.get()
    total = 0
    bad = 0
    first: tuple[int, int] | None = None
    for n in range(1, max_n + 1):
        n2 = 2 * n
        kernels.require_fits(n2, f"sweep over n={n}")
        adj = kernels.mask_buffer(n)
        nbar = kernels.mask_buffer(n)
        adjh = kernels.mask_buffer(n2)
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
        dfs_cap = (n + 2) * (n + 2)
        cand = kernels.int_buffer(n + 1)
        st_set = kernels.mask_buffer(dfs_cap)
        st_c1 = kernels.mask_buffer(dfs_cap)
        st_c2 = kernels.mask_buffer(dfs_cap)
        st_idx = kernels.int_buffer(dfs_cap)
        st_depth = kernels.int_buffer(dfs_cap)
        checked, mism, first_code = K.sweep_ir_exhaustive(
            n, adj, nbar, adjh, st_live, st_clen, st_e, st_drop,
            ce_a, ce_b, best_a, best_b, deg,
            cand, st_set, st_c1, st_c2, st_idx, st_depth)
        total += int(checked)
        bad += int(mism)
        if first is None and int(mism) > 0:
            first = (n, int(first_code))
    return SweepResult(total, bad, first)
