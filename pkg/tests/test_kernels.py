"""The compiled and pure kernel paths are the same source; prove it behaves
identically through every public solver."""

import random

import pytest

from domirr import kernels
from domirr.cds import solve_exact
from domirr.graph import CapacitatedInstance
from domirr.ir_max import solve_ir_max
from domirr.ir_min import solve_ir_min
from domirr.matching import max_matching, verify_capacitated
from domirr.oracles import brute_cds, brute_ir_max, brute_ir_min

from .conftest import graph_from_code

NEEDS_NUMBA = pytest.mark.skipif("numba" not in kernels.available_modes(),
                                 reason="numba not installed")


def _battery(seed, count=25, n_max=9):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
        caps = tuple(rng.randint(0, 3) for _ in range(n))
        out.append(CapacitatedInstance(g, caps))
    return out


@NEEDS_NUMBA
class TestModeEquivalence:
    def test_solvers_agree_exactly(self):
        for inst in _battery(113):
            with kernels.using("numba"):
                a = (solve_exact(inst).members,
                     solve_ir_max(inst.graph).members,
                     solve_ir_min(inst.graph).members,
                     max_matching(inst.graph).edges)
            with kernels.using("python"):
                b = (solve_exact(inst).members,
                     solve_ir_max(inst.graph).members,
                     solve_ir_min(inst.graph).members,
                     max_matching(inst.graph).edges)
            assert a == b

    def test_witnesses_agree_exactly(self):
        for inst in _battery(127, count=15):
            members = frozenset(v for v in range(inst.n) if v % 2 == 0)
            with kernels.using("numba"):
                a = verify_capacitated(inst, members)
            with kernels.using("python"):
                b = verify_capacitated(inst, members)
            assert (a is None) == (b is None)
            if a is not None:
                assert a.assignment == b.assignment

    def test_oracles_agree(self):
        for inst in _battery(131, count=10, n_max=8):
            with kernels.using("numba"):
                a = (brute_cds(inst).size, brute_ir_max(inst.graph).size,
                     brute_ir_min(inst.graph).size)
            with kernels.using("python"):
                b = (brute_cds(inst).size, brute_ir_max(inst.graph).size,
                     brute_ir_min(inst.graph).size)
            assert a == b

    def test_popcount_twins_agree(self):
        jit = kernels._load_impl(True)
        py = kernels._load_impl(False)
        rng = random.Random(137)
        for _ in range(200):
            x = rng.getrandbits(62)
            assert int(jit.popcount(x)) == py.popcount(x) == bin(x).count("1")


class TestModeSwitching:
    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            kernels.set_mode("fortran")

    def test_using_restores_previous_mode(self):
        before = kernels.mode()
        with kernels.using("python"):
            assert kernels.mode() == "python"
        assert kernels.mode() == before

    @NEEDS_NUMBA
    def test_compiled_path_enforces_width_limit(self):
        with kernels.using("numba"):
            with pytest.raises(ValueError, match="62-bit"):
                kernels.require_fits(63, "test object")

    def test_pure_path_has_no_width_limit(self):
        with kernels.using("python"):
            kernels.require_fits(500, "test object")

    def test_pure_path_solves_past_64_bits(self):
        # 41 and 40 vertices: the doubled graphs need >64-bit masks
        from domirr.graph import Graph

        from .conftest import star_graph
        with kernels.using("python"):
            res = solve_ir_min(star_graph(40))
            assert res.size == 1 and res.members == {0}
            assert solve_ir_max(Graph(40, [])).size == 40
