import random

import pytest

from domirr.graph import CapacitatedInstance, Graph
from domirr.irredundance import is_irredundant, is_maximal_irredundant
from domirr.matching import verify_capacitated
from domirr.oracles import SizeLimitError, brute_cds, brute_ir_max, brute_ir_min

from .conftest import cycle_graph, graph_from_code, star_graph


class TestBruteCds:
    def test_star(self):
        inst = CapacitatedInstance(star_graph(4), (4, 0, 0, 0, 0))
        res = brute_cds(inst)
        assert res.size == 1
        assert res.all_optima == (frozenset({0}),)

    def test_fig1(self, fig1):
        res = brute_cds(fig1)
        assert res.size == 4
        for members in res.all_optima:
            assert verify_capacitated(fig1, members) is not None

    def test_k2_no_capacity(self):
        inst = CapacitatedInstance(Graph(2, [(0, 1)]), (0, 0))
        assert brute_cds(inst).size == 2

    def test_enumeration_scans_whole_levels(self, fig1):
        res = brute_cds(fig1)
        # levels 0..3 fully plus the whole size-4 level
        assert res.enumerated == sum(_comb(10, k) for k in range(5))

    def test_limit_refusal(self):
        inst = CapacitatedInstance(Graph(17, []), (0,) * 17)
        with pytest.raises(SizeLimitError):
            brute_cds(inst)
        brute_cds(inst, limit=17)  # explicit limit lifts the guard


def _comb(n, k):
    import math
    return math.comb(n, k)


class TestBruteIrredundance:
    def test_p4_largest(self, p4):
        res = brute_ir_max(p4)
        assert res.size == 2
        assert set(res.all_optima) == {frozenset(s) for s in
                                       ({0, 2}, {0, 3}, {1, 2}, {1, 3})}
        assert res.enumerated == 16

    def test_p4_smallest_maximal(self, p4):
        assert brute_ir_min(p4).size == 2

    def test_single_vertex(self):
        g = Graph(1, [])
        assert brute_ir_max(g).size == 1
        assert brute_ir_min(g).size == 1

    def test_five_cycle(self):
        g = cycle_graph(5)
        assert brute_ir_max(g).size == 2
        assert brute_ir_min(g).size == 2

    def test_star_smallest_is_the_center(self):
        res = brute_ir_min(star_graph(4))
        assert res.size == 1
        assert res.all_optima[0] == {0}

    def test_optima_pass_the_module_predicates(self):
        rng = random.Random(107)
        for _ in range(40):
            n = rng.randint(1, 9)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            for members in brute_ir_max(g).all_optima[:8]:
                assert is_irredundant(g, members) is not None
            for members in brute_ir_min(g).all_optima[:8]:
                assert is_maximal_irredundant(g, members)

    def test_smallest_maximal_never_exceeds_largest(self):
        rng = random.Random(109)
        for _ in range(60):
            n = rng.randint(1, 10)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            assert brute_ir_min(g).size <= brute_ir_max(g).size

    def test_limit_refusal(self):
        with pytest.raises(SizeLimitError):
            brute_ir_max(Graph(17, []))
        with pytest.raises(SizeLimitError):
            brute_ir_min(Graph(17, []))
