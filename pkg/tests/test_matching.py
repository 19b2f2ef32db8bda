import random

import pytest

from domirr.graph import CapacitatedInstance, Graph
from domirr.matching import (Matching, brute_max_matching_size, max_matching,
                             verify_capacitated)
from domirr.restricted import RestrictedInstance, build_copy_graph

from .conftest import all_graphs, fig_set, graph_from_code, path_graph, star_graph


class TestMaxMatching:
    def test_empty_graph(self):
        assert max_matching(Graph(3, [])).size == 0

    def test_path_has_perfect_matching(self):
        m = max_matching(path_graph(4))
        assert m.size == 2
        assert m.is_matching_of(path_graph(4))

    def test_fig1_copy_graph_optimum_is_five(self, fig1):
        cg = build_copy_graph(RestrictedInstance(fig1, fig_set("ABC")))
        assert brute_max_matching_size(cg.graph) == 5
        assert max_matching(cg.graph).size == 5

    def test_exhaustive_small_graphs(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert max_matching(g).size == brute_max_matching_size(g)

    def test_random_graphs_up_to_14(self):
        rng = random.Random(2024)
        for _ in range(1000):
            n = rng.randint(1, 14)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            m = max_matching(g)
            assert m.is_matching_of(g)
            assert m.size == brute_max_matching_size(g)

    def test_deterministic(self, fig1):
        cg = build_copy_graph(RestrictedInstance(fig1, fig_set("ABC")))
        assert max_matching(cg.graph) == max_matching(cg.graph)


class TestVerifyCapacitated:
    def test_star_center_with_full_capacity(self):
        inst = CapacitatedInstance(star_graph(4), (4, 0, 0, 0, 0))
        w = verify_capacitated(inst, [0])
        assert w is not None
        assert w.assignment == {1: 0, 2: 0, 3: 0, 4: 0}

    def test_fig1_acdl_feasible(self, fig1):
        w = verify_capacitated(fig1, fig_set("ACDL"))
        assert w is not None
        assert w.is_valid_for(fig1, fig_set("ACDL"))

    def test_fig1_abc_infeasible(self, fig1):
        assert verify_capacitated(fig1, fig_set("ABC")) is None

    def test_whole_vertex_set_gives_empty_witness(self, fig1):
        w = verify_capacitated(fig1, range(fig1.n))
        assert w is not None
        assert w.assignment == {}

    def test_zero_capacity_members_take_no_assignees(self):
        inst = CapacitatedInstance(path_graph(3), (1, 1, 0))
        w = verify_capacitated(inst, [0, 2])
        assert w is not None
        assert w.assignment == {1: 0}

    def test_witnesses_revalidate_on_random_instances(self):
        rng = random.Random(5)
        for _ in range(300):
            n = rng.randint(1, 10)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            inst = CapacitatedInstance(
                g, tuple(rng.randint(0, 3) for _ in range(n)))
            members = {v for v in range(n) if rng.random() < 0.5}
            w = verify_capacitated(inst, members)
            if w is not None:
                assert w.is_valid_for(inst, members)
            else:
                # brute check: no assignment exists
                assert not _feasible_by_brute(inst, members)


def _feasible_by_brute(inst, members):
    outside = [v for v in range(inst.n) if v not in members]
    if not outside:
        return True

    def rec(i, loads):
        if i == len(outside):
            return True
        v = outside[i]
        for w in sorted(members):
            if inst.graph.has_edge(v, w) and loads[w] < inst.capacity[w]:
                loads[w] += 1
                if rec(i + 1, loads):
                    return True
                loads[w] -= 1
        return False

    return rec(0, {w: 0 for w in members})


class TestMatchingType:
    def test_rejects_degenerate_edge(self):
        with pytest.raises(ValueError):
            Matching.from_pairs([(1, 1)])

    def test_shared_endpoint_is_not_a_matching(self):
        g = path_graph(3)
        m = Matching.from_pairs([(0, 1), (1, 2)])
        assert not m.is_matching_of(g)

    def test_foreign_edge_is_not_a_matching(self):
        g = path_graph(3)
        assert not Matching.from_pairs([(0, 2)]).is_matching_of(g)
