import random

import pytest

from domirr.graph import Graph
from domirr.irredundance import (IndependentEdgeSet, build_doubled_graph,
                                 edge_set_to_irset, irset_to_edge_set,
                                 is_independent_edge_set, is_irredundant,
                                 is_maximal_irredundant)
from domirr.oracles import brute_ir_min

from .conftest import complete_graph, graph_from_code


class TestIsIrredundant:
    def test_p4_alternating_pair(self, p4):
        w = is_irredundant(p4, [0, 2])
        assert w is not None
        assert w.is_valid_for(p4, [0, 2])
        # lowest-id private vertex per member
        assert w.unique_of == {0: 0, 2: 2}

    def test_p4_first_three_is_not(self, p4):
        assert is_irredundant(p4, [0, 1, 2]) is None

    def test_empty_set_is_vacuously_irredundant(self, p4):
        w = is_irredundant(p4, [])
        assert w is not None
        assert w.unique_of == {}

    def test_subset_closed_exhaustively(self):
        rng = random.Random(61)
        for _ in range(40):
            n = rng.randint(1, 7)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            irr = {mask for mask in range(1 << n)
                   if is_irredundant(g, [v for v in range(n)
                                         if (mask >> v) & 1]) is not None}
            for mask in irr:
                sub = mask
                while True:
                    assert sub in irr
                    if sub == 0:
                        break
                    sub = (sub - 1) & mask


class TestIsMaximalIrredundant:
    def test_p4_middle_vertex_extends(self, p4):
        assert not is_maximal_irredundant(p4, [1])

    def test_p4_alternating_pair_is_maximal(self, p4):
        assert is_maximal_irredundant(p4, [0, 2])

    def test_k2_single_vertex_is_maximal(self):
        assert is_maximal_irredundant(Graph(2, [(0, 1)]), [0])

    def test_non_irredundant_input_is_a_contract_error(self, p4):
        with pytest.raises(ValueError):
            is_maximal_irredundant(p4, [0, 1, 2])


class TestDoubledGraph:
    def test_p4_shape(self, p4):
        h = build_doubled_graph(p4)
        assert h.graph.n == 8
        assert h.graph.m == 2 * p4.m + p4.n

    def test_single_vertex(self):
        h = build_doubled_graph(Graph(1, []))
        assert h.graph.edges() == [(0, 1)]

    def test_edgeless_graph_gives_a_perfect_matching(self):
        h = build_doubled_graph(Graph(5, []))
        assert h.graph.edges() == [(v, 5 + v) for v in range(5)]

    def test_edge_rule(self, p4):
        h = build_doubled_graph(p4)
        for u in range(4):
            for v in range(4):
                expected = (u == v) or p4.has_edge(u, v)
                assert h.graph.has_edge(u, h.right(v)) == expected

    def test_edge_count_formula_on_randoms(self):
        rng = random.Random(67)
        for _ in range(50):
            n = rng.randint(1, 12)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            h = build_doubled_graph(g)
            assert h.graph.m == 2 * g.m + g.n


class TestIndependentEdgeSets:
    def test_p4_good_pair(self, p4):
        h = build_doubled_graph(p4)
        assert is_independent_edge_set(h, [(0, h.right(0)), (2, h.right(3))])

    def test_p4_conflicting_pair(self, p4):
        h = build_doubled_graph(p4)
        # the twin of vertex 1 is adjacent to vertex 0: endpoints conflict
        assert not is_independent_edge_set(h, [(0, h.right(0)), (1, h.right(1))])

    def test_empty_is_independent(self, p4):
        h = build_doubled_graph(p4)
        assert is_independent_edge_set(h, [])

    def test_shared_endpoint_rejected(self, p4):
        h = build_doubled_graph(p4)
        assert not is_independent_edge_set(h, [(0, h.right(0)), (0, h.right(1))])


class TestCorrespondence:
    def test_edge_set_to_members_p4(self, p4):
        h = build_doubled_graph(p4)
        members = edge_set_to_irset(h, [(0, h.right(0)), (2, h.right(3))])
        assert members == {0, 2}
        assert is_irredundant(p4, members) is not None

    def test_empty_both_ways(self, p4):
        h = build_doubled_graph(p4)
        assert edge_set_to_irset(h, []) == frozenset()
        w = is_irredundant(p4, [])
        assert irset_to_edge_set(h, [], w).edges == frozenset()

    def test_single_vertex(self):
        g = Graph(1, [])
        h = build_doubled_graph(g)
        assert edge_set_to_irset(h, [(0, 1)]) == {0}

    def test_members_to_edge_set_p4(self, p4):
        h = build_doubled_graph(p4)
        w = is_irredundant(p4, [0, 2])
        ies = irset_to_edge_set(h, [0, 2], w)
        assert ies.size == 2
        assert is_independent_edge_set(h, ies)

    def test_round_trip_on_oracle_generated_sets(self):
        rng = random.Random(71)
        for _ in range(80):
            n = rng.randint(1, 12)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            h = build_doubled_graph(g)
            members = frozenset(v for v in range(n) if rng.random() < 0.4)
            w = is_irredundant(g, members)
            if w is None:
                continue
            ies = irset_to_edge_set(h, members, w)
            assert ies.size == len(members)
            assert edge_set_to_irset(h, ies) == members

    def test_cardinality_preserved_both_directions(self):
        rng = random.Random(73)
        for _ in range(80):
            n = rng.randint(1, 10)
            g = graph_from_code(n, rng.getrandbits(n * (n - 1) // 2))
            h = build_doubled_graph(g)
            # sample edge sets greedily, keep only independent ones
            edges = h.graph.edges()
            rng.shuffle(edges)
            chosen = []
            for e in edges:
                if is_independent_edge_set(h, chosen + [e]):
                    chosen.append(e)
                if len(chosen) >= 3:
                    break
            members = edge_set_to_irset(h, chosen)
            assert len(members) == len(chosen)

    def test_maximality_is_not_preserved(self, p4):
        # one central edge of the doubled path is a maximal independent
        # edge set of size 1, yet the smallest maximal irredundant set has 2
        h = build_doubled_graph(p4)
        lone = [(1, h.right(2))]
        assert is_independent_edge_set(h, lone)
        for extra in h.graph.edges():
            if tuple(extra) != (1, h.right(2)):
                assert not is_independent_edge_set(h, lone + [extra])
        assert brute_ir_min(p4).size == 2


class TestWitnessValidation:
    def test_wrong_domain_rejected(self, p4):
        w = is_irredundant(p4, [0, 2])
        assert not w.is_valid_for(p4, [0])

    def test_stolen_private_vertex_rejected(self):
        g = complete_graph(3)
        w = is_irredundant(g, [0])
        assert w.unique_of == {0: 0}
        assert w.is_valid_for(g, [0])
        assert not w.is_valid_for(g, [0, 1])
