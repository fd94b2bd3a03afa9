"""Matching, covering, and connectivity against brute-force oracles."""

import itertools

import pytest

from bipartite_estrada.families import complete_bipartite, join_family
from bipartite_estrada.graph import Graph, find_bipartition
from bipartite_estrada.invariants import (ClassDescriptor, class_member,
                                          covering_number, edge_connectivity,
                                          matching_number, vertex_connectivity)
from bipartite_estrada.search import enumerate_bipartite
from oracles import (all_graphs, bf_edge_connectivity, bf_matching_number,
                     bf_min_vertex_cover, bf_vertex_connectivity)

PATH4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


class TestMatching:
    def test_complete_bipartite(self):
        assert matching_number(complete_bipartite(2, 3)) == 2
        assert matching_number(complete_bipartite(4, 4)) == 4

    def test_path(self):
        assert matching_number(PATH4) == 2

    def test_empty(self):
        assert matching_number(Graph(5, [0] * 5)) == 0

    def test_exhaustive_all_graphs(self):
        # includes non-bipartite inputs, which take the branching fallback
        for n in range(1, 6):
            for g in all_graphs(n):
                assert matching_number(g) == bf_matching_number(g)

    @pytest.mark.slow
    def test_exhaustive_order6(self):
        for g in all_graphs(6):
            assert matching_number(g) == bf_matching_number(g)

    def test_large_non_bipartite_rejected(self):
        triangles = [(3 * i + a, 3 * i + b) for i in range(7)
                     for a, b in ((0, 1), (1, 2), (0, 2))]
        g = Graph.from_edges(21, triangles)
        with pytest.raises(ValueError):
            matching_number(g)


class TestCovering:
    def test_complete_bipartite_witness(self):
        size, witness = covering_number(complete_bipartite(2, 3))
        assert size == 2
        assert witness == frozenset({0, 1})

    def test_three_disjoint_edges(self):
        g = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
        size, witness = covering_number(g)
        assert size == 3

    def test_non_bipartite_rejected(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ValueError):
            covering_number(g)

    def test_konig_equality_exhaustive(self):
        # covering number equals matching number on every bipartite graph, n <= 7
        for n in range(2, 8):
            for g in enumerate_bipartite(n):
                size, witness = covering_number(g)
                assert size == matching_number(g)
                assert all(u in witness or v in witness for u, v in g.edges())

    def test_witness_minimal_small(self):
        for n in range(2, 6):
            for g in enumerate_bipartite(n):
                size, _ = covering_number(g)
                assert size == bf_min_vertex_cover(g)


class TestConnectivity:
    def test_complete_bipartite(self):
        g = complete_bipartite(3, 4)
        assert vertex_connectivity(g) == 3
        # independently pinned by the subset-removal oracle on this instance
        assert bf_vertex_connectivity(g) == 3
        assert edge_connectivity(g) == 3
        assert bf_edge_connectivity(g) == 3

    def test_path(self):
        assert vertex_connectivity(PATH4) == 1
        assert edge_connectivity(PATH4) == 1

    def test_join_family_instance(self):
        g = join_family(2, 3, 2)  # order 8
        assert bf_vertex_connectivity(g) == 2
        assert vertex_connectivity(g) == 2

    def test_complete_graphs_capped(self):
        k2 = Graph.from_edges(2, [(0, 1)])
        assert vertex_connectivity(k2) == 1
        k4 = Graph.from_edges(4, list(itertools.combinations(range(4), 2)))
        assert vertex_connectivity(k4) == 3

    def test_single_vertex_and_disconnected(self):
        assert vertex_connectivity(Graph(1, [0])) == 0
        assert edge_connectivity(Graph(1, [0])) == 0
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert vertex_connectivity(g) == 0
        assert edge_connectivity(g) == 0

    def test_exhaustive_all_graphs(self):
        # flows + articulation fast paths vs subset-removal oracles, n <= 5
        for n in range(1, 6):
            for g in all_graphs(n):
                assert vertex_connectivity(g) == bf_vertex_connectivity(g)
                assert edge_connectivity(g) == bf_edge_connectivity(g)

    @pytest.mark.slow
    def test_exhaustive_connected_order6(self):
        # the full (non-bipartite included) order-6 sweep
        for g in all_graphs(6):
            if not g.m:
                continue
            assert vertex_connectivity(g) == bf_vertex_connectivity(g)
            assert edge_connectivity(g) == bf_edge_connectivity(g)

    def test_exhaustive_bipartite_order6(self):
        for g in enumerate_bipartite(6, connected_only=True):
            assert vertex_connectivity(g) == bf_vertex_connectivity(g)
            assert edge_connectivity(g) == bf_edge_connectivity(g)

    def test_whitney_chain(self):
        # vertex connectivity <= edge connectivity <= min degree, connected n <= 6
        for n in range(2, 7):
            for g in enumerate_bipartite(n, connected_only=True):
                k = vertex_connectivity(g)
                kp = edge_connectivity(g)
                assert k <= kp <= g.min_degree()


class TestClassDescriptor:
    def test_matching_range_validated(self):
        ClassDescriptor("matching", 6, 3)
        with pytest.raises(ValueError):
            ClassDescriptor("matching", 6, 4)
        with pytest.raises(ValueError):
            ClassDescriptor("matching", 6, 0)

    def test_connectivity_positive(self):
        ClassDescriptor("vertex-connectivity", 6, 1)
        with pytest.raises(ValueError):
            ClassDescriptor("edge-connectivity", 6, 0)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            ClassDescriptor("girth", 6, 3)

    def test_membership(self):
        assert class_member(complete_bipartite(2, 4), ClassDescriptor("matching", 6, 2))
        assert class_member(join_family(1, 3, 2),
                            ClassDescriptor("vertex-connectivity", 7, 1))
        assert not class_member(PATH4, ClassDescriptor("vertex-connectivity", 4, 2))
