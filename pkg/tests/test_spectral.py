"""Eigensolver, exact nullity, exact moments, and the three index routes."""

import math
import random

import numpy as np
import pytest

from bipartite_estrada.families import complete_bipartite
from bipartite_estrada.graph import Graph
from bipartite_estrada.spectral import (JacobiConvergenceError, _jacobi,
                                        _integer_rank, compare_ee_exact,
                                        eigenvalues, estrada, moment_series,
                                        nullity_exact, nullity_hint,
                                        spectral_moment_exact)
from oracles import (bf_closed_walks, ee_lapack, fraction_rank,
                     random_bipartite, random_graph, spectrum_lapack)

PATH4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
GOLDEN = (1 + math.sqrt(5)) / 2


class TestEigenvalues:
    def test_single_edge(self):
        res = eigenvalues(Graph.from_edges(2, [(0, 1)]))
        assert res.eigenvalues == pytest.approx((1.0, -1.0), abs=1e-12)
        assert res.nullity == 0

    def test_complete_bipartite(self):
        res = eigenvalues(complete_bipartite(2, 3))
        root6 = math.sqrt(6)
        assert res.eigenvalues[0] == pytest.approx(root6, abs=1e-10)
        assert res.eigenvalues[-1] == pytest.approx(-root6, abs=1e-10)
        assert all(abs(x) < 1e-10 for x in res.eigenvalues[1:4])
        assert res.nullity == 3

    def test_path4_golden_ratio(self):
        # roots of x**4 - 3x**2 + 1: +/-phi and +/-(phi - 1)
        res = eigenvalues(PATH4)
        expected = (GOLDEN, GOLDEN - 1, 1 - GOLDEN, -GOLDEN)
        assert res.eigenvalues == pytest.approx(expected, abs=1e-10)

    def test_trace_near_zero(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_graph(rng, rng.randint(2, 20), 0.4)
            res = eigenvalues(g)
            assert abs(sum(res.eigenvalues)) < g.n * 1e-10

    def test_matches_lapack(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_graph(rng, rng.randint(2, 25), 0.4)
            mine = np.array(eigenvalues(g).eigenvalues)
            ref = spectrum_lapack(g)
            assert np.max(np.abs(mine - ref)) < 1e-9

    def test_bipartite_pairing(self):
        rng = random.Random(9)
        for _ in range(100):
            g = random_bipartite(rng, 12)
            vals = eigenvalues(g).eigenvalues
            for i in range(g.n):
                assert abs(vals[i] + vals[g.n - 1 - i]) < 1e-8

    def test_sweep_budget_error(self):
        g = complete_bipartite(3, 3)
        with pytest.raises(JacobiConvergenceError, match="2 sweeps"):
            _jacobi(g.adjacency_matrix(), 1e-15, 2)

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            eigenvalues(PATH4, tol=0.0)


class TestNullity:
    def test_complete_bipartite(self):
        assert nullity_exact(complete_bipartite(3, 3)) == 4
        assert nullity_exact(complete_bipartite(1, 1)) == 0

    def test_path4(self):
        # adjacency determinant is 1, so full rank
        assert nullity_exact(PATH4) == 0

    def test_empty(self):
        assert nullity_exact(Graph(6, [0] * 6)) == 6

    def test_integer_rank_vs_fraction_rank(self):
        rng = random.Random(17)
        for _ in range(100):
            n = rng.randint(1, 8)
            mat = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
            assert _integer_rank(mat) == fraction_rank(mat)

    def test_float_hint_agrees_at_desk_scale(self):
        rng = random.Random(23)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 12), 0.4)
            res = eigenvalues(g)
            assert nullity_hint(res) == res.nullity


class TestMoments:
    def test_second_moment_is_twice_edges(self):
        rng = random.Random(29)
        for _ in range(50):
            g = random_graph(rng, rng.randint(1, 10), 0.5)
            assert spectral_moment_exact(g, 2) == 2 * g.m

    def test_complete_bipartite_fourth(self):
        assert spectral_moment_exact(complete_bipartite(2, 3), 4) == 72

    def test_path4_fourth(self):
        assert bf_closed_walks(PATH4, 4) == 14
        assert spectral_moment_exact(PATH4, 4) == 14

    def test_against_walk_enumeration(self):
        rng = random.Random(31)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 6), 0.5)
            for k in range(6):
                assert spectral_moment_exact(g, k) == bf_closed_walks(g, k)

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            spectral_moment_exact(PATH4, 65)
        with pytest.raises(ValueError):
            moment_series(PATH4, -1)

    def test_series_shape(self):
        series = moment_series(complete_bipartite(2, 2), 6)
        assert series.moments[0] == 4 and series.moments[1] == 0
        assert series.moments[2] == 2 * 4
        assert all(series.moments[k] == 0 for k in (1, 3, 5))

    def test_agrees_with_float_powers(self):
        rng = random.Random(37)
        for _ in range(30):
            g = random_graph(rng, rng.randint(2, 10), 0.4)
            vals = spectrum_lapack(g)
            for k in range(1, 9):
                exact = spectral_moment_exact(g, k)
                approx = float((vals ** k).sum())
                assert abs(exact - approx) <= k * g.n * 1e-6 * max(1.0, exact)


class TestEstrada:
    def test_single_edge_cosh_value(self):
        expected = 2 * math.cosh(1)
        for method in ("eigen", "cosh", "moment-series"):
            got = estrada(Graph.from_edges(2, [(0, 1)]), method).value
            assert got == pytest.approx(expected, abs=1e-10)

    def test_square_value(self):
        expected = 2 + 2 * math.cosh(2)
        assert estrada(complete_bipartite(2, 2)).value == pytest.approx(expected, abs=1e-10)

    def test_empty_graph(self):
        g = Graph(7, [0] * 7)
        assert estrada(g).value == pytest.approx(7.0, abs=1e-12)
        series = estrada(g, "moment-series")
        assert series.value == 7.0 and series.error_bound == 0.0

    def test_cosh_requires_bipartite(self):
        triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ValueError):
            estrada(triangle, "cosh")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            estrada(PATH4, "expm")

    def test_triangle_eigen(self):
        triangle = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        expected = math.exp(2) + 2 * math.exp(-1)
        assert estrada(triangle).value == pytest.approx(expected, abs=1e-12)

    def test_series_bound_is_honest(self):
        rng = random.Random(41)
        for _ in range(40):
            g = random_bipartite(rng, 8)
            series = estrada(g, "moment-series")
            assert series.error_bound < 1e-10
            assert abs(series.value - ee_lapack(g)) <= series.error_bound + 1e-10

    def test_methods_agree_random_bipartite(self):
        rng = random.Random(43)
        for _ in range(500):
            g = random_bipartite(rng, 8)
            eigen = estrada(g, "eigen").value
            cosh = estrada(g, "cosh").value
            series = estrada(g, "moment-series").value
            assert abs(eigen - cosh) < 1e-10
            assert abs(eigen - series) < 1e-8


class TestCompareExact:
    def test_equal_graphs(self):
        cmp = compare_ee_exact(PATH4, PATH4, 16)
        assert cmp.ordering == 0 and cmp.equal_up_to_k_max

    def test_star_vs_square(self):
        star = complete_bipartite(1, 3)
        square = complete_bipartite(2, 2)
        cmp = compare_ee_exact(star, square, 16)
        assert cmp.ordering == -1
        assert cmp.first_difference == 2  # 6 vs 8 closed 2-walks

    def test_cospectral_mates_detected(self):
        # the classic pair: a 4-star and a 4-cycle plus isolated vertex
        star = complete_bipartite(1, 4)
        square_plus_point = complete_bipartite(2, 2).disjoint_union(Graph(1, [0]))
        expected = [5, 0, 8, 0, 32, 0, 128, 0, 512]
        for k, want in enumerate(expected):
            assert spectral_moment_exact(star, k) == want
            assert spectral_moment_exact(square_plus_point, k) == want
        cmp = compare_ee_exact(star, square_plus_point, 8)
        assert cmp.equal_up_to_k_max and cmp.first_difference is None

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            compare_ee_exact(PATH4, complete_bipartite(2, 3))


class TestEdgeMonotonicity:
    def test_index_strictly_grows_small(self):
        # adding any bipartiteness-preserving non-edge strictly increases the index
        from bipartite_estrada.graph import find_bipartition
        from bipartite_estrada.search import enumerate_bipartite
        for n in range(2, 6):
            for g in enumerate_bipartite(n):
                base = estrada(g).value
                for u, v in g.non_edges():
                    bigger = g.with_edge(u, v)
                    if find_bipartition(bigger) is None:
                        continue
                    assert estrada(bigger).value > base
