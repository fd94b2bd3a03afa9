"""Independent brute-force oracles used to pin expected values in tests.

These deliberately avoid the library's production algorithms: connectivity is
decided by subset removal, matchings by recursion over raw edge subsets, walk
counts by explicit DFS enumeration, and spectra by numpy's LAPACK wrapper
(the production eigensolver is a hand-rolled Jacobi sweep).
"""

from __future__ import annotations

import itertools

import numpy as np

from bipartite_estrada.graph import Graph, bit_indices


def ee_lapack(g: Graph) -> float:
    """Index via numpy's eigensolver; independent of the Jacobi route."""
    return float(np.exp(np.linalg.eigvalsh(g.adjacency_matrix())).sum())


def spectrum_lapack(g: Graph) -> np.ndarray:
    return np.linalg.eigvalsh(g.adjacency_matrix())[::-1]


def connected_after_removal(g: Graph, removed: set[int]) -> bool:
    alive = [v for v in range(g.n) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        v = stack.pop()
        for w in bit_indices(g.rows[v]):
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def bf_vertex_connectivity(g: Graph) -> int:
    if not connected_after_removal(g, set()):
        return 0
    for size in range(g.n - 1):
        for subset in itertools.combinations(range(g.n), size):
            if not connected_after_removal(g, set(subset)):
                return size
    return g.n - 1


def _rows_connected(rows, n: int) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in bit_indices(rows[v]):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def bf_edge_connectivity(g: Graph) -> int:
    edges = g.edges()
    if not connected_after_removal(g, set()):
        return 0
    for size in range(len(edges) + 1):
        for subset in itertools.combinations(edges, size):
            rows = list(g.rows)
            for u, v in subset:
                rows[u] &= ~(1 << v)
                rows[v] &= ~(1 << u)
            if not _rows_connected(rows, g.n):
                return size
    return len(edges)


def bf_matching_number(g: Graph) -> int:
    edges = g.edges()

    def rec(idx: int, used: int) -> int:
        if idx == len(edges):
            return 0
        best = rec(idx + 1, used)
        u, v = edges[idx]
        if not (used >> u) & 1 and not (used >> v) & 1:
            best = max(best, 1 + rec(idx + 1, used | (1 << u) | (1 << v)))
        return best

    return rec(0, 0)


def bf_min_vertex_cover(g: Graph) -> int:
    edges = g.edges()
    for size in range(g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            chosen = set(subset)
            if all(u in chosen or v in chosen for u, v in edges):
                return size
    return g.n


def bf_is_bipartite(g: Graph) -> bool:
    """Try all 2**n side assignments."""
    for mask in range(1 << g.n):
        if all(((mask >> u) & 1) != ((mask >> v) & 1) for u, v in g.edges()):
            return True
    return g.m == 0


def bf_walk_count(g: Graph, u: int, v: int, k: int) -> int:
    """Number of u-v walks of length k by explicit DFS enumeration."""
    if k == 0:
        return int(u == v)
    total = 0
    stack = [(u, 0)]
    while stack:
        vertex, steps = stack.pop()
        if steps == k - 1:
            total += (g.rows[vertex] >> v) & 1
            continue
        for w in bit_indices(g.rows[vertex]):
            stack.append((w, steps + 1))
    return total


def bf_closed_walks(g: Graph, k: int) -> int:
    return sum(bf_walk_count(g, v, v, k) for v in range(g.n))


def all_graphs(n: int):
    """Every labeled simple graph on n vertices (use only for n <= 6)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[t] for t in range(len(pairs))
                                   if (mask >> t) & 1])


def fraction_rank(mat) -> int:
    """Rank over exact rationals; cross-check for the integer elimination."""
    from fractions import Fraction
    m = [[Fraction(x) for x in row] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def random_graph(rng, n: int, p: float = 0.4) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite(rng, n_max: int, p: float = 0.5) -> Graph:
    n = rng.randint(2, n_max)
    a = rng.randint(1, n - 1)
    b = n - a
    bits = [[1 if rng.random() < p else 0 for _ in range(b)] for _ in range(a)]
    from bipartite_estrada.graph import from_biadjacency
    return from_biadjacency(a, b, bits)
