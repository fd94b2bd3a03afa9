"""Matching number, covering number, and vertex/edge connectivity.

The public functions take :class:`~bipartite_estrada.graph.Graph` values; the
underscore-prefixed helpers work on raw bitmask rows so that the exhaustive
search can call them without constructing Graph objects per candidate.  All
arithmetic is integer and all flow networks use unit capacities.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .graph import Graph, bit_indices, find_bipartition

BRUTE_FORCE_MATCHING_LIMIT = 20  # non-bipartite inputs above this are rejected

CLASS_KINDS = ("matching", "vertex-connectivity", "edge-connectivity")


@dataclass(frozen=True)
class ClassDescriptor:
    """A constrained family of bipartite graphs: fixed order and invariant.

    ``matching`` classes fix the matching number (disconnected members
    allowed); the connectivity kinds fix vertex or edge connectivity, which
    forces connectedness for ``value >= 1``.
    """

    kind: str
    n: int
    value: int

    def __post_init__(self):
        if self.kind not in CLASS_KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("order must be positive")
        if self.kind == "matching":
            if not 1 <= self.value <= self.n // 2:
                raise ValueError(f"matching number must be in 1..{self.n // 2}")
        elif self.value < 1:
            raise ValueError("connectivity classes require value >= 1")


# ---------------------------------------------------------------------------
# raw bitmask helpers
# ---------------------------------------------------------------------------

def _connected_rows(rows, n: int) -> bool:
    if n == 1:
        return True
    full = (1 << n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _connected_within(rows, alive: int) -> bool:
    """Connectivity of the subgraph induced on the vertex set ``alive``."""
    if alive == 0:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        frontier = nxt & alive & ~seen
        seen |= frontier
    return seen == alive


def _has_cut_vertex(rows, n: int) -> bool:
    full = (1 << n) - 1
    for v in range(n):
        if not _connected_within(rows, full ^ (1 << v)):
            return True
    return False


def _has_bridge(rows, n: int) -> bool:
    # DFS low-link over a connected graph
    disc = [-1] * n
    low = [0] * n
    stack = [(0, -1, iter(tuple(bit_indices(rows[0]))))]
    disc[0] = low[0] = 0
    timer = 1
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, v, iter(tuple(bit_indices(rows[w])))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if not advanced:
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    return True
    return False


def _kuhn_matching(rows, left) -> int:
    """Maximum matching of a bipartite graph given one side's vertices."""
    match_to: dict[int, int] = {}

    def try_augment(u: int, seen: list[int]) -> bool:
        cand = rows[u] & ~seen[0]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            seen[0] |= low
            if v not in match_to or try_augment(match_to[v], seen):
                match_to[v] = u
                return True
        return False

    size = 0
    for u in left:
        if try_augment(u, [0]):
            size += 1
    return size


def _brute_matching(rows, alive: int, memo: dict[int, int]) -> int:
    """Branching maximum matching for small general graphs."""
    while alive and not (rows[(alive & -alive).bit_length() - 1] & alive):
        alive ^= alive & -alive  # drop isolated-in-remainder vertices
    if alive == 0:
        return 0
    cached = memo.get(alive)
    if cached is not None:
        return cached
    low = alive & -alive
    v = low.bit_length() - 1
    rest = alive ^ low
    best = _brute_matching(rows, rest, memo)  # v left unmatched
    cand = rows[v] & rest
    while cand:
        lowu = cand & -cand
        u = lowu.bit_length() - 1
        cand ^= lowu
        best = max(best, 1 + _brute_matching(rows, rest ^ lowu, memo))
    memo[alive] = best
    return best


def _vertex_flow(rows, n: int, s: int, t: int, cap: int) -> int:
    """Internally vertex-disjoint s-t path count, stopping early at ``cap``.

    Unit vertex capacities via node splitting: node ``v`` is the in-copy,
    node ``v + n`` the out-copy.  Each undirected edge ``uv`` contributes the
    arcs ``u_out -> v_in`` and ``v_out -> u_in`` with unit capacity (valid for
    non-adjacent ``s, t``: vertex-disjoint paths cannot share an edge).
    """
    used = [False] * n          # in->out arc of a vertex saturated
    edge_flow: set[tuple[int, int]] = set()  # (u, v): unit flow on u_out -> v_in
    src, dst = s + n, t
    flow = 0
    while flow < cap:
        parent = {src: -1}
        queue = deque([src])
        while queue and dst not in parent:
            x = queue.popleft()
            if x >= n:
                u = x - n
                cand = rows[u]
                while cand:
                    low = cand & -cand
                    v = low.bit_length() - 1
                    cand ^= low
                    if v not in parent and (u, v) not in edge_flow:
                        parent[v] = x
                        queue.append(v)
                if used[u] and u not in parent:   # residual of in->out
                    parent[u] = x
                    queue.append(u)
            else:
                v = x
                if not used[v] and v + n not in parent:
                    parent[v + n] = x
                    queue.append(v + n)
                cand = rows[v]
                while cand:
                    low = cand & -cand
                    u = low.bit_length() - 1
                    cand ^= low
                    # residual of the edge arc u_out -> v_in
                    if (u, v) in edge_flow and u + n not in parent:
                        parent[u + n] = x
                        queue.append(u + n)
        if dst not in parent:
            break
        node = dst
        while parent[node] != -1:
            prev = parent[node]
            if prev >= n and node < n:
                if prev - n == node:
                    used[node] = False            # took residual out->in
                else:
                    edge_flow.add((prev - n, node))
            else:  # prev < n, node >= n
                if node - n == prev:
                    used[prev] = True             # forward in->out
                else:
                    edge_flow.discard((node - n, prev))
            node = prev
        flow += 1
    return flow


def _vertex_conn_rows(rows, n: int) -> int:
    if n == 1 or not _connected_rows(rows, n):
        return 0
    full = (1 << n) - 1
    if all(rows[v] == full ^ (1 << v) for v in range(n)):
        return n - 1  # complete graph: no vertex cut, capped per definition
    if _has_cut_vertex(rows, n):
        return 1
    degrees = [rows[v].bit_count() for v in range(n)]
    best = min(degrees)
    v0 = degrees.index(best)
    for u in range(n):
        if u != v0 and not (rows[v0] >> u) & 1:
            best = min(best, _vertex_flow(rows, n, v0, u, best))
    nb = tuple(bit_indices(rows[v0]))
    for i in range(len(nb)):
        for j in range(i + 1, len(nb)):
            x, y = nb[i], nb[j]
            if not (rows[x] >> y) & 1:
                best = min(best, _vertex_flow(rows, n, x, y, best))
    return best


def _edge_flow(rows, n: int, s: int, t: int, cap: int) -> int:
    """Edge-disjoint s-t path count with early exit at ``cap``."""
    residual = [[(rows[u] >> v) & 1 for v in range(n)] for u in range(n)]
    flow = 0
    while flow < cap:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            row = residual[u]
            for v in range(n):
                if row[v] and parent[v] == -1:
                    parent[v] = u
                    if v == t:
                        break
                    queue.append(v)
        if parent[t] == -1:
            break
        v = t
        while v != s:
            u = parent[v]
            residual[u][v] -= 1
            residual[v][u] += 1
            v = u
        flow += 1
    return flow


def _edge_conn_rows(rows, n: int) -> int:
    if n == 1:
        return 0
    if not _connected_rows(rows, n):
        return 0
    if _has_bridge(rows, n):
        return 1
    degrees = [rows[v].bit_count() for v in range(n)]
    best = min(degrees)
    v0 = degrees.index(best)
    for u in range(n):
        if u != v0:
            best = min(best, _edge_flow(rows, n, v0, u, best))
    return best


# ---------------------------------------------------------------------------
# public API
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    return _connected_rows(g.rows, g.n)


def matching_number(g: Graph) -> int:
    """Size of a maximum matching.

    Bipartite graphs use augmenting-path search on the canonical bipartition;
    other graphs fall back to exact branching for n <= 20 and are rejected
    beyond that.
    """
    bip = find_bipartition(g)
    if bip is not None:
        return _kuhn_matching(g.rows, sorted(bip.side_x))
    if g.n > BRUTE_FORCE_MATCHING_LIMIT:
        raise ValueError(
            f"non-bipartite matching supported only for n <= {BRUTE_FORCE_MATCHING_LIMIT}")
    return _brute_matching(g.rows, (1 << g.n) - 1, {})


def covering_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Minimum vertex cover size of a bipartite graph, with one witness cover.

    The witness is derived from a maximum matching by alternating
    reachability, so its size always equals the matching number.
    """
    bip = find_bipartition(g)
    if bip is None:
        raise ValueError("covering_number requires a bipartite graph")
    left = sorted(bip.side_x)
    match_to: dict[int, int] = {}

    def try_augment(u: int, seen: list[int]) -> bool:
        cand = g.rows[u] & ~seen[0]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            seen[0] |= low
            if v not in match_to or try_augment(match_to[v], seen):
                match_to[v] = u
                return True
        return False

    size = 0
    for u in left:
        if try_augment(u, [0]):
            size += 1

    matched_left = set(match_to.values())
    # alternating reachability from unmatched left vertices
    reachable_left = {u for u in left if u not in matched_left}
    reachable_right: set[int] = set()
    queue = deque(reachable_left)
    while queue:
        u = queue.popleft()
        for v in bit_indices(g.rows[u]):
            if v in reachable_right:
                continue
            reachable_right.add(v)
            partner = match_to.get(v)
            if partner is not None and partner not in reachable_left:
                reachable_left.add(partner)
                queue.append(partner)
    cover = frozenset(u for u in left if u not in reachable_left) | frozenset(reachable_right)
    if len(cover) != size:
        raise AssertionError("cover witness does not match the matching size")
    return size, cover


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity; 0 for disconnected graphs and the one-vertex graph,
    capped at n - 1 (attained only by complete graphs)."""
    return _vertex_conn_rows(g.rows, g.n)


def edge_connectivity(g: Graph) -> int:
    """Edge connectivity via minimum s-t cuts from a fixed min-degree vertex."""
    return _edge_conn_rows(g.rows, g.n)


def class_member(g: Graph, descriptor: ClassDescriptor) -> bool:
    """Membership test for the constrained graph classes."""
    if g.n != descriptor.n:
        return False
    if descriptor.kind == "matching":
        return matching_number(g) == descriptor.value
    if descriptor.kind == "vertex-connectivity":
        return vertex_connectivity(g) == descriptor.value
    return edge_connectivity(g) == descriptor.value
