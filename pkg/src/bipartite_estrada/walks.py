"""Anchored walk counting, twin vertices, identification unions, and the
moment-dominance checker.

Everything here is exact: counts are arbitrary-precision integers and no
floating point is used, because the claims being checked are integer
identities and inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, bit_indices

WALK_BUDGET = 64


@dataclass(frozen=True, eq=False)
class WalkCountTable:
    """Tables ``counts[k][u, v]`` = number of u-v walks of length k <= k_max."""

    n: int
    k_max: int
    counts: tuple  # tuple of (n, n) object ndarrays of Python ints

    def count(self, k: int, u: int, v: int) -> int:
        return int(self.counts[k][u, v])

    def closed_total(self, k: int) -> int:
        """All closed walks of length k (the k-th spectral moment)."""
        return int(np.trace(self.counts[k]))


def walk_counts(g: Graph, k_max: int) -> WalkCountTable:
    """Exact walk-count tables for all lengths up to ``k_max``."""
    if not 0 <= k_max <= WALK_BUDGET:
        raise ValueError(f"walk length cutoff must be in 0..{WALK_BUDGET}")
    adjacency = np.array(g.adjacency_int_rows(), dtype=object)
    tables = [np.eye(g.n, dtype=int).astype(object)]
    for _ in range(k_max):
        tables.append(tables[-1] @ adjacency)
    return WalkCountTable(g.n, k_max, tuple(tables))


@dataclass(frozen=True)
class TwinCheck:
    ok: bool
    checked_up_to: int
    first_violation: int | None


def twin_check(g: Graph, u: int, v: int, k_max: int = 20) -> TwinCheck:
    """Verify the four-way walk-count equality for a twin pair.

    Twins are distinct vertices with identical neighbourhoods (which forces
    them to be non-adjacent in a loopless graph).  For every k the counts
    ``M_k(u,u) = M_k(v,v) = M_k(u,v) = M_k(v,u)`` must agree; the first
    violating k is reported (expected: none).
    """
    if u == v:
        raise ValueError("twin check needs two distinct vertices")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent, hence not twins")
    if g.rows[u] != g.rows[v]:
        witness = next(bit_indices(g.rows[u] ^ g.rows[v]))
        raise ValueError(
            f"vertices {u} and {v} are not twins: vertex {witness} is adjacent "
            f"to exactly one of them")
    table = walk_counts(g, k_max)
    # length 0 is excluded: the empty walk exists only from a vertex to itself
    for k in range(1, k_max + 1):
        uu = table.count(k, u, u)
        if not (uu == table.count(k, v, v) == table.count(k, u, v)
                == table.count(k, v, u)):
            return TwinCheck(False, k_max, k)
    return TwinCheck(True, k_max, None)


def _is_independent(g: Graph, vertices: tuple[int, ...]) -> bool:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return all(g.rows[v] & mask == 0 for v in vertices)


@dataclass(frozen=True)
class IdentificationScheme:
    """Input to the vertex-identification union.

    ``anchors1``/``anchors2`` are equal-length independent sets; vertex
    ``anchors2[i]`` of ``g2`` is merged onto ``anchors1[i]`` of ``g1``.
    """

    g1: Graph
    anchors1: tuple[int, ...]
    g2: Graph
    anchors2: tuple[int, ...]

    def __post_init__(self):
        s = len(self.anchors1)
        if s < 1 or len(self.anchors2) != s:
            raise ValueError("anchor sets must have equal positive size")
        if len(set(self.anchors1)) != s or len(set(self.anchors2)) != s:
            raise ValueError("anchor vertices must be distinct")
        if not all(0 <= v < self.g1.n for v in self.anchors1):
            raise ValueError("anchors1 out of range")
        if not all(0 <= v < self.g2.n for v in self.anchors2):
            raise ValueError("anchors2 out of range")
        if not _is_independent(self.g1, self.anchors1):
            raise ValueError("anchors1 is not an independent set")
        if not _is_independent(self.g2, self.anchors2):
            raise ValueError("anchors2 is not an independent set")

    @property
    def s(self) -> int:
        return len(self.anchors1)


def identify_union(scheme: IdentificationScheme) -> Graph:
    """Glue ``g2`` onto ``g1`` by merging the anchor vertices pairwise.

    ``g1`` keeps its labels; the non-anchor vertices of ``g2`` are appended
    in their original order.  Independence of both anchor sets guarantees no
    multi-edges arise.
    """
    g1, g2 = scheme.g1, scheme.g2
    mapping: dict[int, int] = {}
    for i, v in enumerate(scheme.anchors2):
        mapping[v] = scheme.anchors1[i]
    fresh = g1.n
    for v in range(g2.n):
        if v not in mapping:
            mapping[v] = fresh
            fresh += 1
    edges = g1.edges()
    edges += [(mapping[u], mapping[v]) for u, v in g2.edges()]
    return Graph.from_edges(fresh, edges)


@dataclass(frozen=True)
class DominanceReport:
    """Outcome of checking the identification-union comparison on an instance.

    Premises: the whole-graph moments of each part are dominated, and the
    anchored walk counts between every anchor pair are dominated.  The
    conclusion checked is moment dominance of the identified graphs.  This is
    a falsification harness on instances, not a proof.
    """

    k_max: int
    part_moments_ok: bool
    first_part_violation: tuple[int, int] | None     # (part, k)
    anchored_ok: bool
    first_anchored_violation: tuple[int, int, int] | None  # (i, j, k)
    strict_premise: bool
    conclusion_ok: bool
    first_conclusion_violation: int | None
    merged: Graph
    merged_other: Graph

    @property
    def premises_hold(self) -> bool:
        return self.part_moments_ok and self.anchored_ok


def dominance_check(scheme: IdentificationScheme,
                    other: IdentificationScheme,
                    k_max: int = 20) -> DominanceReport:
    """Check, with exact integers, the premise and conclusion inequalities.

    Requires both schemes to use the same number of anchors.
    """
    if scheme.s != other.s:
        raise ValueError("schemes must identify the same number of anchors")
    s = scheme.s

    tables = {
        "g1": walk_counts(scheme.g1, k_max),
        "g2": walk_counts(scheme.g2, k_max),
        "h1": walk_counts(other.g1, k_max),
        "h2": walk_counts(other.g2, k_max),
    }

    part_ok = True
    first_part = None
    strict = False
    for part, (lo, hi) in enumerate((("g1", "h1"), ("g2", "h2")), start=1):
        for k in range(1, k_max + 1):
            a = tables[lo].closed_total(k)
            b = tables[hi].closed_total(k)
            if a > b:
                part_ok = False
                if first_part is None:
                    first_part = (part, k)
                break
            if a < b:
                strict = True

    anchored_ok = True
    first_anchored = None
    for i in range(s):
        for j in range(s):
            for k in range(1, k_max + 1):
                pairs = (
                    (tables["g1"].count(k, scheme.anchors1[i], scheme.anchors1[j]),
                     tables["h1"].count(k, other.anchors1[i], other.anchors1[j])),
                    (tables["g2"].count(k, scheme.anchors2[i], scheme.anchors2[j]),
                     tables["h2"].count(k, other.anchors2[i], other.anchors2[j])),
                )
                violated = False
                for a, b in pairs:
                    if a > b:
                        anchored_ok = False
                        if first_anchored is None:
                            first_anchored = (i, j, k)
                        violated = True
                    elif a < b:
                        strict = True
                if violated:
                    break

    merged = identify_union(scheme)
    merged_other = identify_union(other)
    conclusion_ok = True
    first_conclusion = None
    merged_tab = walk_counts(merged, k_max)
    other_tab = walk_counts(merged_other, k_max)
    for k in range(1, k_max + 1):
        if merged_tab.closed_total(k) > other_tab.closed_total(k):
            conclusion_ok = False
            first_conclusion = k
            break

    return DominanceReport(
        k_max=k_max,
        part_moments_ok=part_ok,
        first_part_violation=first_part,
        anchored_ok=anchored_ok,
        first_anchored_violation=first_anchored,
        strict_premise=strict,
        conclusion_ok=conclusion_ok,
        first_conclusion_violation=first_conclusion,
        merged=merged,
        merged_other=merged_other,
    )
