"""Exhaustive enumeration of small bipartite graphs and class-constrained
index maximizer searches.

The enumeration substrate iterates, for each side split ``(a, b)`` with
``a <= b``, every biadjacency bitmask.  Duplicates across splits and
labelings are permitted: the index is isomorphism-invariant, so they cannot
change any maximum, and isomorphism handling is applied only to the tiny set
of near-maximal candidates.  Near ties (within ``NEAR_TIE``) are escalated to
exact moment comparison; candidates still tied after ``TIE_BREAK_K_MAX``
moments are reported as undecided rather than silently merged.

Scans are deterministic by construction: work is split into fixed batches
aligned to absolute mask indices, per-graph spectra do not depend on batch
grouping, and merging is associative, so reports are bit-identical for any
worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Sequence

import numpy as np

from .families import complete_bipartite, join_family
from .graph import Graph, bit_indices, from_biadjacency
from .invariants import (ClassDescriptor, _connected_rows, _edge_conn_rows,
                         _kuhn_matching, _vertex_conn_rows, class_member)
from .spectral import _moment_run

NEAR_TIE = 1e-6
TIE_BREAK_K_MAX = 64
BATCH_SIZE = 1 << 14
N_DEFAULT_MAX = 9
N_HARD_MAX = 10
ISO_LIMIT = 12


def _graph_from_split(n: int, a: int, mask: int) -> Graph:
    b = n - a
    bits = [[(mask >> (i * b + j)) & 1 for j in range(b)] for i in range(a)]
    return from_biadjacency(a, b, bits)


def enumerate_bipartite(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Yield every bipartite graph on ``n`` vertices at least once.

    Iterates all biadjacency masks of every split ``(a, b)``, ``1 <= a <= b``;
    the stream contains duplicate isomorphism classes.
    """
    if not 2 <= n <= N_HARD_MAX:
        raise ValueError(f"order must be in 2..{N_HARD_MAX}")
    for a in range(1, n // 2 + 1):
        b = n - a
        for mask in range(1 << (a * b)):
            g = _graph_from_split(n, a, mask)
            if connected_only and not _connected_rows(g.rows, n):
                continue
            yield g


def classify(g: Graph, descriptor: ClassDescriptor) -> bool:
    """Class membership via the invariants module."""
    return class_member(g, descriptor)


def predicted_maximizer(descriptor: ClassDescriptor) -> Graph | None:
    """The family instance predicted to maximize the index over the class.

    ``matching``: the complete split ``K_{p, n-p}``.  Connectivity kinds: the
    apex join ``join_family(s, floor((n-1)/2), ceil((n-1)/2) - s)``; ``None``
    when the formula's block sizes are negative (class expected empty).
    """
    n, value = descriptor.n, descriptor.value
    if descriptor.kind == "matching":
        return complete_bipartite(value, n - value)
    q = -(-(n - 1) // 2) - value
    if q < 0:
        return None
    return join_family(value, (n - 1) // 2, q)


# ---------------------------------------------------------------------------
# isomorphism by colour refinement + backtracking
# ---------------------------------------------------------------------------

def _refined_colors(g: Graph) -> list[int]:
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[w] for w in bit_indices(g.rows[v]))))
            for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        new_colors = [palette[sig] for sig in signatures]
        if new_colors == colors:
            return colors
        colors = new_colors


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism decision for graphs on at most 12 vertices."""
    if max(g.n, h.n) > ISO_LIMIT:
        raise ValueError(f"isomorphism supported only for n <= {ISO_LIMIT}")
    if g.n != h.n or g.m != h.m:
        return False
    gc = _refined_colors(g)
    hc = _refined_colors(h)
    if sorted(gc) != sorted(hc):
        return False
    candidates = {v: [w for w in range(h.n) if hc[w] == gc[v]] for v in range(g.n)}
    order = sorted(range(g.n), key=lambda v: len(candidates[v]))
    mapping: dict[int, int] = {}
    used = [False] * h.n

    def extend(idx: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        for w in candidates[v]:
            if used[w]:
                continue
            if any(((g.rows[v] >> u) & 1) != ((h.rows[w] >> mapping[u]) & 1)
                   for u in mapping):
                continue
            mapping[v] = w
            used[w] = True
            if extend(idx + 1):
                return True
            del mapping[v]
            used[w] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# scan engine
# ---------------------------------------------------------------------------

class _Partial:
    """Per-class scan state: running max, near-tie halo, runner-up, count."""

    __slots__ = ("count", "best", "halo", "runner")

    def __init__(self):
        self.count = 0
        self.best: float | None = None
        self.halo: list[tuple[float, int, int]] = []   # (ee, a, mask)
        self.runner: float | None = None

    def _fold_runner(self, ee: float) -> None:
        if self.runner is None or ee > self.runner:
            self.runner = ee

    def add(self, ee: float, a: int, mask: int) -> None:
        self.count += 1
        if self.best is None:
            self.best = ee
            self.halo = [(ee, a, mask)]
            return
        if ee > self.best:
            self.best = ee
            kept = []
            for entry in self.halo:
                if entry[0] >= ee - NEAR_TIE:
                    kept.append(entry)
                else:
                    self._fold_runner(entry[0])
            kept.append((ee, a, mask))
            self.halo = kept
        elif ee >= self.best - NEAR_TIE:
            self.halo.append((ee, a, mask))
        else:
            self._fold_runner(ee)

    def merge(self, other: "_Partial") -> None:
        self.count += other.count
        if other.best is None:
            return
        if other.runner is not None:
            self._fold_runner(other.runner)
        if self.best is None:
            self.best = other.best
            self.halo = list(other.halo)
            return
        best = max(self.best, other.best)
        kept = []
        for entry in self.halo + other.halo:
            if entry[0] >= best - NEAR_TIE:
                kept.append(entry)
            else:
                self._fold_runner(entry[0])
        self.best = best
        self.halo = kept


def _scan_batch(task) -> dict[int, _Partial]:
    kind, n, a, lo, hi, values = task
    b = n - a
    ab = a * b
    masks = np.arange(lo, hi, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(ab, dtype=np.int64)) & 1
    biadj = bits.reshape(-1, a, b).astype(np.float64)
    mats = np.zeros((len(masks), n, n))
    mats[:, :a, a:] = biadj
    mats[:, a:, :a] = biadj.transpose(0, 2, 1)
    ee = np.exp(np.linalg.eigvalsh(mats)).sum(axis=1)

    left = np.empty((len(masks), a), dtype=np.int64)
    pow_b = 1 << np.arange(b, dtype=np.int64)
    for i in range(a):
        left[:, i] = (bits[:, i * b:(i + 1) * b] * pow_b).sum(axis=1) << a
    right = np.empty((len(masks), b), dtype=np.int64)
    pow_a = 1 << np.arange(a, dtype=np.int64)
    for j in range(b):
        right[:, j] = (bits[:, j::b] * pow_a).sum(axis=1)

    partials = {value: _Partial() for value in values}
    left_vertices = list(range(a))
    for idx in range(len(masks)):
        rows = [int(x) for x in left[idx]] + [int(x) for x in right[idx]]
        if kind == "matching":
            value = _kuhn_matching(rows, left_vertices)
        else:
            if not _connected_rows(rows, n):
                continue
            if kind == "vertex-connectivity":
                value = _vertex_conn_rows(rows, n)
            else:
                value = _edge_conn_rows(rows, n)
        partial = partials.get(value)
        if partial is not None:
            partial.add(float(ee[idx]), a, lo + idx)
    return partials


@dataclass
class ExtremalReport:
    """Verification record for one class scan."""

    descriptor: ClassDescriptor
    empty: bool
    graphs_scanned: int
    class_size: int
    duration: float
    predicted: Graph | None
    maximizer: Graph | None = None
    max_ee: float | None = None
    runner_up_gap: float | None = None
    unique: bool | None = None
    uniqueness_undecided: bool = False
    matches_prediction: bool | None = None
    near_tie_count: int = 0

    @property
    def verified(self) -> bool:
        """True when the scan confirms the predicted unique maximizer."""
        return bool(self.matches_prediction) and bool(self.unique)


def _finalize(descriptor: ClassDescriptor, partial: _Partial, scanned: int,
              duration: float) -> ExtremalReport:
    predicted = predicted_maximizer(descriptor)
    if partial.count == 0:
        return ExtremalReport(descriptor, True, scanned, 0, duration, predicted)
    entries = sorted(partial.halo, key=lambda e: (e[1], e[2]))
    graphs = [_graph_from_split(descriptor.n, a, mask) for _, a, mask in entries]
    if len(graphs) == 1:
        leaders = [0]
    else:
        keys = [tuple(_moment_run(g, TIE_BREAK_K_MAX)) for g in graphs]
        best_key = max(keys)
        leaders = [i for i, key in enumerate(keys) if key == best_key]
    maximizer = graphs[leaders[0]]
    all_isomorphic = all(is_isomorphic(maximizer, graphs[i]) for i in leaders[1:])
    unique = all_isomorphic
    undecided = not all_isomorphic
    if not class_member(maximizer, descriptor):
        raise AssertionError("scan produced a maximizer outside its class")
    max_ee = entries[leaders[0]][0]
    runner_gap = None if partial.runner is None else max_ee - partial.runner
    matches = None if predicted is None else is_isomorphic(maximizer, predicted)
    return ExtremalReport(
        descriptor, False, scanned, partial.count, duration, predicted,
        maximizer, max_ee, runner_gap, unique, undecided, matches,
        near_tie_count=len(entries))


def _default_values(n: int) -> list[int]:
    return list(range(1, n // 2 + 1))


def find_maximizers(kind: str, n: int, values: Sequence[int] | None = None,
                    workers: int = 1, allow_n10: bool = False) -> list[ExtremalReport]:
    """Scan the order-``n`` stream once and report every requested class.

    One enumeration pass feeds all class values of the same kind, so the
    invariants are computed once per stream graph.
    """
    limit = N_HARD_MAX if allow_n10 else N_DEFAULT_MAX
    if not 2 <= n <= limit:
        raise ValueError(f"order must be in 2..{limit} (n = 10 needs allow_n10)")
    if values is None:
        values = _default_values(n)
    values = list(values)
    descriptors = [ClassDescriptor(kind, n, v) for v in values]

    tasks = []
    scanned = 0
    for a in range(1, n // 2 + 1):
        total = 1 << (a * (n - a))
        scanned += total
        for lo in range(0, total, BATCH_SIZE):
            tasks.append((kind, n, a, lo, min(lo + BATCH_SIZE, total), tuple(values)))

    started = time.perf_counter()
    merged = {value: _Partial() for value in values}
    if workers <= 1:
        results = map(_scan_batch, tasks)
        for result in results:
            for value, part in result.items():
                merged[value].merge(part)
    else:
        with Pool(processes=workers) as pool:
            for result in pool.imap(_scan_batch, tasks):
                for value, part in result.items():
                    merged[value].merge(part)
    duration = time.perf_counter() - started

    return [_finalize(d, merged[d.value], scanned, duration) for d in descriptors]


def find_maximizer(descriptor: ClassDescriptor, workers: int = 1,
                   allow_n10: bool = False) -> ExtremalReport:
    """Exhaustive maximizer search for a single class."""
    reports = find_maximizers(descriptor.kind, descriptor.n, [descriptor.value],
                              workers=workers, allow_n10=allow_n10)
    return reports[0]
