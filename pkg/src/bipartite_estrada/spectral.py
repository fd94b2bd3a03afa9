"""Eigenvalues, exact spectral moments, and the Estrada index three ways.

The index of a graph is the sum of the exponentials of its adjacency
eigenvalues.  Three independent evaluation routes are provided:

* ``eigen``: a cyclic Jacobi eigensolver (bit-reproducible, no external
  linear-algebra dependency beyond numpy array arithmetic);
* ``cosh``: the bipartite identity ``n0 + 2 * sum cosh(positive eigenvalues)``
  with the nullity ``n0`` taken from exact integer rank, never from floats;
* ``moment-series``: the truncated series ``sum M_k / k!`` over exact integer
  closed-walk counts, with a rigorous tail bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, find_bipartition

JACOBI_TOLERANCE = 1e-12
JACOBI_SWEEP_BUDGET = 100
NULLITY_HINT_THRESHOLD = 1e-6   # float hint only; exact rank is authoritative
MOMENT_BUDGET = 64
SERIES_TARGET = 1e-10


class JacobiConvergenceError(RuntimeError):
    """The rotation sweep budget was exhausted before reaching tolerance."""


@dataclass(frozen=True)
class SpectrumResult:
    """Descending eigenvalue list with exact nullity and solver tolerance."""

    eigenvalues: tuple[float, ...]
    nullity: int
    tolerance: float


@dataclass(frozen=True)
class MomentSeries:
    """Exact closed-walk counts ``M_0 .. M_k_max`` (arbitrary precision)."""

    moments: tuple[int, ...]
    k_max: int


@dataclass(frozen=True)
class EstradaValue:
    value: float
    method: str
    error_bound: float | None = None


@dataclass(frozen=True)
class MomentComparison:
    """Lexicographic comparison of two exact moment sequences.

    ``ordering`` is -1/0/+1 for first < second / all compared moments equal /
    first > second.  An ordering of 0 only certifies equality up to ``k_max``;
    the graphs may be cospectral.
    """

    ordering: int
    first_difference: int | None
    k_max: int

    @property
    def equal_up_to_k_max(self) -> bool:
        return self.ordering == 0


def _jacobi(matrix: np.ndarray, tol: float, max_sweeps: int) -> np.ndarray:
    """Cyclic threshold Jacobi; returns eigenvalues sorted descending."""
    a = np.array(matrix, dtype=np.float64, copy=True)
    n = a.shape[0]
    if n == 1:
        return a.diagonal().copy()
    for _ in range(max_sweeps):
        off = abs(a - np.diag(np.diag(a))).max()
        if off <= tol:
            return np.sort(np.diag(a))[::-1].copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0.0 else -1.0
                t = sign / (abs(theta) + math.sqrt(1.0 + theta * theta))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    if abs(a - np.diag(np.diag(a))).max() <= tol:
        return np.sort(np.diag(a))[::-1].copy()
    raise JacobiConvergenceError(
        f"off-diagonal norm above {tol} after {max_sweeps} sweeps")


def eigenvalues(g: Graph, tol: float = JACOBI_TOLERANCE) -> SpectrumResult:
    """Adjacency spectrum sorted descending, with exact nullity.

    The float nullity hint (eigenvalues below ``NULLITY_HINT_THRESHOLD`` in
    magnitude) is cross-checked against the exact integer rank; the exact
    value wins and is the one reported.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    spectrum = _jacobi(g.adjacency_matrix(), tol, JACOBI_SWEEP_BUDGET)
    return SpectrumResult(tuple(float(x) for x in spectrum), nullity_exact(g), tol)


def nullity_hint(spectrum: SpectrumResult) -> int:
    """Float-threshold zero count; a hint only, never authoritative."""
    return sum(1 for x in spectrum.eigenvalues if abs(x) < NULLITY_HINT_THRESHOLD)


def _integer_rank(mat: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nrows):
            factor = m[r][col]
            row_r = m[r]
            row_p = m[rank]
            for c in range(col, ncols):
                row_r[c] = (row_r[c] * pivot - factor * row_p[c]) // prev_pivot
        prev_pivot = pivot
        rank += 1
    return rank


def nullity_exact(g: Graph) -> int:
    """Multiplicity of eigenvalue zero: ``n - rank``, rank computed exactly."""
    return g.n - _integer_rank(g.adjacency_int_rows())


def _moment_run(g: Graph, k_max: int) -> list[int]:
    """Exact closed-walk counts ``M_0 .. M_k_max`` via integer matrix powers."""
    n = g.n
    adjacency = np.array(g.adjacency_int_rows(), dtype=object)
    moments = [n]
    power = np.eye(n, dtype=int).astype(object)
    for _ in range(k_max):
        power = power @ adjacency
        moments.append(int(np.trace(power)))
    return moments


def spectral_moment_exact(g: Graph, k: int) -> int:
    """Number of closed walks of length ``k`` (trace of the k-th power)."""
    if not 0 <= k <= MOMENT_BUDGET:
        raise ValueError(f"moment order must be in 0..{MOMENT_BUDGET}")
    return _moment_run(g, k)[k]


def moment_series(g: Graph, k_max: int) -> MomentSeries:
    if not 0 <= k_max <= MOMENT_BUDGET:
        raise ValueError(f"moment cutoff must be in 0..{MOMENT_BUDGET}")
    return MomentSeries(tuple(_moment_run(g, k_max)), k_max)


def _series_cutoff(n: int, lam_bound: float, target: float) -> int:
    """Smallest K with ``n * lam^(K+1) * e^lam / (K+1)! < target``."""
    if lam_bound <= 0:
        return 0
    log_target = math.log(target)
    k = 1
    while True:
        log_bound = (math.log(n) + (k + 1) * math.log(lam_bound) + lam_bound
                     - math.lgamma(k + 2))
        if log_bound < log_target:
            return k
        k += 1
        if k > 2000:
            raise RuntimeError("series cutoff search did not terminate")


def estrada(g: Graph, method: str = "eigen", *, tol: float = JACOBI_TOLERANCE,
            series_target: float = SERIES_TARGET) -> EstradaValue:
    """Estrada index by the requested method.

    ``cosh`` is only defined for bipartite graphs.  ``moment-series`` reports
    a rigorous truncation bound computed from the max-degree bound on the
    spectral radius; the cutoff is chosen so the bound is below
    ``series_target``.
    """
    if method == "eigen":
        spectrum = eigenvalues(g, tol)
        return EstradaValue(float(sum(math.exp(x) for x in spectrum.eigenvalues)),
                            "eigen")
    if method == "cosh":
        if find_bipartition(g) is None:
            raise ValueError("the cosh identity requires a bipartite graph")
        spectrum = eigenvalues(g, tol)
        positive = (g.n - spectrum.nullity) // 2
        total = float(spectrum.nullity)
        for x in spectrum.eigenvalues[:positive]:
            total += 2.0 * math.cosh(x)
        return EstradaValue(total, "cosh")
    if method == "moment-series":
        lam_bound = float(g.max_degree())
        cutoff = _series_cutoff(g.n, lam_bound, series_target)
        moments = _moment_run(g, cutoff)
        acc = Fraction(0)
        factorial = 1
        for k, m_k in enumerate(moments):
            if k > 0:
                factorial *= k
            acc += Fraction(m_k, factorial)
        if lam_bound == 0:
            bound = 0.0
        else:
            bound = math.exp(math.log(g.n) + (cutoff + 1) * math.log(lam_bound)
                             + lam_bound - math.lgamma(cutoff + 2))
        return EstradaValue(float(acc), "moment-series", bound)
    raise ValueError(f"unknown method {method!r}")


def compare_ee_exact(g: Graph, h: Graph, k_max: int = MOMENT_BUDGET) -> MomentComparison:
    """Exact tie-breaker: lexicographic comparison of moment sequences.

    Only meaningful for graphs of equal order.  Reports equality only when
    all compared moments coincide, in which case cospectrality is suspected
    and the verdict is explicitly "up to k_max".
    """
    if g.n != h.n:
        raise ValueError("moment comparison requires graphs of equal order")
    mg = _moment_run(g, k_max)
    mh = _moment_run(h, k_max)
    for k in range(k_max + 1):
        if mg[k] != mh[k]:
            return MomentComparison(-1 if mg[k] < mh[k] else 1, k, k_max)
    return MomentComparison(0, None, k_max)
