"""Closed-form spectral analysis of the apex join family.

For the family built by :func:`bipartite_estrada.families.join_family`, the
nonzero eigenvalues are the roots of a biquadratic: ``x**4 - c2*x**2 + c0``
with ``c2 = s + p*q + p*s`` and ``c0 = p*q*s``.  This module extracts the
positive roots stably, evaluates the closed-form index, and implements the
three pairwise index comparisons used by the extremal characterisation.
Sign claims about the quartic are evaluated in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .families import JoinFamilyParams


@dataclass(frozen=True)
class QuarticForm:
    """Coefficients and positive roots of the family's biquadratic."""

    p: int
    q: int
    s: int
    c2: int           # coefficient of -x**2
    c0: int           # constant term
    x1: float         # larger positive root
    x2: float         # smaller positive root (0 when q == 0)

    @property
    def r(self) -> float:
        return self.x1

    @property
    def k(self) -> float:
        """Root product; equals sqrt(p*q*s)."""
        return self.x1 * self.x2


def quartic_roots(p: int, q: int, s: int) -> QuarticForm:
    """Positive roots of ``x**4 - c2 x**2 + c0``, evaluated stably.

    The larger squared root uses the explicit formula; the smaller one is
    recovered as ``c0 / t1`` to avoid cancellation when ``c0 << c2**2``.
    """
    if s < 1 or p < 1 or q < 0:
        raise ValueError("require s >= 1, p >= 1, q >= 0")
    c2 = s + p * q + p * s
    c0 = p * q * s
    disc = c2 * c2 - 4 * c0
    if disc < 0:
        raise AssertionError("biquadratic discriminant cannot be negative here")
    t1 = (c2 + math.sqrt(disc)) / 2.0
    t2 = c0 / t1 if t1 > 0 else 0.0
    return QuarticForm(p, q, s, c2, c0, math.sqrt(t1), math.sqrt(t2))


def complete_bipartite_ee(n1: int, n2: int) -> float:
    """Closed-form index of ``K_{n1,n2}``: ``n1+n2-2+2cosh(sqrt(n1*n2))``."""
    if n1 < 0 or n2 < 0 or n1 + n2 < 1:
        raise ValueError("need nonnegative sides and at least one vertex")
    if n1 == 0 or n2 == 0:
        return float(n1 + n2)  # empty graph
    return n1 + n2 - 2 + 2.0 * math.cosh(math.sqrt(n1 * n2))


def ee_closed_form(p: int, q: int, s: int) -> float:
    """Closed-form index of the apex join family on ``s + p + q + 1`` vertices:
    ``n - 4 + 2cosh(x1) + 2cosh(x2)``."""
    form = quartic_roots(p, q, s)
    n = s + p + q + 1
    return n - 4 + 2.0 * math.cosh(form.x1) + 2.0 * math.cosh(form.x2)


def monotonicity_witness(r: float, k: float) -> tuple[float, float]:
    """Partial derivatives of ``f(r, k) = 2cosh(r) + 2cosh(k/r)`` (+ const).

    Valid on the cone ``r > sqrt(k) > 0``, where both must be positive:
    the first is ``(e^r - e^-r) - (k/r^2)(e^{k/r} - e^{-k/r})``, the second
    ``(e^{k/r} - e^{-k/r}) / r``.
    """
    if not (k > 0 and r > math.sqrt(k)):
        raise ValueError("witness requires r > sqrt(k) > 0")
    df_dr = (math.exp(r) - math.exp(-r)) \
        - (k / (r * r)) * (math.exp(k / r) - math.exp(-k / r))
    df_dk = (math.exp(k / r) - math.exp(-k / r)) / r
    return df_dr, df_dk


def quartic_value_at_integer_square(x_squared: int, p: int, q: int, s: int) -> int:
    """Exact value of ``g(x) = x^4 - x^2 c2 + c0`` when ``x^2`` is an integer."""
    c2 = s + p * q + p * s
    c0 = p * q * s
    return x_squared * x_squared - x_squared * c2 + c0


def _sign_p_plus_q_sqrt(p_int: int, q_int: int, d: int) -> int:
    """Exact sign of ``p_int + q_int * sqrt(d)`` for integer d >= 0."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if q_int == 0 or d == 0:
        return (p_int > 0) - (p_int < 0)
    if q_int > 0:
        if p_int >= 0:
            return 1
        # p < 0: compare q^2 d with p^2
        lhs, rhs = q_int * q_int * d, p_int * p_int
        return (lhs > rhs) - (lhs < rhs)
    if p_int <= 0:
        return -1
    lhs, rhs = p_int * p_int, q_int * q_int * d
    return (lhs > rhs) - (lhs < rhs)


def transfer_root_shift_sign(p: int, q: int, s: int) -> int:
    """Exact sign of ``g(x1; p-1, q+1, s)`` where x1 is the larger root for
    ``(p, q, s)``.

    With ``t1 = (c2 + sqrt(D))/2`` the value is ``(P + Q sqrt(D)) / 4`` for
    integers ``P = c2^2 + D - 2 c2 c2' + 4 c0'`` and ``Q = 2 (c2 - c2')``,
    so the sign is decided without floating point.
    """
    c2 = s + p * q + p * s
    c0 = p * q * s
    d = c2 * c2 - 4 * c0
    c2_shift = s + (p - 1) * (q + 1) + (p - 1) * s
    c0_shift = (p - 1) * (q + 1) * s
    p_int = c2 * c2 + d - 2 * c2 * c2_shift + 4 * c0_shift
    q_int = 2 * (c2 - c2_shift)
    return _sign_p_plus_q_sqrt(p_int, q_int, d)


@dataclass(frozen=True)
class ComparisonVerdict:
    """Result of one closed-form index comparison at a parameter point."""

    name: str
    params: dict = field(compare=False)
    applicable: bool
    reason: str | None = None
    lhs: float | None = None
    rhs: float | None = None
    holds: bool | None = None
    sign_value: int | None = None   # exact integer sign witness, when one exists

    @property
    def gap(self) -> float | None:
        if self.lhs is None or self.rhs is None:
            return None
        return self.rhs - self.lhs


def side_swap_gain(p: int, q: int, s: int) -> ComparisonVerdict:
    """Strict index gain of swapping the block ``K_{p,q}`` to ``K_{q+s,p-s}``.

    Applicable when ``p < q + s`` (and ``p >= s`` so the swapped block
    exists).  Expected: strict increase.
    """
    params = {"p": p, "q": q, "s": s}
    if s < 1 or p < 1 or q < 0:
        return ComparisonVerdict("side-swap", params, False, "require s>=1, p>=1, q>=0")
    if p < s:
        return ComparisonVerdict("side-swap", params, False, "swapped block needs p >= s")
    if not p < q + s:
        return ComparisonVerdict("side-swap", params, False, "requires p < q + s")
    lhs = ee_closed_form(p, q, s)
    rhs = ee_closed_form(q + s, p - s, s)
    return ComparisonVerdict("side-swap", params, True, None, lhs, rhs, lhs < rhs)


def transfer_gain(p: int, q: int, s: int) -> ComparisonVerdict:
    """Strict index gain of moving one vertex: ``K_{p,q}`` to ``K_{p-1,q+1}``.

    Applicable when ``p > q + s + 1`` and ``q > 0``.  Expected: strict
    increase; the exact root-shift sign must be negative.
    """
    params = {"p": p, "q": q, "s": s}
    if s < 1 or p < 1 or q < 0:
        return ComparisonVerdict("transfer", params, False, "require s>=1, p>=1, q>=0")
    if not (p > q + s + 1 and q > 0):
        return ComparisonVerdict("transfer", params, False, "requires p > q+s+1 and q > 0")
    lhs = ee_closed_form(p, q, s)
    rhs = ee_closed_form(p - 1, q + 1, s)
    sign = transfer_root_shift_sign(p, q, s)
    return ComparisonVerdict("transfer", params, True, None, lhs, rhs, lhs < rhs, sign)


def complete_split_deficit(n: int, s: int) -> ComparisonVerdict:
    """Compare ``K_{s,n-s}`` with the apex join on ``K_{n-s-2,1}``.

    Applicable for ``1 <= s <= ceil((n-1)/2) - 1``.  The claimed strict
    inequality says the complete split loses; ``sign_value`` carries the
    exact integer ``-s((n-2s-3)(n-s)+2)``, which the claim needs to be
    negative.  Both the inequality and the sign fail when ``n = 2s + 2``.
    """
    params = {"n": n, "s": s}
    ceil_half = -(-(n - 1) // 2)
    if not 1 <= s <= ceil_half - 1:
        return ComparisonVerdict("complete-split", params, False,
                                 "requires 1 <= s <= ceil((n-1)/2) - 1")
    if n - s - 2 < 1:
        return ComparisonVerdict("complete-split", params, False,
                                 "join block needs n - s - 2 >= 1")
    lhs = complete_bipartite_ee(s, n - s)
    rhs = ee_closed_form(n - s - 2, 1, s)
    sign_value = -s * ((n - 2 * s - 3) * (n - s) + 2)
    if quartic_value_at_integer_square(s * (n - s), n - s - 2, 1, s) != sign_value:
        raise AssertionError("exact quartic evaluation disagrees with the factored form")
    return ComparisonVerdict("complete-split", params, True, None, lhs, rhs,
                             lhs < rhs, sign_value)


# comparison identifiers accepted by the CLI
CLI_LEMMAS = {"4.1": "side-swap", "4.2": "transfer", "4.3": "complete-split"}


def sweep(comparison: str, *, max_p: int = 12, max_q: int = 12, max_s: int = 12,
          max_n: int = 40) -> list[ComparisonVerdict]:
    """All applicable verdicts of one comparison over a parameter grid."""
    out: list[ComparisonVerdict] = []
    if comparison == "side-swap":
        for s in range(1, max_s + 1):
            for p in range(1, max_p + 1):
                for q in range(0, max_q + 1):
                    v = side_swap_gain(p, q, s)
                    if v.applicable:
                        out.append(v)
    elif comparison == "transfer":
        for s in range(1, max_s + 1):
            for p in range(1, max_p + 1):
                for q in range(1, max_q + 1):
                    v = transfer_gain(p, q, s)
                    if v.applicable:
                        out.append(v)
    elif comparison == "complete-split":
        for n in range(4, max_n + 1):
            for s in range(1, max_s + 1):
                v = complete_split_deficit(n, s)
                if v.applicable:
                    out.append(v)
    else:
        raise ValueError(f"unknown comparison {comparison!r}")
    return out
