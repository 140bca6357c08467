"""Finite-size evaluation and limit values for the containment ratios.

Everything here is exact rational arithmetic: finite-n ratios come from the
closed-form identities (never from raw enumeration, which could not reach the
sizes involved), limit values from the corresponding limit formulas, and gaps
are differences of exact fractions.  Decimal output is presentation only.

For a positive rational r the contraction factor min(r, 1/r) drives every
limit; replacing a parameter by its reciprocal provably leaves all scaled
quantities unchanged, which the test suite checks as exact equalities.

The logarithmic bound check and the infinite products are handled with
one-sided rational bounds: truncated series plus closed-form geometric tail
estimates, so a reported margin or gap is rigorous, not numerically hopeful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .permutation import Permutation
from .polynomial import format_decimal
from .stats import (
    a_scaled_value,
    a_value,
    q_binomial_value,
    q_factorial_value,
    t_count,
    t_scaled_value,
    t_value,
)
from .jsets import j2_set, j_set
from .tableau import Partition, SkewShape, Tableau, f_poly, partitions_inside

__all__ = [
    "RealParam",
    "contraction",
    "t_ratio",
    "a_ratio",
    "qlim1_lhs",
    "qlim1_rhs",
    "m2_1_lhs",
    "m2_1_rhs",
    "m3_lhs",
    "m3_rhs",
    "m3_1_lhs",
    "m3_1_rhs",
    "BoundReport",
    "check_bound",
    "xi_partial",
    "xi_limit_product",
    "xi_product_with_tail",
    "xi2_partial",
    "xi2_product_with_tail",
    "Eq8Report",
    "eq8_check",
    "ConvergenceReport",
    "convergence_report",
    "default_grid",
]


def contraction(value: Fraction) -> Fraction:
    """min(r, 1/r) for a positive rational r."""
    value = Fraction(value)
    if value <= 0:
        raise ValueError("parameter must be positive")
    return min(value, 1 / value)


@dataclass(frozen=True)
class RealParam:
    """A positive rational parameter together with its contraction factor."""

    value: Fraction

    def __post_init__(self):
        if Fraction(self.value) <= 0:
            raise ValueError("parameter must be positive")
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def bar(self) -> Fraction:
        return contraction(self.value)


# -- scaled ratios ------------------------------------------------------------


def t_ratio(q: Fraction, n: int) -> Fraction:
    """Consecutive ratio of the factorial-scaled involution maj values.

    Tends to 1 - min(q, 1/q) for q != 1; invariant under q -> 1/q.  At q = 1
    the scaled values are plain involution counts over factorials, so the
    ratio comes straight from the counting recurrence (and sinks slowly to
    the degenerate limit 0).
    """
    q = Fraction(q)
    if q <= 0:
        raise ValueError("q must be positive")
    if q == 1:
        return Fraction(t_count(n + 1), (n + 1) * t_count(n))
    return t_scaled_value(n + 1, q) / t_scaled_value(n, q)


def a_ratio(p: Fraction, q: Fraction, n: int) -> Fraction:
    """Two-variable analog; tends to (1 - min(p,1/p)) (1 - min(q,1/q)).

    That limit requires p and q on the same side of 1: conjugation symmetry
    reduces such parameters to the unit box, where the product of the two
    principal-specialization sums converges.  With p and q on opposite sides
    only one factor can be reduced, the relevant generating function becomes
    entire, and the ratio drops to 0 instead.
    """
    from .stats import a_scaled_value

    p, q = Fraction(p), Fraction(q)
    if p <= 0 or q <= 0:
        raise ValueError("parameters must be positive")
    return a_scaled_value(n + 1, p, q) / a_scaled_value(n, p, q)


# -- limit theorem evaluators ---------------------------------------------------


def _inv_suffix_denominator(m: int, free: int, q: Fraction) -> Fraction:
    """Suffix-maj generating value over all involutions of [free + m]."""
    total = Fraction(0)
    for j in range(m + 1):
        k = free - m + j
        if k < 0 or k > free:
            continue
        total += (
            t_count(j)
            * math.comb(m, j)
            * q_factorial_value(m - j, q)
            * q_binomial_value(free, k, q)
            * t_value(k, q)
        )
    return total


def qlim1_lhs(sigma: Permutation, q: Fraction, n: int) -> Fraction:
    """Finite-n containment ratio for involutions, from the exact identities.

    Ratio of the suffix-maj sum over involutions of [n] containing sigma to
    the sum over all involutions of [n]; both sides assembled from Gaussian
    binomials and involution maj values rather than enumeration.
    """
    q = Fraction(q)
    m = sigma.size
    if n < m:
        raise ValueError("n must be at least the pattern size")
    free = n - m
    numerator = Fraction(0)
    for j in sorted(j_set(sigma)):
        k = free - m + j
        if k < 0 or k > free:
            continue
        numerator += (
            q ** sigma.suffix(j).maj() * q_binomial_value(free, k, q) * t_value(k, q)
        )
    return numerator / _inv_suffix_denominator(m, free, q)


def qlim1_rhs(sigma: Permutation, q: Fraction) -> Fraction:
    """Limit of the involution containment ratio."""
    q = Fraction(q)
    qbar = contraction(q)
    m = sigma.size
    numerator = Fraction(0)
    for j in sorted(j_set(sigma)):
        numerator += (
            q ** sigma.suffix(j).maj()
            * q_binomial_value(m, j, q)
            * q_factorial_value(j, q)
            * (1 - qbar) ** j
        )
    denominator = Fraction(0)
    for j in range(m + 1):
        denominator += (
            q_factorial_value(m, q) * t_count(j) * math.comb(m, j) * (1 - qbar) ** j
        )
    return numerator / denominator


def _pair_denominator(a: int, b: int, total: int, p: Fraction, q: Fraction) -> Fraction:
    """Joint suffix statistic over all permutations of [total], closed form."""
    m, n = total - a, total - b
    value = Fraction(0)
    for j in range(a + 1):
        k = n - a + j
        if k < 0 or k > min(m, n):
            continue
        value += (
            math.factorial(j)
            * math.comb(a, j)
            * math.comb(b, j)
            * q_factorial_value(b - j, p)
            * q_factorial_value(a - j, q)
            * q_binomial_value(m, k, p)
            * q_binomial_value(n, k, q)
            * a_value(k, p, q)
        )
    return value


def m2_1_lhs(
    sigma: Permutation, tau: Permutation, p: Fraction, q: Fraction, n: int
) -> Fraction:
    """Finite-n pair containment ratio over permutations of [n]."""
    p, q = Fraction(p), Fraction(q)
    a, b = sigma.size, tau.size
    if n < max(a, b):
        raise ValueError("n must be at least both pattern sizes")
    m_dim, n_dim = n - a, n - b
    numerator = Fraction(0)
    for j in sorted(j2_set(sigma, tau)):
        k = n_dim - a + j
        if k < 0 or k > min(m_dim, n_dim):
            continue
        numerator += (
            p ** tau.restrict_high(j).imaj()
            * q ** sigma.suffix(j).maj()
            * q_binomial_value(m_dim, k, p)
            * q_binomial_value(n_dim, k, q)
            * a_value(k, p, q)
        )
    return numerator / _pair_denominator(a, b, n, p, q)


def m2_1_rhs(sigma: Permutation, tau: Permutation, p: Fraction, q: Fraction) -> Fraction:
    """Limit of the pair containment ratio."""
    p, q = Fraction(p), Fraction(q)
    pbar, qbar = contraction(p), contraction(q)
    a, b = sigma.size, tau.size
    numerator = Fraction(0)
    for j in sorted(j2_set(sigma, tau)):
        numerator += (
            p ** tau.restrict_high(j).imaj()
            * q ** sigma.suffix(j).maj()
            * q_binomial_value(b, j, p)
            * q_binomial_value(a, j, q)
            * q_factorial_value(j, p)
            * q_factorial_value(j, q)
            * (1 - pbar) ** j
            * (1 - qbar) ** j
        )
    denominator = Fraction(0)
    for j in range(a + 1):
        denominator += (
            q_factorial_value(b, p)
            * q_factorial_value(a, q)
            * math.factorial(j)
            * math.comb(a, j)
            * math.comb(b, j)
            * (1 - pbar) ** j
            * (1 - qbar) ** j
        )
    return numerator / denominator


def _skew_sum_value(alpha: Partition, j: int, q: Fraction) -> Fraction:
    """Sum over inner shapes of size j of the skew maj polynomial at q."""
    total = Fraction(0)
    for mu in partitions_inside(j, alpha):
        total += f_poly(SkewShape(alpha, mu)).evaluate(1, q)
    return total


def m3_lhs(a_tab: Tableau, q: Fraction, n: int) -> Fraction:
    """Finite-n tableau containment ratio, via the transport to involutions.

    The numerator assembles the suffix-maj sum over tableaux of size n
    containing the pattern from Gaussian binomials, involution maj values,
    and inner skew sums of the pattern's shape.
    """
    q = Fraction(q)
    alpha = a_tab.shape.outer
    m = a_tab.size
    if n < m:
        raise ValueError("n must be at least the pattern size")
    free = n - m
    numerator = Fraction(0)
    for j in range(m + 1):
        k = free - m + j
        if k < 0 or k > free:
            continue
        numerator += (
            q_binomial_value(free, k, q) * t_value(k, q) * _skew_sum_value(alpha, j, q)
        )
    return numerator / _inv_suffix_denominator(m, free, q)


def m3_rhs(a_tab: Tableau, q: Fraction) -> Fraction:
    """Limit of the tableau containment ratio."""
    q = Fraction(q)
    qbar = contraction(q)
    alpha = a_tab.shape.outer
    m = a_tab.size
    numerator = Fraction(0)
    for j in range(m + 1):
        numerator += (
            q_binomial_value(m, j, q)
            * q_factorial_value(j, q)
            * (1 - qbar) ** j
            * _skew_sum_value(alpha, j, q)
        )
    denominator = Fraction(0)
    for j in range(m + 1):
        denominator += (
            q_factorial_value(m, q) * t_count(j) * math.comb(m, j) * (1 - qbar) ** j
        )
    return numerator / denominator


def _pair_skew_sum_value(
    alpha: Partition, beta: Partition, j: int, p: Fraction, q: Fraction
) -> Fraction:
    total = Fraction(0)
    for mu in partitions_inside(j, alpha):
        if beta.contains(mu):
            total += (
                f_poly(SkewShape(beta, mu)).evaluate(1, p)
                * f_poly(SkewShape(alpha, mu)).evaluate(1, q)
            )
    return total


def m3_1_lhs(
    a_tab: Tableau, b_tab: Tableau, p: Fraction, q: Fraction, n: int
) -> Fraction:
    """Finite-n same-shape pair containment ratio for tableaux."""
    p, q = Fraction(p), Fraction(q)
    alpha, beta = a_tab.shape.outer, b_tab.shape.outer
    a, b = a_tab.size, b_tab.size
    if n < max(a, b):
        raise ValueError("n must be at least both pattern sizes")
    m_dim, n_dim = n - a, n - b
    numerator = Fraction(0)
    for j in range(a + 1):
        k = n_dim - a + j
        if k < 0 or k > min(m_dim, n_dim):
            continue
        numerator += (
            q_binomial_value(m_dim, k, p)
            * q_binomial_value(n_dim, k, q)
            * a_value(k, p, q)
            * _pair_skew_sum_value(alpha, beta, j, p, q)
        )
    return numerator / _pair_denominator(a, b, n, p, q)


def m3_1_rhs(a_tab: Tableau, b_tab: Tableau, p: Fraction, q: Fraction) -> Fraction:
    """Limit of the same-shape pair containment ratio."""
    p, q = Fraction(p), Fraction(q)
    pbar, qbar = contraction(p), contraction(q)
    alpha, beta = a_tab.shape.outer, b_tab.shape.outer
    a, b = a_tab.size, b_tab.size
    numerator = Fraction(0)
    for j in range(a + 1):
        numerator += (
            q_binomial_value(b, j, p)
            * q_binomial_value(a, j, q)
            * q_factorial_value(j, p)
            * q_factorial_value(j, q)
            * (1 - pbar) ** j
            * (1 - qbar) ** j
            * _pair_skew_sum_value(alpha, beta, j, p, q)
        )
    denominator = Fraction(0)
    for j in range(a + 1):
        denominator += (
            q_factorial_value(b, p)
            * q_factorial_value(a, q)
            * math.factorial(j)
            * math.comb(a, j)
            * math.comb(b, j)
            * (1 - pbar) ** j
            * (1 - qbar) ** j
        )
    return numerator / denominator


# -- logarithmic bound ------------------------------------------------------------


def _log_recip_lower(x: Fraction, terms: int) -> Fraction:
    """Rational lower bound on log(1/(1-x)) for 0 < x < 1 (truncated series)."""
    total = Fraction(0)
    power = Fraction(1)
    for j in range(1, terms + 1):
        power *= x
        total += power / j
    return total


def _log_recip_upper(x: Fraction, tolerance: Fraction) -> Fraction:
    """Rational upper bound on log(1/(1-x)), within tolerance of the truth."""
    total = Fraction(0)
    power = Fraction(1)
    j = 0
    while True:
        j += 1
        power *= x
        total += power / j
        # geometric remainder: sum_{i>j} x^i / i <= x^{j+1} / ((j+1)(1-x))
        tail = power * x / ((j + 1) * (1 - x))
        if tail <= tolerance:
            return total + tail


@dataclass(frozen=True)
class BoundReport:
    """One-sided rational verification of the log-product inequality."""

    q: Fraction
    lhs_upper: Fraction
    rhs_lower: Fraction

    @property
    def margin(self) -> Fraction:
        return self.rhs_lower - self.lhs_upper

    @property
    def holds(self) -> bool:
        return self.margin > 0

    def __str__(self) -> str:
        status = "holds" if self.holds else "FAILS"
        return (
            f"bound at q={self.q}: lhs<= {format_decimal(self.lhs_upper)} "
            f"rhs>= {format_decimal(self.rhs_lower)} margin={format_decimal(self.margin)} "
            f"{status}"
        )


def check_bound(q: Fraction, slack: Fraction = Fraction(1, 10**6)) -> BoundReport:
    """Verify sum_i i*log(1/(1-q^i)) < (1 + q/(1-q)^2)(1 + log(1/(1-q))).

    The left side is bounded above by a truncated double series plus closed
    geometric tails; the right side below by a truncated series.  A positive
    margin is therefore a proof, up to integer arithmetic, that the
    inequality holds at q.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    # outer truncation: sum_{i>I} i log(1/(1-q^i)) <= sum_{i>I} i q^i / (1-q^{I+1})
    depth = 1
    while True:
        head = q ** (depth + 1) * ((depth + 1) - depth * q) / (1 - q) ** 2
        outer_tail = head / (1 - q ** (depth + 1))
        if outer_tail <= slack / 2:
            break
        depth += 1
    per_term = slack / (2 * depth)
    lhs_upper = outer_tail
    for i in range(1, depth + 1):
        lhs_upper += i * _log_recip_upper(q**i, per_term / i)
    rhs_lower = (1 + q / (1 - q) ** 2) * (1 + _log_recip_lower(q, 80))
    return BoundReport(q, lhs_upper, rhs_lower)


# -- partition-sum limits and products -----------------------------------------------


def xi_partial(q: Fraction, n: int) -> Fraction:
    """Principal-specialization sum over partitions of n, exactly.

    Equals the factorial-scaled involution maj value divided by (1-q)^n;
    increases with n toward the infinite product.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    return t_scaled_value(n, q) / (1 - q) ** n


def xi_product_with_tail(q: Fraction, precision: Fraction) -> tuple[Fraction, Fraction]:
    """Truncated limit product and a certified additive tail bound.

    The limit is prod_{s>=1} (1-q^s)^(-e_s) with e_s = 1 + ceil(s/2).  The
    truncation depth is grown until the dropped factors can shift the value
    by at most precision/10; the bound is computed from geometric sums, not
    assumed.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    target = Fraction(precision) / 10
    value = Fraction(1)
    s = 0
    while True:
        s += 1
        exponent = 1 + (s + 1) // 2
        value /= (1 - q**s) ** exponent
        # log of dropped factors: sum_{t>s} e_t log(1/(1-q^t))
        #   <= (1/(1-q^{s+1})) sum_{t>s} (t+3)/2 q^t, in closed form
        geo = q ** (s + 1)
        sum_t = geo * ((s + 1) - s * q) / (1 - q) ** 2
        sum_1 = geo / (1 - q)
        log_tail = (sum_t + 3 * sum_1) / (2 * (1 - q ** (s + 1)))
        if log_tail <= Fraction(1, 2):
            tail = value * 2 * log_tail  # e^x - 1 <= 2x for 0 <= x <= 1/2
            if tail <= target:
                return value, tail


def xi_limit_product(q: Fraction, precision: Fraction = Fraction(1, 10**9)) -> Fraction:
    """The infinite product limit, within precision/10 (see xi_product_with_tail)."""
    value, _ = xi_product_with_tail(q, precision)
    return value


def xi2_partial(p: Fraction, q: Fraction, n: int) -> Fraction:
    """Two-variable analog of the partial partition sum."""
    p, q = Fraction(p), Fraction(q)
    if not (0 < p < 1 and 0 < q < 1):
        raise ValueError("parameters must lie strictly between 0 and 1")
    return a_scaled_value(n, p, q) / ((1 - p) ** n * (1 - q) ** n)


def xi2_product_with_tail(
    p: Fraction, q: Fraction, precision: Fraction
) -> tuple[Fraction, Fraction]:
    """Truncation of prod over i+j>0 of (1-p^i q^j)^(-1), with certified tail."""
    p, q = Fraction(p), Fraction(q)
    if not (0 < p < 1 and 0 < q < 1):
        raise ValueError("parameters must lie strictly between 0 and 1")
    target = Fraction(precision) / 10
    r = max(p, q)
    value = Fraction(1)
    s = 0
    while True:
        s += 1
        for i in range(s + 1):
            value /= 1 - p**i * q ** (s - i)
        # pairs with i+j > s: at most t+1 factors per level t, each q^... <= r^t
        geo = r ** (s + 1)
        sum_t = geo * ((s + 1) - s * r) / (1 - r) ** 2
        sum_1 = geo / (1 - r)
        log_tail = (sum_t + sum_1) / (1 - r ** (s + 1))
        if log_tail <= Fraction(1, 2):
            tail = value * 2 * log_tail
            if tail <= target:
                return value, tail


# -- involution number ratios --------------------------------------------------------


@dataclass(frozen=True)
class Eq8Report:
    """The two scaled involution-number ratios at a given enumeration size."""

    a: int
    n: int
    ratio_offset: Fraction  # n^a t_{n-a} / t_{n+a}
    ratio_stride: Fraction  # n^a t_n / t_{n+2a}

    def __str__(self) -> str:
        return (
            f"a={self.a} n={self.n} "
            f"n^a*t(n-a)/t(n+a)={format_decimal(self.ratio_offset)} "
            f"n^a*t(n)/t(n+2a)={format_decimal(self.ratio_stride)}"
        )


def eq8_check(a: int, n: int) -> Eq8Report:
    """Exact values of the two ratios that tend to 1 as n grows."""
    if a < 0 or n < a:
        raise ValueError("need n >= a >= 0")
    return Eq8Report(
        a,
        n,
        Fraction(n**a * t_count(n - a), t_count(n + a)),
        Fraction(n**a * t_count(n), t_count(n + 2 * a)),
    )


# -- convergence reports ---------------------------------------------------------------


@dataclass
class ConvergenceReport:
    """Finite-size values against a limit, with exact gaps."""

    label: str
    limit: Fraction
    rows: list[tuple[int, Fraction]]

    def gaps(self) -> list[tuple[int, Fraction]]:
        return [(n, abs(value - self.limit)) for n, value in self.rows]

    def to_csv(self, significant_digits: int = 12) -> str:
        lines = ["n,value,limit,gap"]
        for n, value in self.rows:
            gap = abs(value - self.limit)
            lines.append(
                f"{n},{format_decimal(value, significant_digits)},"
                f"{format_decimal(self.limit, significant_digits)},"
                f"{format_decimal(gap, significant_digits)}"
            )
        return "\n".join(lines)


def convergence_report(
    label: str,
    finite: Callable[[int], Fraction],
    limit: Fraction,
    grid: Iterable[int],
) -> ConvergenceReport:
    return ConvergenceReport(label, limit, [(n, finite(n)) for n in grid])


def default_grid(lo: int, hi: int, points: int = 8) -> list[int]:
    """Deterministic increasing grid from lo to hi inclusive."""
    if hi < lo:
        raise ValueError("empty grid")
    if points < 2 or hi == lo:
        return [hi]
    step = max(1, (hi - lo) // (points - 1))
    grid = list(range(lo, hi, step)) + [hi]
    return sorted(set(grid))
