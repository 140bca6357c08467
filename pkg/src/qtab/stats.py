"""Maj statistic polynomials over involutions and over all permutations.

Each polynomial has two computation paths.  The enumeration path sums the
statistic over the underlying permutations and is the ground truth at small
sizes.  The fast path sums hook-length products over partitions (involutions
correspond to single tableaux, permutations to same-shape pairs, and descents
transport through the correspondence), which reaches the sizes the limit
computations need.  The fast path is only trusted after the exhaustive
cross-check band in the test suite passes, and the CLI reports which path
produced a number.

Exact rational evaluators (``t_scaled_value`` and friends) evaluate the same
partition sums at a fixed rational point without materializing polynomials;
they are the workhorses of :mod:`qtab.limits`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .permutation import involutions, permutations
from .polynomial import ZERO, BivarPoly
from .tableau import f_poly_hook, partitions

__all__ = [
    "t_count",
    "t_poly_enum",
    "t_poly",
    "a_poly_enum",
    "a_poly",
    "q_integer_value",
    "q_factorial_value",
    "q_binomial_value",
    "t_scaled_value",
    "t_value",
    "a_scaled_value",
    "a_value",
]


_INVOLUTION_COUNTS = [1, 1]


def t_count(n: int) -> int:
    """Number of involutions of [n], by the two-term recurrence.

    Iterative so that sizes in the thousands (needed by the scaled ratio
    checks) do not hit the recursion limit.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_INVOLUTION_COUNTS) <= n:
        k = len(_INVOLUTION_COUNTS)
        _INVOLUTION_COUNTS.append(
            _INVOLUTION_COUNTS[k - 1] + (k - 1) * _INVOLUTION_COUNTS[k - 2]
        )
    return _INVOLUTION_COUNTS[n]


@lru_cache(maxsize=None)
def t_poly_enum(n: int) -> BivarPoly:
    """Maj generating polynomial over involutions, by direct enumeration."""
    terms: dict[int, int] = {}
    for perm in involutions(n):
        m = perm.maj()
        terms[m] = terms.get(m, 0) + 1
    return BivarPoly({(0, m): c for m, c in terms.items()})


@lru_cache(maxsize=None)
def t_poly(n: int) -> BivarPoly:
    """Maj generating polynomial over involutions, as a sum of hook products."""
    total = ZERO
    for shape in partitions(n):
        total = total + f_poly_hook(shape)
    return total


@lru_cache(maxsize=None)
def a_poly_enum(n: int) -> BivarPoly:
    """Joint (imaj, maj) generating polynomial over all permutations."""
    terms: dict[tuple[int, int], int] = {}
    for perm in permutations(n):
        key = (perm.imaj(), perm.maj())
        terms[key] = terms.get(key, 0) + 1
    return BivarPoly(terms)


@lru_cache(maxsize=None)
def a_poly(n: int) -> BivarPoly:
    """Joint (imaj, maj) polynomial as a sum of products of hook polynomials.

    Each partition contributes its maj polynomial in p times the same
    polynomial in q.
    """
    total = ZERO
    for shape in partitions(n):
        fq = f_poly_hook(shape)
        total = total + fq.swap_variables() * fq
    return total


# -- exact rational evaluation ------------------------------------------------


def q_integer_value(h: int, q: Fraction) -> Fraction:
    """Value of 1 + q + ... + q^(h-1) at a rational point."""
    if h < 0:
        raise ValueError("h must be nonnegative")
    if q == 1:
        return Fraction(h)
    return (q**h - 1) / (q - 1)


def q_factorial_value(n: int, q: Fraction) -> Fraction:
    value = Fraction(1)
    for i in range(1, n + 1):
        value *= q_integer_value(i, q)
    return value


def q_binomial_value(n: int, k: int, q: Fraction) -> Fraction:
    """Gaussian binomial evaluated at a rational point; 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return Fraction(0)
    value = Fraction(1)
    for i in range(1, k + 1):
        value *= q_integer_value(n - k + i, q) / q_integer_value(i, q)
    return value


@lru_cache(maxsize=None)
def _hook_profiles(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Per partition of n: the exponent offset sum((i-1) * part_i) and hooks."""
    out = []
    for shape in partitions(n):
        shift = sum(i * p for i, p in enumerate(shape.parts))
        out.append((shift, shape.hook_lengths()))
    return tuple(out)


def _q_integer_table(n: int, q: Fraction) -> tuple[list[int], list[int]]:
    """Numerators and denominators of the q-integers 1..n at a rational point."""
    nums = [0] * (n + 1)
    dens = [1] * (n + 1)
    for h in range(1, n + 1):
        value = q_integer_value(h, q)
        nums[h], dens[h] = value.numerator, value.denominator
    return nums, dens


def t_scaled_value(n: int, q: Fraction) -> Fraction:
    """Involutions' maj polynomial at q, divided by the q-factorial of n.

    Computed per partition as q^offset over the product of hook q-integers,
    which avoids ever forming the large polynomial.  Products accumulate as
    bare integers so each partition costs one rational normalization.
    """
    q = Fraction(q)
    nums, dens = _q_integer_table(n, q)
    total = Fraction(0)
    for shift, hooks in _hook_profiles(n):
        num = q.numerator**shift
        den = q.denominator**shift
        for h in hooks:
            num *= dens[h]
            den *= nums[h]
        total += Fraction(num, den)
    return total


def t_value(n: int, q: Fraction) -> Fraction:
    """Maj generating function over involutions of [n], evaluated at q."""
    return t_scaled_value(n, q) * q_factorial_value(n, Fraction(q))


def a_scaled_value(n: int, p: Fraction, q: Fraction) -> Fraction:
    """Joint (imaj, maj) polynomial at (p, q), divided by both factorials."""
    p = Fraction(p)
    q = Fraction(q)
    p_nums, p_dens = _q_integer_table(n, p)
    q_nums, q_dens = _q_integer_table(n, q)
    total = Fraction(0)
    for shift, hooks in _hook_profiles(n):
        num = (p.numerator * q.numerator) ** shift
        den = (p.denominator * q.denominator) ** shift
        for h in hooks:
            num *= p_dens[h] * q_dens[h]
            den *= p_nums[h] * q_nums[h]
        total += Fraction(num, den)
    return total


def a_value(n: int, p: Fraction, q: Fraction) -> Fraction:
    """Joint (imaj, maj) generating function over permutations, at (p, q)."""
    return (
        a_scaled_value(n, p, q)
        * q_factorial_value(n, Fraction(p))
        * q_factorial_value(n, Fraction(q))
    )
