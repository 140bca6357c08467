"""Exact polynomial kernel: sparse integer polynomials in two formal variables.

Coefficients are arbitrary-precision Python ints and all ring operations are
exact.  Univariate polynomials in q are the p-degree-0 slice of the same
representation.  Evaluation at rational points returns ``fractions.Fraction``,
the scalar type used end to end by the limit computations, so that tolerances
are statements about exact numbers rather than floating-point artifacts.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]

__all__ = [
    "BivarPoly",
    "ZERO",
    "ONE",
    "P",
    "Q",
    "q_integer",
    "qfactorial",
    "qbinomial",
    "format_decimal",
]


class BivarPoly:
    """A polynomial in the formal variables p and q with integer coefficients.

    Terms are stored sparsely as a map from exponent pairs
    ``(p_degree, q_degree)`` to nonzero integer coefficients.  Instances are
    immutable and hashable; arithmetic never loses precision.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for (i, j), coeff in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term p^{i}*q^{j}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an integer")
            if coeff:
                total = clean.get((i, j), 0) + coeff
                if total:
                    clean[(i, j)] = total
                else:
                    clean.pop((i, j), None)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BivarPoly is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, value: int) -> "BivarPoly":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, p_degree: int, q_degree: int, coeff: int = 1) -> "BivarPoly":
        return cls({(p_degree, q_degree): coeff})

    @classmethod
    def from_q_coefficients(cls, coeffs: Iterable[int], shift: int = 0) -> "BivarPoly":
        """Univariate polynomial in q from a dense coefficient list.

        ``coeffs[d]`` is the coefficient of q^(d + shift).
        """
        return cls({(0, d + shift): c for d, c in enumerate(coeffs) if c})

    # -- inspection --------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms sorted by (p-degree, q-degree) ascending."""
        return sorted(self._terms.items())

    def coefficient(self, p_degree: int, q_degree: int) -> int:
        return self._terms.get((p_degree, q_degree), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree_p(self) -> int:
        """Largest p-exponent, or -1 for the zero polynomial."""
        return max((i for i, _ in self._terms), default=-1)

    def degree_q(self) -> int:
        """Largest q-exponent, or -1 for the zero polynomial."""
        return max((j for _, j in self._terms), default=-1)

    def q_coefficients(self) -> list[int]:
        """Dense q-coefficient list; raises if any term involves p."""
        if any(i for i, _ in self._terms):
            raise ValueError("polynomial involves p; not univariate in q")
        out = [0] * (self.degree_q() + 1)
        for (_, j), c in self._terms.items():
            out[j] = c
        return out

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value) -> "BivarPoly":
        if isinstance(value, BivarPoly):
            return value
        if isinstance(value, int):
            return BivarPoly({(0, 0): value})
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            total = terms.get(key, 0) + coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        result = BivarPoly.__new__(BivarPoly)
        object.__setattr__(result, "_terms", terms)
        return result

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        result = BivarPoly.__new__(BivarPoly)
        object.__setattr__(result, "_terms", {k: -c for k, c in self._terms.items()})
        return result

    def __sub__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "BivarPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                total = terms.get(key, 0) + c1 * c2
                if total:
                    terms[key] = total
                else:
                    terms.pop(key, None)
        result = BivarPoly.__new__(BivarPoly)
        object.__setattr__(result, "_terms", terms)
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BivarPoly":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ONE
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_exact(self, divisor) -> "BivarPoly":
        """Exact division; raises ValueError if the division leaves a remainder.

        A nonzero remainder here would indicate a bug upstream (the callers
        divide quantities that are polynomials by construction), so failure is
        hard rather than a fallback.
        """
        divisor = self._coerce(divisor)
        if divisor is NotImplemented:
            raise TypeError("cannot divide by non-polynomial")
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        remainder = dict(self._terms)
        quotient: dict[tuple[int, int], int] = {}
        lead_key = max(divisor._terms)
        lead_coeff = divisor._terms[lead_key]
        while remainder:
            rem_key = max(remainder)
            rem_coeff = remainder[rem_key]
            i = rem_key[0] - lead_key[0]
            j = rem_key[1] - lead_key[1]
            if i < 0 or j < 0 or rem_coeff % lead_coeff:
                raise ValueError("inexact polynomial division")
            factor = rem_coeff // lead_coeff
            quotient[(i, j)] = factor
            for (a, b), c in divisor._terms.items():
                key = (a + i, b + j)
                total = remainder.get(key, 0) - factor * c
                if total:
                    remainder[key] = total
                else:
                    remainder.pop(key, None)
        result = BivarPoly.__new__(BivarPoly)
        object.__setattr__(result, "_terms", quotient)
        return result

    def swap_variables(self) -> "BivarPoly":
        """Exchange the roles of p and q."""
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()})

    def evaluate(self, p_value: Scalar, q_value: Scalar) -> Fraction:
        """Exact rational evaluation at p = p_value, q = q_value."""
        p_value = Fraction(p_value)
        q_value = Fraction(q_value)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * p_value**i * q_value**j
        return total

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering -----------------------------------------------------------

    @staticmethod
    def _monomial_str(i: int, j: int, coeff: int) -> str:
        parts = []
        if abs(coeff) != 1 or (i == 0 and j == 0):
            parts.append(str(abs(coeff)))
        if i == 1:
            parts.append("p")
        elif i > 1:
            parts.append(f"p^{i}")
        if j == 1:
            parts.append("q")
        elif j > 1:
            parts.append(f"q^{j}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j), coeff in self.sorted_terms():
            text = self._monomial_str(i, j, coeff)
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BivarPoly({self._terms!r})"

    def to_json_terms(self) -> list[list]:
        """JSON form: list of [p_degree, q_degree, coefficient-string] triples."""
        return [[i, j, str(c)] for (i, j), c in self.sorted_terms()]

    @classmethod
    def from_json_terms(cls, triples: Iterable[Iterable]) -> "BivarPoly":
        return cls({(int(i), int(j)): int(c) for i, j, c in triples})


ZERO = BivarPoly()
ONE = BivarPoly({(0, 0): 1})
P = BivarPoly({(1, 0): 1})
Q = BivarPoly({(0, 1): 1})


def q_integer(h: int) -> BivarPoly:
    """The q-analog of the integer h: 1 + q + ... + q^(h-1)."""
    if h < 0:
        raise ValueError("q_integer requires h >= 0")
    return BivarPoly({(0, d): 1 for d in range(h)})


@lru_cache(maxsize=None)
def qfactorial(n: int) -> BivarPoly:
    """The q-factorial: product of q-integers 1 through n (1 for n = 0)."""
    if n < 0:
        raise ValueError("qfactorial requires n >= 0")
    if n == 0:
        return ONE
    return qfactorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> BivarPoly:
    """Gaussian binomial coefficient as an exact polynomial in q.

    Computed by exact long division of q-factorials; a nonzero remainder is
    impossible for valid input and raises.
    """
    if k < 0 or k > n:
        raise ValueError(f"qbinomial({n}, {k}) requires 0 <= k <= n")
    return qfactorial(n).divide_exact(qfactorial(k) * qfactorial(n - k))


def format_decimal(value: Fraction, significant_digits: int = 12) -> str:
    """Render an exact rational as a fixed-precision decimal string.

    Presentation only: rounding happens at the final step, never inside a
    computation.
    """
    if significant_digits < 1:
        raise ValueError("need at least one significant digit")
    value = Fraction(value)
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    mag = -value if value < 0 else value
    # exponent e with 10^e <= mag < 10^(e+1)
    e = 0
    if mag >= 1:
        scaled = mag
        while scaled >= 10:
            scaled /= 10
            e += 1
    else:
        scaled = mag
        while scaled < 1:
            scaled *= 10
            e -= 1
    shift = significant_digits - 1 - e
    if shift >= 0:
        scaled_int = mag.numerator * 10**shift // mag.denominator
        rem = mag.numerator * 10**shift % mag.denominator
    else:
        scaled_int, rem = divmod(mag.numerator, mag.denominator * 10**-shift)
    if 2 * rem >= mag.denominator:
        scaled_int += 1
    digits = str(scaled_int)
    # rounding may add a digit (e.g. 999.95 -> 1000)
    if len(digits) > significant_digits:
        digits = digits[:significant_digits]
        e += 1
    point = e + 1
    if point <= 0:
        return f"{sign}0.{'0' * -point}{digits}".rstrip("0").rstrip(".") or "0"
    if point >= len(digits):
        return f"{sign}{digits}{'0' * (point - len(digits))}"
    text = f"{sign}{digits[:point]}.{digits[point:]}"
    return text.rstrip("0").rstrip(".")
