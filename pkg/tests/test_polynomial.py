from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qtab.polynomial import (
    ONE,
    P,
    Q,
    ZERO,
    BivarPoly,
    format_decimal,
    q_integer,
    qbinomial,
    qfactorial,
)


def poly_strategy():
    term = st.tuples(
        st.tuples(st.integers(0, 4), st.integers(0, 4)),
        st.integers(-9, 9),
    )
    return st.lists(term, max_size=6).map(BivarPoly)


def test_hand_expanded_product():
    # (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3, expanded by hand
    assert q_integer(2) * q_integer(3) == BivarPoly(
        {(0, 0): 1, (0, 1): 2, (0, 2): 2, (0, 3): 1}
    )


def test_multiplicative_identity_and_inverse():
    poly = 3 * P * Q**2 + Q - 7
    assert poly * ONE == poly
    assert poly + (-poly) == ZERO


def test_eval_substitution():
    # 1 + p*q at p = q = 1/2
    poly = ONE + P * Q
    assert poly.evaluate(Fraction(1, 2), Fraction(1, 2)) == Fraction(5, 4)
    assert ZERO.evaluate(Fraction(3, 7), Fraction(22, 5)) == 0


def test_eval_at_one_sums_coefficients():
    poly = 2 * P**2 + 3 * Q + 5
    assert poly.evaluate(1, 1) == 10


def test_qfactorial_values():
    assert qfactorial(0) == ONE
    assert qfactorial(1) == ONE
    # hand expansion of (1+q)(1+q+q^2)
    assert qfactorial(3) == BivarPoly({(0, 0): 1, (0, 1): 2, (0, 2): 2, (0, 3): 1})
    assert qfactorial(2).evaluate(1, 1) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_qfactorial_recurrence(n):
    assert qfactorial(n) == qfactorial(n - 1) * q_integer(n)


def _qbinomial_pascal(n: int, k: int) -> BivarPoly:
    # independent oracle: the q-Pascal recurrence
    if k < 0 or k > n:
        return ZERO
    if n == 0:
        return ONE
    return _qbinomial_pascal(n - 1, k - 1) + Q**k * _qbinomial_pascal(n - 1, k)


def test_qbinomial_4_2_frozen():
    # computed with the Pascal-recurrence oracle
    assert _qbinomial_pascal(4, 2) == BivarPoly(
        {(0, 0): 1, (0, 1): 1, (0, 2): 2, (0, 3): 1, (0, 4): 1}
    )
    assert qbinomial(4, 2) == _qbinomial_pascal(4, 2)


@pytest.mark.parametrize("n", range(0, 8))
def test_qbinomial_against_pascal_oracle(n):
    for k in range(n + 1):
        assert qbinomial(n, k) == _qbinomial_pascal(n, k)


@pytest.mark.parametrize("n", range(0, 8))
def test_qbinomial_symmetry_degree_positivity(n):
    import math

    for k in range(n + 1):
        poly = qbinomial(n, k)
        assert poly == qbinomial(n, n - k)
        assert poly.degree_q() == k * (n - k)
        assert all(c > 0 for _, c in poly.sorted_terms())
        assert poly.evaluate(1, 1) == math.comb(n, k)


def test_qbinomial_rejects_bad_args():
    with pytest.raises(ValueError):
        qbinomial(3, -1)
    with pytest.raises(ValueError):
        qbinomial(3, 4)


def test_divide_exact_detects_remainder():
    with pytest.raises(ValueError):
        (Q + 1).divide_exact(Q)
    with pytest.raises(ZeroDivisionError):
        ONE.divide_exact(ZERO)


@given(poly_strategy(), poly_strategy())
def test_ring_commutativity(f, g):
    assert f + g == g + f
    assert f * g == g * f


@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_distributivity(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(
    poly_strategy(),
    poly_strategy(),
    st.fractions(min_value=-3, max_value=3),
    st.fractions(min_value=-3, max_value=3),
)
def test_eval_is_ring_homomorphism(f, g, pv, qv):
    assert (f + g).evaluate(pv, qv) == f.evaluate(pv, qv) + g.evaluate(pv, qv)
    assert (f * g).evaluate(pv, qv) == f.evaluate(pv, qv) * g.evaluate(pv, qv)


@given(poly_strategy())
def test_exact_division_roundtrip(f):
    divisor = q_integer(3) * P + 1
    assert (f * divisor).divide_exact(divisor) == f


def test_swap_variables():
    poly = 2 * P**2 * Q + 3 * Q**4
    assert poly.swap_variables() == 2 * Q**2 * P + 3 * P**4
    assert poly.swap_variables().swap_variables() == poly


def test_canonical_text_rendering():
    assert str(qfactorial(3)) == "1 + 2*q + 2*q^2 + q^3"
    assert str(ZERO) == "0"
    assert str(ONE - Q) == "1 - q"
    assert str(P * Q + P**2) == "p*q + p^2"


def test_json_terms_roundtrip():
    poly = 5 * P**2 * Q**3 - 4 * Q + 1
    triples = poly.to_json_terms()
    assert triples == [[0, 0, "1"], [0, 1, "-4"], [2, 3, "5"]]
    assert BivarPoly.from_json_terms(triples) == poly


def test_format_decimal():
    assert format_decimal(Fraction(1, 2)) == "0.5"
    assert format_decimal(Fraction(0)) == "0"
    assert format_decimal(Fraction(-22, 7), 6) == "-3.14286"
    assert format_decimal(Fraction(1, 3), 4) == "0.3333"
    assert format_decimal(Fraction(123456789), 4) == "123500000"
    assert format_decimal(Fraction(1, 10**8), 3) == "0.00000001"
    assert format_decimal(Fraction(99995, 10), 4) == "10000"
