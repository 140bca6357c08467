import math
from fractions import Fraction

import pytest

from qtab.containment import tab_contains
from qtab.limits import (
    RealParam,
    a_ratio,
    check_bound,
    contraction,
    convergence_report,
    default_grid,
    eq8_check,
    m2_1_lhs,
    m2_1_rhs,
    m3_1_lhs,
    m3_1_rhs,
    m3_lhs,
    m3_rhs,
    qlim1_lhs,
    qlim1_rhs,
    t_ratio,
    xi2_partial,
    xi2_product_with_tail,
    xi_limit_product,
    xi_partial,
    xi_product_with_tail,
)
from qtab.permutation import Permutation, involutions, permutations
from qtab.stats import q_factorial_value, t_count
from qtab.tableau import SkewShape, Tableau, enumerate_syt, partitions, syt_count

HALF = Fraction(1, 2)


def test_real_param():
    assert RealParam(Fraction(3)).bar == Fraction(1, 3)
    assert RealParam(HALF).bar == HALF
    assert contraction(Fraction(1)) == 1
    with pytest.raises(ValueError):
        RealParam(Fraction(0))


def test_t_ratio_base():
    assert t_ratio(HALF, 0) == 1  # both scaled values are 1
    assert t_ratio(Fraction(7, 3), 0) == 1


def test_t_ratio_reciprocal_invariance():
    for n in (3, 8, 12):
        assert t_ratio(HALF, n) == t_ratio(Fraction(2), n)
        assert t_ratio(Fraction(3, 7), n) == t_ratio(Fraction(7, 3), n)


def test_a_ratio_simultaneous_invariance():
    for n in (3, 6, 9):
        assert a_ratio(HALF, Fraction(1, 3), n) == a_ratio(Fraction(2), Fraction(3), n)


def test_ratio_converges_toward_contraction():
    gap_small = abs(t_ratio(HALF, 12) - HALF)
    gap_large = abs(t_ratio(HALF, 24) - HALF)
    assert gap_large < gap_small < Fraction(1, 10)


def test_a_ratio_degenerate_p_one():
    # with p = 1 the limit factor (1 - min(p,1/p)) vanishes
    values = [a_ratio(Fraction(1), HALF, n) * 1 for n in (6, 10, 14)]
    assert values[0] > values[1] > values[2]
    assert values[2] < Fraction(1, 8)


# -- finite-size evaluators against raw enumeration -----------------------------


def brute_qlim1(sigma, q, n):
    m = sigma.size
    num = Fraction(0)
    den = Fraction(0)
    for pi in involutions(n):
        w = q ** pi.suffix(m).maj()
        den += w
        if pi.restrict_low(m) == sigma:
            num += w
    return num / den


@pytest.mark.parametrize("word", ["21", "12", "231", "1"])
def test_qlim1_lhs_matches_enumeration(word):
    sigma = Permutation.parse(word)
    q = Fraction(2, 3)
    for n in range(sigma.size, 8):
        assert qlim1_lhs(sigma, q, n) == brute_qlim1(sigma, q, n)


def test_qlim1_empty_pattern():
    empty = Permutation(())
    assert qlim1_rhs(empty, HALF) == 1
    assert qlim1_lhs(empty, HALF, 6) == 1


def test_qlim1_rhs_q1_is_reciprocal_factorial():
    for word in ("21", "312", "4231"):
        sigma = Permutation.parse(word)
        assert qlim1_rhs(sigma, Fraction(1)) == Fraction(
            1, math.factorial(sigma.size)
        )


def brute_m2_1(sigma, tau, p, q, n):
    a, b = sigma.size, tau.size
    num = Fraction(0)
    den = Fraction(0)
    for pi in permutations(n):
        w = p ** pi.restrict_high(a).imaj() * q ** pi.suffix(b).maj()
        den += w
        if pi.restrict_low(a) == sigma and pi.prefix(b) == tau:
            num += w
    return num / den


def test_m2_1_lhs_matches_enumeration():
    sigma = Permutation.parse("21")
    tau = Permutation.parse("12")
    p, q = Fraction(2, 5), Fraction(1, 3)
    for n in range(2, 7):
        assert m2_1_lhs(sigma, tau, p, q, n) == brute_m2_1(sigma, tau, p, q, n)


def test_m2_1_rhs_specializations():
    sigma = Permutation.parse("21")
    tau = Permutation.parse("312")
    a, b = sigma.size, tau.size
    one = Fraction(1)
    assert m2_1_rhs(sigma, tau, one, one) == Fraction(
        1, math.factorial(a) * math.factorial(b)
    )
    q = Fraction(1, 3)
    assert m2_1_rhs(sigma, tau, one, q) == q ** sigma.maj() / (
        math.factorial(b) * q_factorial_value(a, q)
    )
    assert m2_1_rhs(Permutation(()), Permutation(()), one, one) == 1


def brute_m3(a_tab, q, n):
    m = a_tab.size
    num = Fraction(0)
    den = Fraction(0)
    for lam in partitions(n):
        for tab in enumerate_syt(SkewShape.straight(lam)):
            w = q ** tab.restrict_high(m).maj()
            den += w
            if tab_contains(tab, a_tab):
                num += w
    return num / den


def test_m3_lhs_matches_enumeration():
    a_tab = Tableau.from_rows([[1, 2], [3]])
    q = Fraction(3, 4)
    for n in range(3, 8):
        assert m3_lhs(a_tab, q, n) == brute_m3(a_tab, q, n)


def test_m3_rhs_q1():
    for rows in ([[1]], [[1, 2], [3]], [[1, 3], [2, 4]]):
        a_tab = Tableau.from_rows(rows)
        alpha = a_tab.shape.outer
        assert m3_rhs(a_tab, Fraction(1)) == Fraction(
            syt_count(alpha), math.factorial(alpha.size)
        )


def brute_m3_1(a_tab, b_tab, p, q, n):
    num = Fraction(0)
    den = Fraction(0)
    for lam in partitions(n):
        tabs = list(enumerate_syt(SkewShape.straight(lam)))
        for p_tab in tabs:
            wp = p ** p_tab.restrict_high(a_tab.size).maj()
            for q_tab in tabs:
                w = wp * q ** q_tab.restrict_high(b_tab.size).maj()
                den += w
                if tab_contains(p_tab, a_tab) and tab_contains(q_tab, b_tab):
                    num += w
    return num / den


def test_m3_1_lhs_matches_enumeration():
    a_tab = Tableau.from_rows([[1, 2], [3]])
    b_tab = Tableau.from_rows([[1], [2]])
    p, q = Fraction(1, 2), Fraction(2, 3)
    for n in range(3, 7):
        assert m3_1_lhs(a_tab, b_tab, p, q, n) == brute_m3_1(a_tab, b_tab, p, q, n)


def test_m3_1_rhs_specializations():
    a_tab = Tableau.from_rows([[1, 2], [3]])
    b_tab = Tableau.from_rows([[1], [2]])
    one = Fraction(1)
    alpha, beta = a_tab.shape.outer, b_tab.shape.outer
    expected = Fraction(
        syt_count(alpha) * syt_count(beta),
        math.factorial(alpha.size) * math.factorial(beta.size),
    )
    assert m3_1_rhs(a_tab, b_tab, one, one) == expected
    one_cell = Tableau.from_rows([[1]])
    assert m3_1_rhs(one_cell, one_cell, one, one) == 1
    q = Fraction(1, 4)
    from qtab.tableau import f_poly

    f_alpha_q = f_poly(SkewShape.straight(alpha)).evaluate(1, q)
    assert m3_1_rhs(a_tab, b_tab, one, q) == Fraction(syt_count(beta)) * f_alpha_q / (
        math.factorial(beta.size) * q_factorial_value(alpha.size, q)
    )


# -- bound, products, ratios ------------------------------------------------------


def test_check_bound_holds():
    for q in (Fraction(1, 10), HALF, Fraction(9, 10)):
        report = check_bound(q)
        assert report.holds
        assert report.margin > 0


def test_check_bound_tiny_q_near_limits():
    report = check_bound(Fraction(1, 1000))
    assert report.lhs_upper < Fraction(1, 100)
    assert report.rhs_lower > 1


def test_check_bound_rejects_bad_q():
    with pytest.raises(ValueError):
        check_bound(Fraction(3, 2))


def test_xi_partial_base():
    assert xi_partial(HALF, 0) == 1
    assert xi_partial(HALF, 1) == 2


def test_xi_partial_increasing():
    values = [xi_partial(HALF, n) for n in range(0, 12)]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_xi_product_certified_tail():
    precision = Fraction(1, 10**6)
    value, tail = xi_product_with_tail(HALF, precision)
    assert 0 < tail <= precision / 10
    assert xi_limit_product(HALF, precision) == value
    # partial sums stay below the product and approach it
    assert xi_partial(HALF, 12) < value
    assert value - xi_partial(HALF, 20) < Fraction(1, 10)


def test_xi2_partial_and_product():
    p = q = HALF
    precision = Fraction(1, 10**6)
    value, tail = xi2_product_with_tail(p, q, precision)
    assert 0 < tail <= precision / 10
    partial = xi2_partial(p, q, 20)
    assert partial < value
    assert value - partial < Fraction(1, 100)


def test_eq8_values():
    report = eq8_check(0, 50)
    assert report.ratio_offset == 1 and report.ratio_stride == 1
    report = eq8_check(1, 100)
    assert abs(report.ratio_offset - 1) < Fraction(1, 5)
    gaps = [abs(eq8_check(1, n).ratio_offset - 1) for n in (100, 400, 1600)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_eq8_identity_with_recurrence():
    # n * t(n-1) / t(n+1) = 1 - t(n)/t(n+1) via the recurrence
    for n in (10, 25, 60):
        report = eq8_check(1, n)
        assert report.ratio_offset == 1 - Fraction(t_count(n), t_count(n + 1))


def test_convergence_report_csv():
    report = convergence_report(
        "demo", lambda n: Fraction(1, n), Fraction(0), [1, 2, 4]
    )
    text = report.to_csv(6)
    lines = text.splitlines()
    assert lines[0] == "n,value,limit,gap"
    assert lines[1] == "1,1,0,1"
    assert lines[3] == "4,0.25,0,0.25"


def test_default_grid():
    grid = default_grid(2, 30, 8)
    assert grid[0] == 2 and grid[-1] == 30
    assert grid == sorted(set(grid))
    assert default_grid(5, 5) == [5]


def test_m2_1_convergence_example_312():
    # size-3 diagonal pattern at enumeration size 30 sits within 1e-4
    pat = Permutation.parse("312")
    p = q = HALF
    gap = abs(m2_1_lhs(pat, pat, p, q, 30) - m2_1_rhs(pat, pat, p, q))
    assert gap < Fraction(1, 10**4)


def test_gap_sequence_eventually_decreasing():
    from qtab.limits import default_grid

    q = HALF
    grid = default_grid(2, 20, 8)
    sigma = Permutation.parse("21")
    for finite, limit in [
        (lambda n: t_ratio(q, n), 1 - q),
        (lambda n: qlim1_lhs(sigma, q, n), qlim1_rhs(sigma, q)),
    ]:
        report = convergence_report("trend", finite, limit, grid)
        gaps = [gap for _, gap in report.gaps()]
        tail = gaps[-4:]
        assert all(a > b for a, b in zip(tail, tail[1:])), gaps


def test_t_ratio_unit_parameter_trend():
    # at q = 1 the scaled ratio decays slowly toward the degenerate limit 0
    values = [t_ratio(Fraction(1), n) for n in (10, 40, 160, 640)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] < Fraction(1, 10)
