import itertools

import pytest

from qtab.jsets import (
    delta,
    delta_bar,
    format_entries,
    format_int_set,
    is_j2_set,
    is_j_set,
    is_overpartition,
    j2_count,
    j2_extend_ok,
    j2_series,
    j2_set,
    j2_sets_of,
    j_extend_ok,
    j_profile,
    j_set,
    j_sets_of,
    parse_int_set,
    psi,
    psi2,
)
from qtab.permutation import Permutation, permutations

WORKED_SET = {0, 1, 2, 3, 5, 6, 9, 13, 17, 18, 19, 20, 22}
WORKED_SET_2 = {0, 1, 3, 6, 7, 8, 12, 13, 14, 15, 17}


def test_delta_worked_example():
    assert delta(WORKED_SET) == (2, 1, 1, 1, 4, 4, 3, 1, 2, 1, 1, 1)


def test_delta_bar_worked_example():
    merged = delta_bar(WORKED_SET)
    assert format_entries(merged) == "2,2',5',4,3,3',2',1"


def test_psi_worked_example():
    blocks = psi(WORKED_SET)
    assert [format_entries(b) for b in blocks] == ["2,2'", "5',4,3,3',2'", "1"]


def test_psi2_worked_example():
    assert delta(WORKED_SET_2) == (2, 1, 1, 1, 4, 1, 1, 3, 2, 1)
    assert psi2(WORKED_SET_2) == ((2, 1), (1,), (1,), (4, 1), (1,), (3, 2, 1))


def test_psi2_rejects_dangling_suffix():
    with pytest.raises(ValueError):
        psi2({0, 2})
    assert psi2({0}) == ()


def test_profile_bundle():
    profile = j_profile(WORKED_SET_2)
    assert profile.delta == (2, 1, 1, 1, 4, 1, 1, 3, 2, 1)
    assert profile.psi2_blocks == psi2(WORKED_SET_2)
    assert j_profile({0, 2}).psi2_blocks is None


def test_is_overpartition():
    assert is_overpartition([(2, False), (2, True)])
    assert is_overpartition([(5, True), (4, False), (3, False), (3, True), (2, True)])
    assert not is_overpartition([(3, True), (3, False)])  # overline not on last
    assert not is_overpartition([(2, False), (3, False)])  # increasing
    assert is_overpartition([])


def test_worked_sets_classified():
    assert is_j_set(WORKED_SET)
    assert is_j2_set(WORKED_SET_2)
    assert is_j_set({0})
    assert not is_j_set({0, 2})
    assert is_j2_set({0, 1, 3})
    assert not is_j_set({0, 1, 3})
    assert not is_j2_set({1, 2})  # missing 0


def test_j_set_examples():
    assert j_set(Permutation.identity(4)) == frozenset({0, 1, 2, 3, 4})
    assert j_set(Permutation.parse("312")) == frozenset({0, 1, 2})
    assert 0 in j_set(Permutation(()))


@pytest.mark.parametrize("n", range(0, 6))
def test_j_set_is_pair_set_with_inverse(n):
    for perm in permutations(n):
        assert j_set(perm) == j2_set(perm, perm.inverse())


def test_j2_set_examples():
    p312 = Permutation.parse("312")
    assert j2_set(p312, p312) == frozenset({0, 1, 3})
    assert j2_set(Permutation(()), Permutation(())) == frozenset({0})


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 5) for b in range(1, 5)])
def test_one_always_in_j2_set(a, b):
    for sigma in permutations(a):
        for tau in permutations(b):
            values = j2_set(sigma, tau)
            assert 0 in values and 1 in values


def test_j2_restriction_closure():
    # truncating a j2-set below any bound leaves a j2-set
    for sigma in permutations(4):
        for tau in permutations(4):
            values = j2_set(sigma, tau)
            for k in range(5):
                assert is_j2_set({v for v in values if v <= k})


def _brute_j_sets(max_n):
    universe = set()
    for n in range(max_n + 1):
        universe |= set(j_sets_of(n))
    return universe


def _brute_j2_sets(max_n):
    universe = set()
    for n in range(max_n + 1):
        universe |= set(j2_sets_of(n))
    return universe


def test_j_set_criterion_exhaustive_small():
    universe = _brute_j_sets(5)
    for r in range(6):
        for rest in itertools.combinations(range(1, 6), r):
            values = frozenset((0,) + rest)
            assert is_j_set(values) == (values in universe), sorted(values)


def test_j2_set_criterion_exhaustive_small():
    universe = _brute_j2_sets(6)
    for r in range(7):
        for rest in itertools.combinations(range(1, 7), r):
            values = frozenset((0,) + rest)
            assert is_j2_set(values) == (values in universe), sorted(values)


def test_every_j_set_is_j2_set():
    for values in _brute_j_sets(6):
        assert is_j2_set(values), sorted(values)


def test_j2_realized_by_single_permutation():
    # every j2-set with maximum n arises from a diagonal pair on [n]
    for n in range(7):
        by_pairs = set()
        for sigma in permutations(n):
            for tau in permutations(n):
                values = j2_set(sigma, tau)
                if values and max(values) == n:
                    by_pairs.add(values)
        assert by_pairs == set(j2_sets_of(n))


def test_j_extend_examples():
    assert j_extend_ok({0, 1, 2}, 3)  # consecutive extension
    assert j_extend_ok({0, 1, 2}, 5) == is_j_set({0, 1, 2, 5})
    with pytest.raises(ValueError):
        j_extend_ok({0, 1, 3}, 5)  # not a j-set
    with pytest.raises(ValueError):
        j_extend_ok({0, 1}, 3)  # largest element below 2
    with pytest.raises(ValueError):
        j_extend_ok({0, 1, 2}, 2)  # not an extension


def test_j_extend_agrees_with_criterion():
    for values in sorted(_brute_j_sets(6), key=sorted):
        if values and max(values) >= 2:
            for n in range(max(values) + 1, 11):
                assert j_extend_ok(values, n) == is_j_set(values | {n}), (
                    sorted(values),
                    n,
                )


def test_j2_extend_examples():
    assert not j2_extend_ok({0, 1, 4}, 2)
    assert j2_extend_ok({0, 1, 4}, 3)
    assert j2_extend_ok({0, 1, 4}, 1)  # m = 1 always extends
    with pytest.raises(ValueError):
        j2_extend_ok({0, 2}, 1)
    with pytest.raises(ValueError):
        j2_extend_ok({0}, 1)


def test_j2_extend_agrees_with_criterion():
    for values in sorted(_brute_j2_sets(7), key=sorted):
        if len(values) >= 2:
            for m in range(1, 6):
                assert j2_extend_ok(values, m) == is_j2_set(
                    values | {max(values) + m}
                ), (sorted(values), m)


def test_series_worked_values():
    assert j2_series(15) == [
        1, 1, 1, 2, 4, 8, 15, 29, 55, 105, 200, 381, 725, 1381, 2629, 5005,
    ]


@pytest.mark.parametrize("n", range(0, 7))
def test_series_matches_brute_count(n):
    assert j2_series(n)[n] == j2_count(n)


def test_j2_count_base():
    assert j2_count(0) == 1  # the set {0} alone


def test_set_formats():
    assert parse_int_set("0,1,3,6") == frozenset({0, 1, 3, 6})
    assert format_int_set({3, 0, 1}) == "0,1,3"
    assert parse_int_set("") == frozenset()
