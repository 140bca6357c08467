"""Containment enumerators and machine verification of the exact identities.

A permutation contains a pattern when its low restriction at the pattern's
size equals the pattern; a tableau contains another when its low restriction
does.  The ``verify_*`` functions each pit a brute-force enumeration of one
side of an identity against an independently assembled closed form and return
a structured report, so a failing instance is a reproducible fixture rather
than a bare assertion.  The identities verified:

* ``permcont1`` -- maj generating functions over involutions with a given low
  restriction, against binomial/involution-polynomial sums indexed by the
  pattern's j-set (plus the unrestricted companion identity);
* ``permcont2`` -- the two-variable analog over all permutations with given
  low restriction and standardized prefix, indexed by the j2-set;
* ``permtotab`` -- transport of the j-set sums to skew tableau polynomials
  (single and pair versions);
* ``majgen``   -- skew-shape maj sums over all outer shapes against inner
  skew sums (single and pair versions), whose q = 1 specializations are the
  classical skew enumeration identities.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .jsets import j2_set, j_set
from .permutation import Permutation, involutions, permutations
from .polynomial import ZERO, BivarPoly, qbinomial, qfactorial
from .rsk import rs
from .stats import a_poly, t_count, t_poly
from .tableau import (
    Partition,
    SkewShape,
    Tableau,
    enumerate_syt,
    f_poly,
    partitions,
    partitions_inside,
    skew_syt_count,
)

__all__ = [
    "contains",
    "tab_contains",
    "pair_contains",
    "enum_inv_containing",
    "enum_perm_containing",
    "enum_tab_containing",
    "enum_pair_containing",
    "IdentityReport",
    "perms_with_insertion_tableau",
    "perms_with_recording_tableau",
    "verify_permcont1",
    "verify_permcont2",
    "verify_permtotab",
    "verify_permtotab_pair",
    "verify_majgen",
    "verify_majgen1",
    "conjecture_probe",
]


def contains(perm: Permutation, pattern: Permutation) -> bool:
    """Whether the low restriction at the pattern's size equals the pattern."""
    if pattern.size > perm.size:
        return False
    return perm.restrict_low(pattern.size) == pattern


def tab_contains(tab: Tableau, pattern: Tableau) -> bool:
    if pattern.size > tab.size:
        return False
    return tab.restrict_low(pattern.size) == pattern


def pair_contains(p_tab: Tableau, q_tab: Tableau, a_tab: Tableau, b_tab: Tableau) -> bool:
    return tab_contains(p_tab, a_tab) and tab_contains(q_tab, b_tab)


def enum_inv_containing(pattern: Permutation, n: int) -> list[Permutation]:
    """Involutions of [n] whose low restriction equals the pattern."""
    return [pi for pi in involutions(n) if contains(pi, pattern)]


def enum_perm_containing(sigma: Permutation, tau: Permutation, n: int) -> list[Permutation]:
    """Permutations of [n] with low restriction sigma and standardized prefix tau."""
    a, b = sigma.size, tau.size
    if a > n or b > n:
        return []
    return [
        pi
        for pi in permutations(n)
        if pi.restrict_low(a) == sigma and pi.prefix(b) == tau
    ]


def enum_tab_containing(pattern: Tableau, n: int) -> list[Tableau]:
    """Standard Young tableaux of size n containing the pattern."""
    out = []
    for shape in partitions(n):
        for tab in enumerate_syt(SkewShape.straight(shape)):
            if tab_contains(tab, pattern):
                out.append(tab)
    return out


def enum_pair_containing(a_tab: Tableau, b_tab: Tableau, n: int) -> list[tuple[Tableau, Tableau]]:
    """Same-shape tableau pairs of size n containing the given pair."""
    out = []
    for shape in partitions(n):
        tabs = list(enumerate_syt(SkewShape.straight(shape)))
        firsts = [t for t in tabs if tab_contains(t, a_tab)]
        seconds = [t for t in tabs if tab_contains(t, b_tab)]
        out.extend((p, q) for p in firsts for q in seconds)
    return out


@dataclass
class IdentityReport:
    """Outcome of checking one identity over a grid of instances."""

    theorem: str
    params: dict
    checked: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, instance: str, lhs, rhs) -> None:
        self.checked += 1
        if lhs != rhs:
            self.failures.append({"instance": instance, "lhs": str(lhs), "rhs": str(rhs)})

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "range": self.params,
            "checked": self.checked,
            "failures": self.failures,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.theorem} {json.dumps(self.params, sort_keys=True)} "
            f"checked={self.checked} failures={len(self.failures)} {status}"
        )


def _maj_poly(maj_counts: dict[int, int]) -> BivarPoly:
    return BivarPoly({(0, m): c for m, c in maj_counts.items()})


def verify_permcont1(m: int, n: int) -> IdentityReport:
    """Check both involution containment identities at pattern size m, free size n.

    Sweeps the involutions of [n + m] once, bucketing the suffix-maj statistic
    by low restriction, then compares every bucket (and the unrestricted
    total) against the closed forms.  The q = 1 rows double-check the plain
    counting formula over binomials and involution numbers.
    """
    report = IdentityReport("permcont1", {"m": m, "n": n})
    total = n + m
    buckets: dict[tuple[int, ...], dict[int, int]] = {}
    all_counts: dict[int, int] = {}
    for pi in involutions(total):
        stat = pi.suffix(m).maj()
        key = pi.restrict_low(m).word
        bucket = buckets.setdefault(key, {})
        bucket[stat] = bucket.get(stat, 0) + 1
        all_counts[stat] = all_counts.get(stat, 0) + 1

    # unrestricted identity
    rhs_all = ZERO
    for j in range(m + 1):
        k = n - m + j
        if k < 0 or k > n:
            continue
        rhs_all = rhs_all + (
            t_count(j) * math.comb(m, j) * qfactorial(m - j) * qbinomial(n, k) * t_poly(k)
        )
    report.record("all involutions", _maj_poly(all_counts), rhs_all)

    for sigma in permutations(m):
        jset = j_set(sigma)
        lhs = _maj_poly(buckets.get(sigma.word, {}))
        rhs = ZERO
        count_rhs = 0
        for j in sorted(jset):
            k = n - m + j
            if k < 0 or k > n:
                continue
            rhs = rhs + (
                BivarPoly.monomial(0, sigma.suffix(j).maj()) * qbinomial(n, k) * t_poly(k)
            )
            count_rhs += math.comb(n, k) * t_count(k)
        report.record(f"sigma={sigma.compact()}", lhs, rhs)
        report.record(
            f"sigma={sigma.compact()} q=1 count",
            lhs.evaluate(1, 1),
            Fraction(count_rhs),
        )
    return report


def verify_permcont2(a: int, b: int, total: int) -> IdentityReport:
    """Check both pair containment identities for patterns of sizes a and b in [total].

    One sweep over the permutations of [total] buckets the joint
    (inverse-suffix, suffix) maj statistic by (low restriction, standardized
    prefix); the closed forms are assembled from Gaussian binomials, the
    two-variable maj polynomial, and the j2-set of each pattern pair.
    """
    if total < max(a, b):
        raise ValueError("ambient size smaller than a pattern")
    report = IdentityReport("permcont2", {"a": a, "b": b, "total": total})
    m, n = total - a, total - b
    buckets: dict[tuple[tuple[int, ...], tuple[int, ...]], dict[tuple[int, int], int]] = {}
    all_counts: dict[tuple[int, int], int] = {}
    for pi in permutations(total):
        stat = (pi.restrict_high(a).imaj(), pi.suffix(b).maj())
        key = (pi.restrict_low(a).word, pi.prefix(b).word)
        bucket = buckets.setdefault(key, {})
        bucket[stat] = bucket.get(stat, 0) + 1
        all_counts[stat] = all_counts.get(stat, 0) + 1

    def pq_poly(counts: dict[tuple[int, int], int]) -> BivarPoly:
        return BivarPoly(counts)

    rhs_all = ZERO
    for j in range(a + 1):
        k = n - a + j
        if k < 0 or k > min(m, n):
            continue
        rhs_all = rhs_all + (
            math.factorial(j)
            * math.comb(a, j)
            * math.comb(b, j)
            * qfactorial(b - j).swap_variables()
            * qfactorial(a - j)
            * qbinomial(m, k).swap_variables()
            * qbinomial(n, k)
            * a_poly(k)
        )
    report.record("all permutations", pq_poly(all_counts), rhs_all)

    for sigma in permutations(a):
        for tau in permutations(b):
            jset = j2_set(sigma, tau)
            lhs = pq_poly(buckets.get((sigma.word, tau.word), {}))
            rhs = ZERO
            count_rhs = 0
            for j in sorted(jset):
                k = n - a + j
                if k < 0 or k > min(m, n):
                    continue
                rhs = rhs + (
                    BivarPoly.monomial(tau.restrict_high(j).imaj(), sigma.suffix(j).maj())
                    * qbinomial(m, k).swap_variables()
                    * qbinomial(n, k)
                    * a_poly(k)
                )
                count_rhs += math.comb(m, k) * math.comb(n, k) * math.factorial(k)
            instance = f"sigma={sigma.compact()} tau={tau.compact()}"
            report.record(instance, lhs, rhs)
            report.record(f"{instance} p=q=1 count", lhs.evaluate(1, 1), Fraction(count_rhs))
    return report


@lru_cache(maxsize=None)
def _perms_by_insertion_tableau(n: int) -> dict[Tableau, list[Permutation]]:
    groups: dict[Tableau, list[Permutation]] = {}
    for pi in permutations(n):
        p_tab, _ = rs(pi)
        groups.setdefault(p_tab, []).append(pi)
    return groups


@lru_cache(maxsize=None)
def _perms_by_recording_tableau(n: int) -> dict[Tableau, list[Permutation]]:
    groups: dict[Tableau, list[Permutation]] = {}
    for pi in permutations(n):
        _, q_tab = rs(pi)
        groups.setdefault(q_tab, []).append(pi)
    return groups


def perms_with_insertion_tableau(tab: Tableau) -> list[Permutation]:
    """Permutations whose insertion tableau equals the given tableau."""
    return list(_perms_by_insertion_tableau(tab.size).get(tab, []))


def perms_with_recording_tableau(tab: Tableau) -> list[Permutation]:
    """Permutations whose recording tableau equals the given tableau."""
    return list(_perms_by_recording_tableau(tab.size).get(tab, []))


def verify_permtotab(a_tab: Tableau, j: int) -> IdentityReport:
    """Suffix-maj sum over the insertion class of a tableau vs inner skew sums.

    Left side: over permutations whose insertion tableau is the given one and
    whose j-set contains j, sum q^(maj of the suffix past j).  Right side:
    sum of the skew maj polynomials of the tableau's shape over all inner
    shapes of size j.
    """
    alpha = a_tab.shape.outer
    report = IdentityReport(
        "permtotab", {"tableau": a_tab.to_json()["rows"], "j": j}
    )
    lhs = ZERO
    for sigma in perms_with_insertion_tableau(a_tab):
        if j in j_set(sigma):
            lhs = lhs + BivarPoly.monomial(0, sigma.suffix(j).maj())
    rhs = ZERO
    for mu in partitions_inside(j, alpha):
        rhs = rhs + f_poly(SkewShape(alpha, mu))
    report.record(f"shape={alpha} j={j}", lhs, rhs)
    return report


def verify_permtotab_pair(a_tab: Tableau, b_tab: Tableau, j: int) -> IdentityReport:
    """Pair version: joint statistic over (insertion, recording) classes.

    Left side: over pairs (sigma, tau) with the given insertion and recording
    tableaux whose j2-set contains j, sum p^(imaj of tau's high restriction)
    q^(maj of sigma's suffix).  Right side: sum over inner shapes mu of size j
    of the skew polynomial of B's shape in p times that of A's shape in q.
    """
    alpha = a_tab.shape.outer
    beta = b_tab.shape.outer
    report = IdentityReport(
        "permtotab-pair",
        {"tableau_a": a_tab.to_json()["rows"], "tableau_b": b_tab.to_json()["rows"], "j": j},
    )
    lhs = ZERO
    taus = perms_with_recording_tableau(b_tab)
    for sigma in perms_with_insertion_tableau(a_tab):
        for tau in taus:
            if j in j2_set(sigma, tau):
                lhs = lhs + BivarPoly.monomial(
                    tau.restrict_high(j).imaj(), sigma.suffix(j).maj()
                )
    rhs = ZERO
    for mu in partitions(j):
        if alpha.contains(mu) and beta.contains(mu):
            rhs = rhs + (
                f_poly(SkewShape(beta, mu)).swap_variables()
                * f_poly(SkewShape(alpha, mu))
            )
    report.record(f"shapes={alpha};{beta} j={j}", lhs, rhs)
    return report


def _outer_shapes(base: Partition, added: int) -> list[Partition]:
    return [lam for lam in partitions(base.size + added) if lam.contains(base)]


def verify_majgen(alpha: Partition, n: int) -> IdentityReport:
    """Skew maj sums over all outer shapes vs binomial/involution closed form.

    Also checks the q = 1 specialization against the classical count computed
    independently with plain binomials, involution numbers, and skew tableau
    counts.
    """
    report = IdentityReport("majgen", {"alpha": str(alpha), "n": n})
    lhs = ZERO
    for lam in _outer_shapes(alpha, n):
        lhs = lhs + f_poly(SkewShape(lam, alpha))
    rhs = ZERO
    count_rhs = 0
    for k in range(n + 1):
        if n - k > alpha.size:
            continue
        inner_sum = ZERO
        inner_count = 0
        for mu in partitions_inside(alpha.size - (n - k), alpha):
            inner_sum = inner_sum + f_poly(SkewShape(alpha, mu))
            inner_count += skew_syt_count(SkewShape(alpha, mu))
        rhs = rhs + qbinomial(n, k) * t_poly(k) * inner_sum
        count_rhs += math.comb(n, k) * t_count(k) * inner_count
    report.record(f"alpha={alpha} n={n}", lhs, rhs)
    report.record(f"alpha={alpha} n={n} q=1 count", lhs.evaluate(1, 1), Fraction(count_rhs))
    return report


def verify_majgen1(alpha: Partition, beta: Partition, m: int, n: int) -> IdentityReport:
    """Pair version over outer shapes containing both bases.

    Nonempty only when m + |alpha| = n + |beta|; inconsistent data verifies
    trivially as 0 = 0.  The p = q = 1 row checks the classical pair count.
    """
    report = IdentityReport(
        "majgen1", {"alpha": str(alpha), "beta": str(beta), "m": m, "n": n}
    )
    lhs = ZERO
    if m + alpha.size == n + beta.size:
        for lam in _outer_shapes(alpha, m):
            if lam.contains(beta):
                lhs = lhs + (
                    f_poly(SkewShape(lam, alpha)).swap_variables()
                    * f_poly(SkewShape(lam, beta))
                )
    rhs = ZERO
    count_rhs = 0
    for k in range(min(m, n) + 1):
        if m - k > beta.size or n - k > alpha.size:
            continue
        inner_sum = ZERO
        inner_count = 0
        for mu in partitions(beta.size - (m - k)):
            if beta.contains(mu) and alpha.contains(mu) and alpha.size - mu.size == n - k:
                inner_sum = inner_sum + (
                    f_poly(SkewShape(beta, mu)).swap_variables()
                    * f_poly(SkewShape(alpha, mu))
                )
                inner_count += skew_syt_count(SkewShape(beta, mu)) * skew_syt_count(
                    SkewShape(alpha, mu)
                )
        rhs = rhs + (
            qbinomial(m, k).swap_variables() * qbinomial(n, k) * a_poly(k) * inner_sum
        )
        count_rhs += math.comb(m, k) * math.comb(n, k) * math.factorial(k) * inner_count
    report.record(f"alpha={alpha} beta={beta} m={m} n={n}", lhs, rhs)
    report.record(
        f"alpha={alpha} beta={beta} m={m} n={n} p=q=1 count",
        lhs.evaluate(1, 1),
        Fraction(count_rhs),
    )
    return report


def conjecture_probe(patterns: list[Tableau], n: int) -> Fraction:
    """Exact containment ratio for tuples of same-shape tableaux.

    Counts tuples (T_1, ..., T_k) of common shape of size n with T_i
    containing the i-th pattern, divided by the count of unconstrained
    same-shape tuples.  A tableau of shape lam containing a fixed pattern of
    shape alpha is determined by an arbitrary standard filling of lam/alpha,
    so both counts reduce to skew enumeration.  No limit is asserted; this is
    an exploratory estimator.
    """
    if not patterns:
        raise ValueError("need at least one pattern")
    k = len(patterns)
    numerator = 0
    denominator = 0
    for lam in partitions(n):
        count = skew_syt_count(SkewShape.straight(lam))
        denominator += count**k
        prod = 1
        for pattern in patterns:
            alpha = pattern.shape.outer
            if not lam.contains(alpha):
                prod = 0
                break
            prod *= skew_syt_count(SkewShape(lam, alpha))
        numerator += prod
    return Fraction(numerator, denominator)
