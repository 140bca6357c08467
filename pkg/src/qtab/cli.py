"""Batch command-line interface.

Subcommands cover statistics (``stat``), the insertion correspondence
(``rs``), polynomial computations (``qpoly``), j-set and j2-set queries
(``jset``, ``j2set``, ``j2``), exact identity verification (``verify``),
convergence evaluation (``limit``), and the exploratory tuple-containment
probe (``probe``).

Exit codes: 0 on success or all checks passing, 1 on a verification failure,
2 on a usage error.  Rational parameters are accepted only as fractions
(``1/2``), never decimals, so exactness survives the command line.  The
environment variable ``QTAB_MAX_N`` caps brute-force enumeration sizes as a
safety rail.  Identical invocations produce byte-identical output; a
``--threads`` flag sizes the worker pool for verification and convergence
grids without affecting the output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable

from . import containment, jsets, limits, stats
from .permutation import Permutation
from .polynomial import BivarPoly, format_decimal, qbinomial, qfactorial
from .rsk import rs, rs_inverse
from .tableau import (
    SkewShape,
    Tableau,
    enumerate_syt,
    f_poly,
    f_poly_hook,
    partitions,
)

__all__ = ["main", "run"]


class UsageError(Exception):
    pass


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text:
        raise UsageError(f"{text!r}: decimals are not accepted; write a fraction like 1/2")
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse rational {text!r}: {exc}") from exc


def _parse_tableau(text: str) -> Tableau:
    """Accept inline JSON, a bare path to a JSON file, or an @path reference."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    elif not text.lstrip().startswith("{") and Path(text).is_file():
        text = Path(text).read_text()
    try:
        return Tableau.from_json(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse tableau: {exc}") from exc


def _enum_cap() -> int | None:
    raw = os.environ.get("QTAB_MAX_N")
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"QTAB_MAX_N={raw!r} is not an integer") from exc


def _check_enum_size(n: int, what: str) -> None:
    cap = _enum_cap()
    if cap is not None and n > cap:
        raise UsageError(f"{what} size {n} exceeds QTAB_MAX_N={cap}")


def _emit(args, text_lines: Iterable[str], payload) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _format_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


# -- stat ---------------------------------------------------------------------


def _cmd_stat(args) -> int:
    if args.kind == "perm":
        perm = Permutation.parse(args.object)
        _emit(
            args,
            [f"D={_format_set(perm.descents())} maj={perm.maj()} imaj={perm.imaj()}"],
            {
                "descents": sorted(perm.descents()),
                "maj": perm.maj(),
                "imaj": perm.imaj(),
            },
        )
    else:
        tab = _parse_tableau(args.object)
        _emit(
            args,
            [f"D={_format_set(tab.descents())} maj={tab.maj()}"],
            {"descents": sorted(tab.descents()), "maj": tab.maj()},
        )
    return 0


# -- rs -----------------------------------------------------------------------


def _cmd_rs(args) -> int:
    if args.inverse:
        if len(args.operands) != 2:
            raise UsageError("rs --inverse needs two tableau operands")
        p_tab = _parse_tableau(args.operands[0])
        q_tab = _parse_tableau(args.operands[1])
        perm = rs_inverse(p_tab, q_tab)
        _emit(args, [str(perm)], {"permutation": list(perm.word)})
        return 0
    if len(args.operands) != 1:
        raise UsageError("rs needs one permutation operand")
    perm = Permutation.parse(args.operands[0])
    p_tab, q_tab = rs(perm)
    _emit(
        args,
        ["P:", p_tab.pretty(), "Q:", q_tab.pretty()],
        {"P": p_tab.to_json(), "Q": q_tab.to_json()},
    )
    return 0


# -- qpoly ----------------------------------------------------------------------


def _poly_payload(poly: BivarPoly, **extra) -> dict:
    return {"terms": poly.to_json_terms(), **extra}


def _cmd_qpoly(args) -> int:
    which = args.which
    if which == "factorial":
        poly = qfactorial(int(args.args[0]))
        _emit(args, [str(poly)], _poly_payload(poly))
    elif which == "binomial":
        n, k = (int(x) for x in args.args[:2])
        try:
            poly = qbinomial(n, k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit(args, [str(poly)], _poly_payload(poly))
    elif which in ("tn", "an"):
        n = int(args.args[0])
        method = args.method or "hook"
        if which == "tn":
            if method == "enum":
                _check_enum_size(n, "involution enumeration")
                poly = stats.t_poly_enum(n)
            else:
                poly = stats.t_poly(n)
        else:
            if method == "enum":
                _check_enum_size(n, "permutation enumeration")
                poly = stats.a_poly_enum(n)
            else:
                poly = stats.a_poly(n)
        _emit(args, [f"method={method}", str(poly)], _poly_payload(poly, method=method))
    elif which == "fshape":
        shape = SkewShape.parse(args.args[0])
        if shape.is_straight and args.method != "enum":
            poly, method = f_poly_hook(shape.outer), "hook"
        else:
            poly, method = f_poly(shape), "enum"
        _emit(args, [f"method={method}", str(poly)], _poly_payload(poly, method=method))
    else:
        raise UsageError(f"unknown qpoly computation {which!r}")
    return 0


# -- j-sets ----------------------------------------------------------------------


def _cmd_jset(args) -> int:
    perm = Permutation.parse(args.perm)
    values = jsets.j_set(perm)
    _emit(args, [jsets.format_int_set(values)], {"jset": sorted(values)})
    return 0


def _cmd_j2set(args) -> int:
    if args.first == "check":
        if args.second is None:
            raise UsageError("j2set check needs a set operand")
        values = jsets.parse_int_set(args.second)
        verdict = jsets.is_j2_set(values)
        lines = [f"{jsets.format_int_set(values)} j2-set: {'yes' if verdict else 'no'}"]
        payload = {"set": sorted(values), "is_j2_set": verdict}
        if values:
            profile = jsets.j_profile(values)
            payload["profile"] = profile.to_json()
            lines.append(f"delta: {','.join(str(a) for a in profile.delta)}")
            lines.append(f"delta_bar: {jsets.format_entries(profile.delta_bar)}")
        _emit(args, lines, payload)
        return 0
    if args.second is None:
        raise UsageError("j2set needs two permutation operands")
    sigma = Permutation.parse(args.first)
    tau = Permutation.parse(args.second)
    values = jsets.j2_set(sigma, tau)
    _emit(args, [jsets.format_int_set(values)], {"j2set": sorted(values)})
    return 0


def _cmd_j2(args) -> int:
    if args.action != "count":
        raise UsageError("supported: j2 count")
    n_max = args.max
    if args.method == "brute":
        _check_enum_size(n_max, "permutation enumeration")
        counts = [jsets.j2_count(n) for n in range(n_max + 1)]
    else:
        counts = jsets.j2_series(n_max)
    _emit(
        args,
        [",".join(str(c) for c in counts)],
        {"method": args.method, "counts": counts},
    )
    return 0


# -- verify ------------------------------------------------------------------------


def _verify_instances(args) -> list[Callable[[], containment.IdentityReport]]:
    which = args.which
    k = args.max_size
    jobs: list[Callable[[], containment.IdentityReport]] = []
    if which == "permcont1":
        total_cap = args.max_total if args.max_total is not None else 8
        _check_enum_size(total_cap, "involution enumeration")
        for m in range(k + 1):
            for n in range(total_cap - m + 1):
                jobs.append(lambda m=m, n=n: containment.verify_permcont1(m, n))
    elif which == "permcont2":
        total_cap = args.max_total if args.max_total is not None else 6
        _check_enum_size(total_cap, "permutation enumeration")
        for a in range(k + 1):
            for b in range(k + 1):
                for total in range(max(a, b), total_cap + 1):
                    jobs.append(
                        lambda a=a, b=b, t=total: containment.verify_permcont2(a, b, t)
                    )
    elif which == "permtotab":
        _check_enum_size(k, "permutation enumeration")
        tabs = [
            tab
            for size in range(1, k + 1)
            for shape in partitions(size)
            for tab in enumerate_syt(SkewShape.straight(shape))
        ]
        for tab in tabs:
            for j in range(tab.size + 1):
                jobs.append(lambda t=tab, j=j: containment.verify_permtotab(t, j))
        for a_tab in tabs:
            for b_tab in tabs:
                for j in range(min(a_tab.size, b_tab.size) + 1):
                    jobs.append(
                        lambda a=a_tab, b=b_tab, j=j: containment.verify_permtotab_pair(
                            a, b, j
                        )
                    )
    elif which == "majgen":
        n_cap = args.max_total if args.max_total is not None else 5
        shapes = [shape for size in range(k + 1) for shape in partitions(size)]
        for alpha in shapes:
            for n in range(n_cap + 1):
                jobs.append(lambda a=alpha, n=n: containment.verify_majgen(a, n))
    elif which == "majgen1":
        n_cap = args.max_total if args.max_total is not None else 5
        shapes = [shape for size in range(k + 1) for shape in partitions(size)]
        for alpha in shapes:
            for beta in shapes:
                for m in range(n_cap + 1):
                    n = m + alpha.size - beta.size
                    if 0 <= n <= n_cap:
                        jobs.append(
                            lambda a=alpha, b=beta, m=m, n=n: containment.verify_majgen1(
                                a, b, m, n
                            )
                        )
    else:
        raise UsageError(f"unknown verification {which!r}")
    return jobs


def _cmd_verify(args) -> int:
    jobs = _verify_instances(args)
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(lambda job: job(), jobs))
    else:
        reports = [job() for job in jobs]
    failures = sum(len(r.failures) for r in reports)
    checked = sum(r.checked for r in reports)
    if args.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    else:
        for report in reports:
            print(report)
        print(f"total: reports={len(reports)} checked={checked} failures={failures}")
    return 0 if failures == 0 else 1


# -- limit -------------------------------------------------------------------------


def _require(args, *names) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"limit {args.which} requires --{name.replace('_', '-')}")


def _limit_report(args) -> tuple[limits.ConvergenceReport, list[str]]:
    which = args.which
    grid_points = 8
    if which == "tlim":
        _require(args, "q", "n")
        q = args.q
        limit = 1 - limits.contraction(q)
        finite = lambda n: limits.t_ratio(q, n)
        lo = 1
        label = f"tlim q={q}"
    elif which == "alim":
        _require(args, "p", "q", "n")
        p, q = args.p, args.q
        limit = (1 - limits.contraction(p)) * (1 - limits.contraction(q))
        finite = lambda n: limits.a_ratio(p, q, n)
        lo = 1
        label = f"alim p={p} q={q}"
    elif which == "qlim1":
        _require(args, "sigma", "q", "n")
        sigma = Permutation.parse(args.sigma)
        q = args.q
        limit = limits.qlim1_rhs(sigma, q)
        finite = lambda n: limits.qlim1_lhs(sigma, q, n)
        lo = sigma.size
        label = f"qlim1 sigma={args.sigma} q={q}"
    elif which == "m2-1":
        _require(args, "sigma", "tau", "p", "q", "n")
        sigma = Permutation.parse(args.sigma)
        tau = Permutation.parse(args.tau)
        p, q = args.p, args.q
        limit = limits.m2_1_rhs(sigma, tau, p, q)
        finite = lambda n: limits.m2_1_lhs(sigma, tau, p, q, n)
        lo = max(sigma.size, tau.size)
        label = f"m2-1 sigma={args.sigma} tau={args.tau} p={p} q={q}"
    elif which == "m3":
        _require(args, "tableau", "q", "n")
        tab = _parse_tableau(args.tableau)
        q = args.q
        limit = limits.m3_rhs(tab, q)
        finite = lambda n: limits.m3_lhs(tab, q, n)
        lo = tab.size
        label = f"m3 q={q}"
    elif which == "m3-1":
        _require(args, "tableau", "tableau2", "p", "q", "n")
        a_tab = _parse_tableau(args.tableau)
        b_tab = _parse_tableau(args.tableau2)
        p, q = args.p, args.q
        limit = limits.m3_1_rhs(a_tab, b_tab, p, q)
        finite = lambda n: limits.m3_1_lhs(a_tab, b_tab, p, q, n)
        lo = max(a_tab.size, b_tab.size)
        label = f"m3-1 p={p} q={q}"
    elif which == "xi":
        _require(args, "q", "n")
        q = args.q
        product, tail = limits.xi_product_with_tail(q, args.precision)
        finite = lambda n: limits.xi_partial(q, n)
        report = limits.convergence_report(
            f"xi q={q}",
            finite,
            product,
            limits.default_grid(1, args.n, grid_points) if args.csv else [args.n],
        )
        extra = [f"product tail bound: {format_decimal(tail)}"]
        return report, extra
    elif which == "eq8":
        _require(args, "n")
        a = args.a
        finite = lambda n: limits.eq8_check(a, n).ratio_offset
        lo = max(a, 1)
        report = limits.convergence_report(
            f"eq8 a={a}",
            finite,
            Fraction(1),
            limits.default_grid(lo, args.n, grid_points) if args.csv else [args.n],
        )
        stride = limits.eq8_check(a, args.n).ratio_stride
        extra = [f"stride ratio at n={args.n}: {format_decimal(stride)}"]
        return report, extra
    else:
        raise UsageError(f"unknown limit computation {which!r}")
    grid = limits.default_grid(lo, args.n, grid_points) if args.csv else [args.n]
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(lambda n: (n, finite(n)), grid))
        report = limits.ConvergenceReport(label, limit, rows)
    else:
        report = limits.convergence_report(label, finite, limit, grid)
    return report, []


def _cmd_limit(args) -> int:
    report, extra = _limit_report(args)
    if args.csv:
        print(report.to_csv(args.digits))
    elif args.json:
        payload = {
            "label": report.label,
            "limit": str(report.limit),
            "rows": [
                {"n": n, "value": str(v), "gap": str(abs(v - report.limit))}
                for n, v in report.rows
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(report.label)
        for n, value in report.rows:
            gap = abs(value - report.limit)
            print(
                f"n={n} value={format_decimal(value, args.digits)} "
                f"limit={format_decimal(report.limit, args.digits)} "
                f"gap={format_decimal(gap, args.digits)}"
            )
        for line in extra:
            print(line)
    return 0


# -- probe --------------------------------------------------------------------------


def _cmd_probe(args) -> int:
    if args.what != "conjecture":
        raise UsageError("supported: probe conjecture")
    _check_enum_size(args.n, "tableau enumeration")
    tabs = [_parse_tableau(text) for text in args.tableaux]
    ratio = containment.conjecture_probe(tabs, args.n)
    _emit(
        args,
        [f"ratio = {ratio} (~{format_decimal(ratio)})"],
        {"numerator": ratio.numerator, "denominator": ratio.denominator},
    )
    return 0


# -- parser ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtab",
        description="Exact q-analog statistics for tableau and permutation containment.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_stat = sub.add_parser("stat", help="descent set, maj, imaj of an object")
    p_stat.add_argument("kind", choices=["perm", "tab"])
    p_stat.add_argument("object", help="permutation word, or tableau JSON / @file")
    p_stat.add_argument("--json", action="store_true")
    p_stat.set_defaults(func=_cmd_stat)

    p_rs = sub.add_parser("rs", help="insertion correspondence and its inverse")
    p_rs.add_argument("operands", nargs="+")
    p_rs.add_argument("--inverse", action="store_true")
    p_rs.add_argument("--json", action="store_true")
    p_rs.set_defaults(func=_cmd_rs)

    p_qpoly = sub.add_parser("qpoly", help="exact q-polynomials")
    p_qpoly.add_argument(
        "which", choices=["factorial", "binomial", "tn", "an", "fshape"]
    )
    p_qpoly.add_argument("args", nargs="+")
    p_qpoly.add_argument("--method", choices=["hook", "enum"])
    p_qpoly.add_argument("--json", action="store_true")
    p_qpoly.set_defaults(func=_cmd_qpoly)

    p_jset = sub.add_parser("jset", help="j-set of a permutation")
    p_jset.add_argument("perm")
    p_jset.add_argument("--json", action="store_true")
    p_jset.set_defaults(func=_cmd_jset)

    p_j2set = sub.add_parser("j2set", help="j2-set of a pair, or membership check")
    p_j2set.add_argument("first", help="sigma, or the word 'check'")
    p_j2set.add_argument("second", nargs="?", help="tau, or the set to check")
    p_j2set.add_argument("--json", action="store_true")
    p_j2set.set_defaults(func=_cmd_j2set)

    p_j2 = sub.add_parser("j2", help="count j2-sets by largest element")
    p_j2.add_argument("action", choices=["count"])
    p_j2.add_argument("--max", type=int, required=True)
    p_j2.add_argument("--method", choices=["gf", "brute"], default="gf")
    p_j2.add_argument("--json", action="store_true")
    p_j2.set_defaults(func=_cmd_j2)

    p_verify = sub.add_parser("verify", help="machine-check the exact identities")
    p_verify.add_argument(
        "which",
        choices=["permcont1", "permcont2", "permtotab", "majgen", "majgen1"],
    )
    p_verify.add_argument("--max-size", type=int, required=True)
    p_verify.add_argument(
        "--max-total",
        type=int,
        default=None,
        help="cap on the ambient enumeration size (theorem-specific default)",
    )
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=_cmd_verify)

    p_limit = sub.add_parser("limit", help="finite-size values against limit formulas")
    p_limit.add_argument(
        "which",
        choices=["qlim1", "m2-1", "m3", "m3-1", "tlim", "alim", "xi", "eq8"],
    )
    p_limit.add_argument("--q", type=_parse_rational)
    p_limit.add_argument("--p", type=_parse_rational)
    p_limit.add_argument("--n", type=int, required=True)
    p_limit.add_argument("--sigma")
    p_limit.add_argument("--tau")
    p_limit.add_argument("--tableau", help="tableau JSON or @file")
    p_limit.add_argument("--tableau2", help="tableau JSON or @file")
    p_limit.add_argument("--a", type=int, default=1, help="offset for eq8")
    p_limit.add_argument(
        "--precision", type=_parse_rational, default=Fraction(1, 10**7)
    )
    p_limit.add_argument("--csv", action="store_true")
    p_limit.add_argument(
        "--digits", type=int, default=12, help="significant digits in rendered output"
    )
    p_limit.add_argument("--threads", type=int, default=1)
    p_limit.add_argument("--json", action="store_true")
    p_limit.set_defaults(func=_cmd_limit)

    p_probe = sub.add_parser("probe", help="exploratory tuple containment ratio")
    p_probe.add_argument("what", choices=["conjecture"])
    p_probe.add_argument("--tableaux", nargs="+", required=True)
    p_probe.add_argument("--n", type=int, required=True)
    p_probe.add_argument("--json", action="store_true")
    p_probe.set_defaults(func=_cmd_probe)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
