"""Command-line front end.

Subcommands: classify, enumerate, linsys, chow, dp2-check, picard-check.
Every command renders to a human-readable table, JSON or CSV; all numbers
are exact integers.  Exit status is 0 on success and 2 on usage or input
errors, nothing else.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .families import (
    ClassificationReport,
    DP3Family,
    Route,
    Verdict,
    classify,
    enumerate_families,
)
from .scroll import DivisorClass, EmptyLinearSystemError, Monomial, Scroll
from .special import (
    DegenerateSeedError,
    conic_fiber_system,
    dp2_report,
    invariant_disjoint_subsets,
)

CSV_HEADER = (
    "d1", "d2", "d3", "n", "smooth_pic2", "k3", "euler", "cone",
    "r", "mu", "ks2", "shokurov", "odp", "verdict", "route",
)

SMOOTHNESS_EXPLANATION = (
    "smooth/Picard-rank-2 test: (d1 = 0 implies n > 0); "
    "(d1 = -n and 3*d3 >= -n) or (d1 > -n, d2 >= -n and 3*d3 >= -n); "
    "(d2 = d3 and n < 0 implies 3*d3 > -n)"
)

ROUTE_EXPLANATIONS = {
    Route.MAIN_THEOREM_RATIONAL: (
        "d1 = 0 and n = 1 is the unique rational family among smooth "
        "Picard-rank-2 members; every other one is nonrational"
    ),
    Route.CUBIC_THREEFOLD: (
        "d1 = 1, d2 = d3 = n = 0: the general member is birational to a "
        "smooth cubic threefold, nonrational by the Clemens-Griffiths "
        "criterion"
    ),
    Route.SHOKUROV_CONIC_BUNDLE: (
        "the family degenerates to a conic bundle over F_r, r = d1 - d2, "
        "with degeneration divisor Delta = 5*s_inf + mu*l, "
        "mu = 5*d1 + 4*d2 - 2*d3 + 3*n; |2K + Delta| is nonempty exactly "
        "when 3*d1 + 6*d2 - 2*d3 + 3*n >= 4, which makes the degeneration "
        "nonruled by the Shokurov criterion and the family nonrational"
    ),
    Route.NONE: (
        "the general member is not smooth with Picard rank 2, so the "
        "rationality classification does not apply"
    ),
}


class UsageError(Exception):
    pass


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _bool_token(value: bool) -> str:
    return "true" if value else "false"


def _report_dict(rep: ClassificationReport) -> dict:
    deg = None
    if rep.degeneration is not None:
        d = rep.degeneration
        deg = {
            "r": d.r,
            "mu": d.mu,
            "ks2": d.ks2,
            "shokurov": d.shokurov,
            "odp": d.odp,
        }
    return {
        "family": {
            "d1": rep.family.d1,
            "d2": rep.family.d2,
            "d3": rep.family.d3,
            "n": rep.family.n,
        },
        "smooth_pic2": rep.smooth_pic2,
        "k3": rep.k3,
        "euler": rep.euler,
        "cone": rep.cone.value,
        "degeneration": deg,
        "verdict": rep.verdict.value,
        "route": rep.route.value,
    }


def _report_row(rep: ClassificationReport, missing: str = "") -> list[str]:
    d = rep.degeneration
    return [
        str(rep.family.d1),
        str(rep.family.d2),
        str(rep.family.d3),
        str(rep.family.n),
        _bool_token(rep.smooth_pic2),
        str(rep.k3),
        str(rep.euler),
        rep.cone.value,
        str(d.r) if d else missing,
        str(d.mu) if d else missing,
        str(d.ks2) if d else missing,
        _bool_token(d.shokurov) if d else missing,
        str(d.odp) if d else missing,
        rep.verdict.value,
        rep.route.value,
    ]


def _print_table(header, rows) -> None:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    for line in [header, *rows]:
        print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())


def _emit_reports(reports, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(_dumps([_report_dict(r) for r in reports]))
    elif fmt == "csv":
        print(",".join(CSV_HEADER))
        for rep in reports:
            print(",".join(_report_row(rep)))
    else:
        _print_table(list(CSV_HEADER), [_report_row(r, missing="-") for r in reports])


def _cmd_classify(args) -> int:
    try:
        family = DP3Family(args.d1, args.d2, args.d3, args.n)
    except ValueError:
        raise UsageError(
            "invalid family: the degrees must satisfy d1 >= d2 >= d3 >= 0"
        )
    rep = classify(family)
    if args.format == "json":
        sys.stdout.write(_dumps(_report_dict(rep)))
    elif args.format == "csv":
        print(",".join(CSV_HEADER))
        print(",".join(_report_row(rep)))
    else:
        rows = [
            ["family", f"({family.d1}, {family.d2}, {family.d3}, {family.n})"],
            ["smooth_pic2", _bool_token(rep.smooth_pic2)],
            ["k3", str(rep.k3)],
            ["euler", str(rep.euler)],
            ["cone", rep.cone.value],
        ]
        if rep.degeneration is not None:
            d = rep.degeneration
            rows.append([
                "degeneration",
                f"r={d.r} mu={d.mu} ks2={d.ks2} "
                f"shokurov={_bool_token(d.shokurov)} odp={d.odp}",
            ])
        else:
            rows.append(["degeneration", "-"])
        rows.append(["verdict", rep.verdict.value])
        rows.append(["route", rep.route.value])
        for key, value in rows:
            print(f"{key:<13} {value}")
    if args.explain:
        print(f"# {SMOOTHNESS_EXPLANATION}")
        print(f"# {ROUTE_EXPLANATIONS[rep.route]}")
    return 0


def _make_filters(tokens):
    predicates = []
    for token in tokens:
        if token == "all":
            continue
        if token == "smooth":
            predicates.append(lambda r: r.smooth_pic2)
        elif token == "rational":
            predicates.append(lambda r: r.verdict is Verdict.RATIONAL)
        elif token == "nonrational":
            predicates.append(lambda r: r.verdict is Verdict.NONRATIONAL)
        elif token.startswith("chi="):
            try:
                value = int(token[4:])
            except ValueError:
                raise UsageError(f"bad chi filter: {token!r}")
            predicates.append(lambda r, v=value: r.euler == v)
        else:
            raise UsageError(f"unknown filter {token!r}")
    return predicates


def _cmd_enumerate(args) -> int:
    predicates = _make_filters(args.filter or ["all"])
    try:
        stream = enumerate_families(args.max_d1, args.n_min, args.n_max)
        reports = [r for r in stream if all(p(r) for p in predicates)]
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit_reports(reports, args.format)
    if args.explain:
        print(f"# lexicographic in (d1, d2, d3, n); {SMOOTHNESS_EXPLANATION}")
    return 0


def _monomial_text(m: Monomial) -> str:
    factors = [
        f"x{i}^{e}" if e > 1 else f"x{i}"
        for i, e in enumerate(m.exponents, start=1)
        if e > 0
    ]
    return "*".join(factors) if factors else "1"


def _cmd_linsys(args) -> int:
    try:
        scroll = Scroll.normalize(args.degrees)
    except ValueError as exc:
        raise UsageError(str(exc))
    cls = DivisorClass(*args.divisor)
    query = args.query
    try:
        if query == "h0":
            value = scroll.h0(cls)
            if args.format == "json":
                sys.stdout.write(_dumps({"h0": value}))
            else:
                print(value)
        elif query == "monomials":
            monomials = scroll.monomials(cls)
            if args.format == "json":
                sys.stdout.write(_dumps([
                    {"exponents": list(m.exponents), "coeff_degree": m.coeff_degree}
                    for m in monomials
                ]))
            else:
                for m in monomials:
                    print(f"{_monomial_text(m)}  coeff_degree={m.coeff_degree}")
                print(f"count={len(monomials)}")
        elif query == "baselocus":
            j = scroll.base_locus(cls)
            if args.format == "json":
                sys.stdout.write(_dumps({"base_locus": None if j is None else f"Y{j}"}))
            else:
                print("none" if j is None else f"Y{j}")
        elif query.startswith("mult:"):
            try:
                j = int(query[5:])
            except ValueError:
                raise UsageError(f"bad multiplicity query: {query!r}")
            closed = scroll.mult_subscroll(cls, j)
            oracle = scroll.mult_subscroll_oracle(cls, j)
            assert closed == oracle
            if args.format == "json":
                sys.stdout.write(_dumps({"j": j, "closed_form": closed, "oracle": oracle}))
            else:
                print(f"mult(Y{j}) = {closed} (closed-form) = {oracle} (oracle)")
        else:
            raise UsageError(f"unknown query {query!r}")
    except EmptyLinearSystemError as exc:
        raise UsageError(str(exc))
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.explain:
        print(
            "# |aM+bL| is spanned by monomials of exponent sum a whose "
            "coefficient degree b + sum(i_j*d_j) is nonnegative"
        )
    return 0


def _cmd_chow(args) -> int:
    try:
        scroll = Scroll.normalize(args.degrees)
        classes = [DivisorClass(a, b) for a, b in args.divisors]
        value = scroll.intersection_number(classes)
    except ValueError as exc:
        raise UsageError(str(exc))
    if args.format == "json":
        sys.stdout.write(_dumps({"intersection_number": value}))
    else:
        print(value)
    if args.explain:
        print("# expanded against M^k = sum(d_i), M^(k-1).L = 1, L^2 = 0")
    return 0


def _parse_seeds(text: str) -> list[int]:
    seeds = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise UsageError(f"empty seed range {part!r}")
                seeds.extend(range(lo, hi + 1))
            else:
                seeds.append(int(part))
        except ValueError:
            raise UsageError(f"bad seed specification {part!r}")
    if not seeds:
        raise UsageError("no seeds given")
    return seeds


def _cmd_dp2_check(args) -> int:
    seeds = _parse_seeds(args.seeds)
    results = []
    degenerate = []
    for seed in seeds:
        try:
            results.append(dp2_report(seed))
        except DegenerateSeedError:
            degenerate.append(seed)
    histogram = Counter(r.mu for r in results)
    if args.format == "json":
        payload = {
            "reports": [
                {
                    "seed": r.seed,
                    "lambda": r.lambda_,
                    "mu": r.mu,
                    "mu_distinct": r.mu_distinct,
                    "xi": [r.xi_class.a, r.xi_class.b],
                    "two_k_plus_xi": [r.two_k_plus_xi.a, r.two_k_plus_xi.b],
                    "effective": r.two_k_plus_xi_effective,
                    "nonruled": r.nonruled,
                    "generic": r.generic,
                }
                for r in results
            ],
            "degenerate_seeds": degenerate,
            "mu_histogram": {str(mu): count for mu, count in sorted(histogram.items())},
            "all_nonruled": bool(results) and all(r.nonruled for r in results),
        }
        sys.stdout.write(_dumps(payload))
    else:
        for r in results:
            print(
                f"seed={r.seed} lambda={r.lambda_} mu={r.mu} "
                f"distinct={r.mu_distinct} xi=({r.xi_class.a},{r.xi_class.b}) "
                f"2K+xi=({r.two_k_plus_xi.a},{r.two_k_plus_xi.b}) "
                f"effective={_bool_token(r.two_k_plus_xi_effective)} "
                f"nonruled={_bool_token(r.nonruled)} "
                f"generic={_bool_token(r.generic)}"
            )
        for seed in degenerate:
            print(f"seed={seed} DEGENERATE (identically zero discriminant)")
        print("mu histogram: " + ", ".join(
            f"{mu}:{count}" for mu, count in sorted(histogram.items())
        ))
        if results and all(r.nonruled for r in results):
            print("verdict: every non-degenerate draw is nonruled")
    if args.explain:
        print(
            "# the reducible conic fibres lie over the roots of b^2 - 4ac "
            "for coefficient forms of degrees (2, 4, 6); Xi = 6*sigma + mu*f "
            "on F_0 and |2K + Xi| nonempty certifies nonruledness"
        )
    if not results:
        raise UsageError("every seed produced a degenerate draw")
    return 0


def _cmd_picard_check(args) -> int:
    system = conic_fiber_system()
    subsets = invariant_disjoint_subsets(system)
    verified = not subsets
    if args.format == "json":
        payload = {
            "orbits": [list(block) for block in system.orbits],
            "meets": sorted(sorted(pair) for pair in system.meets),
            "invariant_disjoint_subsets": [list(s) for s in subsets],
            "verified": verified,
        }
        sys.stdout.write(_dumps(payload))
    else:
        print("orbits: " + "; ".join(
            "{" + ", ".join(map(str, block)) + "}" for block in system.orbits
        ))
        print("meets: " + ", ".join(
            f"({i},{j})" for i, j in sorted(sorted(pair) for pair in system.meets)
        ))
        if verified:
            print("no invariant disjoint subset; rank-2 combinatorial step verified")
        else:
            for subset in subsets:
                print(f"invariant disjoint subset: {subset}")
    if args.explain:
        print(
            "# brute force over the nonempty proper unions of the three "
            "orbit blocks; each union contains both components of some "
            "reducible fibre, which meet"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("table", "json", "csv"), default="table",
        help="output format (default: table)",
    )
    common.add_argument(
        "--explain", action="store_true",
        help="append the criteria behind the reported verdicts",
    )

    parser = argparse.ArgumentParser(
        prog="dp3scroll",
        description=(
            "Exact rationality classification of degree-3 del Pezzo "
            "fibrations on rank-4 rational scrolls over P^1."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common],
                       help="classify one family (d1, d2, d3, n)")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("d3", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", parents=[common],
                       help="classify every family in a range")
    p.add_argument("max_d1", type=int)
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument(
        "--filter", action="append", metavar="FILTER",
        help="all, smooth, rational, nonrational or chi=<value>; repeatable",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("linsys", parents=[common],
                       help="query the linear system |aM + bL| on a scroll")
    p.add_argument("degrees", type=int, nargs="+",
                   help="scroll degrees (normalized: sorted, shifted to end at 0)")
    p.add_argument("--class", dest="divisor", type=int, nargs=2, required=True,
                   metavar=("A", "B"))
    p.add_argument("--query", required=True,
                   help="h0, monomials, baselocus or mult:<j>")
    p.set_defaults(func=_cmd_linsys)

    p = sub.add_parser("chow", parents=[common],
                       help="intersection number of k classes on a rank-k scroll")
    p.add_argument("degrees", type=int, nargs="+")
    p.add_argument("--class", dest="divisors", type=int, nargs=2, required=True,
                   action="append", metavar=("A", "B"))
    p.set_defaults(func=_cmd_chow)

    p = sub.add_parser("dp2-check", parents=[common],
                       help="discriminant root count for the degree-2 double cover")
    p.add_argument("--seeds", default="1..100",
                   help="comma-separated seeds and lo..hi ranges (default 1..100)")
    p.set_defaults(func=_cmd_dp2_check)

    p = sub.add_parser("picard-check", parents=[common],
                       help="orbit disjointness check on the conic fibre components")
    p.set_defaults(func=_cmd_picard_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
