"""Command-line front end: ``totalvis compute|product|generate|verify``.

Exit codes: 0 success, 1 a verification FAIL was found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext

from . import constructors as cons
from .domination import connected_domination_number, domination_number
from .errors import TotalVisError
from .graph import diameter, read_edge_list, require_connected, write_edge_list
from .suites import SUITES, run_suite
from .visibility import (
    compulsory_and_forbidden,
    convex_p3_centers,
    mu_it,
    mu_t,
    simplicial_set,
    twin_partition_of_simplicials,
)

WHAT_TOKENS = ("mu_t", "mu_it", "C", "F", "S", "P", "gamma", "gamma_c", "diam", "twins")

PRODUCTS = {
    "cartesian": cons.cartesian_product,
    "lexicographic": cons.lexicographic_product,
    "join": cons.join_graph,
    "corona": cons.corona_product,
}


class UsageError(Exception):
    pass


def _fmt_set(s) -> str:
    return "{" + ",".join(str(v) for v in sorted(s)) + "}"


def _compute(g, tokens: list[str], threads: int) -> dict:
    require_connected(g)
    out: dict = {}
    best = None
    cf = None
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else nullcontext()
    with pool as executor:
        for tok in tokens:
            if tok in ("mu_t", "C", "F") and best is None:
                best = mu_t(g)
            if tok in ("C", "F") and cf is None:
                cf = compulsory_and_forbidden(g, best, executor=executor)
            if tok == "mu_t":
                out[tok] = {"value": best.value, "witness": sorted(best.witness)}
            elif tok == "mu_it":
                r = mu_it(g)
                out[tok] = {"value": r.value, "witness": sorted(r.witness)}
            elif tok == "C":
                out[tok] = sorted(cf[0])
            elif tok == "F":
                out[tok] = sorted(cf[1])
            elif tok == "S":
                out[tok] = sorted(simplicial_set(g))
            elif tok == "P":
                out[tok] = sorted(convex_p3_centers(g))
            elif tok == "gamma":
                r = domination_number(g)
                out[tok] = {"value": r.value, "witness": sorted(r.witness)}
            elif tok == "gamma_c":
                r = connected_domination_number(g)
                out[tok] = {"value": r.value, "witness": sorted(r.witness)}
            elif tok == "diam":
                out[tok] = diameter(g)
            elif tok == "twins":
                out[tok] = [sorted(c) for c in twin_partition_of_simplicials(g)]
    return out


def _print_compute(result: dict) -> None:
    for tok, val in result.items():
        if isinstance(val, dict):
            print(f"{tok}={val['value']} witness={_fmt_set(val['witness'])}")
        elif tok == "diam":
            print(f"diam={val}")
        elif tok == "twins":
            print("twins=[" + ",".join(_fmt_set(c) for c in val) + "]")
        else:
            print(f"{tok}={_fmt_set(val)}")


def cmd_compute(args) -> int:
    tokens = [t.strip() for t in args.what.split(",") if t.strip()]
    bad = [t for t in tokens if t not in WHAT_TOKENS]
    if bad or not tokens:
        raise UsageError(f"unknown --what token(s) {bad}; choose from {','.join(WHAT_TOKENS)}")
    result = _compute(read_edge_list(args.input), tokens, args.threads)
    if args.json:
        print(json.dumps(result))
    else:
        _print_compute(result)
    return 0


def cmd_product(args) -> int:
    g = PRODUCTS[args.op](read_edge_list(args.left), read_edge_list(args.right))
    write_edge_list(g, args.out)
    return 0


def cmd_generate(args) -> int:
    spec = cons.FamilySpec(args.family, n=args.n, m=args.m, seed=args.seed, p=args.p)
    write_edge_list(cons.generate(spec), args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, max_n=args.max_n, seed=args.seed, threads=args.threads)
    if args.json:
        print(report.to_json())
    else:
        counts = report.counts()
        per_claim: dict[str, Counter] = {}
        for v in report.verdicts:
            per_claim.setdefault(v.claim, Counter())[v.status] += 1
        print(f"suite={report.suite} seed={report.seed} instances={report.instances}")
        print(f"{'claim':<26}{'PASS':>8}{'FAIL':>8}{'N/A':>8}")
        for claim, c in per_claim.items():
            print(f"{claim:<26}{c['PASS']:>8}{c['FAIL']:>8}{c['NOT_APPLICABLE']:>8}")
        print(f"total: PASS={counts['PASS']} FAIL={counts['FAIL']} NOT_APPLICABLE={counts['NOT_APPLICABLE']}"
              f" ({report.duration_ms} ms)")
        for v in report.verdicts:
            if v.status == "FAIL":
                print(f"FAIL {v.claim} on {v.instance}: lhs={v.lhs} rhs={v.rhs} {v.values}")
    if report.failed:
        print(f"verification FAILED: {report.counts()['FAIL']} failing verdict(s)", file=sys.stderr)
        return 1
    return 0


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totalvis", description="Exact total mutual-visibility toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute invariants of an edge-list graph")
    p.add_argument("--input", required=True)
    p.add_argument("--what", required=True, help=f"comma-separated subset of {','.join(WHAT_TOKENS)}")
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("product", help="build a graph product")
    p.add_argument("--op", required=True, choices=sorted(PRODUCTS))
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("generate", help="emit a generated family member")
    p.add_argument("--family", required=True, choices=cons.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5, help="edge probability for random_connected")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, TotalVisError, OSError) as exc:
        print(f"totalvis {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
