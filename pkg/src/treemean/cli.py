"""Command-line entry point.

Subcommands: gen, stats, oracle, contract, classify, verify, extremal,
asymptotic.  Common flags --format/--out/--shards/--seed are accepted by
every subcommand.  Exit codes: 0 all checks passed, 1 violation found,
2 usage or configuration error, 3 resource budget exceeded.

The MST_MAX_N environment variable caps generation budgets (default 14).
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from . import contraction, generate, inequalities, oracle, stats, tree
from . import __version__
from ._backend import BACKEND
from .errors import BudgetExceededError, TreeError
from .report import FORMATS, ViolationReport, emit_report, q_approx, q_str

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _write(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_tree(path: str) -> tree.Tree:
    with open(path, "r", encoding="utf-8") as fh:
        return tree.parse_tree(fh.read())


def _check_budget(n: int, what: str = "order"):
    if n > generate.max_order():
        raise BudgetExceededError(
            f"{what} {n} exceeds the generation budget {generate.max_order()} "
            f"(set MST_MAX_N to raise it)")


# ---------------------------------------------------------------------------
# informational subcommands

def _cmd_gen(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    _check_budget(args.n)
    if args.sample is not None:
        if args.sample < 1:
            print("error: --sample must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        trees = [generate.random_tree(args.n, args.seed + i) for i in range(args.sample)]
    else:
        trees = list(generate.all_trees(args.n))
    if args.dir:
        import os

        os.makedirs(args.dir, exist_ok=True)
        width = len(str(len(trees)))
        for i, t in enumerate(trees):
            path = os.path.join(args.dir, f"tree_{i:0{width}d}.tree")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(tree.format_tree(t))
        print(f"wrote {len(trees)} trees to {args.dir}", file=sys.stderr)
        return EXIT_PASS
    stream = "%\n".join(tree.format_tree(t) for t in trees)
    _write(args, stream)
    return EXIT_PASS


def _stats_payload(s: stats.SubtreeStats, t: tree.Tree, root: int) -> dict:
    mu_t = Fraction(s.r_t, s.n_t)
    mu_v = Fraction(s.r_v, s.n_v)
    payload = {
        "n": t.n,
        "root": root,
        "n_v": s.n_v,
        "r_v": s.r_v,
        "n_t": s.n_t,
        "r_t": s.r_t,
        "global_mean": q_str(mu_t),
        "global_mean_approx": q_approx(mu_t),
        "local_mean": q_str(mu_v),
        "local_mean_approx": q_approx(mu_v),
    }
    if s.n_t > s.n_v:
        mu_rest = Fraction(s.r_t - s.r_v, s.n_t - s.n_v)
        payload["mean_without_root"] = q_str(mu_rest)
        payload["mean_without_root_approx"] = q_approx(mu_rest)
    else:
        payload["mean_without_root"] = None
        payload["mean_without_root_approx"] = None
    return payload


def _emit_payload(args, payload: dict) -> None:
    if args.format == "json":
        import json

        _write(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        import csv
        import io

        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(payload))
        writer.writerow([payload[k] for k in payload])
        _write(args, out.getvalue())
    else:
        _write(args, "".join(f"{k} = {v}\n" for k, v in payload.items()))


def _cmd_stats(args) -> int:
    t = _load_tree(args.tree)
    if not (0 <= args.root < t.n):
        print(f"error: root {args.root} is not a vertex of the tree", file=sys.stderr)
        return EXIT_USAGE
    s = stats.subtree_stats(t, args.root)
    _emit_payload(args, _stats_payload(s, t, args.root))
    return EXIT_PASS


def _cmd_oracle(args) -> int:
    t = _load_tree(args.tree)
    if not (0 <= args.root < t.n):
        print(f"error: root {args.root} is not a vertex of the tree", file=sys.stderr)
        return EXIT_USAGE
    s = oracle.oracle_stats(t, args.root)
    profile = oracle.enumerate_profile(t)
    payload = _stats_payload(s, t, args.root)
    histogram = {str(k): profile.count_by_order[k]
                 for k in sorted(profile.count_by_order)}
    if args.format == "json":
        payload["count_by_order"] = histogram
        _emit_payload(args, payload)
    else:
        _emit_payload(args, payload)
        hist = "order,count\n" + "".join(f"{k},{v}\n" for k, v in histogram.items())
        if not args.out:
            sys.stdout.write(hist)
    return EXIT_PASS


def _cmd_contract(args) -> int:
    t = _load_tree(args.tree)
    report = contraction.contraction_difference(t, tuple(args.edge))
    contracted = tree.contract_edge(t, tuple(args.edge))
    payload = {
        "n": t.n,
        "edge": f"{report.edge[0]} {report.edge[1]}",
        "edge_class": report.edge_class.value,
        "difference": q_str(report.difference),
        "difference_approx": q_approx(report.difference),
        "excess_over_one_third": q_str(report.excess),
        "contracted": tree.canonical_string(contracted),
    }
    _emit_payload(args, payload)
    return EXIT_PASS


def _cmd_classify(args) -> int:
    t = _load_tree(args.tree)
    edges = [tuple(args.edge)] if args.edge else list(t.edges)
    rows = []
    for e in edges:
        rows.append((e, tree.classify_edge(t, e).value))
    if args.format == "json":
        import json

        payload = {"n": t.n,
                   "edges": [{"edge": f"{u} {v}", "class": c} for (u, v), c in rows]}
        _write(args, json.dumps(payload, indent=2) + "\n")
    else:
        _write(args, "".join(f"{u} {v} {c}\n" for (u, v), c in rows))
    return EXIT_PASS


def _cmd_extremal(args) -> int:
    if args.n < 2:
        print("error: --n must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    if args.mode == "exhaustive":
        _check_budget(args.n)
    result = contraction.extremal_scan(args.n, mode=args.mode)
    payload = {
        "n": args.n,
        "mode": args.mode,
        "edge": f"{result.edge[0]} {result.edge[1]}",
        "difference": q_str(result.difference),
        "difference_approx": q_approx(result.difference),
        "difference_over_n": q_str(result.ratio),
        "difference_over_n_approx": q_approx(result.ratio),
        "tree": tree.canonical_string(result.tree),
    }
    _emit_payload(args, payload)
    return EXIT_PASS


def _cmd_asymptotic(args) -> int:
    side1 = tree.RootedTree(_load_tree(args.t1), args.root1)
    side2 = tree.RootedTree(_load_tree(args.t2), args.root2)
    try:
        l_values = [int(x) for x in args.l.split(",") if x.strip()]
    except ValueError:
        print(f"error: --l must be a comma-separated integer list, got {args.l!r}",
              file=sys.stderr)
        return EXIT_USAGE
    series = contraction.asymptotic_scan(side1, side2, l_values)
    if args.format == "json":
        import json

        payload = {
            "l_values": l_values,
            "excess": [{"l": l, "value": q_str(v), "approx": q_approx(v)}
                       for l, v in series],
        }
        _write(args, json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        _write(args, "l,excess,approx\n" + "".join(
            f"{l},{q_str(v)},{q_approx(v)}\n" for l, v in series))
    else:
        _write(args, "".join(f"l={l} excess={q_str(v)} ({q_approx(v)})\n"
                             for l, v in series))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# verification campaigns

CHECK_NAMES = ("inequalities", "theorem", "local-global")


def _inequality_report(n_max: int, shards: int) -> ViolationReport:
    t0 = time.perf_counter()
    universal = inequalities.scan_corpus(n_max, inequalities.UNIVERSAL_IDS,
                                         scope="all-roots", shard_count=shards)
    special = inequalities.scan_corpus(n_max, inequalities.ROOT_DEG2_IDS,
                                       scope="deg-ge-2-roots", shard_count=shards)
    violations = [dict(v) for v in universal.violations if not v["excluded"]]
    violations += [dict(v) for v in special.violations if not v["excluded"]]
    exclusion_hits = [dict(v) for v in special.violations if v["excluded"]]
    expected = inequalities.expected_violations(n_max, inequalities.ROOT_DEG2_IDS)
    observed = {(inequalities.InequalityId(v["check"]), v["excluded"])
                for v in exclusion_hits}
    for id, name in sorted(expected - observed, key=lambda p: (p[0].value, p[1])):
        violations.append({"n": None, "index": None, "root": None,
                           "check": id.value, "margin": None, "excluded": None,
                           "tree": f"missing expected excluded violation at {name}"})
    return ViolationReport(
        campaign="inequalities",
        params={"max_n": n_max, "shards": shards},
        corpus={
            "trees": universal.trees,
            "rooted_cases_all_roots": universal.rooted_cases,
            "rooted_cases_deg_ge_2": special.rooted_cases,
        },
        checks=[i.value for i in inequalities.InequalityId],
        violations=violations,
        extras={
            "exclusion_hits": exclusion_hits,
            "exclusions_match_expected": observed == expected,
            "min_regular_root_count_deg_ge_2": special.min_regular_root_count,
        },
        wall_time_s=time.perf_counter() - t0,
    )


def _theorem_report(n_max: int, shards: int) -> ViolationReport:
    t0 = time.perf_counter()
    scan = contraction.verify_theorem(n_max, shard_count=shards)
    return ViolationReport(
        campaign="theorem",
        params={"max_n": n_max, "shards": shards},
        corpus={"trees": scan.trees, "edges": scan.edges_checked},
        checks=["drop-at-least-one-third", "equality-iff-path",
                "internal-edges-strict"],
        violations=scan.violations,
        extras={"equality_edges": scan.equality_edges},
        wall_time_s=time.perf_counter() - t0,
    )


def _local_global_report(n_max: int, shards: int) -> ViolationReport:
    t0 = time.perf_counter()
    scan = stats.scan_mean_properties(n_max, shard_count=shards)
    return ViolationReport(
        campaign="local-global",
        params={"max_n": n_max, "shards": shards},
        corpus={"trees": scan.trees, "rooted_cases": scan.rooted_cases},
        checks=["local-strictly-above-global", "local-global-gap-bound",
                "mean-without-vertex-bound"],
        violations=scan.violations,
        wall_time_s=time.perf_counter() - t0,
    )


def _cmd_verify(args) -> int:
    if args.max_n < 1:
        print("error: --max-n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.shards < 1:
        print("error: --shards must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    _check_budget(args.max_n, what="--max-n")
    selected = CHECK_NAMES if args.checks == "all" else tuple(
        c.strip() for c in args.checks.split(","))
    unknown = [c for c in selected if c not in CHECK_NAMES]
    if unknown:
        print(f"error: unknown checks {unknown}; known: "
              f"{', '.join(CHECK_NAMES)} or 'all'", file=sys.stderr)
        return EXIT_USAGE

    builders = {"inequalities": _inequality_report,
                "theorem": _theorem_report,
                "local-global": _local_global_report}
    reports = [builders[name](args.max_n, args.shards) for name in selected]
    text = "".join(emit_report(r, args.format) for r in reports)
    _write(args, text)
    ok = all(r.passed for r in reports)
    return EXIT_PASS if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text",
                        help="output format (default: text)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")
    common.add_argument("--shards", type=int, default=1,
                        help="partition corpus scans into this many shards")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subcommands")

    parser = argparse.ArgumentParser(
        prog="treemean",
        description="Exact mean subtree order statistics and "
                    "edge-contraction verification campaigns.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} (kernels: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common],
                       help="emit all trees of an order (or random samples)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample", type=int, default=None,
                   help="emit this many seeded random labeled trees instead")
    p.add_argument("--dir", default=None,
                   help="write one file per tree into this directory")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("stats", parents=[common],
                       help="exact quadruple and means of a tree")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("oracle", parents=[common],
                       help="the same statistics by brute-force enumeration")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("contract", parents=[common],
                       help="contract one edge and report the mean drop")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--edge", type=int, nargs=2, required=True, metavar=("U", "V"))
    p.set_defaults(func=_cmd_contract)

    p = sub.add_parser("classify", parents=[common],
                       help="classify edges as internal / on a pendant path")
    p.add_argument("--tree", required=True, metavar="FILE")
    p.add_argument("--edge", type=int, nargs=2, default=None, metavar=("U", "V"))
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", parents=[common],
                       help="exhaustive verification campaigns")
    p.add_argument("--checks", default="all",
                   help="comma list of: inequalities, theorem, local-global; "
                        "or 'all' (default)")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extremal", parents=[common],
                       help="largest contraction difference at an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("family", "exhaustive"), default="family")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("asymptotic", parents=[common],
                       help="excess over 1/3 along a lengthening internal path")
    p.add_argument("--t1", required=True, metavar="FILE")
    p.add_argument("--t2", required=True, metavar="FILE")
    p.add_argument("--root1", type=int, default=0)
    p.add_argument("--root2", type=int, default=0)
    p.add_argument("--l", required=True,
                   help="comma-separated ascending path parameters, e.g. 1,10,100")
    p.set_defaults(func=_cmd_asymptotic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
