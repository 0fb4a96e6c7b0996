"""Command-line surface: group info, graph exports, distances, verification runs.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

import argparse
import concurrent.futures
import json
import sys
from collections import Counter

from . import exports
from .analysis import verify_theorem
from .graph import build_graph, distance
from .groups import (
    OrderCapExceeded,
    PermutationGroup,
    catalog,
    is_solvable,
    load_group,
    standard_catalog,
)
from .perm import parse_cycles
from .primes import prime_factors

CLI_CAP = 20_000


class UsageError(Exception):
    pass


def _add_spec_args(sub):
    sub.add_argument("--catalog", metavar="NAME", help="catalog group name")
    sub.add_argument("--n", type=int, default=None, help="parameter for parametric catalog groups")
    sub.add_argument("--file", metavar="PATH", help="group file (degree: / gen: lines)")


def _resolve_group(args):
    if bool(args.catalog) == bool(args.file):
        raise UsageError("exactly one of --catalog or --file is required")
    if args.catalog:
        return catalog(args.catalog, args.n)
    return load_group(args.file)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args):
    group = _resolve_group(args)
    table = group.element_table(args.cap)
    info = {
        "name": group.name,
        "degree": group.degree,
        "order": len(table.elements),
        "primes": sorted(prime_factors(len(table.elements))),
        "solvable": is_solvable(group),
        "class_count": len(table.class_reps),
        "order_histogram": dict(sorted(Counter(table.order_of).items())),
    }
    _emit(json.dumps(info, indent=2) + "\n", args.out)
    return 0


def cmd_graph(args):
    if args.format not in exports.FORMATS:
        raise UsageError(f"unknown format {args.format!r}")
    group = _resolve_group(args)
    table = group.element_table(args.cap)
    graph = build_graph(table, k=args.k, jobs=args.jobs)
    _emit(exports.FORMATS[args.format](graph), args.out)
    summary = json.dumps(exports.summary(graph), sort_keys=True) + "\n"
    if args.out:
        with open(args.out + ".summary.json", "w", encoding="utf-8") as fh:
            fh.write(summary)
    else:
        sys.stderr.write(summary)
    return 0


def cmd_distance(args):
    group = _resolve_group(args)
    table = group.element_table(args.cap)
    x = parse_cycles(args.x, group.degree)
    y = parse_cycles(args.y, group.degree)
    for label, p in (("x", x), ("y", y)):
        if not group.contains(p):
            raise UsageError(f"element {label} = {getattr(args, label)!r} is not in the group")
    graph = build_graph(table, k=args.k, jobs=args.jobs)
    i = table.index_of[x]
    j = table.index_of[y]
    if graph.isolated[i] or graph.isolated[j]:
        print("isolated")
        return 0
    d = distance(graph, i, j)
    print("unreachable" if d is None else d)
    return 0


def _verify_one(payload):
    label, gens, degree, cap = payload
    group = PermutationGroup(gens, degree=degree, name=label)
    report = verify_theorem(group, cap=cap, name=label)
    return report.to_dict(), report.ok


def cmd_verify(args):
    if args.catalog_all:
        groups = standard_catalog()
    else:
        groups = [_resolve_group(args)]
    payloads = [(g.name, g.generators, g.degree, args.cap) for g in groups]
    results = []
    writer = sys.stdout
    out_fh = open(args.out, "w", encoding="utf-8") if args.out else None
    try:
        target = out_fh or writer
        if args.jobs > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(_verify_one, p) for p in payloads]
                if args.stable:
                    iterator = futures
                else:
                    iterator = concurrent.futures.as_completed(futures)
                for fut in iterator:
                    results.append(fut.result())
                    target.write(json.dumps(results[-1][0], sort_keys=True) + "\n")
                    target.flush()
        else:
            for p in payloads:
                try:
                    results.append(_verify_one(p))
                except OrderCapExceeded as exc:
                    results.append(({"group": p[0], "error": str(exc)}, True))
                target.write(json.dumps(results[-1][0], sort_keys=True) + "\n")
                target.flush()
    finally:
        if out_fh:
            out_fh.close()
    return 0 if all(ok for _, ok in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="triprime",
        description="Graphs on finite groups with edges where two elements "
        "generate a subgroup whose order has at least k distinct prime divisors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="group summary: order, primes, solvability, classes")
    _add_spec_args(p_info)
    p_info.add_argument("--cap", type=int, default=CLI_CAP)
    p_info.add_argument("--out", default=None)
    p_info.set_defaults(func=cmd_info)

    p_graph = sub.add_parser("graph", help="export the graph")
    _add_spec_args(p_graph)
    p_graph.add_argument("--k", type=int, default=3)
    p_graph.add_argument("--format", default="dot", help="dot | graphml | csv | json")
    p_graph.add_argument("--cap", type=int, default=CLI_CAP)
    p_graph.add_argument("--jobs", type=int, default=1)
    p_graph.add_argument("--out", default=None)
    p_graph.set_defaults(func=cmd_graph)

    p_dist = sub.add_parser("distance", help="distance between two elements, by cycle notation")
    _add_spec_args(p_dist)
    p_dist.add_argument("x", help="first element in cycle notation")
    p_dist.add_argument("y", help="second element in cycle notation")
    p_dist.add_argument("--k", type=int, default=3)
    p_dist.add_argument("--cap", type=int, default=CLI_CAP)
    p_dist.add_argument("--jobs", type=int, default=1)
    p_dist.set_defaults(func=cmd_distance)

    p_verify = sub.add_parser("verify", help="run the verification harness")
    _add_spec_args(p_verify)
    p_verify.add_argument("--catalog-all", action="store_true", help="verify the whole catalog")
    p_verify.add_argument("--cap", type=int, default=CLI_CAP)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--stable", action="store_true", help="report in catalog order")
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError, OrderCapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
