"""Command-line front end: ``bandwidthkit <subcommand> ...``.

Exit status: 0 success (layout produced and verified), 2 the algorithm
concluded that the bandwidth exceeds the requested bound (or ``verify`` found
it above ``--max``), 1 usage, parse or input error.
"""
from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
import time
from pathlib import Path

from .cat_approx import cat_alg
from .decomposition import is_caterpillar, pathwidth
from .errors import BandwidthKitError, ParameterError
from .formats import format_edge_list, format_layout, read_edge_list, read_layout
from .generators import (
    gen_caterpillar,
    gen_skewed_comb,
    gen_tree_bounded_pw,
    materialize_reduction,
    reduction_sizes,
)
from .graph_core import bandwidth_of_layout, bfs_layout, check_layout, path_tree
from .oracles import (
    exact_bandwidth_bruteforce,
    exact_bandwidth_saxe,
    local_density,
    lower_bounds_report,
    saxe_decide,
)
from .tree_approx import search_smallest_b, tree_alg

EXIT_OK, EXIT_ERROR, EXIT_EXCEEDS = 0, 1, 2

CSV_COLUMNS = ("command", "family", "instance", "digest", "n", "algorithm", "b", "outcome",
               "achieved", "bound", "density_floor", "pathwidth", "bfs_baseline", "seconds")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _positive(text):
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return val


# --------------------------------------------------------------------------
# subcommands


def cmd_approx_cat(args) -> int:
    t = read_edge_list(args.graph)
    res = cat_alg(t, args.b)
    if not res.accepted:
        print(f"bandwidth exceeds {args.b}: {res.reason}", file=sys.stderr)
        return EXIT_EXCEEDS
    bw = bandwidth_of_layout(t, res.layout)
    _emit(format_layout(t, res.layout), args.out)
    print(f"bandwidth {bw} <= 48b^3 = {res.bound} (colours {res.chi})", file=sys.stderr)
    return EXIT_OK


def cmd_approx_tree(args) -> int:
    t = read_edge_list(args.graph)
    if args.b is not None:
        p = max(1, pathwidth(t))
        attempts = [tree_alg(t, p, args.b, tighten_p=args.tighten_p)]
    else:
        attempts = []
        search_smallest_b(t, tighten_p=args.tighten_p, log=attempts)
    if args.trace:
        with open(args.trace, "w") as fh:
            for res in attempts:
                for entry in res.trace:
                    fh.write(json.dumps({"b": res.b, **entry}) + "\n")
    res = attempts[-1]
    if not res.accepted:
        print(f"bandwidth exceeds {res.b}: {res.reason}", file=sys.stderr)
        return EXIT_EXCEEDS
    bw = bandwidth_of_layout(t, res.layout)
    _emit(format_layout(t, res.layout), args.out)
    print(f"b {res.b}, p {res.p}: bandwidth {bw} <= {res.certified_bound} "
          f"(nominal bound {res.ratio_bound})", file=sys.stderr)
    return EXIT_OK


def cmd_exact(args) -> int:
    t = read_edge_list(args.graph)
    if args.b is not None:
        if args.method == "saxe":
            layout = saxe_decide(t, args.b)
        else:
            bw, layout = exact_bandwidth_bruteforce(t)
            layout = layout if bw <= args.b else None
        if layout is None:
            print(f"no: bandwidth exceeds {args.b}")
            return EXIT_EXCEEDS
        print(f"yes: bandwidth {bandwidth_of_layout(t, layout)} <= {args.b}")
    else:
        if args.method == "saxe":
            bw, layout = exact_bandwidth_saxe(t)
        else:
            bw, layout = exact_bandwidth_bruteforce(t)
        print(f"bandwidth {bw}")
    _write_layout_if_asked(t, layout, args.out)
    return EXIT_OK


def _write_layout_if_asked(t, layout, out):
    if out:
        Path(out).write_text(format_layout(t, layout))
    else:
        sys.stdout.write(format_layout(t, layout))


def cmd_density(args) -> int:
    t = read_edge_list(args.graph)
    if t.n < 2:
        print("density 0 (single vertex)")
        return EXIT_OK
    d, w = local_density(t)
    centre = "-".join(str(t.labels[v]) for v in w.center)
    print(f"density {d} ({float(d):.6g})")
    print(f"witness: centre {centre}, radius {w.radius}, {w.count} vertices, diameter {w.diameter}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    t = read_edge_list(args.graph)
    dens, pw = lower_bounds_report(t)
    print(f"density_floor {dens}")
    print(f"pathwidth {pw}")
    print(f"lower_bound {max(dens, pw)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    t = read_edge_list(args.graph)
    layout = read_layout(args.layout, t)
    bw = bandwidth_of_layout(t, layout)
    print("valid layout")
    print(f"bandwidth {bw}")
    if args.max is not None:
        if bw > args.max:
            print(f"FAIL: bandwidth {bw} > {args.max}")
            return EXIT_EXCEEDS
        print(f"PASS: bandwidth {bw} <= {args.max}")
    return EXIT_OK


def _parse_profile(text: str):
    if text.startswith("max="):
        return int(text[4:])
    entries = []
    for item in text.split(","):
        parts = [int(x) for x in item.split("+")]
        entries.append(parts[0] if len(parts) == 1 else parts)
    return entries


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "comb":
        comb = gen_skewed_comb(args.b, args.k, args.slack)
        _emit(format_edge_list(comb.tree), args.out)
    elif kind == "caterpillar":
        t = gen_caterpillar(args.spine, _parse_profile(args.strays), args.seed)
        _emit(format_edge_list(t), args.out)
    elif kind == "tree":
        _emit(format_edge_list(gen_tree_bounded_pw(args.n, args.pw, args.seed)), args.out)
    elif kind == "reduction-sizes":
        sizes = reduction_sizes(args.n, args.k, args.m)
        _emit(json.dumps(sizes.as_json(), indent=2) + "\n", args.out)
    elif kind == "reduction":
        edges = []
        for no, raw in enumerate(Path(args.edges_file).read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].split()
            if not line:
                continue
            if len(line) != 2:
                raise ParameterError(f"line {no}: expected 'u v'")
            edges.append((int(line[0]), int(line[1])))
        inst = materialize_reduction(args.n, args.k, edges, args.budget, args.demo_scale)
        if inst.demo:
            print("demo instance: shortened sectors, no bandwidth guarantee", file=sys.stderr)
        _emit(format_edge_list(inst.tree), args.out)
    return EXIT_OK


# --------------------------------------------------------------------------
# benchmark


def _parse_value(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split("+")]


def _family_instances(spec: str, seed: int):
    """Yield ``(name, tree)`` for a family description ``name[:key=value,...]``."""
    name, _, rest = spec.partition(":")
    params = {}
    for item in filter(None, rest.split(",")):
        key, _, val = item.partition("=")
        params[key] = _parse_value(val)
    one = lambda key, default: params.get(key, [default])[0]  # noqa: E731
    if name == "comb":
        for b in params.get("b", [2]):
            for k in params.get("k", [2]):
                if k <= b:
                    yield f"comb b={b} k={k}", gen_skewed_comb(b, k, one("slack", 1)).tree
    elif name == "path":
        for n in params.get("n", [10]):
            yield f"path n={n}", path_tree(n)
    elif name == "caterpillar":
        for i in range(one("count", 10)):
            for spine in params.get("spine", [30]):
                t = gen_caterpillar(spine, one("max", 5), seed=seed + i)
                yield f"caterpillar spine={spine} seed={seed + i}", t
    elif name == "tree":
        for i in range(one("count", 10)):
            for n in params.get("n", [50]):
                t = gen_tree_bounded_pw(n, one("pw", 2), seed=seed + i)
                yield f"tree n={n} seed={seed + i}", t
    else:
        raise ParameterError(f"unknown family {name!r}")


def _smallest_cat_b(t):
    b = 1
    while True:
        res = cat_alg(t, b)
        if res.accepted:
            return b, res.layout, res.bound
        b += 1


def bench_rows(families, algorithms, seed=0):
    rows = []
    for spec in families:
        fam = spec.partition(":")[0]
        for name, t in _family_instances(spec, seed):
            digest = hashlib.sha1(format_edge_list(t).encode()).hexdigest()[:12]
            dens, pw = lower_bounds_report(t)
            baseline = bandwidth_of_layout(t, bfs_layout(t))
            for alg in algorithms:
                start = time.perf_counter()
                row = {"command": "bench", "family": fam, "instance": name, "digest": digest,
                       "n": t.n, "algorithm": alg, "density_floor": dens, "pathwidth": pw,
                       "bfs_baseline": baseline}
                if alg == "cat" and not is_caterpillar(t):
                    rows.append({**row, "b": "", "outcome": "not-a-caterpillar", "achieved": "",
                                 "bound": "", "seconds": ""})
                    continue
                if alg == "cat":
                    b, layout, bound = _smallest_cat_b(t)
                elif alg == "tree":
                    b, res = search_smallest_b(t)
                    layout, bound = res.layout, res.certified_bound
                elif alg == "bfs":
                    b, layout, bound = "", bfs_layout(t), ""
                else:
                    raise ParameterError(f"unknown algorithm {alg!r}")
                elapsed = time.perf_counter() - start
                check_layout(t, layout)
                rows.append({**row, "b": b, "outcome": "layout",
                             "achieved": bandwidth_of_layout(t, layout), "bound": bound,
                             "seconds": f"{elapsed:.4f}"})
    rows.sort(key=lambda r: (r["digest"], r["algorithm"], r["instance"]))
    return rows


def cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    rows = bench_rows(args.family, algorithms, args.seed)
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            fh.close()
    return EXIT_OK


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bandwidthkit", description="Tree bandwidth approximation toolkit.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("approx-cat", help="caterpillar approximation for a given b")
    p.add_argument("--b", type=_positive, required=True)
    p.add_argument("--out", help="layout file (default: stdout)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_approx_cat)

    p = sub.add_parser("approx-tree", help="tree approximation; scans b when --b is absent")
    p.add_argument("--b", type=_positive)
    p.add_argument("--tighten-p", action="store_true",
                   help="recurse with each component's own pathwidth")
    p.add_argument("--trace", help="write a JSON-lines trace to this file")
    p.add_argument("--out", help="layout file (default: stdout)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_approx_tree)

    p = sub.add_parser("exact", help="exact bandwidth on small trees")
    p.add_argument("--method", choices=("brute", "saxe"), default="brute")
    p.add_argument("--b", type=_positive, help="decide bw <= b instead of computing bw")
    p.add_argument("--out", help="layout file (default: stdout)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("density", help="exact local density")
    p.add_argument("graph")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("bounds", help="density and pathwidth lower bounds")
    p.add_argument("graph")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check a layout file against a graph")
    p.add_argument("--max", type=int, help="fail when the bandwidth exceeds this")
    p.add_argument("graph")
    p.add_argument("layout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate instances")
    gen = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = gen.add_parser("comb", help="skewed comb")
    g.add_argument("--b", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--slack", type=float, default=1)
    g.add_argument("--out")
    g = gen.add_parser("caterpillar", help="caterpillar from a stray profile")
    g.add_argument("--spine", type=int, required=True)
    g.add_argument("--strays", required=True,
                   help="comma list of lengths per spine vertex ('2+3' for two strays), "
                        "or max=L for random lengths up to L")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")
    g = gen.add_parser("tree", help="random tree of bounded pathwidth")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--pw", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")
    g = gen.add_parser("reduction-sizes", help="JSON size census of the reduction")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--out")
    g = gen.add_parser("reduction", help="materialise the reduction tree")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--edges-file", required=True, help="source graph edges 'u v' over 1..n")
    g.add_argument("--demo-scale", type=_positive,
                   help="shorten long stretches to this (no bandwidth guarantee)")
    g.add_argument("--budget", type=int, default=10 ** 6)
    g.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="CSV benchmark over instance families")
    p.add_argument("--family", action="append", required=True,
                   help="e.g. comb:b=2..3,k=2  path:n=10+100+1000  caterpillar:count=5,spine=40,max=8")
    p.add_argument("--algorithms", default="cat,bfs", help="comma list of cat, tree, bfs")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="CSV file (default: stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BandwidthKitError, OSError, ValueError) as exc:
        print(f"bandwidthkit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
