"""Command-line front door: solving (with cross-checks), random game
generation, tree construction/checking, bound tables, and lift benchmarks.

Exit codes: 0 success, 1 input error, 2 cross-check disagreement.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

from . import bounds, game_core, oracle, progress_measure, universal_tree, zielonka
from .game_core import ParityGame, PGParseError, Region
from .progress_measure import LiftStats

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DISAGREE = 2


@dataclass
class RunReport:
    source: str
    algorithm: str
    tree_kind: str | None = None
    tree_leaves: int | None = None
    region: Region | None = None
    stats: LiftStats | None = None
    elapsed: float = 0.0
    agreement: dict[str, bool] = field(default_factory=dict)


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


def _read_game(path: str) -> ParityGame:
    text = sys.stdin.read() if path == "-" else open(path).read()
    g = game_core.parse_pgsolver(text)
    violations = game_core.validate_game(g)
    if violations:
        raise ValueError("; ".join(violations))
    return g


def _load_tree(spec: str, g: ParityGame):
    """Returns (tree, kind, known_universal)."""
    h = g.d // 2
    if spec == "naive":
        return universal_tree.make_naive_tree(g.n, h), "naive", True
    if spec == "succinct":
        return universal_tree.make_succinct_tree(g.n, h), "succinct", True
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        codes = []
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if line:
                    codes.append(tuple(int(x) for x in line.split(",")))
        return universal_tree.tree_from_leaf_codes(codes, h), f"file:{path}", False
    raise ValueError(f"unknown tree spec {spec!r} (use naive, succinct, or file:PATH)")


def _parse_policy(spec: str) -> tuple[str, int | None]:
    if spec.startswith("random:"):
        return "random", int(spec.split(":", 1)[1])
    if spec in ("fifo", "roundrobin"):
        return spec, None
    raise ValueError(f"unknown policy {spec!r}")


def _print_region(region: Region, fmt: str) -> None:
    eve = " ".join(str(v) for v in sorted(region.eve_wins))
    adam = " ".join(str(v) for v in sorted(region.adam_wins))
    if fmt == "tsv":
        print(f"eve_wins\t{eve}")
        print(f"adam_wins\t{adam}")
    else:
        print(f"Eve wins:  {{{eve}}}")
        print(f"Adam wins: {{{adam}}}")


def cmd_solve(args) -> int:
    try:
        g = _read_game(args.input)
    except (OSError, PGParseError, ValueError) as exc:
        return _fail(str(exc))

    if args.cross_check:
        return _cross_check(g, args)

    started = time.perf_counter()
    report = RunReport(source=args.input, algorithm=args.algorithm)
    try:
        if args.algorithm == "brute":
            report.region = oracle.solve_bruteforce(g)
        elif args.algorithm == "zielonka":
            report.region = zielonka.solve_zielonka(g)
            if args.emit_signature:
                mu = zielonka.extract_signature(g)
                for v in g.vertices():
                    val = mu[v]
                    text = "TOP" if val == zielonka.TOP else ",".join(map(str, val.values))
                    print(f"{v}\t{text}")
        else:
            tree, kind, known = _load_tree(args.tree, g)
            if not known:
                print("warning: tree loaded from file; universality not guaranteed, "
                      "the computed region may under-approximate Eve's",
                      file=sys.stderr)
            policy, seed = _parse_policy(args.policy)
            mu, region, stats = progress_measure.value_iteration(
                g, tree, policy=policy, seed=seed)
            report.region = region
            report.tree_kind = kind
            report.tree_leaves = universal_tree.leaf_count(tree)
            report.stats = stats
            if args.stats:
                for v in g.vertices():
                    val = mu[v]
                    text = "TOP" if val == universal_tree.TOP else ",".join(map(str, val))
                    print(f"{v}\t{stats.per_vertex[v]}\t{text}")
    except (ValueError, universal_tree.EnumerationGuardError) as exc:
        return _fail(str(exc))
    report.elapsed = time.perf_counter() - started
    _print_region(report.region, args.format)
    if report.tree_leaves is not None and args.format != "tsv":
        print(f"tree: {report.tree_kind} ({report.tree_leaves} leaves), "
              f"{report.stats.total} lifts, {report.elapsed:.4f}s")
    return EXIT_OK


def _cross_check(g: ParityGame, args) -> int:
    h = g.d // 2
    results: dict[str, Region] = {}
    results["zielonka"] = zielonka.solve_zielonka(g)
    for kind in ("naive", "succinct"):
        tree, _, _ = _load_tree(kind, g)
        _, region, _ = progress_measure.value_iteration(g, tree)
        results[f"vi-{kind}"] = region
    if args.tree.startswith("file:"):
        tree, kind, _ = _load_tree(args.tree, g)
        print("warning: tree loaded from file; universality not guaranteed",
              file=sys.stderr)
        _, region, _ = progress_measure.value_iteration(g, tree)
        results[f"vi-{kind}"] = region
    try:
        results["brute"] = oracle.solve_bruteforce(g)
    except oracle.OracleSizeError:
        pass
    regions = list(results.values())
    agree = all(r.eve_wins == regions[0].eve_wins for r in regions)
    for name, region in results.items():
        eve = " ".join(str(v) for v in sorted(region.eve_wins))
        print(f"{name}\t{eve}")
    if agree:
        print("cross-check: agreement")
        return EXIT_OK
    print("cross-check: DISAGREEMENT, offending game follows", file=sys.stderr)
    sys.stderr.write(game_core.write_pgsolver(g))
    return EXIT_DISAGREE


def cmd_gen(args) -> int:
    try:
        g = game_core.generate_random_game(
            args.n, args.d, (args.min_deg, args.max_deg), args.seed)
    except ValueError as exc:
        return _fail(str(exc))
    text = game_core.write_pgsolver(g)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_tree(args) -> int:
    try:
        if args.tree_cmd == "build":
            if args.kind == "naive":
                t = universal_tree.make_naive_tree(args.n, args.height)
            else:
                t = universal_tree.make_succinct_tree(args.n, args.height)
            print(f"{args.kind}({args.n},{args.height}): "
                  f"{universal_tree.leaf_count(t)} leaves")
            if args.dump:
                sys.stdout.write(universal_tree.dump_leaf_codes(t))
        elif args.tree_cmd == "check":
            codes = []
            with open(args.file) as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        codes.append(tuple(int(x) for x in line.split(",")))
            t = universal_tree.tree_from_leaf_codes(codes, args.height)
            ok, witness = universal_tree.is_universal(t, args.n, args.height)
            if ok:
                print(f"universal for ({args.n},{args.height})")
            else:
                print(f"NOT universal for ({args.n},{args.height}); witness:")
                sys.stdout.write(universal_tree.dump_leaf_codes(witness))
        else:  # minimal
            size, witness = universal_tree.find_minimal_universal(args.n, args.height)
            print(size)
            if args.dump:
                sys.stdout.write(universal_tree.dump_leaf_codes(witness))
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    return EXIT_OK


def cmd_bounds(args) -> int:
    table = bounds.BoundTable()
    rows = list(table.rows(args.n_max, args.h_max))
    if args.format == "markdown":
        print("| n | h | f(n,h) | g(n,h) |")
        print("|---|---|--------|--------|")
        for n, h, f, g in rows:
            print(f"| {n} | {h} | {f} | {g} |")
    else:
        print("n\th\tf\tg")
        for n, h, f, g in rows:
            print(f"{n}\t{h}\t{f}\t{g}")
    return EXIT_OK


def cmd_bench(args) -> int:
    print("seed\ttree\tleaves\tlifts\tseconds")
    totals: dict[str, int] = {"naive": 0, "succinct": 0}
    for seed in range(args.seed, args.seed + args.count):
        g = game_core.generate_random_game(
            args.n, args.d, (args.min_deg, args.max_deg), seed)
        for kind in ("naive", "succinct"):
            tree, _, _ = _load_tree(kind, g)
            _, _, stats = progress_measure.value_iteration(g, tree)
            totals[kind] += stats.total
            print(f"{seed}\t{kind}\t{universal_tree.leaf_count(tree)}\t"
                  f"{stats.total}\t{stats.duration:.4f}")
    print(f"total\tnaive\t\t{totals['naive']}\t")
    print(f"total\tsuccinct\t\t{totals['succinct']}\t")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paritytree",
        description="Parity game solvers parameterized by universal trees")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="solve a game from a PGSolver-format file")
    p.add_argument("-i", "--input", required=True, help="input file, '-' for stdin")
    p.add_argument("--algorithm", choices=("brute", "zielonka", "vi"), default="vi")
    p.add_argument("--tree", default="succinct",
                   help="naive | succinct | file:PATH (vi only)")
    p.add_argument("--policy", default="fifo",
                   help="fifo | roundrobin | random:SEED (vi only)")
    p.add_argument("--stats", action="store_true",
                   help="per-vertex lift counts and final values (TSV)")
    p.add_argument("--cross-check", action="store_true",
                   help="run zielonka + vi(naive) + vi(succinct) (+ brute when small)")
    p.add_argument("--emit-signature", action="store_true",
                   help="with --algorithm zielonka: print the extracted signature")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a seeded random game")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--min-deg", type=int, default=1)
    p.add_argument("--max-deg", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tree", help="build/check universal trees")
    tsub = p.add_subparsers(dest="tree_cmd", required=True)
    b = tsub.add_parser("build")
    b.add_argument("--kind", choices=("naive", "succinct"), required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--h", dest="height", type=int, required=True)
    b.add_argument("--dump", action="store_true")
    c = tsub.add_parser("check")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--h", dest="height", type=int, required=True)
    c.add_argument("--file", required=True)
    m = tsub.add_parser("minimal")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--h", dest="height", type=int, required=True)
    m.add_argument("--dump", action="store_true")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("bounds", help="f/g bound tables")
    bsub = p.add_subparsers(dest="bounds_cmd", required=True)
    t = bsub.add_parser("table")
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--h-max", type=int, required=True)
    t.add_argument("--format", choices=("tsv", "markdown"), default="tsv")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("bench", help="lift counts per tree over a seed sweep")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--d", type=int, default=6)
    p.add_argument("--min-deg", type=int, default=1)
    p.add_argument("--max-deg", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
