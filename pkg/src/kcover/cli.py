"""Command-line front end: solve, check, reduce, goodify, gen, bench.

Exit codes: 0 success, 1 invalid input, 2 failed check or validation,
3 inconclusive brute-force search.  Verbosity comes from the COVER_LOG
environment variable (quiet, info, trace).
"""

from __future__ import annotations

import argparse
import csv
import logging
import math
import os
import sys
import time
from pathlib import Path

from . import io
from .chordal import optimal_chordal_31
from .errors import InputError
from .generators import (
    gen_random_3partition,
    gen_random_chordal,
    gen_random_setcover,
    gen_random_tree,
)
from .graph import CoverSpec, validate_completion
from .oracle import InconclusiveError, OracleBudget, brute_min_completion
from .reductions import (
    build_setcover_k,
    build_setcover_k3,
    build_spider,
    goodify_3,
    goodify_k,
)
from .trees import (
    RootedTree,
    approx_tree_4,
    approx_tree_k,
    optimal_tree_31,
    spider_graph,
    worst_case_spider,
)

log = logging.getLogger("kcover")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_INCONCLUSIVE = 3

_LOG_LEVELS = {"quiet": logging.WARNING, "info": logging.INFO, "trace": logging.DEBUG}


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through the normal error path."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(f"{self.prog}: {message}")


def _setup_logging() -> None:
    name = os.environ.get("COVER_LOG", "quiet").lower()
    if name not in _LOG_LEVELS:
        raise InputError(
            f"COVER_LOG must be one of {', '.join(_LOG_LEVELS)}; got {name!r}"
        )
    logging.basicConfig(
        level=_LOG_LEVELS[name],
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _solver_spec(args: argparse.Namespace) -> CoverSpec:
    if args.alg == "tree-approx":
        if args.k is None:
            raise InputError("tree-approx needs --k")
        return CoverSpec(args.k, 1)
    if args.alg == "tree-approx4":
        return CoverSpec(4, 1)
    if args.alg == "brute":
        return CoverSpec(args.k if args.k is not None else 3, args.l)
    return CoverSpec(3, 1)


def _cmd_solve(args: argparse.Namespace) -> int:
    g = io.read_graph(args.infile)
    spec = _solver_spec(args)
    started = time.perf_counter()
    if args.alg == "tree-opt":
        completion = optimal_tree_31(RootedTree.from_graph(g))
    elif args.alg == "chordal-opt":
        completion = optimal_chordal_31(g)
    elif args.alg == "tree-approx":
        completion = approx_tree_k(RootedTree.from_graph(g), spec.k)
    elif args.alg == "tree-approx4":
        completion = approx_tree_4(RootedTree.from_graph(g))
    else:
        budget = OracleBudget(max_additions=args.max_additions, max_nodes=args.max_nodes)
        result = brute_min_completion(g, spec, budget)
        log.info("brute search visited %d nodes", result.nodes)
        if not result.ok:
            print(
                f"inconclusive: no completion within {budget.max_additions} "
                f"additions proven; at least {result.lower_bound} needed",
                file=sys.stderr,
            )
            return EXIT_INCONCLUSIVE
        completion = result.completion
    elapsed = (time.perf_counter() - started) * 1000.0
    log.info("%s solved n=%d m=%d in %.1f ms", args.alg, g.n, g.m, elapsed)
    io.write_completion(args.out, completion)
    print(f"additions={len(completion)}")
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = io.read_graph(args.graph)
    completion = io.read_completion(args.completion)
    spec = CoverSpec(args.k, args.l)
    result = validate_completion(g, completion, spec)
    if result.ok:
        print(f"OK: every edge lies in >= {spec.l} cliques of order {spec.k}")
        return EXIT_OK
    if not result.connected:
        print("completed graph is disconnected")
    for u, v in result.violations:
        print(f"unsaturated {u} {v}")
    return EXIT_FAILED


def _cmd_reduce(args: argparse.Namespace) -> int:
    if args.construction == "setcover":
        inst = io.parse_setcover_json(Path(args.infile).read_text())
        rg = build_setcover_k3(inst) if args.k == 3 else build_setcover_k(inst, args.k)
        io.write_reduction(args.out_graph, args.out_roles, rg)
        log.info(
            "reduction graph: n=%d m=%d sets=%d items=%d",
            rg.graph.n, rg.graph.m, rg.set_count, rg.item_count,
        )
        print(f"n={rg.graph.n} m={rg.graph.m}")
    else:
        inst = io.parse_three_partition_json(Path(args.infile).read_text())
        spider = build_spider(inst)
        io.write_graph(args.out_graph, spider)
        print(f"n={spider.n} m={spider.m}")
    return EXIT_OK


def _cmd_goodify(args: argparse.Namespace) -> int:
    rg = io.read_reduction(args.graph, args.roles)
    if args.k is not None and args.k != rg.k:
        raise InputError(f"--k {args.k} does not match the role file's k={rg.k}")
    completion = io.read_completion(args.completion)
    good = goodify_3(rg, completion) if rg.k == 3 else goodify_k(rg, completion, rg.k)
    io.write_completion(args.out, good)
    print(f"additions={len(good)} (input had {len(completion)})")
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "tree":
        io.write_graph(args.out, gen_random_tree(args.n, args.seed))
    elif args.family == "chordal":
        io.write_graph(args.out, gen_random_chordal(args.n, args.width, args.seed))
    elif args.family == "spider":
        io.write_graph(args.out, spider_graph(args.legs))
    elif args.family == "worst-spider":
        io.write_graph(args.out, worst_case_spider(args.n))
    elif args.family == "setcover":
        inst = gen_random_setcover(args.items, args.sets, args.density, args.seed)
        Path(args.out).write_text(io.format_setcover_json(inst))
    else:
        inst, witness = gen_random_3partition(
            args.p, args.s, args.seed, yes=not args.likely_no
        )
        Path(args.out).write_text(io.format_three_partition_json(inst))
        if witness is not None:
            log.info("witness partition: %s", witness)
    print(f"wrote {args.out}")
    return EXIT_OK


_BENCH_ALGS = ("tree-opt", "chordal-opt", "tree-approx", "tree-approx4")


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.alg == "tree-approx":
        if args.k is None:
            raise InputError("tree-approx needs --k")
        k = args.k
    elif args.alg == "tree-approx4":
        k = 4
    else:
        k = 3
    n = args.n
    lower_bound = math.ceil((n - 1) * (k - 2) / 2)
    rows = []
    for trial in range(args.trials):
        g = gen_random_tree(n, args.seed + trial)
        started = time.perf_counter()
        if args.alg == "tree-opt":
            size = len(optimal_tree_31(RootedTree.from_graph(g)))
        elif args.alg == "chordal-opt":
            size = len(optimal_chordal_31(g))
        elif args.alg == "tree-approx":
            size = len(approx_tree_k(RootedTree.from_graph(g), k))
        else:
            size = len(approx_tree_4(RootedTree.from_graph(g)))
        elapsed_ms = (time.perf_counter() - started) * 1000.0
        rows.append(
            {
                "instance_id": f"{args.alg}-n{n}-t{trial:04d}",
                "n": n,
                "k": k,
                "l": 1,
                "alg": args.alg,
                "alg_size": size,
                "lower_bound": lower_bound,
                "ratio": f"{size / lower_bound:.6f}",
                "elapsed_ms": f"{elapsed_ms:.3f}",
            }
        )
    rows.sort(key=lambda r: r["instance_id"])
    with open(args.csv, "w", newline="") as fh:
        writer = csv.DictWriter(
            fh,
            fieldnames=[
                "instance_id", "n", "k", "l", "alg",
                "alg_size", "lower_bound", "ratio", "elapsed_ms",
            ],
        )
        writer.writeheader()
        writer.writerows(rows)
    print(f"wrote {args.trials} rows to {args.csv}")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="kcover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute a completion set")
    p_solve.add_argument(
        "--alg",
        required=True,
        choices=["tree-opt", "chordal-opt", "tree-approx", "tree-approx4", "brute"],
    )
    p_solve.add_argument("--in", dest="infile", required=True)
    p_solve.add_argument("--out", required=True)
    p_solve.add_argument("--k", type=int, default=None)
    p_solve.add_argument("--l", type=int, default=1)
    p_solve.add_argument("--max-additions", type=int, default=8)
    p_solve.add_argument("--max-nodes", type=int, default=10_000_000)
    p_solve.set_defaults(func=_cmd_solve)

    p_check = sub.add_parser("check", help="validate a completion set")
    p_check.add_argument("--k", type=int, required=True)
    p_check.add_argument("--l", type=int, default=1)
    p_check.add_argument("--graph", required=True)
    p_check.add_argument("--completion", required=True)
    p_check.set_defaults(func=_cmd_check)

    p_reduce = sub.add_parser("reduce", help="build a reduction graph")
    p_reduce.add_argument("construction", choices=["setcover", "3partition"])
    p_reduce.add_argument("--k", type=int, default=3)
    p_reduce.add_argument("--in", dest="infile", required=True)
    p_reduce.add_argument("--out-graph", required=True)
    p_reduce.add_argument("--out-roles", default=None)
    p_reduce.set_defaults(func=_cmd_reduce)

    p_good = sub.add_parser("goodify", help="rewrite a completion to anchor edges")
    p_good.add_argument("--k", type=int, default=None)
    p_good.add_argument("--graph", required=True)
    p_good.add_argument("--roles", required=True)
    p_good.add_argument("--completion", required=True)
    p_good.add_argument("--out", required=True)
    p_good.set_defaults(func=_cmd_goodify)

    p_gen = sub.add_parser("gen", help="generate an instance")
    p_gen.add_argument(
        "family",
        choices=["tree", "chordal", "spider", "worst-spider", "setcover", "3partition"],
    )
    p_gen.add_argument("--n", type=int, default=10)
    p_gen.add_argument("--width", type=int, default=3)
    p_gen.add_argument("--legs", type=_leg_list, default=None)
    p_gen.add_argument("--items", type=int, default=3)
    p_gen.add_argument("--sets", type=int, default=3)
    p_gen.add_argument("--density", type=float, default=0.4)
    p_gen.add_argument("--p", type=int, default=2)
    p_gen.add_argument("--s", type=int, default=9)
    p_gen.add_argument("--likely-no", action="store_true")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="run seeded trials, write a CSV")
    p_bench.add_argument("--alg", required=True, choices=list(_BENCH_ALGS))
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--trials", type=int, required=True)
    p_bench.add_argument("--k", type=int, default=None)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--csv", required=True)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def _leg_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part]
    except ValueError:
        raise InputError(f"--legs expects comma-separated integers, got {raw!r}") from None


def main(argv: list[str] | None = None) -> int:
    try:
        _setup_logging()
        args = _build_parser().parse_args(argv)
        if args.command == "gen" and args.family == "spider" and args.legs is None:
            raise InputError("gen spider needs --legs")
        if args.command == "reduce" and args.construction == "setcover" and not args.out_roles:
            raise InputError("reduce setcover needs --out-roles")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
