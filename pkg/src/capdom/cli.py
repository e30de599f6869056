"""Command line: gen, solve, verify, bench.

Exit codes: 0 solved (or verified), 1 infeasible (or verification failed),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import io as cio
from .cvcp import VcInstance, map_back, reduce_to_cdp, solve_cvcp
from .dp_solver import solve_dp
from .feasibility import InfeasibleInstance, normalize_instance
from .graph_core import Instance
from .oracle import brute_force_cdp
from .ptas import PtasConfig, solve_ptas
from .verify import verify

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE = 0, 1, 2


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args, root: int) -> PtasConfig:
    if args.k is not None and args.epsilon is not None:
        raise SystemExit("give at most one of --k and --epsilon")
    if args.k is not None:
        return PtasConfig(k=args.k, root=root, parallel_shifts=args.parallel_shifts)
    eps = Fraction(args.epsilon) if args.epsilon is not None else Fraction(1)
    return PtasConfig(epsilon=eps, root=root, parallel_shifts=args.parallel_shifts)


def cmd_gen(args) -> int:
    kw = dict(rows=args.rows, cols=args.cols, n=args.n, dmax=args.dmax, cmax=args.cmax, seed=args.seed)
    if args.cvcp:
        inst = cio.generate_cvcp(args.family, **kw)
    else:
        inst = cio.generate(args.family, **kw)
    shape = f"n={args.n}" if args.family in ("path", "star") else f"rows={args.rows} cols={args.cols}"
    desc = f"{args.family} {shape} dmax={args.dmax} cmax={args.cmax} seed={args.seed}"
    _emit(cio.format_instance(inst, desc), args.output)
    return EXIT_OK


def _solve_cdp(inst: Instance, args, cfg: PtasConfig):
    if args.mode == "ptas":
        res = solve_ptas(inst, cfg)
        return res.assignment, res.k, res.shift
    if args.mode == "dp":
        return solve_dp(inst).assignment, None, None
    res = brute_force_cdp(inst)
    return res.witness if res.feasible else None, None, None


def cmd_solve(args) -> int:
    inst = cio.read_instance(args.input)
    root = args.root - 1
    if not 0 <= root < inst.graph.n:
        raise cio.ParseError(0, f"--root {args.root} is not a vertex")
    cfg = _config(args, root)
    if isinstance(inst, VcInstance):
        if args.mode == "ptas":
            sol = solve_cvcp(inst, cfg)
            reduced, _ = reduce_to_cdp(inst)
            k = cfg.height(reduced.c_star)
            shift = None
        else:
            reduced, bis = reduce_to_cdp(inst)
            a, k, shift = _solve_cdp(reduced, args, cfg)
            sol = map_back(a, bis) if a is not None else None
        text = cio.result_json(sol, args.mode, k, shift)
    else:
        sol, k, shift = _solve_cdp(inst, args, cfg)
        text = cio.result_json(sol, args.mode, k, shift)
    _emit(text, args.output)
    return EXIT_OK if sol is not None else EXIT_INFEASIBLE


def cmd_verify(args) -> int:
    inst = cio.read_instance(args.input)
    try:
        doc = json.loads(Path(args.result).read_text())
    except json.JSONDecodeError as exc:
        raise cio.ParseError(exc.lineno, f"result is not valid JSON: {exc.msg}") from None
    problems = verify(inst, doc)
    if problems:
        for p in problems:
            print(f"FAIL {p}")
        return EXIT_INFEASIBLE
    print(f"PASS proper, covering, valid pairs; size {doc['size']}")
    return EXIT_OK


def default_suite() -> list[tuple[str, Instance]]:
    suite = []
    for seed in range(3):
        suite.append((f"grid3x3-s{seed}", cio.generate("grid", rows=3, cols=3, dmax=1, cmax=2, seed=seed)))
        suite.append((f"grid3x4-s{seed}", cio.generate("grid", rows=3, cols=4, dmax=2, cmax=2, seed=seed)))
        suite.append((f"path12-s{seed}", cio.generate("path", n=12, dmax=2, cmax=2, seed=seed)))
        suite.append((f"trigrid3x3-s{seed}", cio.generate("trigrid", rows=3, cols=3, dmax=1, cmax=2, seed=seed)))
    return suite


BENCH_FIELDS = [
    "instance", "n", "edges", "levels", "k", "shift", "size",
    "oracle_size", "bound", "seconds", "max_width",
]


def cmd_bench(args) -> int:
    if args.suite:
        paths = sorted(Path(args.suite).glob("*.cdp")) + sorted(Path(args.suite).glob("*.txt"))
        suite = [(p.stem, cio.read_instance(p)) for p in paths]
        suite = [(name, inst) for name, inst in suite if isinstance(inst, Instance)]
    else:
        suite = default_suite()
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_FIELDS, lineterminator="\n")
        writer.writeheader()
        for name, inst in suite:
            cfg = _config(args, 0)
            try:
                inst = normalize_instance(inst)
            except InfeasibleInstance:
                pass
            t0 = time.perf_counter()
            res = solve_ptas(inst, cfg)
            elapsed = time.perf_counter() - t0
            oracle = brute_force_cdp(inst) if inst.n <= args.oracle_limit else None
            opt = oracle.opt_size if oracle is not None and oracle.feasible else None
            c_star = max(inst.c_star, 1)
            writer.writerow({
                "instance": name,
                "n": inst.n,
                "edges": len(inst.edges),
                "levels": res.levels,
                "k": res.k,
                "shift": "" if res.shift is None else res.shift,
                "size": "" if res.assignment is None else res.assignment.size,
                "oracle_size": "" if opt is None else opt,
                "bound": "" if opt is None else int((1 + Fraction(4 * c_star, res.k)) * opt),
                "seconds": f"{elapsed:.4f}",
                "max_width": res.max_width,
            })
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="capdom", description="Hard-capacitated domination on planar graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("family", choices=cio.FAMILIES)
    g.add_argument("--rows", type=int, default=3)
    g.add_argument("--cols", type=int, default=3)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--dmax", type=int, default=1)
    g.add_argument("--cmax", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--cvcp", action="store_true", help="emit a vertex-cover instance")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    def solver_flags(p):
        p.add_argument("--epsilon", type=str, default=None, help="accuracy; k = ceil(4c*/epsilon)")
        p.add_argument("--k", type=int, default=None, help="explicit slab height")
        p.add_argument("--parallel-shifts", action="store_true")
        p.add_argument("--seed", type=int, default=0, help="accepted for reproducible scripts; solvers are deterministic")

    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("--input", required=True)
    s.add_argument("--mode", choices=("ptas", "dp", "oracle"), default="ptas")
    s.add_argument("--root", type=int, default=1, help="BFS root (1-based)")
    s.add_argument("-o", "--output")
    solver_flags(s)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a result file against its instance")
    v.add_argument("--input", required=True)
    v.add_argument("--result", required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="run the PTAS over a suite and emit CSV")
    b.add_argument("--suite", help="directory of .cdp/.txt instance files (default: built-in suite)")
    b.add_argument("--oracle-limit", type=int, default=14)
    b.add_argument("-o", "--output")
    solver_flags(b)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (cio.ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
