"""``segmin`` command line: solve, gen, bench, verify.

Exit codes: 0 ok, 1 bench skipped unreadable instances, 2 parse error,
3 limits refusal, 4 verification failure, 5 exact search ran out of budget.
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from . import generators
from .algorithms import alg_base, alg_logD
from .core import DimensionMismatch, lower_bound, verify
from .decompose import num_digits
from .exact import DEFAULT_MAX_CELLS, DEFAULT_MAX_H, exact_opt
from .formats import FormatError, format_matrix, load_matrix, load_segmentation, save_segmentation, write_text
from .row_solvers import ROW_SOLVERS, LimitExceeded

EXIT_OK = 0
EXIT_SKIPPED = 1
EXIT_PARSE = 2
EXIT_LIMITS = 3
EXIT_VERIFY = 4
EXIT_TIMEOUT = 5


def _err(msg: str) -> None:
    print(f"segmin: {msg}", file=sys.stderr)


def cmd_solve(args) -> int:
    try:
        T = load_matrix(args.inp)
    except (FormatError, ValueError, OSError) as e:
        _err(f"cannot read matrix: {e}")
        return EXIT_PARSE
    status = EXIT_OK
    optimal = None
    try:
        if args.alg in ("b2", "b3", "b4"):
            b = int(args.alg[1])
            S = alg_base(T, b)
            layers = num_digits(T.h, b)
        elif args.alg == "logd":
            S = alg_logD(T, ROW_SOLVERS[args.row_solver])
            layers = num_digits(T.D, 2)
        else:
            res = exact_opt(
                T,
                max_cells=args.max_cells,
                max_h=args.max_h,
                time_budget=args.time_budget,
                node_budget=args.node_budget,
                override=args.override,
            )
            S, layers, optimal = res.segmentation, 1, res.optimal
            if not res.optimal:
                status = EXIT_TIMEOUT
    except LimitExceeded as e:
        _err(str(e))
        return EXIT_LIMITS
    v = verify(T, S)
    if not v:
        _err(f"internal verification failed: {v}")
        return EXIT_VERIFY
    save_segmentation(args.out, S)
    info = sys.stderr if args.out == "-" else sys.stdout
    print(f"size: {len(S)}", file=info)
    print(f"lower_bound: {lower_bound(T)}", file=info)
    print(f"h: {T.h}", file=info)
    print(f"D: {T.D}", file=info)
    print(f"layers: {layers}", file=info)
    if optimal is not None:
        print(f"optimal: {'yes' if optimal else 'unknown (budget exhausted)'}", file=info)
    return status


def cmd_gen(args) -> int:
    try:
        if args.kind == "gaussian":
            T = generators.gen_gaussian(
                args.m, args.n, args.peaks, (args.amp_lo, args.amp_hi), args.sigma, args.seed
            )
        elif args.kind == "adversarial":
            T = generators.gen_adversarial(args.b, args.k)
        elif args.kind == "harmonic":
            T = generators.gen_harmonic(args.b, args.cols)
        else:
            T = generators.gen_random(args.m, args.n, args.h, args.seed)
    except ValueError as e:
        _err(str(e))
        return EXIT_PARSE
    write_text(args.out, format_matrix(T))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        T = load_matrix(args.matrix)
        S = load_segmentation(args.seg)
    except (FormatError, ValueError, OSError) as e:
        _err(f"cannot read input: {e}")
        return EXIT_PARSE
    try:
        v = verify(T, S)
    except DimensionMismatch as e:
        _err(str(e))
        return EXIT_VERIFY
    if not v:
        _err(str(v))
        return EXIT_VERIFY
    print(f"ok: {len(S)} segments")
    return EXIT_OK


def cmd_bench(args) -> int:
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    if args.suite is not None:
        instances, diags = bench_mod.default_suite(args.suite), []
    else:
        try:
            instances, diags = bench_mod.load_instances(args.dir)
        except FileNotFoundError as e:
            _err(str(e))
            return EXIT_PARSE
    limits = None if args.no_exact else bench_mod.ExactLimits(args.exact_max_cells, args.exact_max_h, args.node_budget)
    try:
        report = bench_mod.run_bench(instances, algs, limits, threads=args.threads, diagnostics=diags)
    except ValueError as e:
        _err(str(e))
        return EXIT_PARSE
    if args.report == "-":
        sys.stdout.write(bench_mod.summarize(report))
    else:
        out = report.write(args.report)
        print(f"wrote {out}")
    for d in report.diagnostics:
        _err(f"skipped {d['path']}: {d['error']}")
    return EXIT_OK if report.ok else EXIT_SKIPPED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="segmin", description="Segment a non-negative integer matrix into few uniform-value segment matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="segment one matrix")
    s.add_argument("--alg", choices=["b2", "b3", "b4", "logd", "exact"], required=True)
    s.add_argument("--in", dest="inp", default="-", help="matrix file, '-' for stdin")
    s.add_argument("--out", default="-", help="segmentation JSON, '-' for stdout")
    s.add_argument("--row-solver", choices=sorted(ROW_SOLVERS), default="sweep")
    s.add_argument("--seed", type=int, default=0, help="accepted for reproducible scripts; all solvers are deterministic")
    s.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    s.add_argument("--max-h", type=int, default=DEFAULT_MAX_H)
    s.add_argument("--time-budget", type=float, default=None, help="seconds")
    s.add_argument("--node-budget", type=int, default=None)
    s.add_argument("--override", action="store_true", help="ignore exact-solver size limits")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="generate an instance")
    g.add_argument("--kind", choices=["gaussian", "adversarial", "harmonic", "random"], required=True)
    g.add_argument("--m", type=int, default=50)
    g.add_argument("--n", type=int, default=50)
    g.add_argument("--h", type=int, default=10)
    g.add_argument("--peaks", type=int, default=7)
    g.add_argument("--amp-lo", type=float, default=1)
    g.add_argument("--amp-hi", type=float, default=25)
    g.add_argument("--sigma", type=float, default=None)
    g.add_argument("--b", type=int, default=3)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--cols", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="compare algorithms on a directory of matrices")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--dir")
    src.add_argument("--suite", type=int, metavar="SEED", help="use the built-in generated suite")
    b.add_argument("--algs", default="b2,b3,b4,logd")
    b.add_argument("--exact-max-cells", type=int, default=DEFAULT_MAX_CELLS)
    b.add_argument("--exact-max-h", type=int, default=DEFAULT_MAX_H)
    b.add_argument("--node-budget", type=int, default=bench_mod.ExactLimits().node_budget)
    b.add_argument("--no-exact", action="store_true")
    b.add_argument("--report", default="-", help="output directory, '-' prints the summary")
    b.add_argument("--threads", type=int, default=None, help=f"worker processes (default: all cores; ${bench_mod.THREADS_ENV} caps it)")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("verify", help="check that a segmentation sums to a matrix")
    v.add_argument("--matrix", required=True)
    v.add_argument("--seg", required=True)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
