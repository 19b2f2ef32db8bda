"""Command-line harness.

Subcommands::

    domirr solve cds <file>                 minimum capacitated dominating set
    domirr solve ir-max <file>              largest irredundant set
    domirr solve ir-min <file>              smallest maximal irredundant set
    domirr approx cds <file> --c <frac>     budgeted approximation + ratio bound
    domirr oracle {cds,ir-max,ir-min} <file>  exhaustive reference solver
    domirr verify-recurrences [--alpha A]   branching-inequality check
    domirr bench <dir> [--seed S]           generate + solve a seeded batch

Reports are JSON Lines on stdout (one object per instance, fixed key order,
deterministic for a fixed input and seed up to the elapsed_ms field);
diagnostics go to stderr.  Exit codes: 0 ok, 1 usage, 2 input error,
3 internal verification failure.  DOMIRR_WORKERS>1 parallelizes the bench
runner without changing the output order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__, kernels
from .cds import approx_ratio_bound, solve_approx, solve_exact
from .graph import CapacitatedInstance, ParseError, load_instance, serialize_instance
from .generate import random_instance
from .ir_max import solve_ir_max, verify_recurrences
from .ir_min import solve_ir_min
from .irredundance import is_irredundant, is_maximal_irredundant
from .matching import verify_capacitated
from .oracles import SizeLimitError, brute_cds, brute_ir_max, brute_ir_min

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3


class VerificationFailure(RuntimeError):
    pass


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, separators=(", ", ": ")) + "\n")
    sys.stdout.flush()


def _one_based(vertices) -> list[int]:
    return sorted(v + 1 for v in vertices)


def _witness_json(kind: str, mapping) -> dict:
    return {"kind": kind,
            "map": {str(v + 1): w + 1 for v, w in sorted(mapping.items())}}


def _report(problem: str, path, inst: CapacitatedInstance, size: int,
            solution, witness: dict, explored: int, elapsed_s: float) -> dict:
    return {
        "problem": problem,
        "instance": Path(path).name,
        "n": inst.n,
        "m": inst.graph.m,
        "size": size,
        "solution": _one_based(solution),
        "witness": witness,
        "explored": explored,
        "elapsed_ms": round(elapsed_s * 1000.0, 3),
        "version": __version__,
    }


def _recheck_cds(inst, members, size) -> dict:
    w = verify_capacitated(inst, members)
    if w is None or len(members) != size:
        raise VerificationFailure("emitted set failed the domination re-check")
    return _witness_json("assignment", w.assignment)


def _recheck_ir(inst, members, size, maximal: bool) -> dict:
    g = inst.graph
    w = is_irredundant(g, members)
    if w is None or len(members) != size:
        raise VerificationFailure("emitted set failed the irredundance re-check")
    if maximal and not is_maximal_irredundant(g, members):
        raise VerificationFailure("emitted set is not inclusion-maximal")
    return _witness_json("private", w.unique_of)


def _cmd_solve(args) -> int:
    inst = load_instance(args.file)
    if args.problem == "cds":
        res = solve_exact(inst)
        witness = _recheck_cds(inst, res.members, res.size)
        _emit(_report("cds", args.file, inst, res.size, res.members, witness,
                      res.subsets_examined, res.elapsed))
    elif args.problem == "ir-max":
        res = solve_ir_max(inst.graph)
        witness = _recheck_ir(inst, res.members, res.size, maximal=False)
        _emit(_report("ir-max", args.file, inst, res.size, res.members,
                      witness, res.nodes_explored, res.elapsed))
    else:
        res = solve_ir_min(inst.graph)
        witness = _recheck_ir(inst, res.members, res.size, maximal=True)
        _emit(_report("ir-min", args.file, inst, res.size, res.members,
                      witness, res.sets_visited, res.elapsed))
    return EXIT_OK


def _cmd_approx(args) -> int:
    inst = load_instance(args.file)
    c = Fraction(args.c)
    bound = approx_ratio_bound(c)
    res = solve_approx(inst, c)
    witness = _recheck_cds(inst, res.members, res.size)
    row = _report("approx-cds", args.file, inst, res.size, res.members,
                  witness, res.subsets_examined, res.elapsed)
    row["c"] = str(bound.c)
    row["scheme_ratio"] = str(bound.scheme_ratio)
    row["trivial_ratio"] = str(bound.trivial_ratio)
    _emit(row)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    inst = load_instance(args.file)
    start = time.perf_counter()
    if args.problem == "cds":
        res = brute_cds(inst)
        members = res.all_optima[0]
        witness = _recheck_cds(inst, members, res.size)
    elif args.problem == "ir-max":
        res = brute_ir_max(inst.graph)
        members = res.all_optima[0]
        witness = _recheck_ir(inst, members, res.size, maximal=False)
    else:
        res = brute_ir_min(inst.graph)
        members = res.all_optima[0]
        witness = _recheck_ir(inst, members, res.size, maximal=True)
    row = _report(f"oracle-{args.problem}", args.file, inst, res.size,
                  members, witness, res.enumerated,
                  time.perf_counter() - start)
    row["optima_found"] = len(res.all_optima)
    _emit(row)
    return EXIT_OK


def _cmd_verify_recurrences(args) -> int:
    report = verify_recurrences(args.alpha)
    failing = [{"rule": o.case.rule, "params": list(o.case.params),
                "margin": o.margin} for o in report.failing()]
    _emit({
        "alpha": report.alpha,
        "cases": len(report.outcomes),
        "all_pass": report.all_pass,
        "min_margin": report.min_margin,
        "binding": {"rule": report.binding.rule,
                    "params": list(report.binding.params)},
        "failing": failing[:20],
        "version": __version__,
    })
    # a failing alpha is a successful verification run, not an error
    return EXIT_OK


# --- bench -----------------------------------------------------------------

BENCH_PLAN = (
    ("cds", (12, 14, 16)),
    ("ir-max", (12, 16, 20)),
    ("ir-min", (12, 16, 20)),
)
BENCH_PS = (0.2, 0.5)


def _bench_cases(seed: int, count: int):
    for pi, (problem, sizes) in enumerate(BENCH_PLAN):
        for n in sizes:
            for p in BENCH_PS:
                for i in range(count):
                    sub = (((seed * 31 + pi) * 31 + n) * 31
                           + int(p * 10)) * 31 + i
                    name = f"{problem}_n{n}_p{int(p * 10):02d}_s{seed}_{i}.cds"
                    yield problem, n, p, sub, name


def _bench_one(job) -> dict:
    problem, path, compare = job
    inst = load_instance(path)
    if problem == "cds":
        res = solve_exact(inst)
        witness = _recheck_cds(inst, res.members, res.size)
        row = _report(problem, path, inst, res.size, res.members, witness,
                      res.subsets_examined, res.elapsed)
    elif problem == "ir-max":
        res = solve_ir_max(inst.graph)
        witness = _recheck_ir(inst, res.members, res.size, maximal=False)
        row = _report(problem, path, inst, res.size, res.members, witness,
                      res.nodes_explored, res.elapsed)
    else:
        res = solve_ir_min(inst.graph)
        witness = _recheck_ir(inst, res.members, res.size, maximal=True)
        row = _report(problem, path, inst, res.size, res.members, witness,
                      res.sets_visited, res.elapsed)
    row["kernels"] = kernels.mode()
    if compare and "python" in kernels.available_modes():
        with kernels.using("python"):
            t0 = time.perf_counter()
            if problem == "cds":
                other = solve_exact(inst).size
            elif problem == "ir-max":
                other = solve_ir_max(inst.graph).size
            else:
                other = solve_ir_min(inst.graph).size
            t1 = time.perf_counter() - t0
        if other != row["size"]:
            raise VerificationFailure(
                f"kernel modes disagree on {path}: {other} vs {row['size']}")
        row["elapsed_ms_python"] = round(t1 * 1000.0, 3)
    return row


def _cmd_bench(args) -> int:
    out_dir = Path(args.dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs = []
    for problem, n, p, sub, name in _bench_cases(args.seed, args.count):
        if args.compare_kernels and n > 12:
            continue  # keep the pure-Python timing tier tractable
        path = out_dir / name
        inst = random_instance(n, p, sub)
        path.write_text(serialize_instance(inst))
        jobs.append((problem, str(path), args.compare_kernels))
    workers = int(os.environ.get("DOMIRR_WORKERS", "1") or "1")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(job) for job in jobs]
    for row in rows:
        _emit(row)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domirr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="exact solvers")
    p_solve.add_argument("problem", choices=("cds", "ir-max", "ir-min"))
    p_solve.add_argument("file")
    p_solve.set_defaults(fn=_cmd_solve)

    p_approx = sub.add_parser("approx", help="budgeted approximation")
    p_approx.add_argument("problem", choices=("cds",))
    p_approx.add_argument("file")
    p_approx.add_argument("--c", required=True,
                          help="core budget fraction in (0,1/3), e.g. 1/6")
    p_approx.set_defaults(fn=_cmd_approx)

    p_oracle = sub.add_parser("oracle", help="exhaustive reference solvers")
    p_oracle.add_argument("problem", choices=("cds", "ir-max", "ir-min"))
    p_oracle.add_argument("file")
    p_oracle.set_defaults(fn=_cmd_oracle)

    p_ver = sub.add_parser("verify-recurrences",
                           help="check the branching inequalities")
    p_ver.add_argument("--alpha", default="1.40202")
    p_ver.set_defaults(fn=_cmd_verify_recurrences)

    p_bench = sub.add_parser("bench", help="seeded benchmark batch")
    p_bench.add_argument("dir")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--count", type=int, default=1,
                         help="instances per (problem, n, p) cell")
    p_bench.add_argument("--compare-kernels", action="store_true",
                         help="time the pure-Python kernels too")
    p_bench.set_defaults(fn=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.fn(args)
    except VerificationFailure as exc:
        print(f"domirr: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (ParseError, SizeLimitError) as exc:
        print(f"domirr: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, ValueError, ZeroDivisionError) as exc:
        print(f"domirr: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
