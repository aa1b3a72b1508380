"""Command line front end.

    clawdel solve  --alg primal-dual --input g.bip [--json] [--trace t.txt]
    clawdel reduce --kind hvc-osbcd --input h.hyp --output g.bip [--map m.txt]
    clawdel gen    --family bip-dense --seed 7 --t 3 --na 4 --nb 8 --output g.bip
    clawdel verify --input g.bip --solution sol.txt
    clawdel bench  --suite dir/ --algs primal-dual,exact --csv out.csv

Exit codes: 0 success, 1 internal invariant violation, 2 parse or
precondition failure, 3 oracle size guard, 4 infeasible solution in
verify. Solve input format is sniffed from the `p bip` / `p split`
header. `--json` emits one object with keys solution, cost,
lower_bound, theta, algorithm, iterations, time_ms; rationals are
strings like "3/2", undefined values are null.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from .claws import find_claw_split, is_feasible, is_minimal
from .formats import (
    ParseError,
    parse_auto,
    serialize_bipartite,
    serialize_hypergraph,
    serialize_split,
)
from .generate import FAMILIES, GenSpec, generate, provenance
from .graphs import BipartiteGraph, Hypergraph, SplitGraph
from .oracle import OracleLimitError, exact_min_deletion_set
from .reductions import (
    from_hypergraph_cover,
    from_regular_graph_cover,
    to_bipartite,
    to_split,
    write_map,
)
from .solvers import (
    ShadowMismatchError,
    SolveReport,
    exact_solve,
    local_ratio_solve,
    max_subgraph_solve,
    primal_dual_solve,
    split_max_subgraph,
    split_solve,
)

ALGORITHMS = ("primal-dual", "local-ratio", "exact", "max-subgraph")
REDUCTION_KINDS = ("hvc-osbcd", "osbcd-split", "split-osbcd", "vc-dense")

FAMILY_SIZES = {
    "bip-random": ("na", "nb", "m"),
    "bip-dense": ("na", "nb"),
    "hyp-uniform": ("n", "m"),
    "regular-graph": ("n",),
    "split-random": ("nc", "ni", "m"),
}

_SERIALIZERS = {
    BipartiteGraph: serialize_bipartite,
    SplitGraph: serialize_split,
    Hypergraph: serialize_hypergraph,
}


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> BipartiteGraph | SplitGraph | Hypergraph:
    try:
        text = Path(path).read_bytes()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}", 2) from exc
    return parse_auto(text)


def _load_deletion_instance(path: str) -> BipartiteGraph | SplitGraph:
    g = _load(path)
    if isinstance(g, Hypergraph):
        raise _CliError(f"{path} is a hypergraph; deletion needs 'p bip' or 'p split'", 2)
    return g


def _frac(value: Fraction | None) -> str | None:
    return None if value is None else str(value)


def _report_payload(report: SolveReport, time_ms: int) -> dict:
    return {
        "solution": list(report.solution),
        "cost": _frac(report.cost),
        "lower_bound": _frac(report.dual_lower_bound),
        "theta": _frac(report.theta),
        "algorithm": report.algorithm,
        "iterations": report.iterations,
        "time_ms": time_ms,
    }


def _print_payload(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload))
        return
    print(f"algorithm: {payload['algorithm']}")
    print("solution: " + " ".join(str(v) for v in payload["solution"]))
    for key in ("cost", "lower_bound", "theta"):
        value = payload[key]
        print(f"{key}: {'-' if value is None else value}")
    print(f"iterations: {payload['iterations']}")
    print(f"time_ms: {payload['time_ms']}")


def _write_trace(path: str, trace) -> None:
    lines = ["# dual trace (primal-dual): raise amount, tight vertex, active set"]
    for step in trace:
        active = " ".join(str(v) for v in step.active)
        lines.append(f"raise {step.amount} tight {step.selected} active {active}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_deletion_instance(args.input)
    if args.trace and args.alg != "primal-dual":
        raise _CliError("--trace is only available for --alg primal-dual", 2)

    started = time.perf_counter()
    trace = None
    if isinstance(g, BipartiteGraph):
        if args.alg == "primal-dual":
            report, trace = primal_dual_solve(g)
        elif args.alg == "local-ratio":
            report = local_ratio_solve(g)
        elif args.alg == "exact":
            report = exact_solve(g)
        else:
            solution, weight = max_subgraph_solve(g)
            report = None
    else:
        if args.alg == "primal-dual":
            shadow, _ = to_bipartite(g)
            report, trace = primal_dual_solve(shadow)
            witness = find_claw_split(g, report.solution)
            if witness is not None:
                raise ShadowMismatchError(report.solution, witness)
        elif args.alg in ("local-ratio", "exact"):
            report = split_solve(g, args.alg)
        else:
            solution, weight = split_max_subgraph(g)
            report = None
    elapsed_ms = int(round((time.perf_counter() - started) * 1000))

    if report is None:
        payload = {
            "solution": list(solution),
            "cost": _frac(weight),
            "lower_bound": None,
            "theta": None,
            "algorithm": "max-subgraph",
            "iterations": 0,
            "time_ms": elapsed_ms,
        }
    else:
        payload = _report_payload(report, elapsed_ms)
    if args.trace:
        _write_trace(args.trace, trace or [])
    _print_payload(payload, args.json)
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = _load(args.input)
    try:
        if args.kind == "hvc-osbcd":
            if not isinstance(g, Hypergraph) or g.t < 3:
                raise _CliError("hvc-osbcd needs a 'p hyp' instance with t >= 3", 2)
            out, rmap = from_hypergraph_cover(g)
        elif args.kind == "osbcd-split":
            if not isinstance(g, BipartiteGraph):
                raise _CliError("osbcd-split needs a 'p bip' instance", 2)
            out, rmap = to_split(g)
        elif args.kind == "split-osbcd":
            if not isinstance(g, SplitGraph):
                raise _CliError("split-osbcd needs a 'p split' instance", 2)
            out, rmap = to_bipartite(g)
        else:
            if not isinstance(g, Hypergraph):
                raise _CliError("vc-dense needs a 2-uniform 'p hyp' instance", 2)
            out, rmap = from_regular_graph_cover(g)
    except ValueError as exc:
        raise _CliError(str(exc), 2) from exc

    for warning in rmap.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    Path(args.output).write_text(_SERIALIZERS[type(out)](out), encoding="utf-8")
    if args.map:
        Path(args.map).write_text(write_map(rmap), encoding="utf-8")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    sizes = {}
    for key in FAMILY_SIZES[args.family]:
        value = getattr(args, key)
        if value is None:
            raise _CliError(f"family {args.family} needs --{key}", 2)
        sizes[key] = value
    if args.weights == "unit":
        mode: tuple = ("unit",)
    else:
        try:
            lo, hi = (int(part) for part in args.weights.split(":"))
            mode = ("uniform", lo, hi)
        except ValueError:
            raise _CliError("--weights must be 'unit' or 'LO:HI'", 2) from None
    try:
        spec = GenSpec(args.family, args.t, args.seed, sizes, mode)
        graph = generate(spec)
    except ValueError as exc:
        raise _CliError(str(exc), 2) from exc
    text = _SERIALIZERS[type(graph)](graph, comments=[provenance(spec)])
    Path(args.output).write_text(text, encoding="utf-8")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_deletion_instance(args.input)
    try:
        tokens = Path(args.solution).read_text(encoding="utf-8").split()
        solution = sorted({int(tok) for tok in tokens})
    except OSError as exc:
        raise _CliError(f"cannot read {args.solution}: {exc}", 2) from exc
    except ValueError:
        raise _CliError("solution file must hold whitespace-separated vertex ids", 2) from None
    bad = [v for v in solution if v not in g.vertices]
    if bad:
        raise _CliError(f"solution ids {bad} out of range", 2)

    feasible = is_feasible(g, solution)
    minimal = is_minimal(g, solution) if feasible else False
    cost = g.total_weight(solution)
    print(f"feasible={str(feasible).lower()} minimal={str(minimal).lower()} cost={cost}")
    return 0 if feasible else 4


def _bench_opt(g: BipartiteGraph | SplitGraph) -> Fraction | None:
    try:
        _, cost = exact_min_deletion_set(g)
        return cost
    except OracleLimitError:
        return None


def _bench_row(name: str, alg: str, g, opt: Fraction | None) -> dict:
    row = {
        "instance": name, "algorithm": alg, "t": g.t, "cost": "",
        "lower_bound": "", "opt": "", "ratio": "", "theta": "", "time_ms": "",
    }
    started = time.perf_counter()
    try:
        if alg == "max-subgraph":
            if isinstance(g, BipartiteGraph):
                _, weight = max_subgraph_solve(g)
            else:
                _, weight = split_max_subgraph(g)
            row["cost"] = str(weight)
            if opt is not None:
                opt_max = g.total_weight(g.vertices) - opt
                row["opt"] = str(opt_max)
                if weight > 0:
                    row["ratio"] = str(Fraction(opt_max, weight))
                elif opt_max == 0:
                    row["ratio"] = "1"
        else:
            if isinstance(g, BipartiteGraph):
                report = {
                    "primal-dual": lambda: primal_dual_solve(g)[0],
                    "local-ratio": lambda: local_ratio_solve(g),
                    "exact": lambda: exact_solve(g),
                }[alg]()
            else:
                report = split_solve(g, alg)
            row["cost"] = str(report.cost)
            row["lower_bound"] = str(report.dual_lower_bound)
            row["theta"] = "" if report.theta is None else str(report.theta)
            if opt is not None:
                row["opt"] = str(opt)
                if opt > 0:
                    row["ratio"] = str(Fraction(report.cost, opt))
                elif report.cost == 0:
                    row["ratio"] = "1"
    except (ShadowMismatchError, OracleLimitError) as exc:
        print(f"warning: {name} [{alg}]: {exc}", file=sys.stderr)
        return row
    row["time_ms"] = str(int(round((time.perf_counter() - started) * 1000)))
    return row


def _cmd_bench(args: argparse.Namespace) -> int:
    algs = [a.strip() for a in args.algs.split(",") if a.strip()]
    unknown = [a for a in algs if a not in ALGORITHMS]
    if unknown:
        raise _CliError(f"unknown algorithms {unknown}; choose from {list(ALGORITHMS)}", 2)
    suite = Path(args.suite)
    if not suite.is_dir():
        raise _CliError(f"{args.suite} is not a directory", 2)

    paths = sorted(
        p for p in suite.iterdir() if p.suffix in (".bip", ".split", ".hyp") and p.is_file()
    )
    rows = []
    for path in paths:
        if path.suffix == ".hyp":
            print(f"warning: skipping hypergraph instance {path.name}", file=sys.stderr)
            continue
        g = _load_deletion_instance(str(path))
        opt = _bench_opt(g)
        if opt is None:
            print(f"warning: {path.name}: oracle skipped (size guard)", file=sys.stderr)
        rows.extend(_bench_row(path.name, alg, g, opt) for alg in algs)

    fields = ["instance", "algorithm", "t", "cost", "lower_bound", "opt", "ratio", "theta", "time_ms"]
    with open(args.csv, "w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clawdel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run a deletion or max-subgraph solver")
    p_solve.add_argument("--alg", required=True, choices=ALGORITHMS)
    p_solve.add_argument("--input", required=True)
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--trace")
    p_solve.set_defaults(func=_cmd_solve)

    p_reduce = sub.add_parser("reduce", help="run an instance construction")
    p_reduce.add_argument("--kind", required=True, choices=REDUCTION_KINDS)
    p_reduce.add_argument("--input", required=True)
    p_reduce.add_argument("--output", required=True)
    p_reduce.add_argument("--map")
    p_reduce.set_defaults(func=_cmd_reduce)

    p_gen = sub.add_parser("gen", help="generate a seeded random instance")
    p_gen.add_argument("--family", required=True, choices=FAMILIES)
    p_gen.add_argument("--seed", required=True, type=int)
    p_gen.add_argument("--t", required=True, type=int)
    for key in ("na", "nb", "m", "n", "nc", "ni"):
        p_gen.add_argument(f"--{key}", type=int)
    p_gen.add_argument("--weights", default="unit")
    p_gen.add_argument("--output", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_verify = sub.add_parser("verify", help="check a solution file against an instance")
    p_verify.add_argument("--input", required=True)
    p_verify.add_argument("--solution", required=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="run algorithms over a directory, write CSV")
    p_bench.add_argument("--suite", required=True)
    p_bench.add_argument("--algs", required=True)
    p_bench.add_argument("--csv", required=True)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ShadowMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
