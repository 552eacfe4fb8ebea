"""Command line interface: route one circuit, or benchmark a manifest of
circuits against reference results."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .optimizer import RunConfig, optimize
from .qasm import emit_routed, parse_circuit
from .reporting import (
    REPORT_FIELDS,
    SUMMARY_FIELDS,
    benchmark_report,
    format_win_row,
    read_reference_csv,
    stats_record,
    write_csv,
)
from .topology import load_coupling
from .validation import validate


def _add_knobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--restart-prob", type=float, default=0.1,
                        help="probability of restarting from the incumbent prefix")
    parser.add_argument("--exploration-c", type=float, default=None,
                        help="UCB exploration constant (default sqrt(2))")
    parser.add_argument("--strict-prune", action="store_true",
                        help="require strict D_min improvement in the swap-pruning equality branch")
    parser.add_argument("--step-cap", type=int, default=None,
                        help="override the per-generation placement cap")
    parser.add_argument("--generations", type=int, default=None,
                        help="fixed generations per chunk instead of wall-clock budgeting "
                             "(deterministic runs)")


def _build_config(args, objective: str, seed: int, budget: float) -> RunConfig:
    cfg = RunConfig(
        objective=objective,
        budget_seconds=budget,
        seed=seed,
        chunk_override=None if args.chunks in (None, "auto") else int(args.chunks),
        restart_prob=args.restart_prob,
        strict_prune=args.strict_prune,
        step_cap=args.step_cap,
        generation_cap=args.generations,
    )
    if args.exploration_c is not None:
        cfg.exploration_c = args.exploration_c
    cfg.validate()
    return cfg


def _cmd_route(args) -> int:
    topology = load_coupling(args.coupling)
    circuit = parse_circuit(Path(args.circuit).read_text())
    config = _build_config(args, args.objective, args.seed, args.budget)

    report = optimize(circuit, topology, config)
    check = validate(circuit, topology, report.solution)
    if not check.ok:
        print(check, file=sys.stderr)
        return 1

    text = emit_routed(report.solution, topology.num_qubits)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)

    record = stats_record(Path(args.circuit).stem, report)
    if args.stats:
        with Path(args.stats).open("a") as fh:
            fh.write(json.dumps(record) + "\n")
    print(
        f"routed {record['instance']}: objective={config.objective} "
        f"swaps={record['swaps']} depth={record['depth']} layers={record['layers']} "
        f"generations={record['generations']}",
        file=sys.stderr,
    )
    return 0


def _read_manifest(path: str) -> list[tuple[str, Path]]:
    base = Path(path).parent
    instances = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        p = Path(line)
        if not p.is_absolute():
            p = base / p
        instances.append((p.stem, p))
    return instances


def _cmd_bench(args) -> int:
    topology = load_coupling(args.coupling)
    instances = _read_manifest(args.manifest)
    budgets = [float(b) for b in args.budgets.split(",")]
    objectives = args.objectives.split(",")

    result_rows = []
    stats_path = Path(args.stats) if args.stats else None
    for name, path in instances:
        circuit = parse_circuit(path.read_text())
        for objective in objectives:
            for budget in budgets:
                for seed in range(args.seeds):
                    config = _build_config(args, objective, seed, budget)
                    report = optimize(circuit, topology, config)
                    check = validate(circuit, topology, report.solution)
                    if not check.ok:
                        print(f"{name}: invalid solution\n{check}", file=sys.stderr)
                        return 1
                    record = stats_record(name, report)
                    if stats_path:
                        with stats_path.open("a") as fh:
                            fh.write(json.dumps(record) + "\n")
                    value = record["swaps"] if objective == "swaps" else record["depth"]
                    result_rows.append(
                        {
                            "instance": name,
                            "objective": objective,
                            "budget": budget,
                            "seed": seed,
                            "value": value,
                        }
                    )
                    print(
                        f"{name} objective={objective} budget={budget} seed={seed} "
                        f"swaps={record['swaps']} depth={record['depth']}",
                        file=sys.stderr,
                    )

    reference_rows = read_reference_csv(args.reference) if args.reference else []
    report = benchmark_report(result_rows, reference_rows)
    if args.report:
        if reference_rows:
            write_csv(args.report, REPORT_FIELDS, report.rows)
        else:
            # No reference: emit the best-of-seeds results themselves.
            from .reporting import aggregate_best

            rows = [
                {"instance": k[0], "objective": k[1], "budget": k[2], "dirsh": v}
                for k, v in sorted(aggregate_best(result_rows).items())
            ]
            write_csv(args.report, ("instance", "objective", "budget", "dirsh"), rows)
    if args.summary:
        write_csv(args.summary, SUMMARY_FIELDS, report.summary)

    for row in report.summary:
        print(
            f"{row['objective']}: "
            + format_win_row(row["budget"], row["wins"], row["ties"], row["losses"])
            + f"  avg_delta={row['avg_delta']}"
        )
    for key in report.unmatched:
        print(f"unmatched: {key}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dirsh", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    route = sub.add_parser("route", help="route one circuit")
    route.add_argument("--circuit", required=True, help="OpenQASM 2 input file")
    route.add_argument("--coupling", default="tokyo", help='"tokyo" or a coupling JSON path')
    route.add_argument("--objective", choices=("swaps", "depth"), default="swaps")
    route.add_argument("--budget", type=float, default=10.0, help="time budget in seconds")
    route.add_argument("--seed", type=int, default=0)
    route.add_argument("--chunks", default="auto", help='"auto" or an explicit chunk count')
    route.add_argument("--out", default=None, help="routed OpenQASM output path (default stdout)")
    route.add_argument("--stats", default=None, help="append a JSON-lines stats record here")
    _add_knobs(route)
    route.set_defaults(func=_cmd_route)

    bench = sub.add_parser("bench", help="run a benchmark manifest")
    bench.add_argument("--manifest", required=True,
                       help="text file with one circuit path per line (# comments allowed)")
    bench.add_argument("--coupling", default="tokyo")
    bench.add_argument("--objectives", default="swaps,depth", help="comma-separated objectives")
    bench.add_argument("--seeds", type=int, default=3, help="seeds 0..K-1 per configuration")
    bench.add_argument("--budgets", default="10", help="comma-separated budgets in seconds")
    bench.add_argument("--chunks", default="auto")
    bench.add_argument("--reference", default=None, help="reference CSV for delta comparison")
    bench.add_argument("--report", default=None, help="per-instance report CSV output path")
    bench.add_argument("--summary", default=None, help="win/tie/loss summary CSV output path")
    bench.add_argument("--stats", default=None, help="append per-run JSON-lines records here")
    _add_knobs(bench)
    bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
