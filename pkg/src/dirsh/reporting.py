"""Per-run stats records, the percentage-deviation metric, and benchmark
CSV reports with win/tie/loss summaries."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

from .optimizer import RunReport

STATS_FIELDS = (
    "instance",
    "objective",
    "seed",
    "budget_seconds",
    "n_c",
    "swaps",
    "depth",
    "layers",
    "generations",
    "discards",
    "wall_seconds",
)

REPORT_FIELDS = ("instance", "objective", "budget", "dirsh", "reference", "delta", "flagged")
SUMMARY_FIELDS = ("objective", "budget", "wins", "ties", "losses", "avg_delta")


def delta(reference_value: float, dirsh_value: float) -> float | None:
    """Percentage deviation 100 * (reference - ours) / reference; positive
    favors us. A 0/0 comparison is a tie; reference 0 against a nonzero value
    is undefined and returns None (flagged, excluded from averages)."""
    if reference_value == 0:
        return 0.0 if dirsh_value == 0 else None
    return 100.0 * (reference_value - dirsh_value) / reference_value


def stats_record(instance: str, report: RunReport) -> dict:
    """One JSON-lines stats record for a finished run.

    ``wall_seconds`` is null in deterministic (generation-capped) runs so
    repeated runs produce byte-identical output.
    """
    cfg = report.config
    deterministic = cfg.generation_cap is not None
    return {
        "instance": instance,
        "objective": cfg.objective,
        "seed": cfg.seed,
        "budget_seconds": cfg.budget_seconds,
        "n_c": report.effective_chunks,
        "swaps": report.solution.sw,
        "depth": report.solution.de,
        "layers": report.solution.de + 1,
        "generations": report.generations,
        "discards": report.discards,
        "wall_seconds": None if deterministic else round(report.wall_seconds, 3),
    }


def aggregate_best(result_rows: list[dict]) -> dict[tuple, float]:
    """Best (minimum) value over seeds per (instance, objective, budget)."""
    best: dict[tuple, float] = {}
    for row in result_rows:
        key = (row["instance"], row["objective"], row["budget"])
        value = float(row["value"])
        if key not in best or value < best[key]:
            best[key] = value
    return best


@dataclass
class BenchReport:
    rows: list[dict] = field(default_factory=list)
    summary: list[dict] = field(default_factory=list)
    unmatched: list[tuple] = field(default_factory=list)


def benchmark_report(result_rows: list[dict], reference_rows: list[dict]) -> BenchReport:
    """Join best-of-seeds results against reference values, compute deltas,
    and summarize wins/ties/losses and the average delta per configuration.

    Rows are dicts with keys instance/objective/budget/value (results also
    carry seed). Keys present on only one side are reported as unmatched and
    excluded.
    """
    best = aggregate_best(result_rows)
    reference = {
        (r["instance"], r["objective"], r["budget"]): float(r["value"]) for r in reference_rows
    }

    report = BenchReport()
    report.unmatched = sorted(set(best) ^ set(reference))
    groups: dict[tuple, list[float | None]] = {}
    for key in sorted(set(best) & set(reference)):
        instance, objective, budget = key
        d = delta(reference[key], best[key])
        report.rows.append(
            {
                "instance": instance,
                "objective": objective,
                "budget": budget,
                "dirsh": best[key],
                "reference": reference[key],
                "delta": "" if d is None else round(d, 4),
                "flagged": d is None,
            }
        )
        groups.setdefault((objective, budget), []).append(d)

    for (objective, budget), deltas in sorted(groups.items()):
        valid = [d for d in deltas if d is not None]
        report.summary.append(
            {
                "objective": objective,
                "budget": budget,
                "wins": sum(1 for d in valid if d > 0),
                "ties": sum(1 for d in valid if d == 0),
                "losses": sum(1 for d in valid if d < 0),
                "avg_delta": round(sum(valid) / len(valid), 4) if valid else "",
            }
        )
    return report


def format_win_row(budget, wins: int, ties: int, losses: int) -> str:
    """Render one win/tie/loss summary row, e.g. '10, 108, 38, 4'."""
    return f"{budget}, {wins}, {ties}, {losses}"


def write_csv(path, fieldnames, rows) -> None:
    with Path(path).open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(fieldnames))
        writer.writeheader()
        for row in rows:
            writer.writerow(row)


def read_reference_csv(path) -> list[dict]:
    """Reference rows: CSV with columns instance, objective, budget, value."""
    with Path(path).open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    for row in rows:
        row["budget"] = float(row["budget"])
    return rows
