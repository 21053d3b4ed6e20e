"""Batch kernelization over a generated dataset and CSV reporting.

A bench run takes the dataset manifest, runs every (file, configuration)
pair, and emits one CSV row per pair plus per-group mean rows.  Row order,
aggregation order, and float formatting are all deterministic, so a re-run
over the same dataset produces a byte-identical CSV.  Wall-clock times are
deliberately kept out of the CSV for the same reason.
"""

from __future__ import annotations

import csv
import json
import multiprocessing
from dataclasses import dataclass
from pathlib import Path

from .edgelist import load_graph
from .engine import ApproachConfig, kernelize
from .graph import Instance
from .sparsity import SparsityConfig

CSV_COLUMNS = (
    "kind",
    "group",
    "dataset",
    "config",
    "initial_vertices",
    "initial_edges",
    "final_vertices",
    "final_edges",
    "solution_size",
    "fully_solved",
    "attempts",
    "remaining_vertex_fraction",
    "remaining_edge_fraction",
)


class BenchRunError(RuntimeError):
    """A dataset file failed to process; the whole run aborts."""

    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class BenchTask:
    group: str
    dataset: str
    path: str
    white_path: str | None
    config_name: str
    sparsity_config: SparsityConfig


@dataclass(frozen=True)
class BenchResult:
    rows: tuple
    means: tuple
    notes: tuple


def read_manifest(path):
    """Load the dataset manifest; file paths resolve relative to it."""
    path = Path(path)
    data = json.loads(path.read_text())
    base = path.parent
    entries = []
    for item in data.get("files", []):
        entries.append(
            {
                "group": item["group"],
                "dataset": item["path"],
                "path": str(base / item["path"]),
                "white_path": str(base / item["white"]) if item.get("white") else None,
            }
        )
    return entries


def _run_task(task: BenchTask):
    try:
        g = load_graph(task.path, task.white_path)
        inst = Instance.from_graph(g)
        report = kernelize(
            inst,
            ApproachConfig.from_name(task.config_name),
            task.sparsity_config,
        )
    except Exception as exc:
        return ("error", task.path, f"{type(exc).__name__}: {exc}")
    return (
        "ok",
        {
            "kind": "instance",
            "group": task.group,
            "dataset": task.dataset,
            "config": report.config,
            "initial_vertices": report.initial_vertices,
            "initial_edges": report.initial_edges,
            "final_vertices": report.final_vertices,
            "final_edges": report.final_edges,
            "solution_size": report.solution_size,
            "fully_solved": report.fully_solved,
            "attempts": report.attempts,
            "remaining_vertex_fraction": report.remaining_vertex_fraction,
            "remaining_edge_fraction": report.remaining_edge_fraction,
        },
    )


def run_bench(
    entries,
    configs=None,
    workers: int = 1,
    sparsity_config: SparsityConfig = SparsityConfig(),
) -> BenchResult:
    """Kernelize every manifest entry under every configuration.

    Tasks run dataset-major (all configurations of a file together) and the
    output rows keep exactly that order regardless of worker count.  The
    first file that fails aborts the run with the file named.
    """
    if configs is None:
        configs = [c.name for c in _default_configs()]
    tasks = [
        BenchTask(
            group=e["group"],
            dataset=e["dataset"],
            path=e["path"],
            white_path=e.get("white_path"),
            config_name=name,
            sparsity_config=sparsity_config,
        )
        for e in entries
        for name in configs
    ]
    if workers > 1 and len(tasks) > 1:
        with multiprocessing.Pool(processes=workers) as pool:
            outcomes = list(pool.imap(_run_task, tasks, chunksize=1))
    else:
        outcomes = [_run_task(t) for t in tasks]
    rows = []
    for outcome in outcomes:
        if outcome[0] == "error":
            raise BenchRunError(outcome[1], outcome[2])
        rows.append(outcome[1])
    means = aggregate_means(rows, configs)
    notes = worse_than_baseline_notes(rows)
    return BenchResult(tuple(rows), tuple(means), tuple(notes))


def _default_configs():
    from .engine import ALL_CONFIGS

    return ALL_CONFIGS


def aggregate_means(rows, configs):
    """Per (group, config) means of the remaining fractions, groups in
    first-appearance order, configs in the order they were run."""
    group_order = []
    for row in rows:
        if row["group"] not in group_order:
            group_order.append(row["group"])
    means = []
    for group in group_order:
        for config in configs:
            sub = [r for r in rows if r["group"] == group and r["config"] == config]
            if not sub:
                continue
            n = len(sub)
            means.append(
                {
                    "kind": "group-mean",
                    "group": group,
                    "dataset": "",
                    "config": config,
                    "initial_vertices": "",
                    "initial_edges": "",
                    "final_vertices": "",
                    "final_edges": "",
                    "solution_size": "",
                    "fully_solved": sum(r["fully_solved"] for r in sub) / n,
                    "attempts": "",
                    "remaining_vertex_fraction": sum(
                        r["remaining_vertex_fraction"] for r in sub
                    )
                    / n,
                    "remaining_edge_fraction": sum(
                        r["remaining_edge_fraction"] for r in sub
                    )
                    / n,
                }
            )
    return means


def worse_than_baseline_notes(rows):
    """Instances where a sparsity-on run kept strictly more than its
    sparsity-off sibling.  Known to happen occasionally; recorded, never
    treated as a failure."""
    baseline = {
        (r["group"], r["dataset"], r["config"]): r
        for r in rows
        if r["config"].startswith("off.")
    }
    notes = []
    for r in rows:
        if not r["config"].startswith("on."):
            continue
        off = baseline.get((r["group"], r["dataset"], "off." + r["config"][3:]))
        if off is None:
            continue
        for metric in ("remaining_vertex_fraction", "remaining_edge_fraction"):
            if r[metric] > off[metric]:
                notes.append(
                    f"{r['group']}/{r['dataset']}: {r['config']} kept "
                    f"{metric.split('_')[1]} fraction {r[metric]:.6f} "
                    f"> {off[metric]:.6f} under {off['config']}"
                )
    return notes


def _format_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(path, result: BenchResult) -> None:
    """Instance rows first, then the group means; byte-deterministic."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in list(result.rows) + list(result.means):
            writer.writerow(_format_cell(row[c]) for c in CSV_COLUMNS)
