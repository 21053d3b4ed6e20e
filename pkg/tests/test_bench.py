"""Batch runner: ordering, aggregation, notes, and CSV byte determinism."""

import json

import pytest

from domkernel.bench import (
    BenchResult,
    BenchRunError,
    CSV_COLUMNS,
    aggregate_means,
    read_manifest,
    run_bench,
    worse_than_baseline_notes,
    write_csv,
)
from domkernel.edgelist import write_edge_list
from domkernel.plangen import GroupSpec, generate_group


def tiny_dataset(root):
    """Two small groups, two instances each, written under root."""
    entries = []
    for spec in (GroupSpec(20, 40, instances=2), GroupSpec(24, 30, instances=2)):
        (root / spec.name).mkdir(parents=True, exist_ok=True)
        for index, graph in generate_group(spec, master_seed=0):
            rel = f"{spec.name}/inst_{index:03d}.edges"
            write_edge_list(root / rel, graph)
            entries.append(
                {
                    "group": spec.name,
                    "dataset": rel,
                    "path": str(root / rel),
                    "white_path": None,
                }
            )
    return entries


CONFIGS = ["off.none", "on.both"]


class TestReadManifest:
    def test_paths_resolve_relative_to_the_manifest(self, tmp_path):
        manifest = tmp_path / "manifest.json"
        manifest.write_text(
            json.dumps(
                {
                    "files": [
                        {"group": "g", "path": "g/a.edges", "white": None},
                        {"group": "g", "path": "g/b.edges", "white": "g/b.white"},
                    ]
                }
            )
        )
        entries = read_manifest(manifest)
        assert entries[0]["path"] == str(tmp_path / "g" / "a.edges")
        assert entries[0]["white_path"] is None
        assert entries[1]["white_path"] == str(tmp_path / "g" / "b.white")

    def test_empty_manifest(self, tmp_path):
        manifest = tmp_path / "manifest.json"
        manifest.write_text("{}")
        assert read_manifest(manifest) == []


class TestRunBench:
    def test_empty_run_gives_header_only_csv(self, tmp_path):
        result = run_bench([], CONFIGS)
        assert result.rows == ()
        assert result.means == ()
        out = tmp_path / "out.csv"
        write_csv(out, result)
        assert out.read_text() == ",".join(CSV_COLUMNS) + "\n"

    def test_rows_are_dataset_major_in_config_order(self, tmp_path):
        entries = tiny_dataset(tmp_path)
        result = run_bench(entries, CONFIGS)
        key = [(r["dataset"], r["config"]) for r in result.rows]
        assert key == [
            (e["dataset"], name) for e in entries for name in CONFIGS
        ]
        assert all(r["kind"] == "instance" for r in result.rows)

    def test_fractions_recompute_from_the_counts(self, tmp_path):
        entries = tiny_dataset(tmp_path)
        result = run_bench(entries, CONFIGS)
        for r in result.rows:
            assert (
                r["remaining_vertex_fraction"]
                == r["final_vertices"] / r["initial_vertices"]
            )
            assert (
                r["remaining_edge_fraction"]
                == r["final_edges"] / r["initial_edges"]
            )

    def test_mean_rows_follow_group_then_config_order(self, tmp_path):
        entries = tiny_dataset(tmp_path)
        result = run_bench(entries, CONFIGS)
        key = [(m["group"], m["config"]) for m in result.means]
        assert key == [
            ("20x40", "off.none"),
            ("20x40", "on.both"),
            ("24x30", "off.none"),
            ("24x30", "on.both"),
        ]
        for m in result.means:
            sub = [
                r
                for r in result.rows
                if r["group"] == m["group"] and r["config"] == m["config"]
            ]
            assert m["kind"] == "group-mean"
            assert m["dataset"] == ""
            assert m["initial_vertices"] == ""
            assert (
                m["remaining_vertex_fraction"]
                == sum(r["remaining_vertex_fraction"] for r in sub) / len(sub)
            )
            assert m["fully_solved"] == sum(r["fully_solved"] for r in sub) / len(
                sub
            )

    def test_missing_file_aborts_naming_it(self, tmp_path):
        entries = tiny_dataset(tmp_path)
        entries.insert(
            1,
            {
                "group": "20x40",
                "dataset": "20x40/gone.edges",
                "path": str(tmp_path / "20x40" / "gone.edges"),
                "white_path": None,
            },
        )
        with pytest.raises(BenchRunError) as exc:
            run_bench(entries, CONFIGS)
        assert "gone.edges" in str(exc.value)

    def test_malformed_file_aborts(self, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("0 1\n1 2 3\n")
        entries = [
            {
                "group": "g",
                "dataset": "bad.edges",
                "path": str(bad),
                "white_path": None,
            }
        ]
        with pytest.raises(BenchRunError) as exc:
            run_bench(entries, ["off.none"])
        assert "bad.edges" in str(exc.value)


class TestDeterminism:
    def test_reruns_are_byte_identical(self, tmp_path):
        entries = tiny_dataset(tmp_path)
        first = tmp_path / "a.csv"
        second = tmp_path / "b.csv"
        write_csv(first, run_bench(entries, CONFIGS))
        write_csv(second, run_bench(entries, CONFIGS))
        assert first.read_bytes() == second.read_bytes()

    def test_worker_count_does_not_change_the_bytes(self, tmp_path):
        entries = tiny_dataset(tmp_path)
        serial = tmp_path / "serial.csv"
        pooled = tmp_path / "pooled.csv"
        write_csv(serial, run_bench(entries, CONFIGS, workers=1))
        write_csv(pooled, run_bench(entries, CONFIGS, workers=2))
        assert serial.read_bytes() == pooled.read_bytes()

    def test_csv_formatting(self, tmp_path):
        entries = tiny_dataset(tmp_path)[:1]
        out = tmp_path / "out.csv"
        write_csv(out, run_bench(entries, ["off.none"]))
        lines = out.read_text().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        cells = lines[1].split(",")
        assert cells[CSV_COLUMNS.index("fully_solved")] in ("true", "false")
        fraction = cells[CSV_COLUMNS.index("remaining_vertex_fraction")]
        assert float(fraction) == float(repr(float(fraction)))


class TestWorseThanBaselineNotes:
    def _row(self, config, vfrac, efrac):
        return {
            "kind": "instance",
            "group": "g",
            "dataset": "a.edges",
            "config": config,
            "fully_solved": False,
            "remaining_vertex_fraction": vfrac,
            "remaining_edge_fraction": efrac,
        }

    def test_silent_when_sparsity_never_hurts(self):
        rows = [self._row("off.both", 0.2, 0.1), self._row("on.both", 0.2, 0.1)]
        assert worse_than_baseline_notes(rows) == []

    def test_flags_a_strictly_worse_run(self):
        rows = [self._row("off.both", 0.1, 0.05), self._row("on.both", 0.2, 0.05)]
        notes = worse_than_baseline_notes(rows)
        assert notes == [
            "g/a.edges: on.both kept vertex fraction 0.200000 "
            "> 0.100000 under off.both"
        ]

    def test_both_metrics_can_fire(self):
        rows = [self._row("off.one", 0.1, 0.05), self._row("on.one", 0.2, 0.06)]
        assert len(worse_than_baseline_notes(rows)) == 2

    def test_unpaired_rows_ignored(self):
        rows = [self._row("on.both", 0.9, 0.9)]
        assert worse_than_baseline_notes(rows) == []
