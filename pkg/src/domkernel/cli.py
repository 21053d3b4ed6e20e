"""Command line entry points.

Exit codes: 0 success, 1 usage errors (bad flags, unknown configuration),
2 data errors (unreadable or malformed input files), 3 exact-solver refusal
on an oversized instance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import BenchRunError, read_manifest, run_bench, write_csv
from .edgelist import EdgeListError, load_graph, write_edge_list
from .engine import ALL_CONFIGS, ApproachConfig, kernelize
from .exact import OracleSizeError, exact_dom
from .graph import Instance
from .plangen import canonical_groups, generate_group
from .sparsity import SparsityConfig

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_ORACLE = 3


class _Parser(argparse.ArgumentParser):
    """argparse reserves exit code 2 for usage problems; we use 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="domkernel", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate the planar benchmark dataset")
    gen.add_argument("--out", required=True, help="output directory")
    gen.add_argument("--seed", type=int, default=0, help="master seed")
    gen.add_argument(
        "--instances", type=int, default=25,
        help="instances per group (default 25; 100 for the full scale)",
    )
    gen.add_argument(
        "--groups", default=None,
        help="comma-separated group names to restrict to, e.g. 302x900",
    )

    ker = sub.add_parser("kernelize", help="reduce one instance")
    ker.add_argument("edges", help="edge list file")
    ker.add_argument("--white", default=None, help="white-vertex sidecar file")
    ker.add_argument("--config", default="off.none", help="configuration name")
    ker.add_argument("--report", default=None, help="write a JSON report here")
    ker.add_argument(
        "--kernel-out", default=None, help="write the reduced edge list here"
    )
    ker.add_argument("--hub-threshold", type=int, default=7)

    ben = sub.add_parser("bench", help="run the benchmark over a dataset")
    ben.add_argument("--manifest", required=True, help="dataset manifest.json")
    ben.add_argument("--csv", required=True, help="output CSV path")
    ben.add_argument(
        "--configs", default=None,
        help="comma-separated configuration names (default: all six)",
    )
    ben.add_argument(
        "--workers", type=int, default=None,
        help="parallel workers (default: DOMKERNEL_WORKERS or 1)",
    )
    ben.add_argument("--hub-threshold", type=int, default=7)

    sol = sub.add_parser("solve-exact", help="exact optimum of a small instance")
    sol.add_argument("edges", help="edge list file")
    sol.add_argument("--white", default=None, help="white-vertex sidecar file")
    sol.add_argument("--limit", type=int, default=64, help="vertex limit")

    return parser


def _cmd_gen(args) -> int:
    out = Path(args.out)
    groups = canonical_groups(args.instances)
    if args.groups is not None:
        wanted = [s.strip() for s in args.groups.split(",") if s.strip()]
        by_name = {g.name: g for g in groups}
        missing = [w for w in wanted if w not in by_name]
        if missing:
            raise ValueError(f"unknown group names: {', '.join(missing)}")
        groups = tuple(by_name[w] for w in wanted)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for spec in groups:
        group_dir = out / spec.name
        group_dir.mkdir(exist_ok=True)
        for index, graph in generate_group(spec, args.seed):
            rel = f"{spec.name}/inst_{index:03d}.edges"
            write_edge_list(out / rel, graph)
            files.append({"group": spec.name, "path": rel, "white": None})
    manifest = {
        "master_seed": args.seed,
        "instances_per_group": args.instances,
        "groups": [g.name for g in groups],
        "files": files,
    }
    (out / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(files)} instances in {len(groups)} groups to {out}")
    return EXIT_OK


def _cmd_kernelize(args) -> int:
    config = ApproachConfig.from_name(args.config)
    g = load_graph(args.edges, args.white)
    inst = Instance.from_graph(g)
    report = kernelize(
        inst, config, SparsityConfig(hub_threshold=args.hub_threshold)
    )
    print(f"input: {args.edges}")
    print(f"config: {report.config}")
    print(
        f"vertices: {report.initial_vertices} -> {report.final_vertices}"
        f" ({report.remaining_vertex_fraction:.6f})"
    )
    print(
        f"edges: {report.initial_edges} -> {report.final_edges}"
        f" ({report.remaining_edge_fraction:.6f})"
    )
    print(f"solution: {report.solution_size}")
    print(f"fully solved: {'yes' if report.fully_solved else 'no'}")
    fired = {k: v for k, v in sorted(report.rule_applications.items()) if v}
    if fired:
        print("applications:", " ".join(f"{k}={v}" for k, v in fired.items()))
    else:
        print("applications: none")
    if args.report:
        payload = report.to_dict()
        payload["input"] = args.edges
        payload["white"] = args.white
        Path(args.report).write_text(json.dumps(payload, indent=2) + "\n")
    if args.kernel_out:
        write_edge_list(args.kernel_out, inst.graph)
    return EXIT_OK


def _cmd_bench(args) -> int:
    entries = read_manifest(args.manifest)
    if args.configs is None:
        configs = [c.name for c in ALL_CONFIGS]
    else:
        configs = [s.strip() for s in args.configs.split(",") if s.strip()]
        for name in configs:
            ApproachConfig.from_name(name)
    workers = args.workers
    if workers is None:
        workers = int(os.environ.get("DOMKERNEL_WORKERS", "1"))
    result = run_bench(
        entries,
        configs,
        workers=workers,
        sparsity_config=SparsityConfig(hub_threshold=args.hub_threshold),
    )
    write_csv(args.csv, result)
    for note in result.notes:
        print(f"note: {note}", file=sys.stderr)
    for mean in result.means:
        print(
            f"{mean['group']:>12}  {mean['config']:<8}"
            f"  vertices {mean['remaining_vertex_fraction']:.6f}"
            f"  edges {mean['remaining_edge_fraction']:.6f}"
            f"  solved {mean['fully_solved']:.2f}"
        )
    print(f"csv: {args.csv}")
    return EXIT_OK


def _cmd_solve_exact(args) -> int:
    g = load_graph(args.edges, args.white)
    result = exact_dom(g, limit=args.limit)
    print(f"optimum: {result.size}")
    print("witness:", " ".join(str(v) for v in sorted(result.witness)))
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "kernelize": _cmd_kernelize,
    "bench": _cmd_bench,
    "solve-exact": _cmd_solve_exact,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (EdgeListError, BenchRunError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
