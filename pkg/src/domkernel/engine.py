"""Fixed-point kernelization driver over the rule tiers.

Tier 1 is the six simple rules run to exhaustion; tier 2 the single-vertex
neighborhood rule; tier 3 the pair rule; tier 4 the sparsity reduction.
Any success at a higher tier falls back to tier 1, so expensive scans only
ever run on graphs the cheap rules cannot shrink further.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .alber import apply_alber_pair_first, apply_alber_single_first
from .graph import Instance
from .simple_rules import apply_simple_exhaustively
from .sparsity import SparsityConfig, sparsity_reduce

ALBER_MODES = ("none", "one", "both")

ATTEMPT_LIMIT = 10_000_000

STAT_KEYS = (
    "ww_edge",
    "white_no_black",
    "white_subsumed",
    "black_to_white",
    "isolated_black",
    "degree1_black",
    "alber_single",
    "alber_pair",
    "alber_pair_gadget",
    "sparsity_whitened",
    "sparsity_passes",
    "sparsity_scatter_calls",
)


@dataclass(frozen=True)
class ApproachConfig:
    """Which optional rule families run on top of the simple rules."""

    sparsity: bool = False
    alber: str = "none"

    def __post_init__(self) -> None:
        if self.alber not in ALBER_MODES:
            raise ValueError(f"alber mode must be one of {ALBER_MODES}")

    @property
    def name(self) -> str:
        return f"{'on' if self.sparsity else 'off'}.{self.alber}"

    @classmethod
    def from_name(cls, name: str) -> "ApproachConfig":
        parts = name.split(".")
        if len(parts) != 2 or parts[0] not in ("off", "on"):
            raise ValueError(f"unknown configuration name {name!r}")
        return cls(sparsity=parts[0] == "on", alber=parts[1])


ALL_CONFIGS = tuple(
    ApproachConfig(sparsity=s, alber=a)
    for s in (False, True)
    for a in ALBER_MODES
)


@dataclass(frozen=True)
class KernelReport:
    """Outcome of one kernelization run."""

    config: str
    initial_vertices: int
    initial_edges: int
    final_vertices: int
    final_edges: int
    solution_size: int
    fully_solved: bool
    attempts: int
    elapsed_seconds: float
    rule_applications: dict = field(default_factory=dict)

    @property
    def remaining_vertex_fraction(self) -> float:
        if self.initial_vertices == 0:
            return 0.0
        return self.final_vertices / self.initial_vertices

    @property
    def remaining_edge_fraction(self) -> float:
        if self.initial_edges == 0:
            return 0.0
        return self.final_edges / self.initial_edges

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "initial_vertices": self.initial_vertices,
            "initial_edges": self.initial_edges,
            "final_vertices": self.final_vertices,
            "final_edges": self.final_edges,
            "solution_size": self.solution_size,
            "fully_solved": self.fully_solved,
            "attempts": self.attempts,
            "elapsed_seconds": self.elapsed_seconds,
            "remaining_vertex_fraction": self.remaining_vertex_fraction,
            "remaining_edge_fraction": self.remaining_edge_fraction,
            "rule_applications": dict(sorted(self.rule_applications.items())),
        }


def kernelize(
    inst: Instance,
    config: ApproachConfig = ApproachConfig(),
    sparsity_config: SparsityConfig = SparsityConfig(),
) -> KernelReport:
    """Reduce the instance in place to a fixed point of the configured rule
    families and report what happened.  Deterministic for a given input and
    configuration; elapsed time is the only field that varies."""
    g = inst.graph
    start = time.perf_counter()
    initial_vertices = g.vertex_count
    initial_edges = g.edge_count
    attempts = 0
    while True:
        attempts += apply_simple_exhaustively(inst) + 1
        if attempts > ATTEMPT_LIMIT:
            raise RuntimeError("rule attempt limit exceeded; cycling suspected")
        if config.alber in ("one", "both"):
            attempts += 1
            if apply_alber_single_first(inst):
                continue
        if config.alber == "both":
            attempts += 1
            if apply_alber_pair_first(inst):
                continue
        if config.sparsity:
            attempts += 1
            if sparsity_reduce(inst, sparsity_config) > 0:
                continue
        break
    applications = {k: inst.stats.get(k, 0) for k in STAT_KEYS}
    return KernelReport(
        config=config.name,
        initial_vertices=initial_vertices,
        initial_edges=initial_edges,
        final_vertices=g.vertex_count,
        final_edges=g.edge_count,
        solution_size=len(inst.solution),
        fully_solved=g.vertex_count == 0,
        attempts=attempts,
        elapsed_seconds=time.perf_counter() - start,
        rule_applications=applications,
    )
