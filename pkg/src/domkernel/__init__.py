"""Kernelization for black/white dominating set on sparse graphs."""

from .engine import ALL_CONFIGS, ApproachConfig, KernelReport, kernelize
from .exact import ExactResult, OracleSizeError, exact_dom
from .graph import (
    BLACK,
    WHITE,
    Color,
    ColoredGraph,
    Instance,
    bw_to_plain_gadget,
    is_1_scattered,
)
from .sparsity import SparsityConfig

__all__ = [
    "ALL_CONFIGS",
    "ApproachConfig",
    "BLACK",
    "Color",
    "ColoredGraph",
    "ExactResult",
    "Instance",
    "KernelReport",
    "OracleSizeError",
    "SparsityConfig",
    "WHITE",
    "bw_to_plain_gadget",
    "exact_dom",
    "is_1_scattered",
    "kernelize",
]
