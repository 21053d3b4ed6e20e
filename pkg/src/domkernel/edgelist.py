"""Plain-text edge list and white-vertex sidecar files.

An edge list holds one edge per line as two whitespace-separated vertex
ids; blank lines and lines starting with '#' are ignored, so writers can
leave a '# n m' size header for humans.  A sidecar file lists one white
vertex id per line under the same comment rules; vertices absent from the
sidecar (or when no sidecar is given) are black.
"""

from __future__ import annotations

from pathlib import Path

from .graph import WHITE, ColoredGraph


class EdgeListError(ValueError):
    """Malformed input file, with position information."""

    def __init__(self, path, line_no: int | None, message: str) -> None:
        where = f"{path}:{line_no}" if line_no is not None else str(path)
        super().__init__(f"{where}: {message}")
        self.path = str(path)
        self.line_no = line_no


def _data_lines(path):
    text = Path(path).read_text()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def read_edge_list(path) -> list[tuple[int, int]]:
    """Parse the edge pairs; duplicate edges are tolerated and collapse."""
    edges = []
    for line_no, line in _data_lines(path):
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(
                path, line_no, f"expected two vertex ids, got {len(parts)} tokens"
            )
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(path, line_no, f"non-integer vertex id in {line!r}")
        if u < 0 or v < 0:
            raise EdgeListError(path, line_no, "vertex ids must be non-negative")
        if u == v:
            raise EdgeListError(path, line_no, f"self-loop at {u} not allowed")
        edges.append((u, v))
    return edges


def read_white_list(path) -> set[int]:
    whites = set()
    for line_no, line in _data_lines(path):
        parts = line.split()
        if len(parts) != 1:
            raise EdgeListError(path, line_no, "expected one vertex id per line")
        try:
            w = int(parts[0])
        except ValueError:
            raise EdgeListError(path, line_no, f"non-integer vertex id {parts[0]!r}")
        if w < 0:
            raise EdgeListError(path, line_no, "vertex ids must be non-negative")
        whites.add(w)
    return whites


def load_graph(path, white_path=None) -> ColoredGraph:
    """Build the colored graph from an edge list plus optional sidecar."""
    g = ColoredGraph.from_edges(read_edge_list(path))
    if white_path is not None:
        for w in sorted(read_white_list(white_path)):
            if w not in g:
                raise EdgeListError(
                    white_path, None, f"white vertex {w} does not occur in {path}"
                )
            g.set_color(w, WHITE)
    return g


def write_edge_list(path, g: ColoredGraph) -> None:
    lines = [f"# {g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    Path(path).write_text("\n".join(lines) + "\n")


def write_white_list(path, g: ColoredGraph) -> None:
    whites = sorted(g.white_vertices())
    lines = [f"# {len(whites)} white vertices"]
    lines.extend(str(w) for w in whites)
    Path(path).write_text("\n".join(lines) + "\n")
