"""Shared test utilities: tiny graph builders, brute-force oracles kept
independent of the package's own solver, and hypothesis strategies for
small random colored instances."""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from domkernel.exact import dominates
from domkernel.graph import WHITE, ColoredGraph


# -- builders ----------------------------------------------------------


def path_graph(n: int, white=()) -> ColoredGraph:
    """P_n on ids 0..n-1."""
    return ColoredGraph.from_edges(
        [(i, i + 1) for i in range(n - 1)], white=white, isolated=range(n)
    )


def cycle_graph(n: int, white=()) -> ColoredGraph:
    """C_n on ids 0..n-1."""
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return ColoredGraph.from_edges(edges, white=white)


def star_graph(leaves: int, white=()) -> ColoredGraph:
    """K_{1,leaves} with center 0 and leaves 1..leaves."""
    return ColoredGraph.from_edges(
        [(0, i) for i in range(1, leaves + 1)], white=white, isolated=[0]
    )


def apex_stars(stars: int, leaves: int) -> ColoredGraph:
    """An apex vertex joined to `stars` star centers, each carrying its own
    `leaves` pendant leaves; everything black.  Ids: apex 0, centers
    1..stars, then leaves star by star."""
    edges = []
    nxt = stars + 1
    for c in range(1, stars + 1):
        edges.append((0, c))
        for _ in range(leaves):
            edges.append((c, nxt))
            nxt += 1
    return ColoredGraph.from_edges(edges)


# -- independent oracles -----------------------------------------------


def brute_force_dom(g: ColoredGraph) -> int:
    """Minimum dominating-set size by plain subset enumeration.  Checks
    subsets in increasing size, so the first hit is the optimum.  Only for
    graphs of a dozen or so vertices."""
    vs = g.vertices()
    for k in range(len(vs) + 1):
        for combo in itertools.combinations(vs, k):
            if dominates(g, combo):
                return k
    raise AssertionError("the full vertex set always dominates")


def bfs_distances(g: ColoredGraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


# -- random instances --------------------------------------------------


def random_colored_graph(
    rng: random.Random, n: int, density: float, white_frac: float
) -> ColoredGraph:
    """Erdos-Renyi style colored instance."""
    g = ColoredGraph()
    for _ in range(n):
        g.add_vertex()
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < density:
            g.add_edge(u, v)
    for v in range(n):
        if rng.random() < white_frac:
            g.set_color(v, WHITE)
    return g


def random_planar_colored(
    rng: random.Random, n: int, white_frac: float
) -> ColoredGraph:
    """Small random planar instance: triangulation, thinning, then a random
    subset whitened.  Thinning may drop isolated vertices."""
    from domkernel.plangen import random_maximal_planar, thin_to_edges

    g = random_maximal_planar(n, rng.randrange(1 << 32))
    m = rng.randint(max(0, n - 2), 3 * n - 6)
    g = thin_to_edges(g, m, rng.randrange(1 << 32))
    for v in g.vertices():
        if rng.random() < white_frac:
            g.set_color(v, WHITE)
    return g


def mixed_instance_stream(seed: int, count: int, max_n: int = 16):
    """Deterministic stream alternating the two random families, matching
    the corpus the safety properties are stated over."""
    rng = random.Random(seed)
    for i in range(count):
        white_frac = rng.uniform(0.0, 0.5)
        if i % 2 == 0:
            n = rng.randint(1, max_n)
            density = rng.uniform(0.1, 0.5)
            yield random_colored_graph(rng, n, density, white_frac)
        else:
            n = rng.randint(4, max_n)
            yield random_planar_colored(rng, n, white_frac)


# -- hypothesis strategies ---------------------------------------------


@st.composite
def colored_graphs(draw, min_vertices: int = 1, max_vertices: int = 10):
    """Arbitrary small colored graph on ids 0..n-1."""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    if pairs:
        edges = draw(
            st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))
        )
    else:
        edges = []
    white = draw(st.sets(st.integers(min_value=0, max_value=n - 1)))
    g = ColoredGraph()
    for v in range(n):
        g.add_vertex(v)
    for u, v in edges:
        g.add_edge(u, v)
    for w in white:
        g.set_color(w, WHITE)
    return g
