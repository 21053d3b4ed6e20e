"""Irrelevant-dominatee reduction built on greedy domination and scattering.

The driver keeps a working dominator pool D' (greedy at first, grown by hub
escalation), extracts a 1-scattered family F of blacks outside the pool,
groups F by how the pool sees each member, and whitens group members that a
counting argument shows some optimal solution never needs as dominatees.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .graph import BLACK, WHITE, ColoredGraph, Instance


@dataclass(frozen=True)
class SparsityConfig:
    """Knobs for the scatter heuristic and the escalation loop.

    hub_threshold: escalation stops once no vertex outside D' has more than
        this many D' neighbors.
    hub_cutoff: residual degree above which scatter deletes hubs; None
        derives max(8, twice the average degree of the graph passed in).
    deletion_cap: most hubs one scatter call may delete; None derives the
        square root of the candidate count.
    escalate_toward_black: rank escalation picks by undominated-black
        contact instead of D' contact (an experiment toggle).
    """

    hub_threshold: int = 7
    hub_cutoff: int | None = None
    deletion_cap: int | None = None
    escalate_toward_black: bool = False


@dataclass(frozen=True)
class ScatterResult:
    scattered: frozenset
    deleted: frozenset


@dataclass(frozen=True)
class SparsityContext:
    """Pools a group-reduction step works against: D' is the escalating
    dominator pool, d is D' plus the hubs the scatter call deleted."""

    d_prime: frozenset
    d: frozenset


def greedy_dominating_set(g: ColoredGraph, targets) -> set[int]:
    """Greedy max-coverage dominating set of the target vertices.

    Each step takes the vertex covering the most still-uncovered targets,
    ties to the smallest id.  Lazily re-evaluates stale heap entries, which
    is equivalent to the full rescan because coverage only shrinks.
    """
    remaining = set(targets)
    out: set[int] = set()
    if not remaining:
        return out
    adj = g.adj
    heap = []
    for v in adj:
        c = len(adj[v] & remaining) + (1 if v in remaining else 0)
        if c:
            heap.append((-c, v))
    heapq.heapify(heap)
    while remaining:
        negc, v = heapq.heappop(heap)
        c = len(adj[v] & remaining) + (1 if v in remaining else 0)
        if c == 0:
            continue
        if c == -negc:
            out.add(v)
            remaining -= adj[v]
            remaining.discard(v)
        else:
            heapq.heappush(heap, (-c, v))
    return out


def uqw_scatter(
    g: ColoredGraph, candidates, config: SparsityConfig = SparsityConfig()
) -> ScatterResult:
    """Pull a 1-scattered subset out of the candidates.

    First deletes up to sqrt(#candidates) hub vertices whose residual degree
    exceeds the cutoff (highest degree first, ties to the smaller id), since
    hubs glue neighborhoods together and starve the scatter.  Then greedily
    accepts candidates in ascending residual degree order, blocking the
    radius-2 ball of every acceptance.  The scatter property of the output
    is validated before returning.
    """
    adj = g.adj
    n = len(adj)
    candidates = set(candidates)
    if n == 0 or not candidates:
        return ScatterResult(frozenset(), frozenset())

    cutoff = config.hub_cutoff
    if cutoff is None:
        cutoff = max(8.0, 4.0 * g.edge_count / n)
    cap = config.deletion_cap
    if cap is None:
        cap = math.sqrt(len(candidates))

    deg = {v: len(adj[v]) for v in adj}
    deleted: set[int] = set()
    while len(deleted) < cap:
        v = min(deg, key=lambda x: (-deg[x], x))
        if deg[v] <= cutoff:
            break
        del deg[v]
        deleted.add(v)
        for u in adj[v]:
            if u in deg:
                deg[u] -= 1

    order = sorted(
        (c for c in candidates if c not in deleted),
        key=lambda c: (deg[c], c),
    )
    blocked: set[int] = set()
    scattered: list[int] = []
    for c in order:
        if c in blocked:
            continue
        scattered.append(c)
        ball = {c}
        for u in adj[c]:
            if u in deleted:
                continue
            ball.add(u)
            ball.update(x for x in adj[u] if x not in deleted)
        blocked |= ball

    if not _scattered_excluding(g, scattered, deleted):
        raise AssertionError("scatter output is not 1-scattered")
    return ScatterResult(frozenset(scattered), frozenset(deleted))


def _scattered_excluding(g: ColoredGraph, vs, removed) -> bool:
    """1-scattered check for vs in the graph with removed deleted."""
    adj = g.adj
    seen: set[int] = set()
    for v in sorted(vs):
        if v in removed:
            return False
        ball = {x for x in adj[v] if x not in removed}
        ball.add(v)
        if seen & ball:
            return False
        seen |= ball
    return True


def group_and_reduce(inst: Instance, ctx: SparsityContext, scattered) -> int:
    """Whiten irrelevant dominatees inside a 1-scattered family.

    Members are grouped by the pair (direct pool contact, two-step contact
    with black pool members).  For a group B the counting argument: the
    dominators of B's members in any solution are pairwise distinct and live
    in M = N[B] - D, every such dominator also covers only blacks inside
    R = N[M] cap Black, so whenever |B| exceeds a dominating set of R plus
    one, the excess members (largest ids) never need their own dominator
    and lose their black color.  Groups with empty pool contact are skipped.
    """
    g = inst.graph
    adj = g.adj
    col = g.color
    d = ctx.d
    for f in scattered:
        if col[f] is not BLACK:
            raise AssertionError(f"scattered vertex {f} is not black")
    if not _scattered_excluding(g, scattered, d):
        raise AssertionError("family is not 1-scattered outside the pool")

    pool_blacks = {x for x in d if col[x] is BLACK}
    groups: dict = {}
    for f in sorted(scattered):
        contact = frozenset(adj[f] & d)
        if not contact:
            continue
        second: set[int] = set()
        for u in adj[f]:
            second |= adj[u]
        key = (contact, frozenset(second & pool_blacks))
        groups.setdefault(key, []).append(f)

    whitened = 0
    for key in sorted(groups, key=lambda k: (sorted(k[0]), sorted(k[1]))):
        members = groups[key]
        if len(members) < 2:
            continue
        m = g.closed_neighborhood_of_set(members) - d
        reach = g.closed_neighborhood_of_set(m)
        r = {x for x in reach if col[x] is BLACK}
        cover = len(greedy_dominating_set(g, r))
        excess = len(members) - cover - 1
        if excess <= 0:
            continue
        for b in sorted(members, reverse=True)[:excess]:
            g.set_color(b, WHITE)
        whitened += excess
    if whitened:
        inst.stats["sparsity_whitened"] += whitened
    return whitened


def sparsity_reduce(
    inst: Instance, config: SparsityConfig = SparsityConfig()
) -> int:
    """One full escalation run; returns how many blacks were whitened.

    Starts from a greedy dominating pool of the current blacks.  Each pass
    scatters the blacks outside the pool, whitens irrelevant dominatees
    group by group, then checks for a hub: the vertex outside D' with the
    most D' neighbors.  While that count exceeds the threshold the hub
    joins D' and the pass repeats; pool growth bounds the loop.
    """
    g = inst.graph
    blacks = g.black_vertices()
    if not blacks:
        return 0
    d_prime = greedy_dominating_set(g, blacks)
    total = 0
    while True:
        inst.stats["sparsity_passes"] += 1
        residual = g.without(d_prime)
        candidates = residual.black_vertices()
        scatter = uqw_scatter(residual, candidates, config)
        inst.stats["sparsity_scatter_calls"] += 1
        d = frozenset(d_prime | scatter.deleted)
        ctx = SparsityContext(frozenset(d_prime), d)
        total += group_and_reduce(inst, ctx, scatter.scattered)

        if config.escalate_toward_black:
            rank_pool = {v for v in g.black_vertices() if v not in d}
        else:
            rank_pool = d_prime
        best, best_v = -1, None
        for v in sorted(g.adj):
            if v in d_prime:
                continue
            c = len(g.adj[v] & rank_pool)
            if c > best:
                best, best_v = c, v
        if best_v is None or best <= config.hub_threshold:
            break
        d_prime.add(best_v)
    return total
