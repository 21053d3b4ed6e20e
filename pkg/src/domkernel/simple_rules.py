"""The six local reduction rules and their exhaustive application.

Rule order is fixed.  One "step" of the reference semantics applies the
lowest-numbered rule that matches anywhere, at its largest matching vertex
(rule 1 removes the edge at the largest white vertex with a white neighbor,
toward its largest white neighbor).  The production fixed-point driver
reproduces exactly that sequence of steps but re-checks only vertices whose
local structure a mutation could have changed, which is what makes large
sparse instances affordable.

Scanning largest-first is a deliberate choice: on hierarchically built
planar instances the freshest (largest-id) vertices sit at the leaves of
the construction, and peeling leaves before hubs lets the whitening cascade
run much further.  Ascending scans leave kernels several times larger on
the maximal planar benchmark groups; either direction is equally
deterministic, and optimum preservation never depends on order.
"""

from __future__ import annotations

import heapq
from enum import IntEnum

from .graph import BLACK, WHITE, ColoredGraph, Instance


class SimpleRule(IntEnum):
    """The six rules in application order."""

    WW_EDGE = 0          # drop an edge between two whites
    WHITE_NO_BLACK = 1   # drop a white with no black neighbor
    WHITE_SUBSUMED = 2   # drop a white whose black coverage a neighbor matches
    BLACK_TO_WHITE = 3   # whiten a black inside an adjacent black's ball
    ISOLATED_BLACK = 4   # take an isolated black
    DEGREE1_BLACK = 5    # take the sole neighbor of a degree-1 black

    @property
    def stat_name(self) -> str:
        return self.name.lower()


# -- applicability predicates -----------------------------------------
#
# Each predicate reads only the color and adjacency of v and of v's current
# neighbors.  The fixed-point driver relies on that locality.


def _ww_partner(g: ColoredGraph, v: int) -> int | None:
    """Largest white neighbor of white v, if any.  Together with the
    largest-first vertex scan this makes the removed edge deterministic."""
    if g.color[v] is not WHITE:
        return None
    col = g.color
    best = None
    for u in g.adj[v]:
        if col[u] is WHITE and (best is None or u > best):
            best = u
    return best


def _white_no_black(g: ColoredGraph, v: int) -> bool:
    if g.color[v] is not WHITE:
        return False
    col = g.color
    return not any(col[u] is BLACK for u in g.adj[v])


def _white_subsumed_partner(g: ColoredGraph, u: int) -> int | None:
    """Smallest neighbor v of white u with N[u] cap Black <= N[v] cap Black."""
    if g.color[u] is not WHITE:
        return None
    adj = g.adj
    col = g.color
    need = {x for x in adj[u] if col[x] is BLACK}
    for v in sorted(adj[u]):
        missing = need - adj[v]
        if not missing or missing == {v}:
            return v
    return None


def _black_to_white_partner(g: ColoredGraph, u: int) -> int | None:
    """Smallest black neighbor v of black u with N[u] >= N[v]."""
    if g.color[u] is not BLACK:
        return None
    adj = g.adj
    col = g.color
    ball = adj[u] | {u}
    for v in sorted(adj[u]):
        if col[v] is BLACK and adj[v] <= ball:
            return v
    return None


def _isolated_black(g: ColoredGraph, v: int) -> bool:
    return g.color[v] is BLACK and not g.adj[v]


def _degree1_black(g: ColoredGraph, v: int) -> bool:
    return g.color[v] is BLACK and len(g.adj[v]) == 1


def applies(g: ColoredGraph, rule: SimpleRule, v: int) -> bool:
    if rule is SimpleRule.WW_EDGE:
        return _ww_partner(g, v) is not None
    if rule is SimpleRule.WHITE_NO_BLACK:
        return _white_no_black(g, v)
    if rule is SimpleRule.WHITE_SUBSUMED:
        return _white_subsumed_partner(g, v) is not None
    if rule is SimpleRule.BLACK_TO_WHITE:
        return _black_to_white_partner(g, v) is not None
    if rule is SimpleRule.ISOLATED_BLACK:
        return _isolated_black(g, v)
    return _degree1_black(g, v)


def _fire(inst: Instance, rule: SimpleRule, v: int) -> tuple:
    """Apply rule at v (caller has checked applicability).  Returns the
    vertices whose adjacency or color the mutation touched; only vertices
    at distance <= 1 from a touched one can change applicability."""
    g = inst.graph
    if rule is SimpleRule.WW_EDGE:
        u = _ww_partner(g, v)
        g.remove_edge(v, u)
        touched = (v, u)
    elif rule is SimpleRule.WHITE_NO_BLACK or rule is SimpleRule.WHITE_SUBSUMED:
        touched = tuple(g.adj[v])
        g.remove_vertex(v)
    elif rule is SimpleRule.BLACK_TO_WHITE:
        g.set_color(v, WHITE)
        touched = (v,)
    elif rule is SimpleRule.ISOLATED_BLACK:
        inst.take_into_solution(v)
        touched = ()
    else:
        u = next(iter(g.adj[v]))
        touched = tuple(g.adj[u])
        inst.take_into_solution(u)
    inst.stats[rule.stat_name] += 1
    return touched


# -- single-application entry points ----------------------------------


def _apply_first(inst: Instance, rule: SimpleRule) -> bool:
    g = inst.graph
    for v in sorted(g.adj, reverse=True):
        if applies(g, rule, v):
            _fire(inst, rule, v)
            return True
    return False


def rule_ww_edge(inst: Instance) -> bool:
    """Remove one white-white edge, at the largest white endpoint."""
    return _apply_first(inst, SimpleRule.WW_EDGE)


def rule_white_no_black(inst: Instance) -> bool:
    """Remove one white vertex with no black neighbor."""
    return _apply_first(inst, SimpleRule.WHITE_NO_BLACK)


def rule_white_subsumed(inst: Instance) -> bool:
    """Remove one white vertex whose black coverage some neighbor matches."""
    return _apply_first(inst, SimpleRule.WHITE_SUBSUMED)


def rule_black_to_white(inst: Instance) -> bool:
    """Whiten one black vertex dominated-by-containment by a black neighbor."""
    return _apply_first(inst, SimpleRule.BLACK_TO_WHITE)


def rule_isolated_black(inst: Instance) -> bool:
    """Take one isolated black vertex into the solution."""
    return _apply_first(inst, SimpleRule.ISOLATED_BLACK)


def rule_degree1_black(inst: Instance) -> bool:
    """Take the unique neighbor of one degree-1 black vertex."""
    return _apply_first(inst, SimpleRule.DEGREE1_BLACK)


def apply_one_simple_rule(inst: Instance) -> SimpleRule | None:
    """Reference single step: lowest applicable rule, largest vertex."""
    for rule in SimpleRule:
        if _apply_first(inst, rule):
            return rule
    return None


def apply_simple_exhaustively_naive(inst: Instance) -> int:
    """Reference fixed point: repeat single steps until none applies.
    Quadratic and only meant as the golden model for equivalence tests."""
    count = 0
    while apply_one_simple_rule(inst) is not None:
        count += 1
    return count


# -- incremental fixed point ------------------------------------------

_KEY_SHIFT = 32
_KEY_MASK = (1 << _KEY_SHIFT) - 1


def apply_simple_exhaustively(inst: Instance) -> int:
    """Apply the six rules to a fixed point; returns the application count.

    Behaviorally identical to the naive loop: candidates live in one heap
    keyed by (rule, vertex descending), so the popped valid candidate is
    always the lowest-numbered applicable rule at its largest vertex.  After
    a firing, exactly the vertices whose predicate inputs could have changed
    (the touched vertices and their surviving neighbors) are re-queued for
    every rule.  Stale heap entries are discarded on pop by re-validation.

    Vertex ids must fit in 32 bits; the heap packs (rule, complemented
    vertex) into one integer so ordering and dedup stay cheap.
    """
    g = inst.graph
    adj = g.adj
    heap = []
    for v in adj:
        for r in range(6):
            heap.append((r << _KEY_SHIFT) | (_KEY_MASK - v))
    heapq.heapify(heap)
    queued = set(heap)
    rules = list(SimpleRule)
    count = 0
    while heap:
        key = heapq.heappop(heap)
        queued.discard(key)
        v = _KEY_MASK - (key & _KEY_MASK)
        if v not in adj:
            continue
        rule = rules[key >> _KEY_SHIFT]
        if not applies(g, rule, v):
            continue
        touched = _fire(inst, rule, v)
        count += 1
        affected = set()
        for t in touched:
            if t in adj:
                affected.add(t)
                affected.update(adj[t])
        for x in affected:
            comp = _KEY_MASK - x
            for r in range(6):
                k = (r << _KEY_SHIFT) | comp
                if k not in queued:
                    queued.add(k)
                    heapq.heappush(heap, k)
    return count
