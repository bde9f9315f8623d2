"""Membership tests for oriented threshold graphs.

Three independent routes decide membership:

* transitivity plus a threshold underlying graph (:func:`recognize`),
* reverse elimination of isolated / out-dominating / in-dominated
  vertices (:func:`extract_sequence`),
* a displit partition with properly nested neighborhoods
  (:func:`displit_partition` and :func:`check_properly_nested`).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .construction import WeightRealization, realize_weights
from .graph import (
    NeighborhoodMap,
    OrientedGraph,
    UndirectedGraph,
    iter_bits,
    is_nested_family,
    is_transitive,
)
from .sequences import MINUS, PLUS, ZERO, Symbol, TernarySequence, canonicalize


@dataclass(frozen=True)
class DisplitPartition:
    top: frozenset[int]
    independent: frozenset[int]
    bottom: frozenset[int]

    def __post_init__(self) -> None:
        for name in ("top", "independent", "bottom"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @property
    def clique(self) -> frozenset[int]:
        return self.top | self.bottom


def is_displit(g: OrientedGraph, p: DisplitPartition) -> bool:
    """Check the four displit conditions for ``p`` on ``g``."""
    t, i, b = p.top, p.independent, p.bottom
    if t & i or t & b or i & b or (t | i | b) != frozenset(g.vertices):
        return False
    if any(g.has_arc(x, y) for x in i for y in i):
        return False
    k = sorted(p.clique)
    if any(not (g.has_arc(x, y) or g.has_arc(y, x)) for x, y in combinations(k, 2)):
        return False
    for u, v in g.arcs:
        if v in t and u not in t:
            return False
        if u in b and v not in b:
            return False
    return True


def _eliminate(g: OrientedGraph) -> tuple[list[tuple[int, Symbol]], int] | None:
    """Peel vertices off ``g``; return the (vertex, symbol) removals and ``*``.

    Preference is isolated, then out-dominating, then in-dominated, lowest
    index first.  The final two vertices are symmetric: the lower index is
    kept as ``*`` and the other is recorded with its true role.
    """
    out, inn = g.out_masks, g.in_masks
    alive = (1 << g.n) - 1
    steps: list[tuple[int, Symbol]] = []
    while alive.bit_count() > 2:
        pick = None
        for v in iter_bits(alive):
            if not (out[v] | inn[v]) & alive:
                pick = (v, ZERO)
                break
        if pick is None:
            for v in iter_bits(alive):
                if out[v] & alive == alive & ~(1 << v):
                    pick = (v, PLUS)
                    break
        if pick is None:
            for v in iter_bits(alive):
                if inn[v] & alive == alive & ~(1 << v):
                    pick = (v, MINUS)
                    break
        if pick is None:
            return None
        steps.append(pick)
        alive &= ~(1 << pick[0])
    if alive.bit_count() == 2:
        lo, hi = iter_bits(alive)
        if out[hi] >> lo & 1:
            steps.append((hi, PLUS))
        elif inn[hi] >> lo & 1:
            steps.append((hi, MINUS))
        else:
            steps.append((hi, ZERO))
        return steps, lo
    return steps, 0


def extract_sequence(g: OrientedGraph) -> TernarySequence | None:
    """Creation sequence of ``g`` recovered by elimination, or None.

    When present, ``dtg_build`` of the result is isomorphic to ``g``.  The
    vertex removed last sits next to ``*`` and is always reported as ``+``.
    """
    found = _eliminate(g)
    if found is None:
        return None
    steps, _ = found
    symbols = [sym for _, sym in steps]
    if symbols and symbols[-1] is MINUS:
        symbols[-1] = PLUS
    return TernarySequence(tuple(symbols))


def canonical_form(g: OrientedGraph) -> TernarySequence | None:
    s = extract_sequence(g)
    return None if s is None else canonicalize(s)


def realize_graph_weights(g: OrientedGraph) -> WeightRealization | None:
    """Weights on ``g``'s own vertex labels that rebuild ``g`` exactly."""
    found = _eliminate(g)
    if found is None:
        return None
    steps, star = found
    seq = TernarySequence(tuple(sym for _, sym in steps))
    realized = realize_weights(seq)
    built = realized.weights
    weights = [0] * g.n
    weights[star] = built[0]
    # the r-th removal was the (n-1-r)-th vertex added
    for r, (v, _) in enumerate(steps):
        weights[v] = built[g.n - 1 - r]
    return WeightRealization(tuple(weights), realized.threshold)


def recognize(g: OrientedGraph) -> bool:
    return is_transitive(g) and is_threshold_undirected(g.underlying())


def displit_partition(g: OrientedGraph) -> DisplitPartition | None:
    found = _eliminate(g)
    if found is None:
        return None
    steps, star = found
    independent = {star}
    top, bottom = set(), set()
    for v, sym in steps:
        if sym is ZERO:
            independent.add(v)
        elif g.has_arc(v, star):
            top.add(v)
        elif g.has_arc(star, v):
            bottom.add(v)
        else:
            (top if sym is PLUS else bottom).add(v)
    return DisplitPartition(frozenset(top), frozenset(independent), frozenset(bottom))


def check_properly_nested(g: OrientedGraph, p: DisplitPartition) -> bool:
    """Check the three properly-nested-neighborhood conditions.

    Raises ValueError when ``p`` is not a displit partition of ``g``.
    """
    if not is_displit(g, p):
        raise ValueError("partition is not a displit partition of the graph")
    total: NeighborhoodMap = g.neighborhood_map("total")
    plus = g.neighborhood_map("out")
    minus = g.neighborhood_map("in")
    ind, k = sorted(p.independent), sorted(p.clique)

    if not is_nested_family(total, g.vertices):
        return False

    if not (is_nested_family(plus, ind) and is_nested_family(minus, ind)):
        return False
    for x in ind:
        for y in ind:
            if total.nested_le(x, y) and not (minus.nested_le(x, y) and plus.nested_le(x, y)):
                return False

    if not (is_nested_family(plus, k, strict=True) and is_nested_family(minus, k, strict=True)):
        return False
    for x in k:
        for y in k:
            if plus.proper_lt(x, y) != minus.proper_lt(y, x):
                return False
    return True


def is_threshold_undirected(g: UndirectedGraph) -> bool:
    """Peel isolated-else-dominating vertices until nothing is left."""
    adj = g.adj_masks
    alive = (1 << g.n) - 1
    while alive:
        for v in iter_bits(alive):
            nbrs = adj[v] & alive
            if not nbrs or nbrs == alive & ~(1 << v):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True
