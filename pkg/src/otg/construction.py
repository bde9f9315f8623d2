"""Build graphs from creation sequences and from signed weights."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import OrientedGraph, UndirectedGraph
from .sequences import MINUS, PLUS, SequenceLike, ZERO, as_sequence


@dataclass(frozen=True)
class WeightRealization:
    """Signed vertex weights (in vertex-index order) and a threshold.

    ``x -> y`` is an arc iff ``|w[x]| + |w[y]| >= threshold`` and
    ``w[x] > w[y]``.  Magnitudes must be pairwise distinct.
    """

    weights: tuple[int, ...]
    threshold: int

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        if not weights:
            raise ValueError("at least one weight is required")
        mags = [abs(w) for w in weights]
        if len(set(mags)) != len(mags):
            raise ValueError(f"weight magnitudes must be distinct: {weights}")
        if self.threshold <= 0:
            raise ValueError(f"threshold must be positive, got {self.threshold}")
        object.__setattr__(self, "weights", weights)

    @property
    def n(self) -> int:
        return len(self.weights)

    def scaled(self, factor: int) -> WeightRealization:
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return WeightRealization(tuple(w * factor for w in self.weights), self.threshold * factor)


def dtg_build(s: SequenceLike) -> OrientedGraph:
    """Oriented threshold graph of a creation sequence.

    ``*`` is vertex 0 and the vertex added at step ``k`` gets index ``k - 1``.
    """
    s = as_sequence(s)
    out = [0] * s.n
    for v in range(1, s.n):
        sym = s.symbol_of_vertex(v)
        existing = (1 << v) - 1
        if sym is PLUS:
            out[v] = existing
        elif sym is MINUS:
            for u in range(v):
                out[u] |= 1 << v
    return OrientedGraph.from_masks(out)


def threshold_build(b: SequenceLike) -> UndirectedGraph:
    """Undirected threshold graph: nonzero symbols add a dominating vertex.

    A string may use ``1`` for a dominating vertex in place of ``+``.
    """
    if isinstance(b, str):
        b = b.replace("1", "+")
    s = as_sequence(b)
    edges = [(u, v) for v in range(1, s.n) if s.symbol_of_vertex(v) is not ZERO for u in range(v)]
    return UndirectedGraph(s.n, frozenset(edges))


def build_from_weights(w: WeightRealization) -> OrientedGraph:
    ws, t = w.weights, w.threshold
    arcs = [
        (x, y)
        for x in range(w.n)
        for y in range(w.n)
        if ws[x] > ws[y] and abs(ws[x]) + abs(ws[y]) >= t
    ]
    return OrientedGraph(w.n, frozenset(arcs))


def realize_weights(s: SequenceLike) -> WeightRealization:
    """Integer weights and threshold whose graph is ``dtg_build(s)`` label for label.

    With ``t = 4n``: the vertex added at step ``j`` as ``0`` (or ``*``) gets
    ``2n - 2j + 1``; the vertex added at step ``i`` as ``+``/``-`` gets
    ``+-(2n + 2i)``.  Dominating magnitudes grow and isolated magnitudes
    shrink with the step, and no pair sum lands on ``t`` for an isolated
    pair, so ``>`` and ``>=`` conventions agree.
    """
    s = as_sequence(s)
    n = s.n
    weights = [2 * n - 1]  # '*' is step 1
    for v in range(1, n):
        step = v + 1
        sym = s.symbol_of_vertex(v)
        if sym is ZERO:
            weights.append(2 * n - 2 * step + 1)
        else:
            mag = 2 * n + 2 * step
            weights.append(mag if sym is PLUS else -mag)
    return WeightRealization(tuple(weights), 4 * n)

