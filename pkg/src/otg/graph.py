"""Graph types, neighborhood algebra and brute-force oracles.

Vertices are dense integer indices ``0..n-1``.  Both graph types are
immutable; adjacency is cached as integer bitmasks so the exhaustive
sweeps elsewhere in the package stay cheap.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterator


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class OrientedGraph:
    """Loop-free digraph with at most one arc per vertex pair."""

    n: int
    arcs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if (v, u) in arcs:
                raise ValueError(f"2-cycle between {min(u, v)} and {max(u, v)}")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_masks(cls, out_masks: Iterable[int]) -> OrientedGraph:
        out_masks = list(out_masks)
        arcs = [(u, v) for u, m in enumerate(out_masks) for v in iter_bits(m)]
        return cls(len(out_masks), frozenset(arcs))

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return tuple(masks)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.out_masks[u] >> v & 1)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.out_masks[v]))

    def in_neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.in_masks[v]))

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.out_masks[v] | self.in_masks[v]))

    def degree_pairs(self) -> list[tuple[int, int]]:
        """Sorted (in-degree, out-degree) pairs; an isomorphism invariant."""
        return sorted(
            (self.in_masks[v].bit_count(), self.out_masks[v].bit_count()) for v in self.vertices
        )

    def neighborhood_map(self, kind: str = "total") -> NeighborhoodMap:
        """Return N (``"total"``), N+ (``"out"``) or N- (``"in"``) as a map."""
        pick = {
            "total": self.neighbors,
            "out": self.out_neighbors,
            "in": self.in_neighbors,
        }
        if kind not in pick:
            raise ValueError(f"unknown neighborhood kind {kind!r}")
        return NeighborhoodMap.from_function(self.vertices, pick[kind])

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph(self.n, frozenset(self.arcs))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> OrientedGraph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return OrientedGraph(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs))

    def delete_vertex(self, v: int) -> OrientedGraph:
        """Induced subgraph on all vertices but ``v``, reindexed densely."""
        if self.n == 1:
            raise ValueError("cannot delete the only vertex")
        shift = lambda x: x - (x > v)  # noqa: E731
        return OrientedGraph(
            self.n - 1,
            frozenset((shift(a), shift(b)) for a, b in self.arcs if v not in (a, b)),
        )

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-pair at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(edges))

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj_masks[v]))

    def neighborhood_map(self) -> NeighborhoodMap:
        return NeighborhoodMap.from_function(range(self.n), self.neighbors)


@dataclass(frozen=True)
class NeighborhoodMap:
    """A set-valued function ``sigma`` on a finite domain.

    Image sets may mention elements outside the domain; only the
    arguments are constrained.
    """

    domain: frozenset
    image: Mapping[Hashable, frozenset]

    @classmethod
    def from_function(cls, domain: Iterable, fn) -> NeighborhoodMap:
        domain = frozenset(domain)
        return cls(domain, {x: frozenset(fn(x)) for x in domain})

    @classmethod
    def from_dict(cls, data: Mapping) -> NeighborhoodMap:
        return cls(frozenset(data), {k: frozenset(v) for k, v in data.items()})

    def __getitem__(self, x) -> frozenset:
        if x not in self.domain:
            raise KeyError(x)
        return self.image[x]

    def nested_le(self, x, y) -> bool:
        """``sigma(x) <= sigma(y) | {y}``."""
        return self[x] <= self[y] | {y}

    def proper_lt(self, x, y) -> bool:
        """Proper inclusion ``sigma(x) < sigma(y)``."""
        return self[x] < self[y]


def is_nested_family(m: NeighborhoodMap, s: Iterable, strict: bool = False) -> bool:
    """Check that ``m`` is nested (or strictly nested) on the vertex set ``s``.

    Non-strict: every pair has ``m[x] <= m[y] | {y}`` or the symmetric
    inclusion.  Strict: every pair has ``m[x] <= m[y]`` or ``m[y] <= m[x]``.
    """
    s = list(s)
    outside = [x for x in s if x not in m.domain]
    if outside:
        raise ValueError(f"vertices outside the map's domain: {outside}")
    for x, y in combinations(s, 2):
        if strict:
            ok = m[x] <= m[y] or m[y] <= m[x]
        else:
            ok = m.nested_le(x, y) or m.nested_le(y, x)
        if not ok:
            return False
    return True


def is_transitive(g: OrientedGraph) -> bool:
    out = g.out_masks
    for x in g.vertices:
        reach = 0
        for y in iter_bits(out[x]):
            reach |= out[y]
        if reach & ~out[x]:
            return False
    return True


def is_switch_free(g: UndirectedGraph) -> bool:
    # Oracle: naive scan of every ordered 4-tuple.
    e = g.has_edge
    for quad in combinations(range(g.n), 4):
        for a, b, c, d in permutations(quad):
            if e(a, b) and e(c, d) and not e(a, d) and not e(b, c):
                return False
    return True


def are_isomorphic_bruteforce(g: OrientedGraph, h: OrientedGraph) -> bool:
    """Search for a vertex bijection carrying the arcs of ``g`` onto those of ``h``.

    Cheap invariants (order, size, degree pairs) short-circuit the search;
    the backtracking only maps vertices of equal degree pair onto each other,
    which prunes permutations that could never be witnesses.
    """
    if g.n != h.n or len(g.arcs) != len(h.arcs):
        return False
    if g.degree_pairs() != h.degree_pairs():
        return False

    def sig(x: OrientedGraph, v: int) -> tuple[int, int]:
        return x.in_masks[v].bit_count(), x.out_masks[v].bit_count()

    n = g.n
    candidates = [[w for w in range(n) if sig(h, w) == sig(g, v)] for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    image = [-1] * n
    used = [False] * n
    g_out, h_out = g.out_masks, h.out_masks

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        v = order[depth]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:depth]:
                iu = image[u]
                if (g_out[v] >> u & 1) != (h_out[w] >> iu & 1) or (g_out[u] >> v & 1) != (
                    h_out[iu] >> w & 1
                ):
                    ok = False
                    break
            if ok:
                image[v], used[w] = w, True
                if extend(depth + 1):
                    return True
                image[v], used[w] = -1, False
        return False

    return extend(0)


def all_oriented_graphs(n: int) -> Iterator[OrientedGraph]:
    """Every loop-free, 2-cycle-free digraph on ``n`` labelled vertices.

    Each vertex pair independently gets no arc, ``u->v`` or ``v->u``, so
    there are ``3 ** C(n, 2)`` graphs.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = list(combinations(range(n), 2))
    total = 3 ** len(pairs)
    for code in range(total):
        out = [0] * n
        for u, v in pairs:
            code, r = divmod(code, 3)
            if r == 1:
                out[u] |= 1 << v
            elif r == 2:
                out[v] |= 1 << u
        yield OrientedGraph.from_masks(out)


def all_undirected_graphs(n: int) -> Iterator[UndirectedGraph]:
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield UndirectedGraph(n, frozenset(p for i, p in enumerate(pairs) if code >> i & 1))
