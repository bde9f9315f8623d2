"""Counting isomorphism classes and transitive orientations.

The closed-form counts live next to brute-force oracles that never touch
creation sequences, so each count can be checked independently.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import Iterable, Iterator

from .graph import (
    OrientedGraph,
    UndirectedGraph,
    all_oriented_graphs,
    are_isomorphic_bruteforce,
    is_transitive,
)
from .recognition import recognize
from .sequences import MINUS, PLUS, SequenceLike, TernarySequence, ZERO, as_sequence, to_blocks

BRUTE_FORCE_MAX_N = 5


def count_classes(n: int) -> int:
    """Isomorphism classes of oriented threshold graphs on ``n`` vertices.

    ``T(1) = 1``, ``T(2) = 2``, ``T(n) = 3 T(n-1) - T(n-2)``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 1
    prev, cur = 1, 2
    for _ in range(n - 2):
        prev, cur = cur, 3 * cur - prev
    return cur


def fibonacci(k: int) -> int:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def isomorphism_classes(graphs: Iterable[OrientedGraph]) -> list[OrientedGraph]:
    """One representative per brute-force isomorphism class, in first-seen order."""
    buckets: dict[tuple, list[OrientedGraph]] = {}
    reps: list[OrientedGraph] = []
    for g in graphs:
        key = (g.n, len(g.arcs), tuple(g.degree_pairs()))
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic_bruteforce(g, h) for h in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


def brute_count_classes(n: int, max_n: int = BRUTE_FORCE_MAX_N) -> int:
    """Count classes by sweeping every oriented graph on ``n`` labelled vertices."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > max_n:
        raise ValueError(f"brute force over 3^C({n},2) graphs refused (max_n={max_n})")
    return len(isomorphism_classes(g for g in all_oriented_graphs(n) if recognize(g)))


def _binary(b: SequenceLike) -> TernarySequence:
    if isinstance(b, str):
        b = b.replace("1", "+")
    s = as_sequence(b)
    if MINUS in s.symbols:
        raise ValueError(f"{s}: expected a Minus-free (binary) sequence")
    return s


def count_transitive_orientations(b: SequenceLike) -> int:
    """Non-isomorphic transitive orientations of the threshold graph of ``b``.

    Each zero-terminated block of ``p`` dominating vertices contributes a
    factor ``p + 1``; the block next to ``*`` contributes nothing.
    """
    blocks = to_blocks(_binary(b))
    return prod(p + 1 for p, _, _ in blocks.blocks)


def enumerate_orientation_classes(b: SequenceLike) -> list[TernarySequence]:
    """Canonical sequences of every transitive orientation class, sorted."""
    blocks = to_blocks(_binary(b))
    choices = [range(p + 1) for p, _, _ in blocks.blocks]
    out = []
    for minus_counts in product(*choices):
        symbols = []
        for (p, _, z), m in zip(blocks.blocks, minus_counts):
            symbols += [PLUS] * (p - m) + [MINUS] * m + [ZERO] * z
        symbols += [PLUS] * blocks.p0
        out.append(TernarySequence(tuple(symbols)))
    return sorted(out)


def transitive_orientations(g: UndirectedGraph) -> Iterator[OrientedGraph]:
    """Every transitive orientation of ``g`` (all ``2^|E|`` tried)."""
    edges = sorted(g.edges)
    for flips in range(1 << len(edges)):
        arcs = [(v, u) if flips >> i & 1 else (u, v) for i, (u, v) in enumerate(edges)]
        d = OrientedGraph(g.n, frozenset(arcs))
        if is_transitive(d):
            yield d


def brute_orientation_classes(g: UndirectedGraph) -> list[OrientedGraph]:
    return isomorphism_classes(transitive_orientations(g))
