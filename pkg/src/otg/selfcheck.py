"""Oracle equivalence suites behind ``otg selfcheck``.

Each check returns ``(ok, detail)``; ``detail`` names the first
counterexample on failure.
"""

from __future__ import annotations

from itertools import product

from .construction import build_from_weights, dtg_build, realize_weights, threshold_build
from .enumeration import (
    brute_count_classes,
    brute_orientation_classes,
    count_classes,
    count_transitive_orientations,
)
from .graph import all_oriented_graphs, all_undirected_graphs, is_switch_free
from .recognition import (
    check_properly_nested,
    displit_partition,
    extract_sequence,
    is_threshold_undirected,
    recognize,
)
from .sequences import PLUS, ZERO, Symbol, TernarySequence, enumerate_canonical


def all_sequences(length: int, alphabet=tuple(Symbol)):
    for combo in product(alphabet, repeat=length):
        yield TernarySequence(combo)


def three_routes_agree(max_n: int) -> tuple[bool, str]:
    checked = 0
    for n in range(1, max_n + 1):
        for g in all_oriented_graphs(n):
            b = recognize(g)
            d = extract_sequence(g) is not None
            p = displit_partition(g)
            c = p is not None and check_properly_nested(g, p)
            checked += 1
            if not b == d == c:
                return False, f"disagreement on {g.sorted_arcs()} (n={n}): b={b} c={c} d={d}"
    return True, f"{checked} graphs"


def class_counts(max_n: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        brute, formula = brute_count_classes(n), count_classes(n)
        if brute != formula:
            return False, f"n={n}: brute force {brute} != recurrence {formula}"
    return True, f"n=1..{max_n}"


def canonical_enumeration(max_n: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        got = sum(1 for _ in enumerate_canonical(n))
        if got != count_classes(n):
            return False, f"n={n}: {got} canonical sequences, recurrence gives {count_classes(n)}"
    return True, f"n=1..{max_n}"


def weight_round_trip(max_len: int) -> tuple[bool, str]:
    for k in range(max_len + 1):
        for s in all_sequences(k):
            if build_from_weights(realize_weights(s)) != dtg_build(s):
                return False, f"{s}"
    return True, f"lengths 0..{max_len}"


def switch_free_matches_elimination(max_n: int) -> tuple[bool, str]:
    for n in range(1, max_n + 1):
        for g in all_undirected_graphs(n):
            if is_switch_free(g) != is_threshold_undirected(g):
                return False, f"n={n} edges={sorted(g.edges)}"
    return True, f"n=1..{max_n}"


def orientation_counts(max_len: int) -> tuple[bool, str]:
    for k in range(max_len + 1):
        for s in all_sequences(k, (PLUS, ZERO)):
            brute = len(brute_orientation_classes(threshold_build(s)))
            if brute != count_transitive_orientations(s):
                return False, f"{s}: brute force {brute}"
    return True, f"lengths 0..{max_len}"


def run_all(max_n: int) -> list[tuple[str, bool, str]]:
    # exponential sweeps are capped regardless of max_n
    plan = [
        ("three-route recognition agreement", three_routes_agree, min(max_n, 5)),
        ("class count vs brute force", class_counts, min(max_n, 5)),
        ("canonical enumeration size", canonical_enumeration, max_n),
        ("weight realization round trip", weight_round_trip, max_n - 1),
        ("switch-free vs elimination", switch_free_matches_elimination, min(max_n, 6)),
        ("transitive orientation count", orientation_counts, min(max_n, 6) - 1),
    ]
    results = []
    for name, check, arg in plan:
        ok, detail = check(arg)
        results.append((name, ok, detail))
    return results
