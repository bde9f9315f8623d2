from itertools import combinations, product

import pytest

from otg import (
    TernarySequence,
    are_isomorphic_bruteforce,
    brute_count_classes,
    count_classes,
    count_transitive_orientations,
    dtg_build,
    enumerate_canonical,
    enumerate_orientation_classes,
    fibonacci,
    is_canonical,
    is_transitive,
    threshold_build,
)
from otg.enumeration import brute_orientation_classes, transitive_orientations
from otg.sequences import PLUS, ZERO


def binary_seqs(max_len):
    for k in range(max_len + 1):
        for combo in product((PLUS, ZERO), repeat=k):
            yield TernarySequence(combo)


class TestCountClasses:
    def test_seeds(self):
        assert count_classes(1) == 1
        assert count_classes(2) == 2

    def test_values(self):
        assert [count_classes(n) for n in range(1, 8)] == [1, 2, 5, 13, 34, 89, 233]

    def test_recurrence(self):
        for n in range(3, 60):
            assert count_classes(n) == 3 * count_classes(n - 1) - count_classes(n - 2)

    def test_domain(self):
        with pytest.raises(ValueError):
            count_classes(0)

    def test_big(self):
        assert count_classes(200).bit_length() > 64

    def test_odd_indexed_fibonacci(self):
        # The closed form stated alongside the recurrence says F_{2n} with
        # F_0 = 0, F_1 = 1, but the recurrence and its seeds T(1)=1, T(2)=2
        # force T(n) = F_{2n-1}; the stated F_{2n} would give 1, 3, 8, 21.
        for n in range(1, 21):
            assert count_classes(n) == fibonacci(2 * n - 1)
        assert [fibonacci(2 * n) for n in range(1, 5)] == [1, 3, 8, 21]

    def test_plus_led_sequences(self):
        # P(n) = T(n-1)
        for n in range(2, 11):
            plus_led = sum(1 for s in enumerate_canonical(n) if s.symbols[0] is PLUS)
            assert plus_led == count_classes(n - 1)


class TestFibonacci:
    @pytest.mark.parametrize("k, value", [(0, 0), (1, 1), (2, 1), (6, 8), (9, 34), (10, 55)])
    def test_values(self, k, value):
        assert fibonacci(k) == value

    def test_negative(self):
        with pytest.raises(ValueError):
            fibonacci(-1)


class TestBruteCount:
    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 5), (4, 13)])
    def test_small(self, n, expected):
        assert brute_count_classes(n) == expected == count_classes(n)

    def test_guard(self):
        with pytest.raises(ValueError, match="refused"):
            brute_count_classes(6)


class TestOrientations:
    @pytest.mark.parametrize("b, expected", [("+0*", 2), ("++*", 1), ("++0+0*", 6), ("00*", 1), ("*", 1)])
    def test_counts(self, b, expected):
        assert count_transitive_orientations(b) == expected

    def test_binary_digits_accepted(self):
        assert count_transitive_orientations("1101010*") == count_transitive_orientations("++0+0+0*")

    def test_minus_rejected(self):
        with pytest.raises(ValueError, match="Minus"):
            count_transitive_orientations("+-0*")
        with pytest.raises(ValueError):
            enumerate_orientation_classes("-0*")

    @pytest.mark.parametrize(
        "b, expected",
        [("+0*", ["+0*", "-0*"]), ("00*", ["00*"]), ("++*", ["++*"])],
    )
    def test_class_lists(self, b, expected):
        assert [str(s) for s in enumerate_orientation_classes(b)] == expected

    def test_against_brute_force(self):
        for b in binary_seqs(4):
            base = threshold_build(b)
            emitted = enumerate_orientation_classes(b)
            assert len(emitted) == count_transitive_orientations(b)
            graphs = [dtg_build(s) for s in emitted]
            assert all(is_canonical(s) for s in emitted)
            assert all(is_transitive(g) and g.underlying() == base for g in graphs)
            for g, h in combinations(graphs, 2):
                assert not are_isomorphic_bruteforce(g, h)
            for d in transitive_orientations(base):
                assert sum(are_isomorphic_bruteforce(d, g) for g in graphs) == 1
            assert len(brute_orientation_classes(base)) == len(emitted)
