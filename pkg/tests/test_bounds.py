"""Closed-form edge-budget threshold and its decision predicates."""

import math

import pytest

from orc import (
    GUARANTEED,
    NOT_GUARANTEED,
    bound_holds,
    min_community_bound,
    quadratic_holds,
    threshold,
)


class TestThreshold:
    def test_equal_sizes_give_n_minus_one_exactly(self):
        # discriminant 9n^2 - 12n + 4 = (3n - 2)^2 is always a perfect square
        for n in range(1, 200):
            thr = threshold(n, n)
            assert thr.exact == n - 1
            assert thr.floor == n - 1

    def test_degenerate_first_community(self):
        for n in (1, 5, 100):
            thr = threshold(1, n)
            assert thr.exact == 0
            assert thr.floor == 0

    def test_example_4_7(self):
        thr = threshold(4, 7)
        assert thr.exact is None
        assert abs(thr.value - (-4 + math.sqrt(172)) / 2) < 1e-12
        assert abs(thr.value - 4.557) < 1e-3
        assert thr.floor == 4

    def test_floor_is_exact_integer_floor(self):
        for m in range(1, 30):
            for n in range(1, 30):
                thr = threshold(m, n)
                assert quadratic_holds(m, n, thr.floor)
                assert not quadratic_holds(m, n, thr.floor + 1)

    def test_monotone_in_second_argument(self):
        for m in range(2, 20):
            values = [threshold(m, n).value for n in range(1, 40)]
            assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))


class TestBoundHolds:
    def test_corollary_equal_sizes(self):
        for n in (3, 8, 128):
            assert bound_holds(n, n, n - 1) == GUARANTEED
            assert bound_holds(n, n, n) == NOT_GUARANTEED

    def test_min_size_budget_always_guaranteed(self):
        for m in range(2, 15):
            for n in range(2, 15):
                k = min(m, n) - 1
                assert bound_holds(m, n, k) == GUARANTEED

    def test_orientation_conservative(self):
        # the verdict never depends on argument order
        for m in range(1, 15):
            for n in range(1, 15):
                for k in range(0, m + n):
                    assert bound_holds(m, n, k) == bound_holds(n, m, k)

    def test_matches_quadratic_both_ways(self):
        for m in range(1, 12):
            for n in range(1, 12):
                for k in range(0, 2 * max(m, n)):
                    expected = quadratic_holds(m, n, k) and quadratic_holds(n, m, k)
                    assert (bound_holds(m, n, k) == GUARANTEED) == expected

    def test_quadratic_equivalent_to_threshold(self):
        for m in range(1, 12):
            for n in range(1, 12):
                floor = threshold(m, n).floor
                for k in range(0, floor + 3):
                    assert quadratic_holds(m, n, k) == (k <= floor)

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            bound_holds(3, 3, -1)


class TestMinCommunityBound:
    def test_examples(self):
        assert min_community_bound([128, 128]) == 127
        assert min_community_bound([5]) == 4
        assert min_community_bound([3, 9, 7]) == 2

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            min_community_bound([])
