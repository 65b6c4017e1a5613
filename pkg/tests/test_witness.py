"""Edge-neighbourhood partitions, the staircase potential, closed-form
curvature bounds, and the explicit diagonal plans."""

from fractions import Fraction

import pytest

from orc import (
    CommunityPartition,
    Graph,
    PartitionContradictionError,
    PlanInfeasibleError,
    build_partition,
    dual_value,
    dumbbell,
    edge_curvature,
    explicit_plan_prism,
    explicit_plan_zero_config,
    lazy_measure,
    plan_cost,
    prism,
    relay_characterizations,
    table_potential,
    verify_lipschitz,
    w1,
    witness_upper_bound,
    zero_curvature_config,
)
from orc.families import SplitMix64, TwoCommunitySpec, random_two_community

from helpers import first_cross_edge, random_multi_community

HALF = Fraction(1, 2)


class TestBuildPartition:
    def test_dumbbell(self):
        g, p = dumbbell(4, 6)
        part = build_partition(g, p, (0, 4))
        assert part.x_side_interior == (1, 2, 3)
        assert part.y_side_interior == tuple(range(5, 10))
        card = part.cardinalities()
        empty = [name for name, c in card.items() if c == 0]
        assert set(empty) == {
            "x_side_adj_y", "x_side_bridged", "x_side_two_step",
            "y_side_adj_x", "y_side_bridged", "y_side_two_step",
            "outside_adj_both", "outside_adj_x", "outside_adj_y",
            "outside_relay", "outside_far",
        }

    def test_zero_config(self):
        n = 5
        g, p = zero_curvature_config(n)
        part = build_partition(g, p, (0, n))
        assert part.x_side_adj_y == ()
        assert part.y_side_adj_x == ()
        assert part.x_side_bridged == tuple(range(1, n - 1))
        assert part.y_side_bridged == tuple(range(n + 1, 2 * n - 1))
        assert part.x_side_interior == (n - 1,)
        assert part.y_side_interior == (2 * n - 1,)

    def test_two_community_outside_classes_empty(self):
        rng = SplitMix64(17)
        for _ in range(10):
            g, p = random_two_community(
                TwoCommunitySpec(4 + rng.randbelow(3), 4 + rng.randbelow(3),
                                 1 + rng.randbelow(8), seed=rng.next_u64()))
            edge = first_cross_edge(g, p)
            part = build_partition(g, p, edge)
            card = part.cardinalities()
            for name in ("outside_adj_both", "outside_adj_x", "outside_adj_y",
                         "outside_relay", "outside_far",
                         "x_side_two_step", "y_side_two_step"):
                assert card[name] == 0

    def test_two_step_and_relay_classes(self):
        # 0-1-2 | 3-4-5 | 6-7-8 complete blocks; cross edge (0,3);
        # vertex 1 reaches block two only through outside vertex 6,
        # which also links back from vertex 4
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5),
                 (6, 7), (6, 8), (7, 8), (0, 3), (1, 6), (6, 4)]
        g = Graph.from_edges(9, edges)
        p = CommunityPartition.from_labels([0, 0, 0, 1, 1, 1, 2, 2, 2])
        part = build_partition(g, p, (0, 3))
        assert part.x_side_two_step == (1,)
        assert part.x_side_interior == (2,)
        assert part.y_side_two_step == (4,)
        assert part.y_side_interior == (5,)
        assert part.outside_relay == (6,)
        assert part.outside_far == (7, 8)
        first, second = relay_characterizations(g, part)
        assert first == second == (6,)
        f = table_potential(part)
        ok, witness = verify_lipschitz(g, f)
        assert ok, witness

    def test_outside_adjacency_classes(self):
        # outside vertices adjacent to x only, y only, and both
        edges = [(0, 1), (2, 3), (0, 2),  # two 2-blocks and the cross edge
                 (4, 5), (4, 6), (5, 6),  # outside block
                 (4, 0), (5, 2), (6, 0), (6, 2)]
        g = Graph.from_edges(7, edges)
        p = CommunityPartition.from_labels([0, 0, 1, 1, 2, 2, 2])
        part = build_partition(g, p, (0, 2))
        assert part.outside_adj_x == (4,)
        assert part.outside_adj_y == (5,)
        assert part.outside_adj_both == (6,)

    def test_same_community_edge_rejected(self):
        g, p = dumbbell(3, 3)
        with pytest.raises(ValueError, match="same community"):
            build_partition(g, p, (0, 1))

    def test_incomplete_community_contradicts(self):
        g, p = dumbbell(3, 3)
        pruned = Graph.from_edges(6, [e for e in g.edges if e != (0, 1)])
        with pytest.raises(PartitionContradictionError):
            build_partition(pruned, p, (0, 3))

    def test_identities_on_random_instances(self):
        rng = SplitMix64(18)
        for _ in range(1000):
            shape = [3 + rng.randbelow(5) for _ in range(2 + rng.randbelow(2))]
            g, p = random_multi_community(rng, shape, max_cross=4)
            edge = first_cross_edge(g, p)
            part = build_partition(g, p, edge)  # raises on any identity violation
            sizes = part.cardinalities()
            assert sum(sizes.values()) == g.vertex_count


class TestPotential:
    def test_zero_config_staircase_levels(self):
        n = 4
        g, p = zero_curvature_config(n)
        part = build_partition(g, p, (0, n))
        f = table_potential(part)
        assert f[n - 1] == 0          # unmatched vertex on x's side
        assert f[0] == -1
        assert all(f[i] == -1 for i in range(1, n - 1))
        assert f[n] == -2
        assert all(f[n + i] == -2 for i in range(1, n - 1))
        assert f[2 * n - 1] == -3     # unmatched vertex on y's side
        ok, _ = verify_lipschitz(g, f)
        assert ok
        mu = lazy_measure(g, 0, HALF)
        nu = lazy_measure(g, n, HALF)
        assert dual_value(f, mu, nu) == 1


class TestWitnessUpperBound:
    def test_zero_config_collapses_to_zero(self):
        for n in (3, 4, 7):
            g, p = zero_curvature_config(n)
            report = witness_upper_bound(g, p, (0, n), HALF)
            assert report.kappa_upper == 0
            assert report.w_lower == 1
            assert report.dual_of_potential == 1
            assert report.lipschitz_ok and report.dual_feasible

    def test_dumbbell_matches_closed_form(self):
        for m, n in ((3, 3), (4, 6), (5, 3)):
            g, p = dumbbell(m, n)
            report = witness_upper_bound(g, p, (0, m), HALF)
            expected = 2 * (1 - HALF) * (Fraction(1, m) + Fraction(1, n) - 1)
            assert report.kappa_upper == expected
            kappa, _ = edge_curvature(g, (0, m), HALF)
            assert kappa == expected  # bound is tight here

    def test_prism_bound_is_tight(self):
        for n in (3, 5):
            g, p = prism(n)
            report = witness_upper_bound(g, p, (0, n), HALF)
            kappa, _ = edge_curvature(g, (0, n), HALF)
            assert report.kappa_upper == Fraction(2, n) * (1 - HALF) == kappa

    def test_dual_cross_check_always_equals_bound(self):
        rng = SplitMix64(19)
        for _ in range(40):
            shape = [3 + rng.randbelow(4) for _ in range(2 + rng.randbelow(2))]
            g, p = random_multi_community(rng, shape, max_cross=3)
            edge = first_cross_edge(g, p)
            report = witness_upper_bound(g, p, edge, HALF)
            assert report.dual_of_potential == report.w_lower

    def test_sandwich_against_solver(self):
        rng = SplitMix64(20)
        for _ in range(50):
            shape = [3 + rng.randbelow(4) for _ in range(2 + rng.randbelow(2))]
            g, p = random_multi_community(rng, shape, max_cross=3)
            edge = first_cross_edge(g, p)
            report = witness_upper_bound(g, p, edge, HALF)
            kappa, _ = edge_curvature(g, edge, HALF)
            assert report.dual_feasible
            assert report.kappa_upper >= kappa

    def test_sandwich_under_dense_cross_wiring(self):
        # dense cross edges populate the outside classes and are the regime
        # where a wrongly-assigned potential level would first show up
        rng = SplitMix64(0xFEED)
        for _ in range(150):
            shape = [3 + rng.randbelow(5) for _ in range(2 + rng.randbelow(2))]
            g, p = random_multi_community(rng, shape, max_cross=12)
            for orientation in ((0, 1), (1, 0)):
                edge = first_cross_edge(g, p, orientation)
                report = witness_upper_bound(g, p, edge, HALF)
                kappa, _ = edge_curvature(g, edge, HALF)
                assert report.dual_feasible
                assert report.kappa_upper >= kappa
                assert report.dual_of_potential == report.w_lower

    def test_bound_valid_even_when_global_lipschitz_fails(self):
        # an outside vertex adjacent to y and to a y-side interior vertex
        # puts adjacent classes three levels apart, breaking the two-sided
        # edge condition; the cross-support condition (all the dual needs)
        # still holds and the bound stays valid
        edges = [(0, 1), (2, 3), (2, 4), (3, 4), (0, 2), (5, 2), (5, 4)]
        g = Graph.from_edges(6, edges)
        p = CommunityPartition.from_labels([0, 0, 1, 1, 1, 2])
        part = build_partition(g, p, (0, 2))
        assert part.y_side_interior == (3, 4)
        assert part.outside_adj_y == (5,)
        report = witness_upper_bound(g, p, (0, 2), HALF)
        assert not report.lipschitz_ok
        assert report.lipschitz_witness == (4, 5)
        assert report.dual_feasible
        kappa, _ = edge_curvature(g, (0, 2), HALF)
        assert report.kappa_upper >= kappa


class TestExplicitPlans:
    def test_zero_config_plan_n4_masses(self):
        plan = explicit_plan_zero_config(4, HALF)
        masses = {(s, t): w for s, t, w in plan.entries}
        assert masses[(0, 4)] == Fraction(3, 8)
        assert masses[(1, 5)] == masses[(2, 6)] == masses[(3, 7)] == Fraction(1, 8)
        assert masses[(0, 0)] == masses[(4, 4)] == Fraction(1, 8)

    def test_zero_config_plan_feasible_and_cost_one(self):
        for n in (3, 4, 8):
            g, _ = zero_curvature_config(n)
            plan = explicit_plan_zero_config(n, HALF)
            mu = lazy_measure(g, 0, HALF)
            nu = lazy_measure(g, n, HALF)
            assert plan.row_marginals() == mu.as_dict()
            assert plan.col_marginals() == nu.as_dict()
            cost = plan_cost(g, plan)
            assert cost == 1
            assert cost == w1(g, mu, nu).value  # the plan is optimal here

    def test_prism_plan_cost_certifies_positive_curvature(self):
        for n in (2, 4, 6):
            g, _ = prism(n)
            plan = explicit_plan_prism(n, HALF)
            mu = lazy_measure(g, 0, HALF)
            nu = lazy_measure(g, n, HALF)
            assert plan.row_marginals() == mu.as_dict()
            assert plan.col_marginals() == nu.as_dict()
            cost = plan_cost(g, plan)
            assert cost == 1 - Fraction(2, n) * (1 - HALF)
            assert cost >= w1(g, mu, nu).value  # any feasible plan upper-bounds

    def test_plan_infeasible_for_tiny_alpha(self):
        with pytest.raises(PlanInfeasibleError):
            explicit_plan_zero_config(3, Fraction(1, 5))
        with pytest.raises(PlanInfeasibleError):
            explicit_plan_prism(4, Fraction(1, 9))

    def test_boundary_alpha_drops_the_crossing_entry(self):
        # alpha = (1-alpha)/n at n = 3, alpha = 1/4: crossing mass vanishes
        plan = explicit_plan_zero_config(3, Fraction(1, 4))
        assert all(w > 0 for _, _, w in plan.entries)
        g, _ = zero_curvature_config(3)
        mu = lazy_measure(g, 0, Fraction(1, 4))
        assert plan.row_marginals() == mu.as_dict()
