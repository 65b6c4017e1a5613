"""Per-edge curvature: walk measures, closed forms, bulk reports."""

from fractions import Fraction

import pytest

from orc import (
    CommunityPartition,
    Graph,
    IsolatedVertexError,
    all_curvatures,
    complete_community,
    dumbbell,
    edge_curvature,
    lazy_measure,
    prism,
    w1_oracle,
    zero_curvature_config,
)
from orc.families import SplitMix64, TwoCommunitySpec, random_two_community

HALF = Fraction(1, 2)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


class TestLazyMeasure:
    def test_fully_lazy_is_point_mass(self):
        g = complete_community(4)
        mu = lazy_measure(g, 2, Fraction(1))
        assert mu.support == (2,)
        assert mu.masses == (Fraction(1),)

    def test_alpha_zero_uniform_on_neighbours(self):
        g = complete_community(4)
        mu = lazy_measure(g, 0, Fraction(0))
        assert mu.support == (1, 2, 3)
        assert set(mu.masses) == {Fraction(1, 3)}

    def test_zero_config_masses(self):
        # base vertex has degree n, so each neighbour gets (1-a)/n
        n = 5
        g, _ = zero_curvature_config(n)
        mu = lazy_measure(g, 0, HALF)
        assert g.degree(0) == n
        assert mu.mass_at(0) == HALF
        for z in (1, 2, 3, 4, n):  # own block plus the matched partner
            assert mu.mass_at(z) == (1 - HALF) / n
        assert sum(mu.masses) == 1

    def test_isolated_vertex(self):
        g = Graph.from_edges(2, [])
        with pytest.raises(IsolatedVertexError):
            lazy_measure(g, 0, HALF)
        assert lazy_measure(g, 0, Fraction(1)).support == (0,)


class TestEdgeCurvature:
    def test_complete_graph_closed_form(self):
        for n in (3, 4, 6):
            g = complete_community(n)
            for alpha in (HALF, Fraction(2, 3)):
                kappa, _ = edge_curvature(g, (0, 1), alpha)
                assert kappa == Fraction(n, n - 1) * (1 - alpha)

    def test_k4_half(self):
        g = complete_community(4)
        assert edge_curvature(g, (0, 1), HALF)[0] == Fraction(2, 3)

    def test_dumbbell_bridge_closed_form(self):
        g, _ = dumbbell(4, 4)
        kappa, _ = edge_curvature(g, (0, 4), HALF)
        assert kappa == 2 * (1 - HALF) * (Fraction(1, 4) + Fraction(1, 4) - 1)
        assert kappa == Fraction(-1, 2)

    def test_zero_config_cross_edges_flat(self):
        g, _ = zero_curvature_config(6)
        for i in range(5):
            kappa, sol = edge_curvature(g, (i, 6 + i), HALF)
            assert kappa == 0
            assert sol.value == 1

    def test_fully_lazy_edges_are_flat(self):
        g, _ = dumbbell(3, 5)
        for e in g.edges:
            assert edge_curvature(g, e, Fraction(1))[0] == 0

    def test_non_edge_rejected(self):
        g, _ = dumbbell(3, 3)
        with pytest.raises(ValueError, match="not an edge"):
            edge_curvature(g, (1, 4), HALF)

    def test_symmetry_in_endpoints(self):
        g, _ = random_two_community(TwoCommunitySpec(4, 5, 6, seed=8))
        for u, v in g.edges[:8]:
            assert edge_curvature(g, (u, v), HALF)[0] == edge_curvature(g, (v, u), HALF)[0]


class TestAllCurvatures:
    def test_cycle_six_flat(self):
        g = cycle(6)
        report = all_curvatures(g, CommunityPartition.single(6), HALF)
        assert [r.kappa for r in report.records] == [Fraction(0)] * 6

    def test_prism_positive_bound(self):
        n = 4
        g, p = prism(n)
        report = all_curvatures(g, p, HALF)
        inter = report.inter_records()
        assert len(inter) == n
        for r in inter:
            assert r.kappa >= Fraction(2, n) * (1 - HALF)

    def test_dumbbell_intra_edges_match_oracle(self):
        g, p = dumbbell(5, 5)
        report = all_curvatures(g, p, HALF)
        dist_rows = {}
        for r in report.records:
            x, y = r.edge
            mu = lazy_measure(g, x, HALF)
            nu = lazy_measure(g, y, HALF)
            assert r.kappa == 1 - w1_oracle(g, mu, nu, dist_rows=dist_rows)
        # edges not touching the bridge follow the complete-block pattern
        k5 = Fraction(5, 4) * (1 - HALF)
        for r in report.records:
            if r.edge_class == "intra" and 0 not in r.edge and 5 not in r.edge:
                assert r.kappa == k5

    def test_range_invariant(self):
        rng = SplitMix64(77)
        for _ in range(6):
            g, p = random_two_community(
                TwoCommunitySpec(3 + rng.randbelow(4), 3 + rng.randbelow(4),
                                 1 + rng.randbelow(6), seed=rng.next_u64()))
            report = all_curvatures(g, p, HALF)
            for r in report.records:
                assert Fraction(-2) <= r.kappa <= 1
                assert r.kappa == 1 - r.w

    def test_laziness_convexity(self):
        # kappa at laziness a dominates (1-a) times the non-lazy curvature
        rng = SplitMix64(78)
        alphas = (Fraction(0), Fraction(1, 4), HALF, Fraction(3, 4), Fraction(1))
        for _ in range(4):
            g, p = random_two_community(
                TwoCommunitySpec(4, 4, 1 + rng.randbelow(5), seed=rng.next_u64()))
            for edge in g.edges[:5]:
                base = edge_curvature(g, edge, Fraction(0))[0]
                for alpha in alphas:
                    kappa, _ = edge_curvature(g, edge, alpha)
                    assert kappa >= (1 - alpha) * base

    def test_determinism_bitwise(self):
        g, p = random_two_community(TwoCommunitySpec(5, 5, 4, seed=13))
        a = all_curvatures(g, p, HALF)
        b = all_curvatures(g, p, HALF)
        assert a == b
        assert a.to_csv() == b.to_csv()
        fa = all_curvatures(g, p, HALF, mode="float")
        fb = all_curvatures(g, p, HALF, mode="float")
        assert fa.to_csv() == fb.to_csv()

    def test_disconnected_graph_still_reports(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        p = CommunityPartition.from_labels([0, 0, 0, 1, 1])
        report = all_curvatures(g, p, HALF)
        assert len(report.records) == 3
        assert all(r.error is None for r in report.records)

    def test_csv_schema(self):
        g, p = dumbbell(3, 3)
        exact_csv = all_curvatures(g, p, HALF).to_csv()
        lines = exact_csv.strip().splitlines()
        assert lines[0] == "edge_u,edge_v,class,kappa_num,kappa_den,kappa_float,w_float,dx,dy"
        bridge = [ln for ln in lines if ln.startswith("0,3,")][0]
        fields = bridge.split(",")
        assert fields[2] == "inter"
        assert (fields[3], fields[4]) == ("-1", "3")
        assert fields[5] == "" and fields[6] == ""
        float_csv = all_curvatures(g, p, HALF, mode="float").to_csv()
        bridge_f = [ln for ln in float_csv.strip().splitlines() if ln.startswith("0,3,")][0]
        fields_f = bridge_f.split(",")
        assert fields_f[3] == "" and fields_f[4] == ""
        assert abs(float(fields_f[5]) - (-1 / 3)) < 1e-12
        assert abs(float(fields_f[6]) - (4 / 3)) < 1e-12
