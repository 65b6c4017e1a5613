"""Fast built-in verification subset, runnable without pytest.

Covers the closed-form curvature identities, the flat and prism families,
the edge-budget corollaries, and solver/oracle/duality agreement on a
batch of random small instances.  Each check prints one line.
"""

from __future__ import annotations

import sys
from fractions import Fraction

from .bounds import GUARANTEED, NOT_GUARANTEED, bound_holds, threshold
from .curvature import all_curvatures, edge_curvature, lazy_measure
from .families import (
    SplitMix64,
    TwoCommunitySpec,
    complete_community,
    dumbbell,
    prism,
    random_two_community,
    zero_curvature_config,
)
from .graphs import CommunityPartition, Graph
from .transport import dual_value, w1, w1_oracle
from .witness import witness_upper_bound


def _cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def run_selftest(out=None) -> int:
    out = out or sys.stdout
    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        out.write(f"{'ok  ' if ok else 'FAIL'} {name}\n")
        if not ok:
            failures += 1

    half = Fraction(1, 2)

    ok = True
    for n in range(3, 6):
        g = complete_community(n)
        expect = Fraction(n * (1 - half), n - 1)
        ok &= all(edge_curvature(g, e, half)[0] == expect for e in g.edges)
    check("complete blocks match the closed-form curvature", ok)

    ok = True
    for m, n in ((3, 3), (3, 5), (4, 4)):
        g, p = dumbbell(m, n)
        kappa, _ = edge_curvature(g, (0, m), half)
        ok &= kappa == 2 * (1 - half) * (Fraction(1, m) + Fraction(1, n) - 1)
    check("dumbbell bridges match the closed-form curvature", ok)

    ok = True
    for n in (6, 7):
        g = _cycle(n)
        report = all_curvatures(g, CommunityPartition.single(n), half)
        ok &= all(r.kappa == 0 for r in report.records)
    check("long cycles are flat", ok)

    ok = True
    for n in (3, 4, 5):
        g, p = zero_curvature_config(n)
        report = all_curvatures(g, p, half)
        ok &= all(r.kappa == 0 for r in report.inter_records())
    check("matched-pairs configuration has exactly flat cross edges", ok)

    ok = True
    for n in (3, 4, 5):
        g, p = prism(n)
        report = all_curvatures(g, p, half)
        ok &= all(r.kappa >= Fraction(2 * (1 - half), n) for r in report.inter_records())
    check("prism cross edges clear the positive bound", ok)

    ok = threshold(5, 5).exact == 4 and bound_holds(5, 5, 4) == GUARANTEED \
        and bound_holds(5, 5, 5) == NOT_GUARANTEED
    check("edge budget: equal sizes give n - 1, and n is out", ok)

    rng = SplitMix64(2024)
    ok = True
    for _ in range(25):
        m = 3 + rng.randbelow(4)
        n = 3 + rng.randbelow(4)
        k = 1 + rng.randbelow(m * n - 1)
        g, p = random_two_community(TwoCommunitySpec(m, n, k, seed=rng.next_u64()))
        x = rng.randbelow(m)
        y = m + rng.randbelow(n)
        mu = lazy_measure(g, x, half)
        nu = lazy_measure(g, y, half)
        sol = w1(g, mu, nu)
        ok &= sol.value == w1_oracle(g, mu, nu)
        ok &= dual_value(sol.potentials, mu, nu) == sol.value
    check("solver, oracle, and duality agree on random instances", ok)

    rng = SplitMix64(7)
    ok = True
    for _ in range(10):
        n = 4 + rng.randbelow(3)
        k = 1 + rng.randbelow(n - 1)
        g, p = random_two_community(TwoCommunitySpec(n, n, k, seed=rng.next_u64()))
        for edge in [e for e in g.edges if p.labels[e[0]] != p.labels[e[1]]][:3]:
            report = witness_upper_bound(g, p, edge, half)
            kappa, _ = edge_curvature(g, edge, half)
            ok &= report.kappa_upper >= kappa
    check("certificate upper bound dominates the solver", ok)

    out.write(f"selftest: {'all checks passed' if failures == 0 else f'{failures} failures'}\n")
    return 1 if failures else 0
