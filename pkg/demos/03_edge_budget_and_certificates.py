"""
The cross-edge budget and its executable certificates
======================================================

For communities of sizes m and n, at most
(-m + sqrt(m^2 + 4(m-1)(2n-1))) / 2 cross edges guarantee that every
cross edge is nonpositively curved.  For equal sizes the budget is
exactly n - 1, and the matched-pairs/prism pair shows both sides of the
boundary.

The guarantee's proof machinery runs here as code: the edge
neighbourhood is partitioned into fourteen classes, counting identities
are verified, and a class-constant staircase potential yields a
curvature upper bound that provably dominates the solver.
"""

from fractions import Fraction

from orc import (
    TwoCommunitySpec,
    bound_holds,
    edge_curvature,
    min_community_bound,
    random_two_community,
    threshold,
    witness_upper_bound,
)
from orc.families import SplitMix64
from orc.graphs import classify_edges

alpha = Fraction(1, 2)

# --- the closed-form budget ------------------------------------------------
print("threshold(m, n) and its integer floor:")
for m, n in ((8, 8), (4, 7), (16, 64), (128, 128)):
    thr = threshold(m, n)
    tag = f"= {thr.exact}" if thr.exact is not None else f"~ {thr.value:.3f}"
    print(f"  ({m:>3},{n:>3}): {tag:>12}, floor {thr.floor}")

print("\nverdicts around the equal-size boundary (n = 8):")
for k in (6, 7, 8):
    print(f"  k = {k}: {bound_holds(8, 8, k)}")
print(f"simple budget for sizes [3, 9, 7]: {min_community_bound([3, 9, 7])}")

# --- certificates vs the solver on random in-budget graphs ------------------
print("\nrandom two-community graphs inside the budget "
      "(certificate bound >= solver kappa, all kappa <= 0):")
rng = SplitMix64(11)
for _ in range(5):
    m = 4 + rng.randbelow(4)
    n = 4 + rng.randbelow(4)
    k = 1 + rng.randbelow(min(threshold(m, n).floor, threshold(n, m).floor))
    g, p = random_two_community(TwoCommunitySpec(m, n, k, seed=rng.next_u64()))
    edge = classify_edges(g, p).inter[0]
    witness = witness_upper_bound(g, p, edge, alpha)
    kappa, _ = edge_curvature(g, edge, alpha)
    classes = {name: c for name, c in witness.partition.cardinalities().items() if c}
    print(f"  ({m},{n}) k={k} edge {edge}: "
          f"kappa = {kappa} <= bound {witness.kappa_upper}  classes {classes}")
