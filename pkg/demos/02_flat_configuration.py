"""
A configuration where every cross edge is exactly flat
=======================================================

Two complete blocks of size n, matched pairwise by n-1 cross edges (one
pair left unmatched).  Every cross edge has curvature exactly zero, which
makes n-1 the largest cross-edge budget that can still force nonpositive
curvature: one more matched pair (the full prism) tips every cross edge
positive.

The zero is certified from both sides without trusting the solver:
a staircase potential forces W >= 1, and an explicit transference plan
achieves cost exactly 1.
"""

from fractions import Fraction

from orc import (
    all_curvatures,
    edge_curvature,
    explicit_plan_prism,
    explicit_plan_zero_config,
    plan_cost,
    prism,
    verify_lipschitz,
    witness_upper_bound,
    zero_curvature_config,
)

alpha = Fraction(1, 2)
n = 5

g, p = zero_curvature_config(n)
report = all_curvatures(g, p, alpha)
print(f"matched-pairs configuration, n = {n}:")
for r in report.inter_records():
    print(f"  cross edge {r.edge}: kappa = {r.kappa}")

# --- upper bound from the staircase potential ----------------------------
witness = witness_upper_bound(g, p, (0, n), alpha)
print(f"\npotential dual value = {witness.dual_of_potential} "
      f"=> W >= {witness.w_lower} => kappa <= {witness.kappa_upper}")
ok, _ = verify_lipschitz(g, witness.potential)
print(f"potential is 1-Lipschitz on the whole graph: {ok}")

# --- lower bound from the explicit diagonal plan --------------------------
plan = explicit_plan_zero_config(n, alpha)
cost = plan_cost(g, plan)
print(f"explicit plan cost = {cost} => W <= {cost} => kappa >= {1 - cost}")
print("plan entries (source, target, mass):")
for entry in plan.entries:
    print(f"  {entry}")

# the unmatched pair (n-1, 2n-1) sits at hop distance 3, and the plan
# pays for it; everything still totals exactly 1

# --- one more edge and the sign flips -------------------------------------
gp, pp = prism(n)
kappa, _ = edge_curvature(gp, (0, n), alpha)
plan_p = explicit_plan_prism(n, alpha)
print(f"\nfull matching (prism), n = {n}: kappa(first cross edge) = {kappa}")
print(f"diagonal plan cost {plan_cost(gp, plan_p)} certifies "
      f"kappa >= {1 - plan_cost(gp, plan_p)} = 2(1-alpha)/n")
