"""
Anatomy of one exact transport solve
=====================================

Everything the solver claims is checkable: the plan's marginals match the
measures, the potential is 1-Lipschitz with dual objective equal to the
primal cost (zero duality gap, exact rationals), and an independent
min-cost-flow oracle re-derives the same optimum by a different
algorithm.
"""

from fractions import Fraction

from orc import (
    DiscreteMeasure,
    dual_value,
    dumbbell,
    lazy_measure,
    verify_lipschitz,
    w1,
    w1_oracle,
)

alpha = Fraction(1, 2)
g, p = dumbbell(3, 4)

mu = lazy_measure(g, 0, alpha)   # walk measure on the size-3 block side
nu = lazy_measure(g, 3, alpha)   # walk measure across the bridge

print("mu:", dict(zip(mu.support, mu.masses)))
print("nu:", dict(zip(nu.support, nu.masses)))

solution = w1(g, mu, nu)
print(f"\nW(mu, nu) = {solution.value}")
print("optimal plan:")
for source, target, mass in solution.plan.entries:
    print(f"  {mass} from {source} to {target}")

print("\nrow marginals match mu:", solution.plan.row_marginals() == mu.as_dict())
print("col marginals match nu:", solution.plan.col_marginals() == nu.as_dict())

f = solution.potentials
print("\nKantorovich potential:", f)
ok, _ = verify_lipschitz(g, f)
print("1-Lipschitz:", ok)
print("dual objective:", dual_value(f, mu, nu), "(equals the primal value exactly)")

print("\nindependent oracle:", w1_oracle(g, mu, nu))

# Point masses one hop apart are the simplest sanity check: W = 1.
d0 = DiscreteMeasure.point_mass(0)
d1 = DiscreteMeasure.point_mass(1)
print("point masses across an edge:", w1(g, d0, d1).value)
