"""
Monte-Carlo sign statistics beyond the guaranteed budget
=========================================================

The closed-form budget is sharp, but random graphs rarely realize the
worst case: well beyond n - 1 cross edges, the share with nonpositive
curvature stays near 1 as the communities grow.  This demo runs a small
version of the two experiment harnesses and writes their CSV and SVG
outputs next to this script.

Scaled-down sizes keep the demo under a minute; the full-size runs are
  orc experiment distribution --n 128 --k 128,256,384,512 --trials 100
  orc experiment sweep --n 16,32,64,128,256,512 --mult 1,2,3,4 --trials 100
(the first needs about an hour of CPU at full size).
"""

import os
from fractions import Fraction

from orc import (
    distribution_csv,
    run_distribution,
    run_sweep,
    save_distribution_svg,
    save_sweep_svg,
    sweep_csv,
)

here = os.path.dirname(os.path.abspath(__file__))
alpha = Fraction(1, 2)
jobs = os.cpu_count() or 1

# --- distribution of the per-trial nonpositive share at fixed n ------------
n = 24
records = run_distribution(n, [n, 2 * n, 4 * n], trials=30,
                           alpha=alpha, master_seed=0, jobs=jobs)
print(f"distribution at n = {n} (30 trials each):")
for k in (n, 2 * n, 4 * n):
    values = [float(r.prop_nonpositive) for r in records if r.k == k]
    print(f"  k = {k:>3}: mean nonpositive share = {sum(values) / len(values):.3f}")

csv_path = os.path.join(here, "distribution_demo.csv")
svg_path = os.path.join(here, "distribution_demo.svg")
with open(csv_path, "w", encoding="utf-8") as fh:
    fh.write(distribution_csv(records))
save_distribution_svg(records, svg_path)
print(f"wrote {csv_path} and {svg_path}")

# --- sweep over community sizes with k = 2n --------------------------------
rows = run_sweep([8, 16, 32], [1, 2], trials=30,
                 alpha=alpha, master_seed=0, jobs=jobs)
print("\nsweep (30 trials per cell):")
print(sweep_csv(rows))

sweep_path = os.path.join(here, "sweep_demo.svg")
save_sweep_svg(rows, sweep_path)
print(f"wrote {sweep_path}")

# The same seeds always reproduce the same numbers: every trial derives its
# own stream from (master seed, sizes, k, trial index).
