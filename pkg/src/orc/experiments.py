"""Monte-Carlo harness over random two-community graphs.

Measures the share of cross edges with nonpositive curvature, per trial
(distribution view) and aggregated over a (size, edge-count) grid (sweep
view).  Trials draw their seeds from the avalanche mix of the master seed
and the grid coordinates, so results are reproducible under any
parallel schedule; workers only ever receive pure argument tuples.
"""

from __future__ import annotations

import io
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .curvature import lazy_measure
from .errors import NoInterEdgesError
from .families import TwoCommunitySpec, mix_seed, random_two_community
from .graphs import CommunityPartition, Graph, classify_edges
from .modes import DEFAULT_EPS, EXACT, FLOAT, Scalar, check_alpha, check_mode
from .transport import _w1_value


def proportion_nonpositive(g: Graph, p: CommunityPartition, alpha,
                           mode: str = FLOAT, eps: float = DEFAULT_EPS):
    """Share of cross edges with kappa <= 0 and with kappa < 0, plus the
    extreme curvatures, all over cross edges only.

    Exact mode compares against literal zero, so flat edges count as
    nonpositive but not negative; float mode brackets zero with eps.
    """
    check_mode(mode)
    alpha = check_alpha(alpha)
    inter = classify_edges(g, p).inter
    if not inter:
        raise NoInterEdgesError("graph has no cross-community edges")
    dist_rows: dict = {}
    one: Scalar = Fraction(1) if mode == EXACT else 1.0
    kappas = []
    for x, y in inter:
        mu = lazy_measure(g, x, alpha, mode)
        nu = lazy_measure(g, y, alpha, mode)
        kappas.append(one - _w1_value(g, mu, nu, dist_rows=dist_rows))
    if mode == EXACT:
        nonpos = sum(1 for k in kappas if k <= 0)
        neg = sum(1 for k in kappas if k < 0)
    else:
        nonpos = sum(1 for k in kappas if k <= eps)
        neg = sum(1 for k in kappas if k < -eps)
    total = len(kappas)
    return (Fraction(nonpos, total), Fraction(neg, total), min(kappas), max(kappas))


@dataclass(frozen=True)
class TrialRecord:
    """One random graph's curvature-sign statistics."""

    m: int
    n: int
    k: int
    trial_index: int
    derived_seed: int
    prop_nonpositive: Fraction | None
    prop_negative: Fraction | None
    kappa_min: Scalar | None
    kappa_max: Scalar | None
    wall_time_ms: float
    error: str | None = None


@dataclass(frozen=True)
class SweepRow:
    """Aggregated nonpositive share for one (community size, edge count) cell."""

    n: int
    k: int
    trials: int
    mean_prop_nonpositive: float
    std_prop_nonpositive: float


def _run_trial(task) -> TrialRecord:
    m, n, k, trial_index, seed, alpha, mode, eps = task
    start = time.perf_counter()
    g, p = random_two_community(TwoCommunitySpec(m=m, n=n, k=k, seed=seed))
    try:
        nonpos, neg, kmin, kmax = proportion_nonpositive(g, p, alpha, mode, eps)
        error = None
    except NoInterEdgesError as exc:
        nonpos = neg = kmin = kmax = None
        error = type(exc).__name__
    ms = (time.perf_counter() - start) * 1e3
    return TrialRecord(
        m=m, n=n, k=k, trial_index=trial_index, derived_seed=seed,
        prop_nonpositive=nonpos, prop_negative=neg,
        kappa_min=kmin, kappa_max=kmax, wall_time_ms=ms, error=error,
    )


def _run_tasks(tasks, jobs: int) -> list[TrialRecord]:
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_trial(t) for t in tasks]
    chunk = max(1, len(tasks) // (8 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_trial, tasks, chunksize=chunk))


def run_distribution(n: int, k_list, trials: int, alpha=Fraction(1, 2),
                     master_seed: int = 0, mode: str = FLOAT,
                     eps: float = DEFAULT_EPS, jobs: int = 1) -> list[TrialRecord]:
    """Equal community sizes n, one record per (k, trial); grid-then-trial order."""
    if trials < 1:
        raise ValueError("need at least one trial")
    check_mode(mode)
    alpha = check_alpha(alpha)
    tasks = [
        (n, n, k, t, mix_seed(master_seed, n, n, k, t), alpha, mode, eps)
        for k in k_list
        for t in range(trials)
    ]
    return _run_tasks(tasks, jobs)


def run_sweep(n_list, multipliers, trials: int, alpha=Fraction(1, 2),
              master_seed: int = 0, mode: str = FLOAT,
              eps: float = DEFAULT_EPS, jobs: int = 1) -> list[SweepRow]:
    """Mean and standard deviation of the nonpositive share over a
    (community size, edge multiplier) grid with k = multiplier * n."""
    if trials < 1:
        raise ValueError("need at least one trial")
    check_mode(mode)
    alpha = check_alpha(alpha)
    grid = []
    for n in n_list:
        for mult in multipliers:
            if mult < 1:
                raise ValueError("multipliers must be positive")
            k = mult * n
            if k > n * n:
                raise ValueError(f"k = {k} exceeds the {n * n} available cross pairs")
            grid.append((n, k))
    tasks = [
        (n, n, k, t, mix_seed(master_seed, n, n, k, t), alpha, mode, eps)
        for n, k in grid
        for t in range(trials)
    ]
    records = _run_tasks(tasks, jobs)
    rows = []
    for cell, (n, k) in enumerate(grid):
        chunk = records[cell * trials:(cell + 1) * trials]
        values = [float(r.prop_nonpositive) for r in chunk if r.error is None]
        if not values:
            raise NoInterEdgesError(f"all trials failed at (n={n}, k={k})")
        rows.append(SweepRow(
            n=n, k=k, trials=len(values),
            mean_prop_nonpositive=statistics.fmean(values),
            std_prop_nonpositive=statistics.pstdev(values),
        ))
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def distribution_csv(records) -> str:
    """Header n,k,trial,seed,prop_nonpos,prop_neg,kappa_min,kappa_max,ms.

    Everything except the timing column is a pure function of the
    parameters and master seed.
    """
    out = io.StringIO()
    out.write("n,k,trial,seed,prop_nonpos,prop_neg,kappa_min,kappa_max,ms\n")
    for r in records:
        out.write(
            f"{r.n},{r.k},{r.trial_index},{r.derived_seed},"
            f"{_fmt(r.prop_nonpositive)},{_fmt(r.prop_negative)},"
            f"{_fmt(r.kappa_min)},{_fmt(r.kappa_max)},{r.wall_time_ms:.3f}\n"
        )
    return out.getvalue()


def sweep_csv(rows) -> str:
    """Header n,k,trials,mean_prop_nonpos,std_prop_nonpos; byte-deterministic."""
    out = io.StringIO()
    out.write("n,k,trials,mean_prop_nonpos,std_prop_nonpos\n")
    for r in rows:
        out.write(
            f"{r.n},{r.k},{r.trials},"
            f"{r.mean_prop_nonpositive!r},{r.std_prop_nonpositive!r}\n"
        )
    return out.getvalue()


def save_distribution_svg(records, path: str) -> None:
    """Histogram of the per-trial nonpositive share, one panel per k."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ks = sorted({r.k for r in records})
    fig, axes = plt.subplots(1, len(ks), figsize=(4 * len(ks), 3.2), squeeze=False)
    for ax, k in zip(axes[0], ks):
        values = [float(r.prop_nonpositive) for r in records
                  if r.k == k and r.error is None]
        ax.hist(values, bins=20, range=(0.0, 1.0), color="steelblue")
        ax.set_title(f"k = {k}")
        ax.set_xlabel("share of cross edges with kappa <= 0")
        ax.set_ylabel("trials")
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def save_sweep_svg(rows, path: str) -> None:
    """Mean nonpositive share vs community size, one error-bar line per
    k/n multiplier; bars are one standard deviation."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    mults = sorted({r.k // r.n for r in rows})
    fig, ax = plt.subplots(figsize=(6, 4))
    for mult in mults:
        line = sorted((r.n, r) for r in rows if r.k == mult * r.n)
        xs = [n for n, _ in line]
        ys = [r.mean_prop_nonpositive for _, r in line]
        es = [r.std_prop_nonpositive for _, r in line]
        ax.errorbar(xs, ys, yerr=es, marker="o", capsize=3, label=f"k = {mult}n")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("community size n")
    ax.set_ylabel("mean share of cross edges with kappa <= 0")
    ax.set_ylim(-0.05, 1.05)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
