"""Exact 1-Wasserstein distance between discrete measures on a graph.

The primal solver is a transportation simplex (network simplex on the
bipartite supply/demand graph) over the support-restricted matrix of hop
distances.  In exact mode the rational masses are scaled by their common
denominator and every pivot runs in integer arithmetic, so the optimum,
the plan and the dual potentials come out exact.  In float mode the same
pivoting runs on doubles with a pricing tolerance.

Optimality certificates: the basis duals are turned into a 1-Lipschitz
vertex potential by a distance transform, and an independent
successive-shortest-path min-cost-flow oracle re-derives the value on
small instances.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .errors import (
    InfiniteDistanceError,
    InvalidMeasureError,
    OracleLimitError,
    PotentialDomainError,
)
from .graphs import Graph, bfs_distances
from .modes import DEFAULT_EPS, Scalar, is_exact

_PRICING_TOL = 1e-12


@dataclass(frozen=True)
class DiscreteMeasure:
    """Probability measure with finite support on graph vertices.

    ``support`` is sorted; ``masses`` is parallel to it and strictly
    positive (zero atoms are dropped at construction).  ``exact`` is True
    when all masses are rationals, False when they are doubles; the two
    representations never mix inside one measure.
    """

    support: tuple[int, ...]
    masses: tuple[Scalar, ...]
    exact: bool

    @classmethod
    def from_dict(cls, weights: Mapping[int, Scalar], eps: float = DEFAULT_EPS) -> "DiscreteMeasure":
        items = sorted((v, w) for v, w in weights.items() if w != 0)
        if not items:
            raise InvalidMeasureError("measure has no mass")
        exact = all(is_exact(w) for _, w in items)
        if exact:
            masses = tuple(Fraction(w) for _, w in items)
            if any(w <= 0 for w in masses):
                raise InvalidMeasureError("negative mass atom")
            total = sum(masses)
            if total != 1:
                raise InvalidMeasureError(f"masses sum to {total}, expected exactly 1")
        else:
            masses = tuple(float(w) for _, w in items)
            if any(w <= 0 for w in masses):
                raise InvalidMeasureError("negative mass atom")
            total = math.fsum(masses)
            if abs(total - 1.0) > eps:
                raise InvalidMeasureError(f"masses sum to {total!r}, expected 1 within {eps}")
        return cls(support=tuple(v for v, _ in items), masses=masses, exact=exact)

    @classmethod
    def point_mass(cls, vertex: int, exact: bool = True) -> "DiscreteMeasure":
        one: Scalar = Fraction(1) if exact else 1.0
        return cls(support=(vertex,), masses=(one,), exact=exact)

    def as_dict(self) -> dict[int, Scalar]:
        return dict(zip(self.support, self.masses))

    def mass_at(self, vertex: int) -> Scalar:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = dict(zip(self.support, self.masses))
            object.__setattr__(self, "_index_cache", cached)
        zero: Scalar = Fraction(0) if self.exact else 0.0
        return cached.get(vertex, zero)


@dataclass(frozen=True)
class TransferencePlan:
    """Joint distribution moving one measure onto another.

    ``entries`` are (source_vertex, target_vertex, mass) triples with
    positive mass; row sums reproduce the source measure and column sums
    the target measure.
    """

    entries: tuple[tuple[int, int, Scalar], ...]

    def row_marginals(self) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        for s, _, w in self.entries:
            out[s] = out.get(s, 0) + w
        return out

    def col_marginals(self) -> dict[int, Scalar]:
        out: dict[int, Scalar] = {}
        for _, t, w in self.entries:
            out[t] = out.get(t, 0) + w
        return out


@dataclass(frozen=True)
class TransportSolution:
    """Optimal value, an optimal plan, and certifying dual potentials.

    ``potentials`` maps every vertex in the union of the two supports to a
    1-Lipschitz value normalized to zero at the smallest support vertex;
    its dual objective equals ``value`` (exactly in exact mode).
    """

    value: Scalar
    plan: TransferencePlan
    potentials: dict[int, Scalar]


def _distance_rows(g: Graph, sources, dist_rows: dict | None) -> dict[int, list]:
    """BFS rows for the requested sources, shared through dist_rows if given."""
    if dist_rows is None:
        dist_rows = {}
    for s in sources:
        if s not in dist_rows:
            dist_rows[s] = bfs_distances(g, s)
    return dist_rows


def _reduce_common_mass(mu: DiscreteMeasure, nu: DiscreteMeasure):
    """Strip mass the two measures share; hop distance is a metric, so
    optimal transport never moves it.  Returns (excess_mu, excess_nu,
    kept) as dicts, where kept holds the common mass per vertex."""
    nu_map = nu.as_dict()
    ex_mu: dict[int, Scalar] = {}
    ex_nu: dict[int, Scalar] = dict(nu_map)
    kept: dict[int, Scalar] = {}
    for v, w in zip(mu.support, mu.masses):
        other = nu_map.get(v)
        if other is None:
            ex_mu[v] = w
            continue
        if w > other:
            ex_mu[v] = w - other
            kept[v] = other
            del ex_nu[v]
        else:
            if w < other:
                ex_nu[v] = other - w
            else:
                del ex_nu[v]
            kept[v] = w
    return ex_mu, ex_nu, kept


def _check_modes(mu: DiscreteMeasure, nu: DiscreteMeasure) -> bool:
    if mu.exact != nu.exact:
        raise InvalidMeasureError("cannot transport between exact and float measures")
    return mu.exact


def _cost_table(g, src_vertices, dst_vertices, dist_rows):
    """Hop distances src x dst as nested lists, via BFS from the dst side."""
    dist_rows = _distance_rows(g, dst_vertices, dist_rows)
    table = []
    for s in src_vertices:
        row = []
        for t in dst_vertices:
            d = dist_rows[t][s]
            if d is None:
                raise InfiniteDistanceError(
                    f"vertices {s} and {t} lie in different components"
                )
            row.append(d)
        table.append(row)
    return table


def _transportation_simplex(cost_rows, a, b, exact: bool):
    """Core solver.  cost_rows: nested lists of numbers; a, b: supplies and
    demands (ints in exact mode, floats otherwise, equal totals).

    Returns (plan dict {(i, j): mass}, u duals, v duals).
    """
    m, n = len(a), len(b)
    tol = 0 if exact else _PRICING_TOL

    # ---- least-cost initial basic feasible solution (spanning tree) ----
    rem_a = list(a)
    rem_b = list(b)
    row_alive = [True] * m
    col_alive = [True] * n
    rows_alive, cols_alive = m, n
    x: dict[tuple[int, int], Scalar] = {}
    nbr: list[set[int]] = [set() for _ in range(m + n)]  # tree adjacency, cols offset by m

    if exact:
        order = sorted(range(m * n), key=lambda f: (cost_rows[f // n][f % n], f))
    else:
        flat = np.asarray(cost_rows, dtype=np.float64).ravel()
        order = np.argsort(flat, kind="stable").tolist()

    for f in order:
        i, j = divmod(f, n)
        if not (row_alive[i] and col_alive[j]):
            continue
        t = rem_a[i] if rem_a[i] <= rem_b[j] else rem_b[j]
        x[(i, j)] = t
        nbr[i].add(m + j)
        nbr[m + j].add(i)
        rem_a[i] -= t
        rem_b[j] -= t
        if rows_alive + cols_alive == 2:
            break
        if rem_a[i] == 0 and rem_b[j] == 0:
            if rows_alive > 1:
                row_alive[i] = False
                rows_alive -= 1
            else:
                col_alive[j] = False
                cols_alive -= 1
        elif rem_a[i] == 0:
            if rows_alive > 1:
                row_alive[i] = False
                rows_alive -= 1
            else:  # float dust only: supply exhausted before demand
                col_alive[j] = False
                cols_alive -= 1
        else:
            if cols_alive > 1:
                col_alive[j] = False
                cols_alive -= 1
            else:
                row_alive[i] = False
                rows_alive -= 1

    # ---- duals and rooted-tree arrays from the initial basis ----
    zero: Scalar = 0 if exact else 0.0
    u: list[Scalar] = [zero] * m
    v: list[Scalar] = [zero] * n
    parent = [-1] * (m + n)
    depth = [0] * (m + n)
    seen = [False] * (m + n)
    seen[0] = True
    stack = [0]
    while stack:
        node = stack.pop()
        for nxt in nbr[node]:
            if not seen[nxt]:
                seen[nxt] = True
                parent[nxt] = node
                depth[nxt] = depth[node] + 1
                if nxt >= m:
                    v[nxt - m] = cost_rows[node][nxt - m] - u[node]
                else:
                    u[nxt] = cost_rows[nxt][node - m] - v[node - m]
                stack.append(nxt)

    if not all(seen):  # defensive: initialization must span all nodes
        raise ArithmeticError("transportation basis is not a spanning tree")

    # ---- pivoting ----
    if not exact:
        cost_np = np.asarray(cost_rows, dtype=np.float64)
    bland_after = 2 * (m + n) + 8
    degenerate_run = 0
    max_pivots = 200 * (m + n) + 10_000
    pivots = 0

    while True:
        use_bland = degenerate_run > bland_after
        entering = None
        if exact:
            best = 0
            for i in range(m):
                ui = u[i]
                row = cost_rows[i]
                for j in range(n):
                    r = row[j] - ui - v[j]
                    if r < best:
                        best = r
                        entering = (i, j)
                        if use_bland:
                            break
                if use_bland and entering is not None:
                    break
            red = best
        else:
            reduced = cost_np - np.fromiter(u, float, m)[:, None] - np.fromiter(v, float, n)[None, :]
            if use_bland:
                hits = np.flatnonzero(reduced.ravel() < -tol)
                if hits.size:
                    f = int(hits[0])
                    entering = divmod(f, n)
            else:
                f = int(np.argmin(reduced.ravel()))
                if reduced.ravel()[f] < -tol:
                    entering = divmod(f, n)
            if entering is not None:
                red = float(reduced[entering])
        if entering is None:
            break

        ei, ej = entering
        node_a, node_b = ei, m + ej

        # unique tree cycle: climb both endpoints to their lowest common ancestor
        arcs_a: list[int] = []  # child nodes whose parent arc is on the a-leg
        arcs_b: list[int] = []
        na, nb = node_a, node_b
        while depth[na] > depth[nb]:
            arcs_a.append(na)
            na = parent[na]
        while depth[nb] > depth[na]:
            arcs_b.append(nb)
            nb = parent[nb]
        while na != nb:
            arcs_a.append(na)
            na = parent[na]
            arcs_b.append(nb)
            nb = parent[nb]

        def _arc_cell(child: int) -> tuple[int, int]:
            par = parent[child]
            return (child, par - m) if child < m else (par, child - m)

        cycle = [entering]
        cycle.extend(_arc_cell(c) for c in arcs_b)
        cycle.extend(_arc_cell(c) for c in reversed(arcs_a))

        # mass shifts alternate +,-,+,-, starting at the entering cell
        theta = None
        leaving = None
        leave_pos = -1
        for pos in range(1, len(cycle), 2):
            cell = cycle[pos]
            w = x[cell]
            if theta is None or w < theta or (w == theta and cell < leaving):
                theta = w
                leaving = cell
                leave_pos = pos
        for pos in range(1, len(cycle)):
            cell = cycle[pos]
            if pos % 2:
                x[cell] -= theta
            else:
                x[cell] += theta
        x[entering] = theta
        del x[leaving]

        li, lj = leaving
        nbr[li].discard(m + lj)
        nbr[m + lj].discard(li)
        nbr[ei].add(m + ej)
        nbr[m + ej].add(ei)

        # the cut subtree hangs off the deeper endpoint of the leaving arc;
        # it contains exactly one endpoint of the entering arc
        on_a_leg = leave_pos > len(arcs_b)
        if on_a_leg:
            new_root, new_parent = node_a, node_b
        else:
            new_root, new_parent = node_b, node_a
        if new_root < m:
            du, dv = red, -red
        else:
            du, dv = -red, red
        stack = [(new_root, new_parent)]
        while stack:
            node, par = stack.pop()
            parent[node] = par
            depth[node] = depth[par] + 1
            if node < m:
                u[node] += du
            else:
                v[node - m] += dv
            for nxt in nbr[node]:
                if nxt != par:
                    stack.append((nxt, node))

        if (theta == 0) if exact else (theta <= tol):
            degenerate_run += 1
        else:
            degenerate_run = 0
        pivots += 1
        if pivots > max_pivots:
            raise ArithmeticError(f"transportation simplex exceeded {max_pivots} pivots")

    plan = {cell: w for cell, w in x.items() if w != 0}
    return plan, u, v


def _prepare_instance(g, mu, nu, dist_rows):
    """Common-mass reduction plus cost table; returns None when mu == nu.

    In float mode one excess side can be empty while the other holds a few
    ulps of rounding dust; that is equality for every purpose within eps.
    """
    ex_mu, ex_nu, kept = _reduce_common_mass(mu, nu)
    if not ex_mu or not ex_nu:
        return None, kept
    src = sorted(ex_mu)
    dst = sorted(ex_nu)
    cost = _cost_table(g, src, dst, dist_rows)
    return (src, dst, ex_mu, ex_nu, cost), kept


def _solve_reduced(instance, exact: bool):
    """Run the simplex on a reduced instance; returns (value, plan, u, v, scale)."""
    src, dst, ex_mu, ex_nu, cost = instance
    if exact:
        denom = math.lcm(
            *[Fraction(w).denominator for w in ex_mu.values()],
            *[Fraction(w).denominator for w in ex_nu.values()],
        )
        a = [int(ex_mu[s] * denom) for s in src]
        b = [int(ex_nu[t] * denom) for t in dst]
    else:
        denom = 1
        a = [float(ex_mu[s]) for s in src]
        total_a = math.fsum(a)
        b = [float(ex_nu[t]) for t in dst]
        total_b = math.fsum(b)
        if total_b:  # absorb accumulated rounding so totals match exactly
            b = [w * (total_a / total_b) for w in b]
    plan, u, v = _transportation_simplex(cost, a, b, exact)
    if exact:
        value = Fraction(
            sum(w * cost[i][j] for (i, j), w in plan.items()), denom
        )
    else:
        value = math.fsum(w * cost[i][j] for (i, j), w in plan.items())
    return value, plan, u, v, denom


def _w1_value(g, mu, nu, dist_rows=None) -> Scalar:
    """Optimal-value-only fast path; identical optimum to :func:`w1`."""
    exact = _check_modes(mu, nu)
    instance, _ = _prepare_instance(g, mu, nu, dist_rows)
    if instance is None:
        return Fraction(0) if exact else 0.0
    value, _, _, _, _ = _solve_reduced(instance, exact)
    return value


def w1(g: Graph, mu: DiscreteMeasure, nu: DiscreteMeasure,
       eps: float = DEFAULT_EPS, dist_rows: dict | None = None) -> TransportSolution:
    """Solve min sum(plan * distance) over plans with marginals mu, nu.

    Returns the exact optimum (mode of the measures), an optimal
    transference plan, and Kantorovich potentials certifying optimality.

    Raises InfiniteDistanceError when the supports straddle components and
    InvalidMeasureError when the measures mix arithmetic modes.
    """
    exact = _check_modes(mu, nu)
    if dist_rows is None:
        dist_rows = {}
    instance, kept = _prepare_instance(g, mu, nu, dist_rows)
    union = sorted(set(mu.support) | set(nu.support))

    if instance is None:  # mu == nu: identity plan, flat potential
        zero: Scalar = Fraction(0) if exact else 0.0
        entries = tuple((z, z, w) for z, w in sorted(kept.items()))
        return TransportSolution(
            value=zero,
            plan=TransferencePlan(entries=entries),
            potentials={z: zero for z in union},
        )

    src, dst, ex_mu, ex_nu, cost = instance
    value, plan_cells, _, v_dual, denom = _solve_reduced(instance, exact)

    entries = [(z, z, w) for z, w in kept.items()]
    for (i, j), w in plan_cells.items():
        mass: Scalar = Fraction(w, denom) if exact else w
        entries.append((src[i], dst[j], mass))
    entries.sort()
    plan = TransferencePlan(entries=tuple(entries))
    _verify_plan_marginals(plan, mu, nu, eps)

    # Kantorovich potential by distance transform of the demand-side duals:
    # f(z) = min_j [ d(z, t_j) - v_j ] is 1-Lipschitz and attains the optimum.
    potentials: dict[int, Scalar] = {}
    for z in union:
        best = None
        for j, t in enumerate(dst):
            cand = dist_rows[t][z] - v_dual[j]
            if best is None or cand < best:
                best = cand
        potentials[z] = best
    base = potentials[union[0]]
    if base != 0:
        potentials = {z: val - base for z, val in potentials.items()}
    if exact:
        potentials = {z: Fraction(val) for z, val in potentials.items()}

    return TransportSolution(value=value, plan=plan, potentials=potentials)


def _verify_plan_marginals(plan, mu, nu, eps):
    exact = mu.exact
    rows = plan.row_marginals()
    cols = plan.col_marginals()
    for measure, marg, side in ((mu, rows, "row"), (nu, cols, "column")):
        if set(marg) != set(measure.support):
            raise ArithmeticError(f"plan {side} support mismatch")
        for z, w in zip(measure.support, measure.masses):
            got = marg[z]
            if exact:
                ok = got == w
            else:
                ok = abs(got - w) <= eps
            if not ok:
                raise ArithmeticError(f"plan {side} marginal at {z}: {got!r} != {w!r}")


def plan_cost(g: Graph, plan: TransferencePlan, dist_rows: dict | None = None) -> Scalar:
    """Total mass-times-distance cost of a transference plan."""
    sources = sorted({s for s, _, _ in plan.entries})
    dist_rows = _distance_rows(g, sources, dist_rows)
    total: Scalar = 0
    for s, t, w in plan.entries:
        d = dist_rows[s][t]
        if d is None:
            raise InfiniteDistanceError(f"plan moves mass between components ({s} -> {t})")
        total += w * d
    return total


def dual_value(f: Mapping[int, Scalar], mu: DiscreteMeasure, nu: DiscreteMeasure) -> Scalar:
    """Evaluate sum f(z) (mu(z) - nu(z)); weak duality makes this a lower
    bound on w1 for any 1-Lipschitz f."""
    total: Scalar = 0
    for measure, sign in ((mu, 1), (nu, -1)):
        for z, w in zip(measure.support, measure.masses):
            if z not in f:
                raise PotentialDomainError(f"potential undefined at vertex {z}")
            total += sign * f[z] * w
    return total


def verify_lipschitz(g: Graph, f: Mapping[int, Scalar], tol: float = 0.0):
    """Check |f(u) - f(v)| <= 1 on every edge with both endpoints in f.

    On hop-metric graphs this edge condition is equivalent to full
    1-Lipschitz continuity.  Returns (True, None) or (False, first bad edge).
    """
    for u_, v_ in g.edges:
        if u_ in f and v_ in f:
            if abs(f[u_] - f[v_]) > 1 + tol:
                return False, (u_, v_)
    return True, None


def w1_oracle(g: Graph, mu: DiscreteMeasure, nu: DiscreteMeasure,
              limit: int = 12, dist_rows: dict | None = None) -> Scalar:
    """Independent optimum via successive-shortest-path min-cost flow.

    Masses are rationalized exactly and scaled to integers, then unit-cost
    augmentations run over the residual network: a structurally different
    route to the same optimum as the simplex, used as a correctness oracle.
    """
    exact = _check_modes(mu, nu)
    if len(mu.support) > limit or len(nu.support) > limit:
        raise OracleLimitError(
            f"oracle accepts at most {limit} atoms per side, "
            f"got {len(mu.support)}x{len(nu.support)}"
        )
    mu_w = [Fraction(w) for w in mu.masses]
    nu_w = [Fraction(w) for w in nu.masses]
    mu_w = [w / sum(mu_w) for w in mu_w]  # exact renormalization (no-op in exact mode)
    nu_w = [w / sum(nu_w) for w in nu_w]
    denom = math.lcm(*[w.denominator for w in mu_w], *[w.denominator for w in nu_w])
    supply = [int(w * denom) for w in mu_w]
    demand = [int(w * denom) for w in nu_w]
    cost = _cost_table(g, mu.support, nu.support, dist_rows)

    m, n = len(supply), len(demand)
    # node ids: source super-node, m supplies, n demands, sink super-node
    s_node, t_node = 0, m + n + 1
    arcs = _ResidualNetwork(m + n + 2)
    for i in range(m):
        arcs.add(s_node, 1 + i, supply[i], 0)
    for j in range(n):
        arcs.add(1 + m + j, t_node, demand[j], 0)
    for i in range(m):
        for j in range(n):
            arcs.add(1 + i, 1 + m + j, denom, cost[i][j])
    total_cost = arcs.min_cost_flow(s_node, t_node, denom)
    value = Fraction(total_cost, denom)
    return value if exact else float(value)


class _ResidualNetwork:
    """Successive-shortest-path min-cost flow over integer capacities."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self.head: list[list[int]] = [[] for _ in range(num_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add(self, u: int, v: int, cap: int, cost: int) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)

    def min_cost_flow(self, s: int, t: int, target: int) -> int:
        total_cost = 0
        pushed = 0
        while pushed < target:
            dist = [None] * self.num_nodes
            in_arc = [-1] * self.num_nodes
            dist[s] = 0
            for _ in range(self.num_nodes):  # Bellman-Ford, residual costs
                changed = False
                for u in range(self.num_nodes):
                    du = dist[u]
                    if du is None:
                        continue
                    for a in self.head[u]:
                        if self.cap[a] > 0:
                            v = self.to[a]
                            nd = du + self.cost[a]
                            if dist[v] is None or nd < dist[v]:
                                dist[v] = nd
                                in_arc[v] = a
                                changed = True
                if not changed:
                    break
            if dist[t] is None:
                raise ArithmeticError("min-cost flow failed to route remaining mass")
            bottleneck = target - pushed
            v = t
            while v != s:
                a = in_arc[v]
                bottleneck = min(bottleneck, self.cap[a])
                v = self.to[a ^ 1]
            v = t
            while v != s:
                a = in_arc[v]
                self.cap[a] -= bottleneck
                self.cap[a ^ 1] += bottleneck
                v = self.to[a ^ 1]
            pushed += bottleneck
            total_cost += bottleneck * dist[t]
        return total_cost
