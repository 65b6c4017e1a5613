"""Executable curvature certificates for a cross-community edge.

For an edge (x, y) between two complete communities the vertex set splits
into fourteen classes by how each vertex connects to the edge: the two
endpoints, four classes inside x's community, four inside y's, and five
outside both.  A staircase potential that is constant on each class gives
a transport lower bound in closed form, hence a curvature upper bound,
independent of the simplex.  Counting identities over the classes are
verified on every build; a violation means the input is outside the
complete-community setting (or a construction bug) and is never ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curvature import lazy_measure
from .errors import PartitionContradictionError, PlanInfeasibleError, InvalidSizeError
from .graphs import CommunityPartition, Graph, bfs_distances
from .modes import EXACT, Scalar, check_alpha, check_mode, to_scalar
from .transport import TransferencePlan, dual_value, verify_lipschitz


@dataclass(frozen=True)
class ProofPartition:
    """Vertex classes around a cross edge (x, y).

    ``x_side_*`` classes partition x's community minus x itself, by how the
    vertex reaches y's community: adjacent to y itself, adjacent to it
    elsewhere, two steps away through an outside vertex, or not at all
    (interior).  ``y_side_*`` mirrors this.  ``outside_*`` classes split the
    remaining communities by adjacency to x and y, relay vertices (outside
    neighbours of the two-step classes), and everything beyond.
    """

    x: int
    y: int
    x_community: tuple[int, ...]
    y_community: tuple[int, ...]
    x_side_interior: tuple[int, ...]
    x_side_adj_y: tuple[int, ...]
    x_side_bridged: tuple[int, ...]
    x_side_two_step: tuple[int, ...]
    y_side_interior: tuple[int, ...]
    y_side_adj_x: tuple[int, ...]
    y_side_bridged: tuple[int, ...]
    y_side_two_step: tuple[int, ...]
    outside_adj_both: tuple[int, ...]
    outside_adj_x: tuple[int, ...]
    outside_adj_y: tuple[int, ...]
    outside_relay: tuple[int, ...]
    outside_far: tuple[int, ...]

    def class_map(self) -> dict[str, tuple[int, ...]]:
        return {
            "x": (self.x,),
            "y": (self.y,),
            "x_side_interior": self.x_side_interior,
            "x_side_adj_y": self.x_side_adj_y,
            "x_side_bridged": self.x_side_bridged,
            "x_side_two_step": self.x_side_two_step,
            "y_side_interior": self.y_side_interior,
            "y_side_adj_x": self.y_side_adj_x,
            "y_side_bridged": self.y_side_bridged,
            "y_side_two_step": self.y_side_two_step,
            "outside_adj_both": self.outside_adj_both,
            "outside_adj_x": self.outside_adj_x,
            "outside_adj_y": self.outside_adj_y,
            "outside_relay": self.outside_relay,
            "outside_far": self.outside_far,
        }

    def cardinalities(self) -> dict[str, int]:
        return {name: len(members) for name, members in self.class_map().items()}


# staircase levels: 0 on the classes transport never has to reach past,
# descending to -3 on y-side interior vertices three hops from x's mass
POTENTIAL_LEVELS = {
    "x": -1,
    "y": -2,
    "x_side_interior": 0,
    "x_side_adj_y": -1,
    "x_side_bridged": -1,
    "x_side_two_step": 0,
    "y_side_interior": -3,
    "y_side_adj_x": -2,
    "y_side_bridged": -2,
    "y_side_two_step": -2,
    "outside_adj_both": -1,
    "outside_adj_x": -1,
    "outside_adj_y": -1,
    "outside_relay": -1,
    "outside_far": 0,
}


def build_partition(g: Graph, p: CommunityPartition, edge: tuple[int, int]) -> ProofPartition:
    """Classify every vertex relative to the cross edge (x, y).

    Verifies the counting identities linking class sizes to community sizes
    and endpoint degrees before returning; these identities encode the
    complete-community assumption and catch misclassification loudly.
    """
    x, y = edge
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    labels = p.labels
    if labels[x] == labels[y]:
        raise ValueError(f"({x},{y}) joins vertices of the same community")

    cx_label, cy_label = labels[x], labels[y]
    cx = frozenset(p.members(cx_label))
    cy = frozenset(p.members(cy_label))
    adj = [frozenset(g.adjacency[v]) for v in range(g.vertex_count)]

    def _classify_side(base: int, far: int, own: frozenset, other: frozenset):
        adj_far = []     # own community, adjacent to the far endpoint
        bridged = []     # adjacent to the far community elsewhere
        two_step = []    # reaches the far community through an outside vertex
        interior = []    # none of the above
        for z in sorted(own):
            if z == base:
                continue
            nbrs = adj[z]
            if far in nbrs:
                adj_far.append(z)
            elif nbrs & other:
                bridged.append(z)
            elif any((adj[v] & other) for v in nbrs if v not in own and v not in other):
                two_step.append(z)
            else:
                interior.append(z)
        return adj_far, bridged, two_step, interior

    x_adj_y, x_bridged, x_two_step, x_interior = _classify_side(x, y, cx, cy)
    y_adj_x, y_bridged, y_two_step, y_interior = _classify_side(y, x, cy, cx)

    outside = [v for v in range(g.vertex_count) if v not in cx and v not in cy]
    adj_both, adj_x_only, adj_y_only, rest = [], [], [], []
    for v in outside:
        nbrs = adj[v]
        if x in nbrs and y in nbrs:
            adj_both.append(v)
        elif x in nbrs:
            adj_x_only.append(v)
        elif y in nbrs:
            adj_y_only.append(v)
        else:
            rest.append(v)
    two_step_set = frozenset(x_two_step)
    relay = [v for v in rest if adj[v] & two_step_set]
    far = [v for v in rest if not (adj[v] & two_step_set)]

    part = ProofPartition(
        x=x, y=y,
        x_community=tuple(sorted(cx)), y_community=tuple(sorted(cy)),
        x_side_interior=tuple(x_interior), x_side_adj_y=tuple(x_adj_y),
        x_side_bridged=tuple(x_bridged), x_side_two_step=tuple(x_two_step),
        y_side_interior=tuple(y_interior), y_side_adj_x=tuple(y_adj_x),
        y_side_bridged=tuple(y_bridged), y_side_two_step=tuple(y_two_step),
        outside_adj_both=tuple(adj_both), outside_adj_x=tuple(adj_x_only),
        outside_adj_y=tuple(adj_y_only), outside_relay=tuple(relay),
        outside_far=tuple(far),
    )
    _verify_identities(g, part)
    return part


def _verify_identities(g: Graph, part: ProofPartition) -> None:
    card = part.cardinalities()
    n_x = len(part.x_community)
    n_y = len(part.y_community)
    checks = [
        ("x-side classes + x cover x's community",
         card["x_side_interior"] + card["x_side_adj_y"] + card["x_side_bridged"]
         + card["x_side_two_step"] + 1, n_x),
        ("y-side classes + y cover y's community",
         card["y_side_interior"] + card["y_side_adj_x"] + card["y_side_bridged"]
         + card["y_side_two_step"] + 1, n_y),
        ("degree of x counts its community, y-side neighbours of x, and outside neighbours",
         n_x + card["y_side_adj_x"] + card["outside_adj_both"] + card["outside_adj_x"],
         g.degree(part.x)),
        ("degree of y counts its community, x-side neighbours of y, and outside neighbours",
         n_y + card["x_side_adj_y"] + card["outside_adj_both"] + card["outside_adj_y"],
         g.degree(part.y)),
        ("classes partition the vertex set",
         sum(card.values()), g.vertex_count),
    ]
    for label, got, expected in checks:
        if got != expected:
            raise PartitionContradictionError(
                f"{label}: {got} != {expected} (complete-community assumption violated?)"
            )
    adj = g.adjacency
    cy = set(part.y_community)
    for z in part.x_side_interior + part.x_side_two_step:
        if set(adj[z]) & cy:
            raise PartitionContradictionError(
                f"vertex {z} classified x-side non-bridged but touches y's community"
            )
    cx = set(part.x_community)
    for z in part.y_side_interior + part.y_side_two_step:
        if set(adj[z]) & cx:
            raise PartitionContradictionError(
                f"vertex {z} classified y-side non-bridged but touches x's community"
            )


def relay_characterizations(g: Graph, part: ProofPartition) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The relay class has two candidate definitions: outside neighbours of
    the x-side two-step class, and outside neighbours of the y-side
    two-step class.  Both are computed so tests can compare them; the
    partition itself uses the first."""
    cx, cy = set(part.x_community), set(part.y_community)
    gho = set(part.outside_adj_both) | set(part.outside_adj_x) | set(part.outside_adj_y)
    xs = set(part.x_side_two_step)
    ys = set(part.y_side_two_step)
    first = tuple(v for v in range(g.vertex_count)
                  if v not in cx and v not in cy and v not in gho
                  and set(g.adjacency[v]) & xs)
    second = tuple(v for v in range(g.vertex_count)
                   if v not in cx and v not in cy
                   and set(g.adjacency[v]) & ys)
    return first, second


def table_potential(part: ProofPartition) -> dict[int, int]:
    """The staircase potential as a vertex map."""
    f: dict[int, int] = {}
    for name, members in part.class_map().items():
        level = POTENTIAL_LEVELS[name]
        for v in members:
            f[v] = level
    return f


@dataclass(frozen=True)
class WitnessReport:
    """Closed-form curvature upper bound with its certificate diagnostics.

    ``dual_of_potential`` is the potential's dual objective against the two
    walk measures; it reproduces ``w_lower`` exactly in exact mode.
    ``lipschitz_ok`` is the two-sided edge condition over the whole graph;
    ``dual_feasible`` is the one-sided condition f(i) - f(j) <= d(i, j) over
    source-support x target-support pairs, which is the condition the lower
    bound actually needs.
    """

    partition: ProofPartition
    alpha: Fraction
    kappa_upper: Scalar
    w_lower: Scalar
    dual_of_potential: Scalar
    potential: dict[int, int]
    lipschitz_ok: bool
    lipschitz_witness: tuple[int, int] | None
    dual_feasible: bool


def witness_upper_bound(g: Graph, p: CommunityPartition, edge: tuple[int, int],
                        alpha, mode: str = EXACT) -> WitnessReport:
    """Upper-bound the curvature of a cross edge without solving transport.

    The bound is 1 - [alpha + (1-alpha) (T_x / d_x + T_y / d_y - 1)] where
    T_x counts the vertices x's mass provably cannot reach in one hop of
    y's side (own community minus one, interior, two-step and the outside
    neighbours of x) and T_y counts y's community minus one plus its
    interior.  The same number re-emerges as the dual objective of the
    staircase potential, which is attached for cross-checking.
    """
    check_mode(mode)
    alpha = check_alpha(alpha)
    part = build_partition(g, p, edge)
    card = part.cardinalities()
    n_x = len(part.x_community)
    n_y = len(part.y_community)
    d_x = g.degree(part.x)
    d_y = g.degree(part.y)

    term_x = Fraction(
        n_x - 1 + card["x_side_interior"] + card["x_side_two_step"]
        + card["outside_adj_both"] + card["outside_adj_x"], d_x)
    term_y = Fraction(n_y - 1 + card["y_side_interior"], d_y)
    w_lower_exact = alpha + (1 - alpha) * (term_x + term_y - 1)
    kappa_upper = to_scalar(1 - w_lower_exact, mode)
    w_lower = to_scalar(w_lower_exact, mode)

    f = table_potential(part)
    mu = lazy_measure(g, part.x, alpha, mode)
    nu = lazy_measure(g, part.y, alpha, mode)
    dual = dual_value(f, mu, nu)
    lip_ok, lip_witness = verify_lipschitz(g, f)
    feasible = _dual_feasible(g, f, mu.support, nu.support)

    return WitnessReport(
        partition=part, alpha=alpha, kappa_upper=kappa_upper, w_lower=w_lower,
        dual_of_potential=dual, potential=f,
        lipschitz_ok=lip_ok, lipschitz_witness=lip_witness,
        dual_feasible=feasible,
    )


def _dual_feasible(g: Graph, f: dict[int, int], src_support, dst_support) -> bool:
    """One-sided Lipschitz feasibility across the two supports: the pair
    (f on sources, -f on targets) must satisfy every transport dual
    constraint f(i) - f(j) <= d(i, j)."""
    for j in dst_support:
        row = bfs_distances(g, j)
        fj = f[j]
        for i in src_support:
            d = row[i]
            if d is None:
                return False
            if f[i] - fj > d:
                return False
    return True


def _matched_pairs_plan(n: int, alpha, mode: str) -> TransferencePlan:
    alpha = check_alpha(alpha)
    beta = 1 - alpha
    share = beta / n
    if alpha < share:
        raise PlanInfeasibleError(
            f"diagonal plan needs alpha >= (1-alpha)/n, got alpha = {alpha}, n = {n}"
        )
    entries = [
        (0, n, alpha - share),
        (0, 0, share),
        (n, n, share),
    ]
    entries += [(i, n + i, share) for i in range(1, n)]
    entries = [(s, t, to_scalar(w, mode)) for s, t, w in entries if w != 0]
    entries.sort()
    return TransferencePlan(entries=tuple(entries))


def explicit_plan_zero_config(n: int, alpha, mode: str = EXACT) -> TransferencePlan:
    """The diagonal plan between the endpoint walk measures of the first
    cross edge of the matched-pairs configuration.

    Mass alpha - (1-alpha)/n crosses the edge itself, each matched pair
    carries (1-alpha)/n (the unmatched pair at hop distance 3), and the
    shared endpoint masses stay in place.  Its cost is exactly 1, so it
    certifies a transport distance of at most 1.
    """
    if n < 3:
        raise InvalidSizeError("matched-pairs configuration needs n >= 3")
    check_mode(mode)
    return _matched_pairs_plan(n, alpha, mode)


def explicit_plan_prism(n: int, alpha, mode: str = EXACT) -> TransferencePlan:
    """The diagonal plan on the complete-prism: every pair is matched, so
    the cost drops to 1 - 2(1-alpha)/n, certifying positive curvature."""
    if n < 2:
        raise InvalidSizeError("prism needs n >= 2")
    check_mode(mode)
    return _matched_pairs_plan(n, alpha, mode)
