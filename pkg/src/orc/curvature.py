"""Lazy-random-walk measures and per-edge transport curvature.

The curvature of an edge (x, y) is 1 minus the transport distance between
the one-step walk measures seeded at its endpoints; on hop-metric graphs
the edge length is 1, so no normalization term appears.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfiniteDistanceError, IsolatedVertexError
from .graphs import CommunityPartition, Graph, classify_edges
from .modes import DEFAULT_EPS, EXACT, Scalar, check_alpha, check_mode
from .transport import DiscreteMeasure, TransportSolution, w1, _w1_value


def lazy_measure(g: Graph, x: int, alpha, mode: str = EXACT) -> DiscreteMeasure:
    """Walk measure at x: mass alpha stays put, 1 - alpha spreads uniformly
    over the neighbours of x."""
    check_mode(mode)
    alpha = check_alpha(alpha)
    deg = g.degree(x)
    if deg == 0 and alpha < 1:
        raise IsolatedVertexError(f"vertex {x} is isolated; lazy walk needs alpha = 1")
    weights: dict[int, Scalar] = {}
    if mode == EXACT:
        if alpha > 0:
            weights[x] = alpha
        if alpha < 1:
            share = (1 - alpha) / deg
            for w in g.adjacency[x]:
                weights[w] = share
    else:
        a = float(alpha)
        if a > 0:
            weights[x] = a
        if alpha < 1:
            share = (1.0 - a) / deg
            for w in g.adjacency[x]:
                weights[w] = share
    return DiscreteMeasure.from_dict(weights)


def edge_curvature(g: Graph, edge: tuple[int, int], alpha, mode: str = EXACT,
                   eps: float = DEFAULT_EPS, dist_rows: dict | None = None
                   ) -> tuple[Scalar, TransportSolution]:
    """Curvature of one edge plus the full transport solution for audit."""
    x, y = edge
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    mu = lazy_measure(g, x, alpha, mode)
    nu = lazy_measure(g, y, alpha, mode)
    solution = w1(g, mu, nu, eps=eps, dist_rows=dist_rows)
    one: Scalar = Fraction(1) if mode == EXACT else 1.0
    return one - solution.value, solution


@dataclass(frozen=True)
class EdgeCurvature:
    """One edge's record in a bulk curvature report."""

    edge: tuple[int, int]
    edge_class: str                     # "intra" or "inter"
    kappa: Scalar | None
    w: Scalar | None
    degree_x: int
    degree_y: int
    error: str | None = None


@dataclass(frozen=True)
class CurvatureReport:
    """Curvature of every edge, in canonical edge order."""

    records: tuple[EdgeCurvature, ...]
    alpha: Fraction
    mode: str

    def inter_records(self) -> list[EdgeCurvature]:
        return [r for r in self.records if r.edge_class == "inter"]

    def to_csv(self) -> str:
        """CSV with header edge_u,edge_v,class,kappa_num,kappa_den,kappa_float,w_float,dx,dy.

        Exact mode fills the rational columns and leaves the float columns
        empty (exact output never rounds); float mode does the reverse.
        """
        out = io.StringIO()
        out.write("edge_u,edge_v,class,kappa_num,kappa_den,kappa_float,w_float,dx,dy\n")
        for r in self.records:
            u, v = r.edge
            if r.error is not None:
                out.write(f"{u},{v},{r.edge_class},,,,,{r.degree_x},{r.degree_y}\n")
                continue
            if self.mode == EXACT:
                k = Fraction(r.kappa)
                fields = [str(k.numerator), str(k.denominator), "", ""]
            else:
                fields = ["", "", repr(r.kappa), repr(r.w)]
            out.write(f"{u},{v},{r.edge_class}," + ",".join(fields)
                      + f",{r.degree_x},{r.degree_y}\n")
        return out.getvalue()


def all_curvatures(g: Graph, p: CommunityPartition, alpha, mode: str = EXACT) -> CurvatureReport:
    """Curvature of every edge; BFS rows are shared across edges.

    A disconnected graph does not abort the batch: edges whose walk
    supports straddle components get an infinite-distance error marker.
    """
    check_mode(mode)
    alpha = check_alpha(alpha)
    classes = classify_edges(g, p)
    inter = set(classes.inter)
    dist_rows: dict = {}
    one: Scalar = Fraction(1) if mode == EXACT else 1.0
    records = []
    for edge in g.edges:
        x, y = edge
        tag = "inter" if edge in inter else "intra"
        try:
            mu = lazy_measure(g, x, alpha, mode)
            nu = lazy_measure(g, y, alpha, mode)
            value = _w1_value(g, mu, nu, dist_rows=dist_rows)
        except (InfiniteDistanceError, IsolatedVertexError) as exc:
            records.append(EdgeCurvature(
                edge=edge, edge_class=tag, kappa=None, w=None,
                degree_x=g.degree(x), degree_y=g.degree(y),
                error=type(exc).__name__,
            ))
            continue
        records.append(EdgeCurvature(
            edge=edge, edge_class=tag, kappa=one - value, w=value,
            degree_x=g.degree(x), degree_y=g.degree(y),
        ))
    return CurvatureReport(records=tuple(records), alpha=alpha, mode=mode)
