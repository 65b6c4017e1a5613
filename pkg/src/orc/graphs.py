"""Immutable simple undirected graphs with community labels.

Vertices are dense integers 0..N-1, community labels dense integers
0..C-1.  Distances are computed per source by breadth-first search;
callers that need many rows keep their own memo dict (see
:func:`orc.curvature.all_curvatures`).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphFormatError, PartitionMismatchError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    ``edges`` is the canonical edge list, pairs (u, v) with u < v in
    lexicographic order.  ``adjacency[v]`` is the sorted tuple of
    neighbours of v.  Instances are immutable and safe to share.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, vertex_count: int, edges) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs, validating as it goes."""
        if vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        canonical: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for {vertex_count} vertices")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge ({pair[0]},{pair[1]})")
            seen.add(pair)
            canonical.append(pair)
        canonical.sort()
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in canonical:
            adj[u].append(v)
            adj[v].append(u)
        return cls(
            vertex_count=vertex_count,
            edges=tuple(canonical),
            adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adj),
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = (u, v) if u < v else (v, u)
        return (a, b) in self._edge_set

    @property
    def _edge_set(self) -> frozenset:
        # cached lazily on first use; object.__setattr__ because frozen
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached


@dataclass(frozen=True)
class CommunityPartition:
    """Community labels, one per vertex; labels dense and nonempty."""

    labels: tuple[int, ...]
    community_count: int

    @classmethod
    def from_labels(cls, labels) -> "CommunityPartition":
        labels = tuple(int(x) for x in labels)
        if not labels:
            raise PartitionMismatchError("empty label vector")
        count = max(labels) + 1
        present = set(labels)
        if min(labels) < 0:
            raise PartitionMismatchError("negative community label")
        missing = [c for c in range(count) if c not in present]
        if missing:
            raise PartitionMismatchError(f"empty communities: labels {missing} unused")
        return cls(labels=labels, community_count=count)

    @classmethod
    def single(cls, vertex_count: int) -> "CommunityPartition":
        return cls.from_labels([0] * vertex_count)

    def members(self, community: int) -> tuple[int, ...]:
        return tuple(v for v, lab in enumerate(self.labels) if lab == community)

    def sizes(self) -> list[int]:
        out = [0] * self.community_count
        for lab in self.labels:
            out[lab] += 1
        return out


@dataclass(frozen=True)
class EdgeClass:
    """Partition of the edge list into intra- and intercommunity edges."""

    intra: tuple[tuple[int, int], ...]
    inter: tuple[tuple[int, int], ...]


def bfs_distances(g: Graph, source: int) -> list:
    """Hop distances from ``source``; ``None`` marks unreachable vertices.

    The marker is deliberately not a large number: downstream transport
    refuses to price unreachable pairs instead of silently using a sentinel.
    """
    if not 0 <= source < g.vertex_count:
        raise ValueError(f"source {source} out of range")
    dist = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adjacency[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return dist


def classify_edges(g: Graph, p: CommunityPartition) -> EdgeClass:
    """Split the canonical edge list by whether endpoints share a label."""
    if len(p.labels) != g.vertex_count:
        raise PartitionMismatchError(
            f"label vector has {len(p.labels)} entries for {g.vertex_count} vertices"
        )
    labels = p.labels
    intra = []
    inter = []
    for u, v in g.edges:
        (inter if labels[u] != labels[v] else intra).append((u, v))
    return EdgeClass(intra=tuple(intra), inter=tuple(inter))


def load_graph(text: str) -> tuple[Graph, CommunityPartition]:
    """Parse the line-oriented graph format.

    Format::

        v <N>            vertex count, first non-comment line
        c <vertex> <label>   optional label lines (default label 0)
        e <u> <v>        one line per edge
        # comment

    Raises GraphFormatError naming the offending 1-based line.
    """
    vertex_count = None
    labels: list[int] | None = None
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "v":
            if vertex_count is not None:
                raise GraphFormatError(line_no, "duplicate 'v' line")
            if len(tokens) != 2:
                raise GraphFormatError(line_no, "expected 'v <count>'")
            try:
                vertex_count = int(tokens[1])
            except ValueError:
                raise GraphFormatError(line_no, f"bad vertex count {tokens[1]!r}") from None
            if vertex_count < 0:
                raise GraphFormatError(line_no, "vertex count must be nonnegative")
            labels = [0] * vertex_count
        elif kind == "c":
            if vertex_count is None:
                raise GraphFormatError(line_no, "'c' line before 'v' line")
            if len(tokens) != 3:
                raise GraphFormatError(line_no, "expected 'c <vertex> <label>'")
            try:
                v, lab = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError(line_no, "vertex and label must be integers") from None
            if not 0 <= v < vertex_count:
                raise GraphFormatError(line_no, f"vertex {v} out of range")
            if lab < 0:
                raise GraphFormatError(line_no, f"negative label {lab}")
            labels[v] = lab
        elif kind == "e":
            if vertex_count is None:
                raise GraphFormatError(line_no, "'e' line before 'v' line")
            if len(tokens) != 3:
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError(line_no, "endpoints must be integers") from None
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphFormatError(line_no, f"edge ({u},{v}) out of range")
            if u == v:
                raise GraphFormatError(line_no, f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in edge_seen:
                raise GraphFormatError(line_no, f"duplicate edge ({pair[0]},{pair[1]})")
            edge_seen.add(pair)
            edges.append(pair)
        else:
            raise GraphFormatError(line_no, f"unknown record type {kind!r}")

    if vertex_count is None:
        raise GraphFormatError(1, "missing 'v' line")
    g = Graph.from_edges(vertex_count, edges)
    try:
        p = CommunityPartition.from_labels(labels) if vertex_count else CommunityPartition((), 0)
    except PartitionMismatchError as exc:
        raise GraphFormatError(1, f"bad community labels: {exc}") from None
    return g, p


def save_graph(g: Graph, p: CommunityPartition) -> str:
    """Serialize to the graph file format; load(save(g, p)) round-trips."""
    if len(p.labels) != g.vertex_count:
        raise PartitionMismatchError("partition does not match graph")
    lines = [f"v {g.vertex_count}"]
    lines.extend(f"c {v} {lab}" for v, lab in enumerate(p.labels))
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
