"""Shared randomized-instance builders for the test suite."""

from orc import CommunityPartition, Graph
from orc.families import SplitMix64, sample_without_replacement


def random_multi_community(rng: SplitMix64, sizes, max_cross=None):
    """Complete blocks of the given sizes plus random cross edges between
    every pair of blocks (at least one between blocks 0 and 1)."""
    offsets = []
    total = 0
    for s in sizes:
        offsets.append(total)
        total += s
    edges = []
    for off, s in zip(offsets, sizes):
        edges += [(off + i, off + j) for i in range(s) for j in range(i + 1, s)]
    labels = []
    for c, s in enumerate(sizes):
        labels += [c] * s
    for a in range(len(sizes)):
        for b in range(a + 1, len(sizes)):
            pairs = sizes[a] * sizes[b]
            cap = pairs if max_cross is None else min(pairs, max_cross)
            low = 1 if (a, b) == (0, 1) else 0
            k = low + rng.randbelow(cap - low + 1)
            for t in sample_without_replacement(rng, pairs, k):
                i, j = divmod(t, sizes[b])
                edges.append((offsets[a] + i, offsets[b] + j))
    g = Graph.from_edges(total, edges)
    p = CommunityPartition.from_labels(labels)
    return g, p


def first_cross_edge(g, p, communities=(0, 1)):
    """First canonical edge between the two requested communities, oriented
    so the endpoint in communities[0] comes first."""
    a, b = communities
    for u, v in g.edges:
        lu, lv = p.labels[u], p.labels[v]
        if (lu, lv) == (a, b):
            return (u, v)
        if (lu, lv) == (b, a):
            return (v, u)
    raise AssertionError("no cross edge between the requested communities")
