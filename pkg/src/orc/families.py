"""Generators for the community-structured graph families under study.

All generators are pure functions of their arguments.  The random family
derives per-call randomness from a 64-bit avalanche mix of the seed, so
identical specs reproduce identical graphs on any platform or schedule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSizeError
from .graphs import CommunityPartition, Graph

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _avalanche(z: int) -> int:
    """splitmix64 finalizer: full-period 64-bit avalanche."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix_seed(master: int, *params: int) -> int:
    """Derive an independent 64-bit stream seed from a master seed and
    integer parameters (community sizes, edge count, trial index)."""
    h = _avalanche(master & _MASK64)
    for p in params:
        h = _avalanche((h + _GAMMA + (p & _MASK64)) & _MASK64)
    return h


class SplitMix64:
    """Tiny deterministic PRNG: the splitmix64 sequence."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _avalanche(self._state)

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def sample_without_replacement(rng: SplitMix64, population: int, k: int) -> list[int]:
    """Floyd's algorithm: k distinct integers from [0, population), sorted."""
    if k > population:
        raise InvalidSizeError(f"cannot sample {k} of {population}")
    chosen: set[int] = set()
    for j in range(population - k, population):
        t = rng.randbelow(j + 1)
        if t in chosen:
            t = j
        chosen.add(t)
    return sorted(chosen)


def _complete_block(offset: int, size: int) -> list[tuple[int, int]]:
    return [(offset + i, offset + j) for i in range(size) for j in range(i + 1, size)]


def complete_community(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 1:
        raise InvalidSizeError("need at least one vertex")
    return Graph.from_edges(n, _complete_block(0, n))


def dumbbell(m: int, n: int) -> tuple[Graph, CommunityPartition]:
    """Two complete blocks of sizes m and n joined by the single bridge
    edge (0, m); labels 0 and 1."""
    if m < 1 or n < 1:
        raise InvalidSizeError("both blocks need at least one vertex")
    edges = _complete_block(0, m) + _complete_block(m, n) + [(0, m)]
    g = Graph.from_edges(m + n, edges)
    p = CommunityPartition.from_labels([0] * m + [1] * n)
    return g, p


def zero_curvature_config(n: int) -> tuple[Graph, CommunityPartition]:
    """Two complete blocks of size n with matching edges (i, n+i) for
    i = 0..n-2: one matching edge short of a perfect matching.

    Every one of the n-1 cross edges of this family has curvature exactly
    zero, which is what makes it the boundary case for the sign bound.
    """
    if n < 3:
        raise InvalidSizeError("flat configuration needs block size >= 3")
    edges = _complete_block(0, n) + _complete_block(n, n)
    edges += [(i, n + i) for i in range(n - 1)]
    g = Graph.from_edges(2 * n, edges)
    p = CommunityPartition.from_labels([0] * n + [1] * n)
    return g, p


def prism(n: int) -> tuple[Graph, CommunityPartition]:
    """Product of a complete block with a single edge: two complete blocks
    of size n joined by the full perfect matching.  All cross edges are
    positively curved, witnessing sharpness of the sign bound."""
    if n < 2:
        raise InvalidSizeError("prism needs block size >= 2")
    edges = _complete_block(0, n) + _complete_block(n, n)
    edges += [(i, n + i) for i in range(n)]
    g = Graph.from_edges(2 * n, edges)
    p = CommunityPartition.from_labels([0] * n + [1] * n)
    return g, p


@dataclass(frozen=True)
class TwoCommunitySpec:
    """Parameters for a random two-community graph."""

    m: int
    n: int
    k: int
    seed: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidSizeError("community sizes must be positive")
        if not 0 <= self.k <= self.m * self.n:
            raise InvalidSizeError(
                f"k = {self.k} outside [0, {self.m * self.n}] for sizes "
                f"({self.m}, {self.n})"
            )


def random_two_community(spec: TwoCommunitySpec) -> tuple[Graph, CommunityPartition]:
    """Two complete blocks plus k cross edges drawn uniformly without
    replacement from the m*n candidate pairs."""
    m, n, k = spec.m, spec.n, spec.k
    rng = SplitMix64(spec.seed)
    picks = sample_without_replacement(rng, m * n, k)
    edges = _complete_block(0, m) + _complete_block(m, n)
    edges += [(t // n, m + t % n) for t in picks]
    g = Graph.from_edges(m + n, edges)
    p = CommunityPartition.from_labels([0] * m + [1] * n)
    return g, p
