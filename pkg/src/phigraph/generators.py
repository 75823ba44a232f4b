"""Reproducible random graphs and a few named families.

All randomness comes from ``random.Random`` (MT19937) seeded with the given
integer; only ``randrange``, ``random`` and ``shuffle`` are used, whose output
for a fixed integer seed is stable across CPython versions and platforms.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph


@dataclass(frozen=True)
class GenSpec:
    n: int
    k: int = 1
    edge_prob: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError(f"edge_prob must be in [0, 1], got {self.edge_prob}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def describe(self) -> str:
        return f"n={self.n} k={self.k} edge_prob={self.edge_prob!r} seed={self.seed} rng=MT19937"


def prufer_decode(seq: list[int], n: int) -> Graph:
    """Labeled tree on ``n`` vertices encoded by a Prüfer sequence of length n-2."""
    if n == 1:
        return Graph(1, ())
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for n={n} must have length {n - 2}")
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, tuple(edges))


def random_tree(n: int, seed: int = 0) -> Graph:
    """Uniformly random labeled tree on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(max(n - 2, 0))], n)


def random_k_degenerate(spec: GenSpec) -> Graph:
    """Vertices arrive in order; each keeps every earlier vertex with probability
    ``edge_prob`` (candidates visited in shuffled order) until it has ``k`` neighbours.
    Orienting every edge from the later vertex to the earlier one bounds all
    outdegrees by k.
    """
    rng = random.Random(spec.seed)
    edges = []
    for v in range(1, spec.n):
        candidates = list(range(v))
        rng.shuffle(candidates)
        picked = 0
        for u in candidates:
            if picked == spec.k:
                break
            if rng.random() < spec.edge_prob:
                edges.append((u, v))
                picked += 1
    return Graph(spec.n, tuple(edges))


def random_gnp(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    return Graph(n, tuple(e for e in combinations(range(n), 2) if rng.random() < p))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))
