"""Exact maximum density and maximum average degree.

Densities are ``fractions.Fraction`` throughout: mad is compared against the
integer ``2k`` in the orientation criterion, and a float could land on the
wrong side of that boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .flow import FlowNetwork
from .graph import Graph, induced_subgraph

BRUTE_FORCE_MAX_N = 20


@dataclass(frozen=True)
class DensityWitness:
    subgraph: tuple[int, ...]
    density: Fraction

    def check(self, g: Graph) -> bool:
        h = induced_subgraph(g, self.subgraph)
        return h.n > 0 and Fraction(h.m, h.n) == self.density


def _density_of(g: Graph, vertices: tuple[int, ...]) -> Fraction:
    h = induced_subgraph(g, vertices)
    return Fraction(h.m, h.n)


def _denser_than(g: Graph, active: list[int], guess: Fraction) -> tuple[int, ...] | None:
    """A vertex set with density strictly above ``guess``, or None if none exists.

    Min-cut closure formulation: for ``guess = p/q`` a cut keeping edge set F
    and vertex set S on the source side costs ``q*(m - |F|) + p*|S|``, so the
    max flow is below ``q*m`` exactly when some subgraph has
    ``q|E(H)| - p|V(H)| > 0``.
    """
    p, q = guess.numerator, guess.denominator
    m = g.m
    index = {v: m + i for i, v in enumerate(active)}
    source, sink = m + len(active), m + len(active) + 1
    net = FlowNetwork(m + len(active) + 2, source, sink)
    big = q * m + 1
    for j, (u, v) in enumerate(g.edges):
        net.add_arc(source, j, q)
        net.add_arc(j, index[u], big)
        net.add_arc(j, index[v], big)
    for v in active:
        net.add_arc(index[v], sink, p)
    if net.max_flow() >= q * m:
        return None
    side = net.source_side()
    return tuple(v for v in active if index[v] in side)


def max_density_exact(g: Graph) -> DensityWitness:
    """Densest induced subgraph, found by bracketing the optimum with min-cut tests.

    ``low`` is always the exact density of a known witness and no subgraph is
    denser than ``high``. Distinct densities with denominators at most n differ
    by at least ``1/(n(n-1))``, so once the bracket is narrower than that the
    witness is optimal.
    """
    active = [v for v in range(g.n) if g.degree[v] > 0]
    if not active:
        return DensityWitness((0,) if g.n else (), Fraction(0))
    n = len(active)
    witness = tuple(active)
    low = Fraction(g.m, n)
    high = Fraction(g.max_degree())
    gap = Fraction(1, n * (n - 1))
    while high - low >= gap:
        mid = (low + high) / 2
        found = _denser_than(g, active, mid)
        if found is None:
            high = mid
        else:
            witness = found
            low = _density_of(g, found)
    return DensityWitness(witness, low)


def mad(g: Graph) -> Fraction:
    return 2 * max_density_exact(g).density


def brute_force_density(g: Graph) -> DensityWitness:
    """Exhaustive maximum over all nonempty vertex subsets (test oracle)."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    if g.n == 0:
        return DensityWitness((), Fraction(0))
    neighbours = [sum(1 << u for u in g.adjacency[v]) for v in range(g.n)]
    # edges[mask] = edges of the subgraph induced by mask, built from mask minus its lowest vertex
    edges = [0] * (1 << g.n)
    best_mask, best = 1, Fraction(0)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        rest = mask ^ low
        edges[mask] = edges[rest] + (neighbours[low.bit_length() - 1] & rest).bit_count()
        d = Fraction(edges[mask], mask.bit_count())
        if d > best:
            best_mask, best = mask, d
    return DensityWitness(tuple(v for v in range(g.n) if best_mask >> v & 1), best)
