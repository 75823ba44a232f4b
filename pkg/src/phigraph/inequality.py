"""Degree-product inequalities: the cubed bound and the golden-ratio bound.

The edge-product side is an integer and is computed exactly. The degree-power
side has irrational exponents and is evaluated with mpmath at a configurable
number of digits; ``holds`` allows a relative slack of ``SLACK`` to absorb
rounding only.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mp

from .flow import Orientation, verify_orientation
from .golden import DEFAULT_PRECISION, GUARD_DIGITS, golden_constants, main_constant
from .graph import Graph

SLACK = mpmath.mpf("1e-9")


def weighted_amgm(x, y, p, q, precision: int = DEFAULT_PRECISION) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Return ``(x**p * y**q, p*x + q*y)``; the first never exceeds the second."""
    with mp.workdps(precision + GUARD_DIGITS):
        x, y, p, q = (mp.mpf(t) for t in (x, y, p, q))
        if abs(p + q - 1) > mp.mpf("1e-20"):
            raise ValueError(f"weights must sum to 1, got p+q={mpmath.nstr(p + q, 25)}")
        if not (0 < p < 1 and 0 < q < 1):
            raise ValueError("weights must lie in (0, 1)")
        if x <= 0 or y <= 0:
            raise ValueError("x and y must be positive")
        return x**p * y**q, p * x + q * y


def edge_product_sum(g: Graph) -> int:
    d = g.degree
    return sum(d[u] * d[v] for u, v in g.edges)


def degree_power_sum(g: Graph, beta, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Sum of ``d(v)**beta``; isolated vertices contribute 0.

    Vertices are grouped by degree and summed in increasing degree order so the
    result is independent of vertex numbering.
    """
    counts = Counter(d for d in g.degree if d > 0)
    with mp.workdps(precision + GUARD_DIGITS):
        beta = mp.mpf(beta)
        total = mp.mpf(0)
        for d in sorted(counts):
            total += counts[d] * mp.mpf(d) ** beta
        return total


@dataclass(frozen=True)
class CubedReport:
    lhs: int
    rhs: Fraction
    holds: bool
    equality: bool
    regular: bool


def check_cubed_bound(g: Graph) -> CubedReport:
    lhs = edge_product_sum(g)
    rhs = Fraction(sum(d**3 for d in g.degree), 2)
    return CubedReport(lhs, rhs, lhs <= rhs, lhs == rhs, g.is_regular())


def _digits(x: mpmath.mpf, precision: int) -> str:
    with mp.workdps(precision + GUARD_DIGITS):
        return mpmath.nstr(x, precision, strip_zeros=False)


@dataclass(frozen=True)
class InequalityReport:
    n: int
    m: int
    k: int
    lhs: int
    rhs: mpmath.mpf
    ratio: float
    holds: bool
    precision: int
    hypothesis_verified: bool | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "lhs": str(self.lhs),
            "rhs": _digits(self.rhs, self.precision),
            "ratio": self.ratio,
            "holds": self.holds,
            "precision": self.precision,
            "hypothesis_verified": self.hypothesis_verified,
        }


def _ratio(lhs, rhs, precision: int) -> float:
    if lhs == 0:
        return 0.0
    if rhs == 0:
        return float("inf")
    with mp.workdps(precision + GUARD_DIGITS):
        return float(mp.mpf(lhs) / rhs)


def check_main(
    g: Graph,
    k: int,
    precision: int = DEFAULT_PRECISION,
    hypothesis_verified: bool | None = None,
) -> InequalityReport:
    """Evaluate both sides of ``sum d(u)d(v) <= k^(2-phi) * sum d(v)^(phi^2)``.

    The mad hypothesis is not checked here; callers that have checked it pass
    the outcome through ``hypothesis_verified``.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    c = golden_constants(precision)
    lhs = edge_product_sum(g)
    with mp.workdps(precision + GUARD_DIGITS):
        rhs = main_constant(k, precision) * degree_power_sum(g, c.phi_sq, precision)
        holds = bool(lhs <= rhs * (1 + SLACK))
    return InequalityReport(
        g.n, g.m, k, lhs, rhs, _ratio(lhs, rhs, precision), holds, precision, hypothesis_verified
    )


@dataclass(frozen=True)
class ArcRecord:
    tail: int
    head: int
    lhs_term: mpmath.mpf
    rhs_term: mpmath.mpf

    @property
    def holds(self) -> bool:
        return bool(self.lhs_term <= self.rhs_term * (1 + SLACK))


@dataclass(frozen=True)
class ArcCertificate:
    """Per-arc AM-GM inequalities and their sums.

    ``lhs_sum`` should equal ``k^(phi-2)`` times the edge-product sum, and
    ``rhs_sum`` is bounded by ``degree_power_total`` because each tail has
    outdegree at most k and each vertex's in- and out-arcs split its degree.
    """

    k: int
    precision: int
    records: tuple[ArcRecord, ...]
    lhs_sum: mpmath.mpf
    rhs_sum: mpmath.mpf
    degree_power_total: mpmath.mpf
    edge_products: int
    scale: mpmath.mpf = field(repr=False)

    @property
    def all_arcs_hold(self) -> bool:
        return all(r.holds for r in self.records)

    @property
    def lhs_consistent(self) -> bool:
        with mp.workdps(self.precision + GUARD_DIGITS):
            target = self.scale * self.edge_products
            return bool(abs(self.lhs_sum - target) <= SLACK * max(target, 1))

    @property
    def rhs_collapses(self) -> bool:
        with mp.workdps(self.precision + GUARD_DIGITS):
            return bool(self.rhs_sum <= self.degree_power_total * (1 + SLACK))

    @property
    def holds(self) -> bool:
        return self.all_arcs_hold and self.lhs_consistent and self.rhs_collapses


def arc_certificate(
    g: Graph, o: Orientation, k: int, precision: int = DEFAULT_PRECISION
) -> ArcCertificate:
    """Instantiate weighted AM-GM on every arc ``u -> v`` with
    ``x = d(u)^(phi^2)/k``, ``y = d(v)^phi``, ``p = phi^-2``, ``q = phi^-1``,
    so that ``x^p y^q = k^(phi-2) d(u) d(v)``.
    """
    if o.host != g:
        raise ValueError("orientation belongs to a different graph")
    if not verify_orientation(o, k):
        raise ValueError(f"orientation has outdegree {o.max_outdegree()} > k={k}")
    c = golden_constants(precision)
    d = g.degree
    with mp.workdps(precision + GUARD_DIGITS):
        xs: dict[int, mpmath.mpf] = {}
        ys: dict[int, mpmath.mpf] = {}
        for deg in set(d):
            xs[deg] = mp.mpf(deg) ** c.phi_sq / k
            ys[deg] = mp.mpf(deg) ** c.phi
        records = []
        for u, v in o.arcs:
            lhs_term, rhs_term = weighted_amgm(xs[d[u]], ys[d[v]], c.inv_phi_sq, c.inv_phi, precision)
            records.append(ArcRecord(u, v, lhs_term, rhs_term))
        lhs_sum = mp.fsum(r.lhs_term for r in records)
        rhs_sum = mp.fsum(r.rhs_term for r in records)
        scale = 1 / main_constant(k, precision)
        total = degree_power_sum(g, c.phi_sq, precision)
    return ArcCertificate(
        k, precision, tuple(records), lhs_sum, rhs_sum, total, edge_product_sum(g), scale
    )
