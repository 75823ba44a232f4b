"""The extremal tree family T(a, R), its K_{k,k} blow-up, and exact tightness reports.

Level ``L_R`` is a single root; every vertex of ``L_i`` (``1 <= i <= R``) has
``ceil(a^(phi^(i-1)))`` children in ``L_(i-1)``; ``L_0`` holds the leaves.
Level sizes are exact integers. Every irrational quantity (ceilings, the
size sandwich, the degree-power side) goes through mpmath interval
arithmetic, and precision is raised until each comparison is decided.
"""

from __future__ import annotations

import math
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, TypeVar

import mpmath
from mpmath import iv, libmp, mp

from .density import mad
from .flow import Orientation, verify_orientation
from .golden import DEFAULT_PRECISION, GUARD_DIGITS, GoldenInt, golden_pow
from .graph import Graph
from .inequality import check_main

MATERIALIZE_CAP = 10**7
MAD_LIMIT = 2_000
MAX_DIGITS = 100_000

T = TypeVar("T")


class PrecisionError(ArithmeticError):
    """An interval computation could not be decided within MAX_DIGITS."""


class MaterializationError(ValueError):
    pass


@contextmanager
def _iv_digits(dps: int) -> Iterator[None]:
    saved = iv.dps
    iv.dps = dps
    try:
        yield
    finally:
        iv.dps = saved


def _escalate(fn: Callable[[], T | None], digits: int, what: str) -> T:
    """Run ``fn`` at increasing interval precision until it returns a decision."""
    dps = max(digits, 15)
    while dps <= MAX_DIGITS:
        with _iv_digits(dps):
            result = fn()
        if result is not None:
            return result
        dps *= 2
    raise PrecisionError(f"{what}: undecided at {MAX_DIGITS} digits")


def _le(x, y) -> bool | None:
    """Certified ``x <= y`` for intervals/ints: True, False, or None if undecided."""
    x, y = iv.mpf(x), iv.mpf(y)
    if x.b <= y.a:
        return True
    if x.a > y.b:
        return False
    return None


def _power_of_a(a: int, exponent: GoldenInt):
    """Enclosure of ``a ** exponent`` at the current interval precision."""
    return iv.exp(exponent.to_interval() * iv.log(a))


def _mid(x) -> mpmath.mpf:
    lo, hi = x._mpi_
    return (mp.make_mpf(lo) + mp.make_mpf(hi)) / 2


@dataclass(frozen=True)
class ExtremalParams:
    a: int
    R: int
    k: int = 1
    epsilon: float | None = None

    def __post_init__(self) -> None:
        if self.a < 4:
            raise ValueError(f"a must be at least 4, got {self.a}")
        if self.R < 2:
            raise ValueError(f"R must be at least 2, got {self.R}")
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.epsilon is not None and self.epsilon <= 0:
            raise ValueError("epsilon must be positive")


@lru_cache(maxsize=None)
def ceil_power(a: int, i: int, precision: int = DEFAULT_PRECISION) -> int:
    """Exact ``ceil(a ** (phi ** i))``, certified by interval evaluation."""
    if a < 2 or i < 0:
        raise ValueError(f"need a >= 2 and i >= 0, got a={a}, i={i}")
    if i == 0:
        return a
    exponent = golden_pow(i)
    digits = int(float(exponent.to_real(15)) * math.log10(a)) + 1
    if digits > MAX_DIGITS:
        raise PrecisionError(f"a^(phi^{i}) has about {digits} digits; beyond {MAX_DIGITS}")

    def attempt() -> int | None:
        lo, hi = _power_of_a(a, exponent)._mpi_
        c_lo, c_hi = libmp.to_int(lo, "c"), libmp.to_int(hi, "c")
        return int(c_lo) if c_lo == c_hi else None

    return _escalate(attempt, digits + precision, f"ceil({a}^(phi^{i}))")


@dataclass(frozen=True)
class SandwichCheck:
    """``a^(phi^(R+1) - phi^i) <= |L_(i-1)| <= a^(phi^(R+1) - phi^i) * e^(2/a)``."""

    i: int
    size: int
    lower: mpmath.mpf
    upper: mpmath.mpf
    ok: bool


@dataclass(frozen=True)
class LevelProfile:
    a: int
    R: int
    children: tuple[int, ...]  # children[m] = ceil(a^(phi^m)), m = 0..R-1
    sizes: tuple[int, ...]  # sizes[i] = |L_i|, i = 0..R
    degrees: tuple[int, ...]  # degrees[i] = degree of every vertex in L_i
    log10_sizes: tuple[mpmath.mpf, ...]
    sandwich: tuple[SandwichCheck, ...]

    def edge_count(self, i: int) -> int:
        """|E_i|, the number of edges between L_i and L_(i-1)."""
        if not 1 <= i <= self.R:
            raise ValueError(f"edge levels are 1..{self.R}, got {i}")
        return self.sizes[i - 1]

    @property
    def num_vertices(self) -> int:
        return sum(self.sizes)

    @property
    def sandwich_ok(self) -> bool:
        return all(c.ok for c in self.sandwich)

    def edge_product_sum(self) -> int:
        return sum(
            self.edge_count(i) * self.degrees[i] * self.degrees[i - 1] for i in range(1, self.R + 1)
        )


def _sandwich(a: int, R: int, i: int, size: int, precision: int) -> SandwichCheck:
    exponent = golden_pow(R + 1) - golden_pow(i)

    def attempt():
        lower = _power_of_a(a, exponent)
        upper = lower * iv.exp(iv.mpf(2) / a)
        below, above = _le(lower, size), _le(size, upper)
        if below is None or above is None:
            return None
        with mp.workdps(precision + GUARD_DIGITS):
            return SandwichCheck(i, size, _mid(lower), _mid(upper), below and above)

    return _escalate(attempt, precision + GUARD_DIGITS, f"size sandwich at i={i}")


def level_profile(params: ExtremalParams, precision: int = DEFAULT_PRECISION) -> LevelProfile:
    a, R = params.a, params.R
    children = tuple(ceil_power(a, m, precision) for m in range(R))
    sizes = [0] * (R + 1)
    sizes[R] = 1
    for i in range(R, 0, -1):
        sizes[i - 1] = sizes[i] * children[i - 1]
    degrees = [1] + [children[i - 1] + 1 for i in range(1, R)] + [children[R - 1]]
    with mp.workdps(precision + GUARD_DIGITS):
        log10_sizes = tuple(mp.log10(s) for s in sizes)
    sandwich = tuple(_sandwich(a, R, i, sizes[i - 1], precision) for i in range(1, R + 1))
    return LevelProfile(a, R, children, tuple(sizes), tuple(degrees), log10_sizes, sandwich)


def epsilon_bound(a: int, R: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """``e^(3/a) * (1 + 1/(R-1)) - 1``."""
    if a < 4 or R < 2:
        raise ValueError(f"need a >= 4 and R >= 2, got a={a}, R={R}")
    with mp.workdps(precision + GUARD_DIGITS):
        return mp.exp(mp.mpf(3) / a) * (1 + mp.mpf(1) / (R - 1)) - 1


def choose_params(epsilon: float, precision: int = DEFAULT_PRECISION) -> ExtremalParams:
    """Smallest a >= 4 with ``e^(3/a) <= sqrt(1+epsilon)``, then the smallest R >= 2
    with ``epsilon_bound(a, R) <= epsilon``."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    with mp.workdps(precision + GUARD_DIGITS):
        eps = mp.mpf(epsilon)
        half = mp.sqrt(1 + eps)
        a = max(4, int(mp.ceil(3 / mp.log(half))))
        while a > 4 and mp.exp(mp.mpf(3) / (a - 1)) <= half:
            a -= 1
        while mp.exp(mp.mpf(3) / a) > half:
            a += 1
        slack = (1 + eps) / mp.exp(mp.mpf(3) / a) - 1
        R = max(2, int(mp.ceil(1 / slack)) + 1)
        while R > 2 and epsilon_bound(a, R - 1, precision) <= eps:
            R -= 1
        while epsilon_bound(a, R, precision) > eps:
            R += 1
    return ExtremalParams(a, R, 1, epsilon)


@dataclass(frozen=True)
class TightnessReport:
    params: ExtremalParams
    profile: LevelProfile
    n: int
    m: int
    lhs: int
    rhs: mpmath.mpf
    log10_lhs: mpmath.mpf
    log10_rhs: mpmath.mpf
    measured_ratio: mpmath.mpf  # rhs / lhs
    epsilon_bound: mpmath.mpf
    within_bound: bool
    lower_bound_ok: bool
    precision: int

    @property
    def ratio(self) -> float:
        return float(1 / self.measured_ratio)

    def to_json(self) -> dict:
        p = self.precision
        with mp.workdps(p + GUARD_DIGITS):
            return {
                "a": self.params.a,
                "R": self.params.R,
                "k": self.params.k,
                "n": self.n,
                "m": self.m,
                "lhs": str(self.lhs),
                "rhs": mpmath.nstr(self.rhs, p, strip_zeros=False),
                "log10_lhs": float(self.log10_lhs),
                "log10_rhs": float(self.log10_rhs),
                "ratio": self.ratio,
                "measured_ratio": float(self.measured_ratio),
                "epsilon_bound": float(self.epsilon_bound),
                "within_bound": self.within_bound,
                "sandwich_ok": self.profile.sandwich_ok,
                "lower_bound_ok": self.lower_bound_ok,
                "precision": p,
            }


def analytic_report(params: ExtremalParams, precision: int = DEFAULT_PRECISION) -> TightnessReport:
    """Exact per-level evaluation of both sides for the k-fold blow-up of T(a, R).

    No graph is built. The edge-product side is an exact integer; the
    degree-power side and all bound comparisons are certified intervals.
    """
    prof = level_profile(params, precision)
    a, R, k = params.a, params.R, params.k
    tree_lhs = prof.edge_product_sum()
    # blow-up: k^2 edges per tree edge, each product scaled by k^2
    lhs = k**4 * tree_lhs
    n = k * prof.num_vertices
    m = k * k * (prof.num_vertices - 1)
    eps = epsilon_bound(a, R, precision)

    def attempt():
        phi_sq = golden_pow(2).to_interval()
        tree_sum = iv.mpf(0)
        for size, deg in zip(prof.sizes, prof.degrees):
            tree_sum += size * iv.exp(phi_sq * iv.log(deg))
        kk = iv.mpf(k)
        # k^(2-phi) * sum over k copies of (k d)^(phi^2)
        rhs = iv.exp((2 - GoldenInt(0, 1).to_interval()) * iv.log(kk)) * kk
        rhs *= iv.exp(phi_sq * iv.log(kk)) * tree_sum
        measured = rhs / lhs
        one_plus_eps = iv.exp(iv.mpf(3) / a) * (1 + iv.mpf(1) / (R - 1))
        within = _le(measured, one_plus_eps)
        # a^(phi^(R+1)) * (a^(1-phi) + R - 1) <= exact tree edge-product sum
        lower = _le(
            _power_of_a(a, golden_pow(R + 1))
            * (_power_of_a(a, GoldenInt(1, -1)) + (R - 1)),
            tree_lhs,
        )
        if within is None or lower is None:
            return None
        return rhs, measured, within, lower

    rhs_iv, measured_iv, within, lower = _escalate(
        attempt, precision + GUARD_DIGITS, f"tightness report for {params}"
    )
    with mp.workdps(precision + GUARD_DIGITS):
        rhs = _mid(rhs_iv)
        return TightnessReport(
            params, prof, n, m, lhs, rhs, mp.log10(lhs), mp.log10(rhs), _mid(measured_iv),
            eps, within, lower, precision,
        )


def tree_vertex_count(params: ExtremalParams, precision: int = DEFAULT_PRECISION) -> int:
    a, R = params.a, params.R
    total, size = 1, 1
    for i in range(R, 0, -1):
        size *= ceil_power(a, i - 1, precision)
        total += size
    return total


def build_tree(
    params: ExtremalParams, cap: int = MATERIALIZE_CAP, precision: int = DEFAULT_PRECISION
) -> Graph:
    """Materialize T(a, R) with the root as vertex 0 and levels numbered top-down."""
    total = tree_vertex_count(params, precision)
    if total > cap:
        raise MaterializationError(
            f"T(a={params.a}, R={params.R}) has {total} vertices, above the cap of {cap}; "
            "use analytic_report instead"
        )
    edges: list[tuple[int, int]] = []
    level = [0]
    nxt = 1
    for i in range(params.R, 0, -1):
        c = ceil_power(params.a, i - 1, precision)
        below = []
        for parent in level:
            for child in range(nxt, nxt + c):
                edges.append((parent, child))
            below.extend(range(nxt, nxt + c))
            nxt += c
        level = below
    return Graph(total, tuple(edges))


def rootward_orientation(g: Graph, root: int = 0) -> Orientation:
    """Orient every edge of a forest from child to parent.

    Each component without ``root`` is rooted at its smallest vertex.
    """
    parent = [-1] * g.n
    seen = [False] * g.n
    order = [root] + [v for v in range(g.n) if v != root] if g.n else []
    for start in order:
        if seen[start]:
            continue
        seen[start] = True
        q = deque([start])
        while q:
            u = q.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    q.append(v)
                elif v != parent[u]:
                    raise ValueError("graph has a cycle; root-ward orientation needs a forest")
    arcs = tuple((v, u) if parent[v] == u else (u, v) for u, v in g.edges)
    return Orientation(g, arcs)


def blow_up(g: Graph, k: int) -> Graph:
    """Replace each vertex v by the stable set ``v*k .. v*k+k-1`` and each edge by K_{k,k}."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    edges = tuple(
        (u * k + i, v * k + j) for u, v in g.edges for i in range(k) for j in range(k)
    )
    return Graph(g.n * k, edges)


def blow_up_orientation(o: Orientation, k: int) -> Orientation:
    """Orient each K_{k,k} copy like the edge it replaced."""
    big = blow_up(o.host, k)
    direction = {(min(t, h), max(t, h)): t for t, h in o.arcs}
    arcs = []
    for x, y in big.edges:
        u, v = x // k, y // k
        arcs.append((x, y) if direction[(min(u, v), max(u, v))] == u else (y, x))
    return Orientation(big, tuple(arcs))


def tree_levels(g: Graph, R: int, root: int = 0) -> list[int]:
    """Level index (R at the root, decreasing downwards) for every vertex."""
    level = [-1] * g.n
    level[root] = R
    q = deque([root])
    while q:
        u = q.popleft()
        for v in g.adjacency[u]:
            if level[v] < 0:
                level[v] = level[u] - 1
                q.append(v)
    return level


@dataclass(frozen=True)
class MaterializedCheck:
    """Direct evaluation on the built graph, compared with the analytic profile."""

    k: int
    n: int
    m: int
    lhs: int
    ratio: float
    levels_match: bool
    lhs_matches: bool
    orientation_ok: bool
    # exact mad of the blow-up, only computed below MAD_LIMIT vertices;
    # the orientation alone gives mad <= 2k, equality is not claimed
    mad: Fraction | None = None

    @property
    def ok(self) -> bool:
        ok = self.levels_match and self.lhs_matches and self.orientation_ok
        return ok and (self.mad is None or self.mad <= 2 * self.k)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "lhs": str(self.lhs),
            "ratio": self.ratio,
            "levels_match": self.levels_match,
            "lhs_matches": self.lhs_matches,
            "orientation_ok": self.orientation_ok,
            "mad": None if self.mad is None else f"{self.mad.numerator}/{self.mad.denominator}",
        }


def materialized_check(
    params: ExtremalParams, cap: int = MATERIALIZE_CAP, precision: int = DEFAULT_PRECISION
) -> MaterializedCheck:
    prof = level_profile(params, precision)
    k = params.k
    if k * prof.num_vertices > cap:
        raise MaterializationError(
            f"blow-up has {k * prof.num_vertices} vertices, above the cap of {cap}"
        )
    tree = build_tree(params, cap, precision)
    levels = tree_levels(tree, params.R)
    counts = [0] * (params.R + 1)
    degrees_ok = True
    for v, lvl in enumerate(levels):
        counts[lvl] += 1
        degrees_ok &= tree.degree[v] == prof.degrees[lvl]
    levels_match = tuple(counts) == prof.sizes and degrees_ok and tree.is_tree()
    orientation = blow_up_orientation(rootward_orientation(tree), k)
    g = orientation.host
    report = check_main(g, k, precision)
    return MaterializedCheck(
        k,
        g.n,
        g.m,
        report.lhs,
        report.ratio,
        levels_match,
        report.lhs == k**4 * prof.edge_product_sum(),
        verify_orientation(orientation, k),
        mad(g) if g.n <= MAD_LIMIT else None,
    )
