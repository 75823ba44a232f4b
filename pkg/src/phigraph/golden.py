"""Exact arithmetic in Z[phi] and high-precision golden-ratio constants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath
from mpmath import iv, mp

DEFAULT_PRECISION = 50
MIN_PRECISION = 30
GUARD_DIGITS = 10


@dataclass(frozen=True)
class GoldenInt:
    """The number ``a + b*phi`` with integer coefficients."""

    a: int
    b: int = 0

    def __add__(self, other: GoldenInt | int) -> GoldenInt:
        other = _lift(other)
        return GoldenInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other: GoldenInt | int) -> GoldenInt:
        return self + -_lift(other)

    def __rsub__(self, other: int) -> GoldenInt:
        return _lift(other) - self

    def __mul__(self, other: GoldenInt | int) -> GoldenInt:
        # phi^2 = phi + 1
        o = _lift(other)
        return GoldenInt(self.a * o.a + self.b * o.b, self.a * o.b + self.b * o.a + self.b * o.b)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GoldenInt:
        if n < 0:
            raise ValueError("negative powers are not represented in Z[phi] here")
        result, base = GoldenInt(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def to_real(self, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
        with mp.workdps(precision + GUARD_DIGITS):
            return self.a + self.b * mp.phi

    def to_interval(self) -> iv.mpf:
        """Enclosure of the value at the current interval precision."""
        return self.a + self.b * ((1 + iv.sqrt(5)) / 2)

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}φ"


def _lift(x: GoldenInt | int) -> GoldenInt:
    return x if isinstance(x, GoldenInt) else GoldenInt(int(x))


PHI = GoldenInt(0, 1)


def golden_pow(n: int) -> GoldenInt:
    """phi**n, which equals ``F(n-1) + F(n)*phi``."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return PHI ** n


def geometric_sum_check(R: int, i: int) -> bool:
    """Check ``phi^(i-1) + ... + phi^(R-1) == phi^(R+1) - phi^i`` exactly."""
    if not 1 <= i <= R:
        raise ValueError(f"need 1 <= i <= R, got R={R}, i={i}")
    total = GoldenInt(0)
    for j in range(i - 1, R):
        total = total + golden_pow(j)
    return total == golden_pow(R + 1) - golden_pow(i)


@dataclass(frozen=True)
class GoldenConstants:
    precision: int
    phi: mpmath.mpf
    phi_sq: mpmath.mpf
    inv_phi: mpmath.mpf
    inv_phi_sq: mpmath.mpf


@lru_cache(maxsize=None)
def golden_constants(precision: int = DEFAULT_PRECISION) -> GoldenConstants:
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} digits, got {precision}")
    with mp.workdps(precision + GUARD_DIGITS):
        phi = (1 + mp.sqrt(5)) / 2
        return GoldenConstants(precision, phi, phi + 1, phi - 1, 2 - phi)


def main_constant(k: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """k^(2 - phi), the constant in front of the degree-power sum."""
    c = golden_constants(precision)
    with mp.workdps(precision + GUARD_DIGITS):
        return mp.mpf(k) ** c.inv_phi_sq
