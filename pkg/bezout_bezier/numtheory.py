# bezout_bezier/numtheory.py
"""Exact integer arithmetic: gcd, normalized Bezout coefficients and coprime lattice pairs.

Everything here is a pure function of its inputs and works on Python ints (int64
columns for the array variants), but the supported coordinate range is capped at
``MAX_COORDINATE`` so that the identities hold under signed 64-bit arithmetic too.
"""

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from bezout_bezier.constants import MAX_COORDINATE
from bezout_bezier.exceptions import CoordinateRangeError, DomainError

logger = logging.getLogger(__name__)


def _check_range(name: str, value: int) -> None:
    if value > MAX_COORDINATE:
        raise CoordinateRangeError(f"{name}={value} exceeds the supported range {MAX_COORDINATE}")


@dataclass(frozen=True, slots=True, order=True)
class CoprimePair:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise DomainError(f"({self.r},{self.s}) is not a pair of positive integers")
        _check_range("r", self.r)
        _check_range("s", self.s)
        g = math.gcd(self.r, self.s)
        if g != 1:
            raise DomainError(f"({self.r},{self.s}) is not coprime: gcd = {g}", gcd=g)

    def flipped(self) -> "CoprimePair":
        return CoprimePair(self.s, self.r)

    @property
    def degenerate(self) -> bool:
        # (1,1) is the only coprime pair on the diagonal
        return self.r == self.s

    def __str__(self) -> str:
        return f"({self.r},{self.s})"


@dataclass(frozen=True, slots=True)
class BezoutCoeffs:
    """The pair (a, b) with a*q - b*p = 1, 0 < a <= p and 0 <= b < q, for pair = (p, q)."""

    a: int
    b: int
    pair: CoprimePair

    def __post_init__(self):
        p, q = self.pair.r, self.pair.s
        if self.a * q - self.b * p != 1:
            raise DomainError(f"({self.a},{self.b}) does not satisfy a*q - b*p = 1 for {self.pair}")
        if not (0 < self.a <= p and 0 <= self.b < q):
            raise DomainError(f"({self.a},{self.b}) lies outside the normalization box of {self.pair}")

    @property
    def xy(self) -> tuple[int, int]:
        return self.a, self.b

    def __str__(self) -> str:
        return f"({self.a}, {self.b})"


@dataclass(frozen=True, slots=True)
class Center:
    """Center (p, q) of a neighborhood; coprimality is not required."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise DomainError(f"center ({self.p},{self.q}) requires p>=1 and q>=0")
        _check_range("p", self.p)
        _check_range("q", self.q)

    @property
    def norm(self) -> float:
        return math.hypot(self.p, self.q)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


def gcd(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise DomainError(f"gcd is defined here for nonnegative integers, got ({x},{y})")
    if x == 0 and y == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(x, y)


def extended_gcd(x: int, y: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*x + v*y = g = gcd(x, y)."""
    r0, r1 = x, y
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1 != 0:
        k = r0 // r1
        r0, r1 = r1, r0 - k * r1
        u0, u1 = u1, u0 - k * u1
        v0, v1 = v1, v0 - k * v1
    return r0, u0, v0


def bezout_coefficients(pair: CoprimePair) -> BezoutCoeffs:
    p, q = pair.r, pair.s
    _, u, v = extended_gcd(p, q)
    # u*p + v*q = 1, so (a, b) = (v, -u) solves a*q - b*p = 1
    a, b = v, -u
    # shift by k*(p, q) so that 0 < a <= p; 0 <= b < q then follows from the identity
    k = (a - 1) // p
    a -= k * p
    b -= k * q
    return BezoutCoeffs(a, b, pair)


def flip_bezout(coeffs: BezoutCoeffs) -> BezoutCoeffs:
    """B(q,p) = (q-b, p-a), without running Euclid again."""
    p, q = coeffs.pair.r, coeffs.pair.s
    return BezoutCoeffs(q - coeffs.b, p - coeffs.a, coeffs.pair.flipped())


def extend_pair(coeffs: BezoutCoeffs) -> CoprimePair:
    """The pair (b+q, a+p), whose Bezout coefficients are (q, p)."""
    p, q = coeffs.pair.r, coeffs.pair.s
    r, s = coeffs.b + q, coeffs.a + p
    _check_range("b+q", r)
    _check_range("a+p", s)
    return CoprimePair(r, s)


def bezout_identity_residual(coeffs: BezoutCoeffs) -> int:
    return coeffs.a * coeffs.pair.s - coeffs.b * coeffs.pair.r - 1


def coprime_neighbor_arrays(center: Center, radius: float) -> tuple[np.ndarray, np.ndarray]:
    """Columns r, s of every positive coprime pair within radius of center, in lexicographic order."""
    if not (math.isfinite(radius) and radius >= 0):
        raise DomainError(f"radius must be a finite nonnegative number, got {radius}")
    p, q = center.p, center.q
    # one past the supported range, so an out-of-range neighbor is reported rather than clipped
    cap = MAX_COORDINATE + 1
    r_values = np.arange(max(1, math.ceil(p - radius)), min(math.floor(p + radius), cap) + 1, dtype=np.int64)
    # widen by one and filter exactly below, so float rounding never drops a point
    s_values = np.arange(
        max(1, math.floor(q - radius) - 1), min(math.ceil(q + radius) + 1, cap) + 1, dtype=np.int64
    )
    r, s = (grid.ravel() for grid in np.meshgrid(r_values, s_values, indexing="ij"))
    dx, dy = r - p, s - q
    keep = (dx * dx + dy * dy <= radius * radius) & (np.gcd(r, s) == 1)
    r, s = r[keep], s[keep]
    if r.size and max(r.max(), s.max()) > MAX_COORDINATE:
        raise CoordinateRangeError(
            f"neighbors of {center} within {radius} exceed the supported range {MAX_COORDINATE}"
        )
    logger.debug("center %s radius %s: %d coprime neighbors", center, radius, r.size)
    return r, s


def coprime_neighbors(center: Center, radius: float) -> list[CoprimePair]:
    """All positive coprime (r, s) with ||(r,s) - (p,q)|| <= radius, in lexicographic order."""
    r, s = coprime_neighbor_arrays(center, radius)
    return [CoprimePair(int(x), int(y)) for x, y in zip(r, s)]


def bezout_coefficient_arrays(r: np.ndarray, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """bezout_coefficients over columns of coprime pairs; returns the columns a, b."""
    r0, r1 = r.astype(np.int64), s.astype(np.int64)
    u0, u1 = np.ones_like(r0), np.zeros_like(r0)
    v0, v1 = np.zeros_like(r0), np.ones_like(r0)
    active = r1 != 0
    while active.any():
        k = np.zeros_like(r0)
        np.floor_divide(r0, r1, out=k, where=active)
        r0, r1 = np.where(active, r1, r0), np.where(active, r0 - k * r1, r1)
        u0, u1 = np.where(active, u1, u0), np.where(active, u0 - k * u1, u1)
        v0, v1 = np.where(active, v1, v0), np.where(active, v0 - k * v1, v1)
        active = r1 != 0
    a, b = v0, -u0
    k = (a - 1) // r
    return a - k * r, b - k * s


def iter_coprime_pairs(limit: int) -> Iterator[CoprimePair]:
    for p in range(1, limit + 1):
        for q in range(1, limit + 1):
            if math.gcd(p, q) == 1:
                yield CoprimePair(p, q)
