# bezout_bezier/geometry.py
"""Plane geometry for the quadratic Bezier curve with control points (p,q), (0,0), (q,p).

All arithmetic is double precision. Integer coordinates convert exactly below 2**53.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from bezout_bezier.config import get_settings
from bezout_bezier.exceptions import DomainError
from bezout_bezier.numtheory import CoprimePair, bezout_coefficients, flip_bezout

logger = logging.getLogger(__name__)


def tolerance(norm: float, scale: float | None = None) -> float:
    """Absolute at unit scale, relative for large coordinates. Scale defaults to the configured one."""
    if scale is None:
        scale = get_settings().tolerance_scale
    return scale * max(1.0, norm)


@dataclass(frozen=True, slots=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"point ({self.x}, {self.y}) is not finite")

    @classmethod
    def of(cls, xy: tuple[float, float]) -> "Point2":
        return cls(float(xy[0]), float(xy[1]))

    def __add__(self, other: "Point2") -> "Point2":
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point2") -> "Point2":
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, k: float) -> "Point2":
        return Point2(k * self.x, k * self.y)

    def dot(self, other: "Point2") -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance(self, other: "Point2") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


ORIGIN = Point2(0.0, 0.0)


@dataclass(frozen=True, slots=True)
class Segment:
    """Segment from start (A) to end (B); zero length is allowed."""

    start: Point2
    end: Point2

    def at(self, t: float) -> Point2:
        return linear_bezier(self.start, self.end, t)

    def length(self) -> float:
        return self.start.distance(self.end)


@dataclass(frozen=True, slots=True)
class QuadBezier:
    """c_{p,q}(t) = (1-t)^2 (p,q) + t^2 (q,p)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise DomainError(f"curve ({self.p},{self.q}) requires p>=1 and q>=0")

    @property
    def degenerate(self) -> bool:
        return self.p == self.q

    @property
    def p0(self) -> Point2:
        return Point2(float(self.p), float(self.q))

    @property
    def p2(self) -> Point2:
        return Point2(float(self.q), float(self.p))

    @property
    def tolerance(self) -> float:
        return tolerance(math.hypot(self.p, self.q))

    def control_points(self) -> tuple[Point2, Point2, Point2]:
        return self.p0, ORIGIN, self.p2


def linear_bezier(a: Point2, b: Point2, t: float) -> Point2:
    u = 1.0 - t
    return Point2(u * a.x + t * b.x, u * a.y + t * b.y)


def alpha(curve: QuadBezier, t: float) -> Point2:
    return curve.p0.scale(1.0 - t)


def beta(curve: QuadBezier, t: float) -> Point2:
    return curve.p2.scale(t)


def gamma(curve: QuadBezier, s: float, t: float) -> Point2:
    """Point at parameter t on the chord from alpha(s) to beta(s)."""
    return linear_bezier(alpha(curve, s), beta(curve, s), t)


def quad_point(curve: QuadBezier, t: float) -> Point2:
    u = 1.0 - t
    uu, tt = u * u, t * t
    return Point2(uu * curve.p + tt * curve.q, uu * curve.q + tt * curve.p)


def quad_derivative(curve: QuadBezier, t: float) -> Point2:
    return curve.p0.scale(-2.0 * (1.0 - t)) + curve.p2.scale(2.0 * t)


def tangent_segment(curve: QuadBezier, t0: float) -> Segment:
    """Chord from alpha(t0) to beta(t0); it is tangent to the curve at t0."""
    if not 0.0 < t0 < 1.0:
        raise DomainError(f"tangent parameter must lie in (0,1), got {t0}")
    if curve.degenerate:
        logger.warning("tangent of degenerate curve (%d,%d) requested", curve.p, curve.q)
    return Segment(alpha(curve, t0), beta(curve, t0))


def project_onto_ray(point: Point2, direction: Point2) -> tuple[float, Point2]:
    """Orthogonal projection onto the line through the origin spanned by direction."""
    norm_sq = direction.dot(direction)
    if norm_sq == 0.0:
        raise DomainError("cannot project onto a zero direction")
    t = point.dot(direction) / norm_sq
    return t, direction.scale(t)


def dist_to_origin_line(point: Point2, direction: Point2) -> float:
    norm = direction.norm()
    if norm == 0.0:
        raise DomainError("distance to a line with zero direction is undefined")
    return abs(point.x * direction.y - point.y * direction.x) / norm


def segment_distance(l1: Segment, l2: Segment) -> float:
    """max over l1's endpoints of the nearest endpoint of l2. Not symmetric."""
    a2, b2 = l2.start, l2.end
    return max(
        min(l1.start.distance(a2), l1.start.distance(b2)),
        min(l1.end.distance(a2), l1.end.distance(b2)),
    )


def symmetric_segment_distance(l1: Segment, l2: Segment) -> float:
    return max(segment_distance(l1, l2), segment_distance(l2, l1))


def sample_curve(curve: QuadBezier, samples: int) -> np.ndarray:
    """Array of shape (samples, 2) at uniform t in [0, 1]."""
    if samples < 2:
        raise DomainError(f"at least 2 curve samples are needed, got {samples}")
    t = np.linspace(0.0, 1.0, samples)[:, None]
    return (1.0 - t) ** 2 * np.array([curve.p, curve.q], dtype=float) + t**2 * np.array(
        [curve.q, curve.p], dtype=float
    )


def segment_curve_gap(segment: Segment, curve: QuadBezier, samples: int = 256) -> float:
    """Largest distance from a sampled segment point to the sampled curve."""
    t = np.linspace(0.0, 1.0, samples)[:, None]
    start = np.array([segment.start.x, segment.start.y])
    end = np.array([segment.end.x, segment.end.y])
    seg = (1.0 - t) * start + t * end
    pts = sample_curve(curve, samples)
    dists = np.linalg.norm(seg[:, None, :] - pts[None, :, :], axis=2)
    return float(dists.min(axis=1).max())


@dataclass(frozen=True, slots=True)
class BezoutGeometryCheck:
    """Residuals of the projection/distance identities for B(p,q) and B(q,p)."""

    pair: CoprimePair
    t0: float
    mirror_distance: float
    line_distance_pq: float
    line_distance_qp: float
    projection_complement: float
    projection_distance: float
    tol: float

    def residuals(self) -> dict[str, float]:
        return {
            "mirror_distance": self.mirror_distance,
            "line_distance_pq": self.line_distance_pq,
            "line_distance_qp": self.line_distance_qp,
            "projection_complement": self.projection_complement,
            "projection_distance": self.projection_distance,
        }

    @property
    def ok(self) -> bool:
        return all(abs(v) <= self.tol for v in self.residuals().values())


def bezout_geometry_check(pair: CoprimePair) -> BezoutGeometryCheck:
    coeffs = bezout_coefficients(pair)
    flipped = flip_bezout(coeffs)
    pq = Point2(float(pair.r), float(pair.s))
    qp = Point2(float(pair.s), float(pair.r))
    b_pq = Point2.of(coeffs.xy)
    b_qp = Point2.of(flipped.xy)
    inv_norm = 1.0 / pq.norm()

    t0, foot_pq = project_onto_ray(b_pq, pq)
    t1, foot_qp = project_onto_ray(b_qp, qp)
    return BezoutGeometryCheck(
        pair=pair,
        t0=t0,
        mirror_distance=b_pq.distance(pq) - b_qp.norm(),
        line_distance_pq=dist_to_origin_line(b_pq, pq) - inv_norm,
        line_distance_qp=dist_to_origin_line(b_qp, qp) - inv_norm,
        projection_complement=t1 - (1.0 - t0),
        projection_distance=foot_pq.distance(pq) - foot_qp.norm(),
        tol=tolerance(pq.norm()),
    )
