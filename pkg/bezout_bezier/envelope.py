# bezout_bezier/envelope.py
"""Bezier-Bezout segments and the numerical check of the envelope bounds.

For a center (p, q) and a coprime neighbor (r, s) the segment L_{r,s} runs from
B(r,s) to B(s,r). At the contact parameter t = 1 - B(r,s).(r,s)/||(r,s)||^2 the
point L_{r,s}(t) must lie within epsilon of c_{p,q}(t) whenever
||(r,s) - (p,q)|| <= epsilon - 1. The endpoints themselves stay within
epsilon + 1 of alpha(t) and beta(t) for neighbors up to distance epsilon.

A neighborhood is computed column-wise into an EnvelopeTable; the per-neighbor
EnvelopeRecord objects are built from it only when a caller asks for them.

Note the two complementary conventions: project_onto_ray returns
t0 = B(p,q).(p,q)/||(p,q)||^2, while contact_parameter returns 1 - t0.
"""

import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from functools import cached_property

import numpy as np

from bezout_bezier.config import get_settings
from bezout_bezier.exceptions import DomainError, HypothesisError
from bezout_bezier.geometry import (
    Point2,
    QuadBezier,
    Segment,
    alpha,
    beta,
    segment_curve_gap,
    symmetric_segment_distance,
    tangent_segment,
)
from bezout_bezier.models import EnvelopeParams, Hypothesis, violated_hypothesis
from bezout_bezier.numtheory import (
    BezoutCoeffs,
    Center,
    CoprimePair,
    bezout_coefficient_arrays,
    bezout_coefficients,
    coprime_neighbor_arrays,
    flip_bezout,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EnvelopeRecord:
    pair: CoprimePair
    coeffs: BezoutCoeffs
    flipped: BezoutCoeffs
    segment: Segment
    t_contact: float
    gap_alpha: float
    gap_beta: float
    # ||L_{r,s}(t) - c_{p,q}(t)|| at t = t_contact
    deviation: float
    bound_ok: bool
    # segment_distance(L_{r,s}, tangent chord at t_contact)
    tangent_distance: float

    @property
    def degenerate(self) -> bool:
        return self.pair.degenerate

    @property
    def max_gap(self) -> float:
        return max(self.gap_alpha, self.gap_beta)


@dataclass(frozen=True, eq=False)
class EnvelopeTable:
    """One row per neighbor (r, s), ordered by (r, s)."""

    r: np.ndarray
    s: np.ndarray
    a_rs: np.ndarray
    b_rs: np.ndarray
    a_sr: np.ndarray
    b_sr: np.ndarray
    t_contact: np.ndarray
    gap_alpha: np.ndarray
    gap_beta: np.ndarray
    deviation: np.ndarray
    tangent_distance: np.ndarray
    bound_ok: np.ndarray

    def __len__(self) -> int:
        return int(self.r.size)

    @classmethod
    def concatenate(cls, parts: Sequence["EnvelopeTable"]) -> "EnvelopeTable":
        return cls(**{f.name: np.concatenate([getattr(t, f.name) for t in parts]) for f in fields(cls)})

    @property
    def max_gap(self) -> np.ndarray:
        return np.maximum(self.gap_alpha, self.gap_beta)

    def max_deviation(self) -> float:
        return float(self.deviation.max()) if len(self) else 0.0

    def max_endpoint_gap(self) -> float:
        return float(self.max_gap.max()) if len(self) else 0.0

    def record(self, i: int) -> EnvelopeRecord:
        pair = CoprimePair(int(self.r[i]), int(self.s[i]))
        coeffs = BezoutCoeffs(int(self.a_rs[i]), int(self.b_rs[i]), pair)
        flipped = BezoutCoeffs(int(self.a_sr[i]), int(self.b_sr[i]), pair.flipped())
        return EnvelopeRecord(
            pair=pair,
            coeffs=coeffs,
            flipped=flipped,
            segment=Segment(Point2.of(coeffs.xy), Point2.of(flipped.xy)),
            t_contact=float(self.t_contact[i]),
            gap_alpha=float(self.gap_alpha[i]),
            gap_beta=float(self.gap_beta[i]),
            deviation=float(self.deviation[i]),
            bound_ok=bool(self.bound_ok[i]),
            tangent_distance=float(self.tangent_distance[i]),
        )

    def records(self) -> list[EnvelopeRecord]:
        return [self.record(i) for i in range(len(self))]


@dataclass(frozen=True, eq=False)
class VerificationReport:
    params: EnvelopeParams
    table: EnvelopeTable

    @cached_property
    def records(self) -> list[EnvelopeRecord]:
        return self.table.records()

    @property
    def neighbor_count(self) -> int:
        return len(self.table)

    @property
    def all_bounds_hold(self) -> bool:
        return bool(self.table.bound_ok.all())

    @property
    def max_deviation(self) -> float:
        return self.table.max_deviation()

    @property
    def max_endpoint_gap(self) -> float:
        return self.table.max_endpoint_gap()

    @property
    def bound_slack(self) -> float:
        return self.params.epsilon - self.max_deviation


@dataclass(frozen=True, eq=False)
class GapSurvey:
    """Endpoint gaps for every coprime neighbor within radius epsilon."""

    params: EnvelopeParams
    table: EnvelopeTable

    @cached_property
    def records(self) -> list[EnvelopeRecord]:
        return self.table.records()

    @property
    def bound(self) -> float:
        return self.params.epsilon + 1.0

    @property
    def max_endpoint_gap(self) -> float:
        return self.table.max_endpoint_gap()

    @property
    def all_gaps_hold(self) -> bool:
        return bool((self.table.max_gap < self.bound).all())


@dataclass(frozen=True)
class SweepEntry:
    """One (center, epsilon) combination of an audit: a report, or the hypothesis it failed."""

    p: int
    q: int
    epsilon: float
    report: VerificationReport | None = None
    skipped: str | None = None

    @property
    def all_ok(self) -> bool:
        return self.report is not None and self.report.all_bounds_hold


@dataclass(frozen=True, slots=True)
class RecordDiagnostics:
    pair: CoprimePair
    segment_curve_gap: float
    symmetric_tangent_distance: float


def bezout_segment(pair: CoprimePair) -> Segment:
    coeffs = bezout_coefficients(pair)
    return Segment(Point2.of(coeffs.xy), Point2.of(flip_bezout(coeffs).xy))


def _contact_parameter(pair: CoprimePair, coeffs: BezoutCoeffs) -> float:
    norm_sq = pair.r * pair.r + pair.s * pair.s
    # 0 < a*r + b*s < r^2 + s^2 because 0 < a <= r and 0 <= b < s
    return (norm_sq - (coeffs.a * pair.r + coeffs.b * pair.s)) / norm_sq


def contact_parameter(pair: CoprimePair) -> float:
    return _contact_parameter(pair, bezout_coefficients(pair))


def _gaps(curve: QuadBezier, segment: Segment, t: float) -> tuple[float, float]:
    return segment.start.distance(alpha(curve, t)), segment.end.distance(beta(curve, t))


def endpoint_gaps(pair: CoprimePair, params: EnvelopeParams) -> tuple[float, float]:
    """Distances from B(r,s) to alpha(t0) and from B(s,r) to beta(t0); both < epsilon + 1."""
    distance = math.hypot(pair.r - params.p, pair.s - params.q)
    if distance > params.epsilon:
        raise HypothesisError(
            "‖(r,s)−(p,q)‖≤ε",
            f"requires ‖(r,s)−(p,q)‖≤ε: {pair} is {distance:.6g} from ({params.p},{params.q})",
        )
    curve = QuadBezier(params.p, params.q)
    return _gaps(curve, bezout_segment(pair), contact_parameter(pair))


def _compute_table(r: np.ndarray, s: np.ndarray, p: int, q: int, epsilon: float) -> EnvelopeTable:
    a, b = bezout_coefficient_arrays(r, s)
    # B(s,r) = (s - b, r - a)
    a_sr, b_sr = s - b, r - a
    norm_sq = r * r + s * s
    # 0 < a*r + b*s < r^2 + s^2 because 0 < a <= r and 0 <= b < s
    t = (norm_sq - (a * r + b * s)) / norm_sq
    u = 1.0 - t
    alpha_x, alpha_y = u * p, u * q
    beta_x, beta_y = t * q, t * p
    start_alpha = np.hypot(a - alpha_x, b - alpha_y)
    start_beta = np.hypot(a - beta_x, b - beta_y)
    end_alpha = np.hypot(a_sr - alpha_x, b_sr - alpha_y)
    end_beta = np.hypot(a_sr - beta_x, b_sr - beta_y)
    uu, tt = u * u, t * t
    deviation = np.hypot(u * a + t * a_sr - (uu * p + tt * q), u * b + t * b_sr - (uu * q + tt * p))
    return EnvelopeTable(
        r=r,
        s=s,
        a_rs=a,
        b_rs=b,
        a_sr=a_sr,
        b_sr=b_sr,
        t_contact=t,
        gap_alpha=start_alpha,
        gap_beta=end_beta,
        deviation=deviation,
        tangent_distance=np.maximum(np.minimum(start_alpha, start_beta), np.minimum(end_alpha, end_beta)),
        bound_ok=deviation < epsilon,
    )


def _build_table(center: Center, radius: float, epsilon: float, threads: int | None) -> EnvelopeTable:
    r, s = coprime_neighbor_arrays(center, radius)
    workers = threads or get_settings().threads
    if workers > 1 and r.size > 1:
        chunks = list(zip(np.array_split(r, workers), np.array_split(s, workers)))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda rs: _compute_table(*rs, center.p, center.q, epsilon), chunks))
        # chunks are contiguous slices of the lexicographic enumeration
        table = EnvelopeTable.concatenate(parts)
    else:
        table = _compute_table(r, s, center.p, center.q, epsilon)
    if np.any(table.r == table.s):
        logger.warning("degenerate neighbor (1,1) of %s: zero-length segment at (1,0)", center)
    return table


def build_envelope(params: EnvelopeParams, threads: int | None = None) -> VerificationReport:
    violated = violated_hypothesis(params.p, params.q, params.epsilon, Hypothesis.theorem)
    if violated:
        raise HypothesisError(violated)
    table = _build_table(params.center, params.epsilon - 1.0, params.epsilon, threads)
    report = VerificationReport(params=params, table=table)
    logger.info(
        "envelope (%d,%d) eps=%s: %d records, max deviation %.6g",
        params.p,
        params.q,
        params.epsilon,
        report.neighbor_count,
        report.max_deviation,
    )
    return report


def endpoint_gap_survey(params: EnvelopeParams, threads: int | None = None) -> GapSurvey:
    violated = violated_hypothesis(params.p, params.q, params.epsilon, Hypothesis.endpoint_gap)
    if violated:
        raise HypothesisError(violated)
    table = _build_table(params.center, params.epsilon, params.epsilon, threads)
    return GapSurvey(params=params, table=table)


def audit_combination(p: int, q: int, epsilon: float, threads: int | None = None) -> SweepEntry:
    violated = violated_hypothesis(p, q, epsilon)
    if violated:
        logger.info("skipping (%d,%d) eps=%s: requires %s", p, q, epsilon, violated)
        return SweepEntry(p=p, q=q, epsilon=epsilon, skipped=f"requires {violated}")
    try:
        report = build_envelope(EnvelopeParams(p=p, q=q, epsilon=epsilon), threads)
    except DomainError as e:
        logger.info("skipping (%d,%d) eps=%s: %s", p, q, epsilon, e)
        return SweepEntry(p=p, q=q, epsilon=epsilon, skipped=str(e))
    return SweepEntry(p=p, q=q, epsilon=epsilon, report=report)


def audit_sweep(
    centers: Iterable[Center], epsilons: Iterable[float], threads: int | None = None
) -> list[SweepEntry]:
    """Every center crossed with every epsilon; combinations that fail a hypothesis are skipped."""
    epsilons = list(epsilons)
    return [audit_combination(c.p, c.q, eps, threads) for c in centers for eps in epsilons]


def envelope_diagnostics(report: VerificationReport, samples: int = 64) -> list[RecordDiagnostics]:
    """Whole-segment distances to the curve. Reported only; the bound is pointwise."""
    curve = QuadBezier(report.params.p, report.params.q)
    return [
        RecordDiagnostics(
            pair=rec.pair,
            segment_curve_gap=segment_curve_gap(rec.segment, curve, samples),
            symmetric_tangent_distance=symmetric_segment_distance(
                rec.segment, tangent_segment(curve, rec.t_contact)
            ),
        )
        for rec in report.records
    ]
