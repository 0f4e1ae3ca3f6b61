# bezout_bezier/schemas/envelope.py

from pydantic import BaseModel, Field

from bezout_bezier.envelope import EnvelopeRecord, VerificationReport
from bezout_bezier.services.envelope_service import BezoutSummary


class BezoutResponse(BaseModel):
    p: int
    q: int
    a: int
    b: int
    flipped: tuple[int, int]
    extension: tuple[int, int]
    identity: int

    @classmethod
    def from_summary(cls, summary: BezoutSummary) -> "BezoutResponse":
        pair = summary.coeffs.pair
        return cls(
            p=pair.r,
            q=pair.s,
            a=summary.coeffs.a,
            b=summary.coeffs.b,
            flipped=summary.flipped.xy,
            extension=(summary.extension.r, summary.extension.s),
            identity=summary.identity_value,
        )


class NeighborsResponse(BaseModel):
    center: tuple[int, int]
    radius: float
    pairs: list[tuple[int, int]]
    count: int


class EnvelopeRequest(BaseModel):
    p: int
    q: int
    epsilon: float


class SvgRequest(EnvelopeRequest):
    width_px: int = Field(default=800, ge=16)
    show_curve: bool = False
    show_controls: bool = True
    curve_samples: int = Field(default=256, ge=2)
    stroke_width_fraction: float = Field(default=0.0008, gt=0)


class RecordSchema(BaseModel):
    r: int
    s: int
    bezout: tuple[int, int]
    flipped: tuple[int, int]
    t_contact: float
    gap_alpha: float
    gap_beta: float
    deviation: float
    bound_ok: bool
    degenerate: bool

    @classmethod
    def from_record(cls, rec: EnvelopeRecord) -> "RecordSchema":
        return cls(
            r=rec.pair.r,
            s=rec.pair.s,
            bezout=rec.coeffs.xy,
            flipped=rec.flipped.xy,
            t_contact=rec.t_contact,
            gap_alpha=rec.gap_alpha,
            gap_beta=rec.gap_beta,
            deviation=rec.deviation,
            bound_ok=rec.bound_ok,
            degenerate=rec.degenerate,
        )


class ReportSchema(BaseModel):
    p: int
    q: int
    epsilon: float
    neighbor_count: int
    all_bounds_hold: bool
    max_deviation: float
    max_endpoint_gap: float
    records: list[RecordSchema]

    @classmethod
    def from_report(cls, report: VerificationReport) -> "ReportSchema":
        return cls(
            p=report.params.p,
            q=report.params.q,
            epsilon=report.params.epsilon,
            neighbor_count=report.neighbor_count,
            all_bounds_hold=report.all_bounds_hold,
            max_deviation=report.max_deviation,
            max_endpoint_gap=report.max_endpoint_gap,
            records=[RecordSchema.from_record(rec) for rec in report.records],
        )
