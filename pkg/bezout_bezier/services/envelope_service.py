# bezout_bezier/services/envelope_service.py

import logging
from dataclasses import dataclass
from pathlib import Path

from bezout_bezier.envelope import SweepEntry, VerificationReport, audit_combination, build_envelope
from bezout_bezier.exceptions import SweepFileError
from bezout_bezier.geometry import BezoutGeometryCheck, bezout_geometry_check
from bezout_bezier.io_render import read_audit_spec, report_to_text, to_csv, to_svg
from bezout_bezier.models import EnvelopeParams, OutputFormat, RenderOptions
from bezout_bezier.numtheory import (
    BezoutCoeffs,
    Center,
    CoprimePair,
    bezout_coefficients,
    coprime_neighbors,
    extend_pair,
    flip_bezout,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BezoutSummary:
    coeffs: BezoutCoeffs
    flipped: BezoutCoeffs
    extension: CoprimePair

    @property
    def identity_value(self) -> int:
        pair = self.coeffs.pair
        return self.coeffs.a * pair.s - self.coeffs.b * pair.r


def bezout_summary(p: int, q: int) -> BezoutSummary:
    coeffs = bezout_coefficients(CoprimePair(p, q))
    return BezoutSummary(coeffs=coeffs, flipped=flip_bezout(coeffs), extension=extend_pair(coeffs))


def neighbors(p: int, q: int, radius: float) -> list[CoprimePair]:
    return coprime_neighbors(Center(p, q), radius)


def identities(p: int, q: int) -> BezoutGeometryCheck:
    return bezout_geometry_check(CoprimePair(p, q))


def envelope_report(p: int, q: int, epsilon: float) -> VerificationReport:
    return build_envelope(EnvelopeParams.create(p, q, epsilon))


def render_report(report: VerificationReport, fmt: OutputFormat, opts: RenderOptions | None = None) -> str:
    if fmt is OutputFormat.svg:
        return to_svg(report, opts)
    if fmt is OutputFormat.text:
        return report_to_text(report)
    return to_csv(report)


def run_audit_file(path: Path) -> list[SweepEntry]:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise SweepFileError(f"cannot read audit spec {path}: {e}") from e
    return [audit_combination(p, q, eps) for p, q, eps in read_audit_spec(text)]
