# bezout_bezier/io_render.py
"""CSV and SVG output for envelope reports.

Stored coordinates stay mathematical; the y axis is flipped only inside the SVG.
"""

import io
import logging
import math

import pandas as pd

from bezout_bezier.constants import (
    AUDIT_COLUMNS,
    CONTROL_COLOR,
    CSV_COLUMNS,
    CURVE_COLOR,
    REAL_FORMAT,
    SEGMENT_COLOR,
    SVG_PADDING_FRACTION,
)
from bezout_bezier.envelope import SweepEntry, VerificationReport
from bezout_bezier.exceptions import SweepFileError
from bezout_bezier.geometry import QuadBezier, sample_curve
from bezout_bezier.models import RenderOptions

logger = logging.getLogger(__name__)


def _real(value: float) -> str:
    return format(value, REAL_FORMAT)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _write_csv(rows: list[list], columns: list[str]) -> str:
    frame = pd.DataFrame(rows, columns=columns, dtype=object)
    return frame.to_csv(index=False, lineterminator="\n")


def to_csv(report: VerificationReport) -> str:
    rows = []
    for rec in report.records:
        seg = rec.segment
        rows.append(
            [
                rec.pair.r,
                rec.pair.s,
                rec.coeffs.a,
                rec.coeffs.b,
                rec.flipped.a,
                rec.flipped.b,
                _real(rec.t_contact),
                _real(seg.start.x),
                _real(seg.start.y),
                _real(seg.end.x),
                _real(seg.end.y),
                _real(rec.gap_alpha),
                _real(rec.gap_beta),
                _real(rec.deviation),
                _bool(rec.bound_ok),
            ]
        )
    return _write_csv(rows, CSV_COLUMNS)


def audit_to_csv(entries: list[SweepEntry]) -> str:
    rows = []
    for entry in entries:
        head = [entry.p, entry.q, _real(entry.epsilon)]
        if entry.report is None:
            rows.append(head + [None, None, None, f"skipped: {entry.skipped}"])
            continue
        report = entry.report
        rows.append(
            head
            + [
                report.neighbor_count,
                _real(report.max_deviation),
                _real(report.bound_slack),
                _bool(report.all_bounds_hold),
            ]
        )
    return _write_csv(rows, AUDIT_COLUMNS)


def _parse_int(token: str, row: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SweepFileError(f"malformed audit line {row!r}: {token!r} is not an integer")


def read_audit_spec(text: str) -> list[tuple[int, int, float]]:
    """Parse `p q epsilon` lines; `#` starts a comment."""
    try:
        frame = pd.read_csv(
            io.StringIO(text),
            sep=r"\s+",
            comment="#",
            header=None,
            names=["p", "q", "epsilon", "extra"],
            dtype=str,
            skip_blank_lines=True,
        )
    except pd.errors.EmptyDataError:
        return []
    except pd.errors.ParserError as e:
        raise SweepFileError(f"malformed audit spec: {e}") from e

    triples = []
    for values in frame.itertuples(index=False):
        row = " ".join(str(v) for v in values if not pd.isna(v))
        if pd.isna(values.epsilon) or not pd.isna(values.extra):
            raise SweepFileError(f"malformed audit line {row!r}: expected `p q epsilon`")
        try:
            epsilon = float(values.epsilon)
        except ValueError:
            raise SweepFileError(f"malformed audit line {row!r}: {values.epsilon!r} is not a number")
        triples.append((_parse_int(values.p, row), _parse_int(values.q, row), epsilon))
    logger.debug("audit spec: %d combinations", len(triples))
    return triples


def report_to_text(report: VerificationReport) -> str:
    params = report.params
    lines = [
        f"center: ({params.p},{params.q})",
        f"epsilon: {_real(params.epsilon)}",
        f"neighbor_count: {report.neighbor_count}",
        f"max_deviation: {_real(report.max_deviation)}",
        f"max_endpoint_gap: {_real(report.max_endpoint_gap)}",
        "PASS" if report.all_bounds_hold else "FAIL",
    ]
    return "\n".join(lines) + "\n"


def _bounding_box(report: VerificationReport) -> tuple[float, float, float, float]:
    p, q = report.params.p, report.params.q
    xs = [float(p), 0.0, float(q)]
    ys = [float(q), 0.0, float(p)]
    for rec in report.records:
        xs += [rec.segment.start.x, rec.segment.end.x]
        ys += [rec.segment.start.y, rec.segment.end.y]
    return min(xs), min(ys), max(xs), max(ys)


def to_svg(report: VerificationReport, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    p, q = report.params.p, report.params.q
    min_x, min_y, max_x, max_y = _bounding_box(report)
    span_x = max(max_x - min_x, 1.0)
    span_y = max(max_y - min_y, 1.0)
    min_x -= SVG_PADDING_FRACTION * span_x
    min_y -= SVG_PADDING_FRACTION * span_y
    width = span_x * (1 + 2 * SVG_PADDING_FRACTION)
    height = span_y * (1 + 2 * SVG_PADDING_FRACTION)
    diagonal = math.hypot(width, height)
    stroke = opts.stroke_width_fraction * diagonal
    height_px = max(1, round(opts.width_px * height / width))

    # inside the flipped group y grows upward, so the viewBox starts at -top
    view_box = " ".join(_real(v) for v in (min_x, -(min_y + height), width, height))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width_px}" '
        f'height="{height_px}" viewBox="{view_box}">',
        f"<title>Bezier-Bezout envelope of c({p},{q}), epsilon={_real(report.params.epsilon)}</title>",
        '<g transform="scale(1,-1)">',
        f'<path class="axis" d="M {_real(min_x)} 0 H {_real(min_x + width)} M 0 {_real(min_y)} '
        f'V {_real(min_y + height)}" stroke="#bbbbbb" stroke-width="{_real(stroke)}" fill="none"/>',
        f'<g class="segments" stroke="{SEGMENT_COLOR}" stroke-width="{_real(stroke)}" '
        'stroke-linecap="round">',
    ]
    for rec in report.records:
        seg = rec.segment
        # zero-length segments show as a dot thanks to the round cap
        out.append(
            f'<line class="segment" x1="{_real(seg.start.x)}" y1="{_real(seg.start.y)}" '
            f'x2="{_real(seg.end.x)}" y2="{_real(seg.end.y)}"/>'
        )
    out.append("</g>")

    if opts.show_controls:
        radius = _real(4 * stroke)
        out.append(f'<g class="controls" fill="{CONTROL_COLOR}">')
        for point in QuadBezier(p, q).control_points():
            out.append(f'<circle class="control" cx="{_real(point.x)}" cy="{_real(point.y)}" r="{radius}"/>')
        out.append("</g>")

    if opts.show_curve:
        pts = sample_curve(QuadBezier(p, q), opts.curve_samples)
        coords = " ".join(f"{_real(x)},{_real(y)}" for x, y in pts)
        out.append(
            f'<polyline class="curve" points="{coords}" fill="none" stroke="{CURVE_COLOR}" '
            f'stroke-width="{_real(stroke)}"/>'
        )

    out += ["</g>", "</svg>"]
    logger.debug("rendered %d segments for (%d,%d)", report.neighbor_count, p, q)
    return "\n".join(out) + "\n"
