import io
import xml.etree.ElementTree as ET

import pandas as pd
import pytest

from bezout_bezier.constants import AUDIT_COLUMNS, CSV_COLUMNS
from bezout_bezier.envelope import audit_sweep, build_envelope
from bezout_bezier.exceptions import SweepFileError
from bezout_bezier.io_render import audit_to_csv, read_audit_spec, report_to_text, to_csv, to_svg
from bezout_bezier.models import EnvelopeParams, RenderOptions
from bezout_bezier.numtheory import Center

SVG_NS = "{http://www.w3.org/2000/svg}"
HEADER = "r,s,a_rs,b_rs,a_sr,b_sr,t_contact,x1,y1,x2,y2,gap_alpha,gap_beta,deviation,bound_ok\n"


@pytest.fixture(scope="module")
def single_report():
    return build_envelope(EnvelopeParams(p=300, q=21, epsilon=2))


@pytest.fixture(scope="module")
def empty_report():
    return build_envelope(EnvelopeParams(p=300, q=21, epsilon=1.5))


@pytest.fixture(scope="module")
def figure_report():
    return build_envelope(EnvelopeParams(p=1_000_000, q=200_000, epsilon=10))


def svg_elements(svg, tag, cls=None):
    root = ET.fromstring(svg.encode("utf-8"))
    found = root.iter(f"{SVG_NS}{tag}")
    return [el for el in found if cls is None or el.get("class") == cls]


def test_csv_header_for_empty_report(empty_report):
    assert to_csv(empty_report) == HEADER
    assert HEADER.rstrip("\n").split(",") == CSV_COLUMNS


def test_csv_single_row(single_report):
    text = to_csv(single_report)
    lines = text.split("\n")
    assert lines[0] + "\n" == HEADER
    assert lines[1].startswith("299,21,57,4,17,242,")
    assert lines[1].endswith(",true")
    assert lines[2] == ""
    assert "\r" not in text


def test_csv_round_trip(figure_report):
    frame = pd.read_csv(io.StringIO(to_csv(figure_report)), dtype={"bound_ok": str})
    assert len(frame) == figure_report.neighbor_count
    for row, rec in zip(frame.itertuples(index=False), figure_report.records):
        assert (row.r, row.s) == (rec.pair.r, rec.pair.s)
        assert (row.a_rs, row.b_rs, row.a_sr, row.b_sr) == rec.coeffs.xy + rec.flipped.xy
        assert row.t_contact == pytest.approx(rec.t_contact, rel=1e-11)
        assert row.deviation == pytest.approx(rec.deviation, rel=1e-11)
        assert row.x2 == rec.segment.end.x
        assert row.bound_ok.lower() == "true"


def test_csv_is_deterministic(figure_report):
    assert to_csv(figure_report) == to_csv(figure_report)


def test_svg_single_report(single_report):
    svg = to_svg(single_report)
    assert len(svg_elements(svg, "line", "segment")) == 1
    controls = svg_elements(svg, "circle", "control")
    assert [(el.get("cx"), el.get("cy")) for el in controls] == [("300", "21"), ("0", "0"), ("21", "300")]
    assert not svg_elements(svg, "polyline")


def test_svg_empty_report_shows_controls_only(empty_report):
    svg = to_svg(empty_report, RenderOptions(show_controls=True))
    assert not svg_elements(svg, "line", "segment")
    assert len(svg_elements(svg, "circle", "control")) == 3


def test_svg_hides_controls(empty_report):
    svg = to_svg(empty_report, RenderOptions(show_controls=False))
    assert not svg_elements(svg, "circle")


def test_svg_figure(figure_report):
    opts = RenderOptions(show_curve=True, curve_samples=64, width_px=600)
    svg = to_svg(figure_report, opts)
    root = ET.fromstring(svg.encode("utf-8"))
    assert root.get("width") == "600"
    segments = svg_elements(svg, "line", "segment")
    assert len(segments) == figure_report.neighbor_count
    for el, rec in zip(segments, figure_report.records):
        assert float(el.get("x1")) == rec.segment.start.x
        assert float(el.get("y2")) == rec.segment.end.y
    [curve] = svg_elements(svg, "polyline", "curve")
    assert len(curve.get("points").split()) == 64
    # overlay is drawn last
    last = list(root.find(f"{SVG_NS}g"))[-1]
    assert last.tag == f"{SVG_NS}polyline"
    assert to_svg(figure_report, opts) == svg


def test_svg_view_box_covers_controls(single_report):
    root = ET.fromstring(to_svg(single_report).encode("utf-8"))
    x, y, w, h = (float(v) for v in root.get("viewBox").split())
    # the flipped group maps math y to -y
    assert x < 0 < 300 < x + w
    assert y < -300 and 0 < y + h


def test_report_to_text(single_report):
    text = report_to_text(single_report)
    assert "neighbor_count: 1\n" in text
    assert text.endswith("PASS\n")


def test_audit_csv():
    entries = audit_sweep([Center(10, 3), Center(4, 7)], [2])
    text = audit_to_csv(entries)
    frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    assert list(frame.columns) == AUDIT_COLUMNS
    ok, skipped = frame.to_dict(orient="records")
    assert (ok["p"], ok["q"], ok["epsilon"], ok["all_ok"]) == ("10", "3", "2", "true")
    assert float(ok["bound_slack"]) == pytest.approx(2 - float(ok["max_deviation"]))
    assert skipped["neighbor_count"] == ""
    assert skipped["all_ok"] == "skipped: requires 0≤q<p"


def test_audit_csv_empty():
    assert audit_to_csv([]) == ",".join(AUDIT_COLUMNS) + "\n"


def test_read_audit_spec():
    text = "# centers\n10 3 2\n\n  4 7 2   # flipped\n1000000 200000 10.5\n"
    assert read_audit_spec(text) == [(10, 3, 2.0), (4, 7, 2.0), (1000000, 200000, 10.5)]


@pytest.mark.parametrize("text", ["", "# nothing\n", "\n\n"])
def test_read_audit_spec_empty(text):
    assert read_audit_spec(text) == []


@pytest.mark.parametrize("text", ["10 3\n", "10 3 2 7\n", "ten 3 2\n", "10 3.5 2\n", "10 3 two\n"])
def test_read_audit_spec_malformed(text):
    with pytest.raises(SweepFileError):
        read_audit_spec(text)
