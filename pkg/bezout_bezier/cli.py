# bezout_bezier/cli.py
"""Command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain or hypothesis
violation, 3 a checked bound failed numerically.
"""

import logging
from pathlib import Path

import click
import uvicorn
from pydantic import ValidationError

from bezout_bezier import __version__
from bezout_bezier.config import get_settings
from bezout_bezier.constants import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFICATION_FAILED,
    LOG_LEVELS,
    REAL_FORMAT,
)
from bezout_bezier.envelope import envelope_diagnostics
from bezout_bezier.exceptions import DomainError, SweepFileError
from bezout_bezier.io_render import audit_to_csv, report_to_text
from bezout_bezier.models import OutputFormat, RenderOptions
from bezout_bezier.services import envelope_service

logger = logging.getLogger(__name__)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    Path(output).write_text(text, encoding="utf-8", newline="\n")
    logger.info("wrote %s", output)


@click.group()
@click.version_option(__version__, prog_name="bezout-bezier")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Logging level for stderr diagnostics.",
)
def cli(log_level: str | None):
    """Bezout coefficients and the Bezier-Bezout envelope of c_{p,q}."""
    logging.basicConfig(
        level=(log_level or get_settings().log_level).upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )


def run_bezout(p: int, q: int) -> int:
    summary = envelope_service.bezout_summary(p, q)
    a, b = summary.coeffs.xy
    click.echo(f"B({p},{q}) = ({a}, {b})")
    click.echo(f"{a}*{q} - {b}*{p} = {summary.identity_value}")
    return EXIT_OK


def run_neighbors(p: int, q: int, radius: float) -> int:
    pairs = envelope_service.neighbors(p, q, radius)
    for pair in pairs:
        click.echo(str(pair))
    click.echo(f"count: {len(pairs)}")
    return EXIT_OK


def run_envelope(
    p: int, q: int, epsilon: float, fmt: OutputFormat, output: str | None, opts: RenderOptions
) -> int:
    report = envelope_service.envelope_report(p, q, epsilon)
    _emit(envelope_service.render_report(report, fmt, opts), output)
    return EXIT_OK if report.all_bounds_hold else EXIT_VERIFICATION_FAILED


def run_verify(p: int, q: int, epsilon: float, diagnostics: bool = False) -> int:
    report = envelope_service.envelope_report(p, q, epsilon)
    click.echo(report_to_text(report), nl=False)
    if diagnostics:
        diags = envelope_diagnostics(report)
        curve_gap = max((d.segment_curve_gap for d in diags), default=0.0)
        tangent = max((d.symmetric_tangent_distance for d in diags), default=0.0)
        click.echo(f"max_segment_curve_gap: {format(curve_gap, REAL_FORMAT)}")
        click.echo(f"max_symmetric_tangent_distance: {format(tangent, REAL_FORMAT)}")
    return EXIT_OK if report.all_bounds_hold else EXIT_VERIFICATION_FAILED


def run_audit_sweep(spec_path: str) -> int:
    entries = envelope_service.run_audit_file(Path(spec_path))
    click.echo(audit_to_csv(entries), nl=False)
    failed = [e for e in entries if e.report is not None and not e.all_ok]
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK


def run_identities(p: int, q: int) -> int:
    check = envelope_service.identities(p, q)
    click.echo(f"pair: ({p},{q})")
    click.echo(f"t0: {format(check.t0, REAL_FORMAT)}")
    for name, value in check.residuals().items():
        click.echo(f"{name}: {format(value, REAL_FORMAT)}")
    click.echo(f"tolerance: {format(check.tol, REAL_FORMAT)}")
    click.echo("PASS" if check.ok else "FAIL")
    return EXIT_OK if check.ok else EXIT_VERIFICATION_FAILED


def _render_options(func):
    options = [
        click.option("--width-px", type=click.IntRange(min=16), default=None),
        click.option("--show-curve/--no-show-curve", default=False, help="Overlay the true curve."),
        click.option("--show-controls/--no-show-controls", default=True, help="Mark the control points."),
        click.option("--curve-samples", type=click.IntRange(min=2), default=None),
        click.option("--stroke-width-fraction", type=click.FloatRange(min=0, min_open=True), default=0.0008),
    ]
    for option in reversed(options):
        func = option(func)
    return func


@cli.command("bezout")
@click.argument("p", type=int)
@click.argument("q", type=int)
def bezout_command(p, q):
    """Print B(p,q) and check a*q - b*p = 1."""
    return run_bezout(p, q)


@cli.command("neighbors")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("radius", type=float)
def neighbors_command(p, q, radius):
    """List coprime pairs within RADIUS of (P,Q)."""
    return run_neighbors(p, q, radius)


@cli.command("envelope")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("epsilon", type=float)
@click.option(
    "--format", "fmt", type=click.Choice([f.value for f in OutputFormat]), default=OutputFormat.csv.value
)
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), default=None)
@_render_options
def envelope_command(p, q, epsilon, fmt, output, width_px, show_curve, show_controls, curve_samples,
                     stroke_width_fraction):
    """Build the envelope of c_{p,q} and write it as CSV, SVG or text."""
    settings = get_settings()
    opts = RenderOptions(
        width_px=width_px or settings.default_width_px,
        show_curve=show_curve,
        show_controls=show_controls,
        curve_samples=curve_samples or settings.default_curve_samples,
        stroke_width_fraction=stroke_width_fraction,
    )
    return run_envelope(p, q, epsilon, OutputFormat(fmt), output, opts)


@cli.command("verify")
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("epsilon", type=float)
@click.option("--diagnostics", is_flag=True, help="Also report whole-segment distances to the curve.")
def verify_command(p, q, epsilon, diagnostics):
    """Check ||L_{r,s}(t) - c_{p,q}(t)|| < EPSILON for every neighbor."""
    return run_verify(p, q, epsilon, diagnostics)


@cli.command("audit-sweep")
@click.argument("spec_path", type=click.Path())
def audit_sweep_command(spec_path):
    """Run every `p q epsilon` line of SPEC_PATH and print a summary CSV."""
    return run_audit_sweep(spec_path)


@cli.command("identities")
@click.argument("p", type=int)
@click.argument("q", type=int)
def identities_command(p, q):
    """Check the projection and distance identities of B(p,q) and B(q,p)."""
    return run_identities(p, q)


@cli.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=click.IntRange(1, 65535), default=8000, show_default=True)
def serve_command(host, port):
    """Serve the HTTP API with uvicorn."""
    uvicorn.run("bezout_bezier.main:app", host=host, port=port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        code = cli.main(args=argv, prog_name="bezout-bezier", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        return EXIT_USAGE
    except SweepFileError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    except OSError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    except DomainError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_DOMAIN
    except ValidationError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_DOMAIN
    return code if isinstance(code, int) else EXIT_OK
