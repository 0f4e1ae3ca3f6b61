# bezout_bezier/routers/envelope.py

from fastapi import APIRouter, HTTPException, Query
from fastapi.responses import Response

from bezout_bezier.exceptions import DomainError
from bezout_bezier.models import OutputFormat, RenderOptions
from bezout_bezier.schemas.envelope import (
    BezoutResponse,
    EnvelopeRequest,
    NeighborsResponse,
    ReportSchema,
    SvgRequest,
)
from bezout_bezier.services import envelope_service

router = APIRouter(tags=["Envelope"])


@router.get("/bezout/{p}/{q}", response_model=BezoutResponse, summary="Normalized Bezout coefficients")
def get_bezout(p: int, q: int):
    try:
        return BezoutResponse.from_summary(envelope_service.bezout_summary(p, q))
    except DomainError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.get("/neighbors", response_model=NeighborsResponse, summary="Coprime pairs in a disk")
def get_neighbors(p: int, q: int, radius: float = Query(ge=0)):
    try:
        pairs = envelope_service.neighbors(p, q, radius)
    except DomainError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return NeighborsResponse(
        center=(p, q), radius=radius, pairs=[(pair.r, pair.s) for pair in pairs], count=len(pairs)
    )


@router.post("/envelope", response_model=ReportSchema, summary="Verify the envelope bound")
def post_envelope(request: EnvelopeRequest):
    try:
        report = envelope_service.envelope_report(request.p, request.q, request.epsilon)
    except DomainError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return ReportSchema.from_report(report)


@router.post("/envelope/svg", summary="Render the envelope as SVG")
def post_envelope_svg(request: SvgRequest):
    try:
        report = envelope_service.envelope_report(request.p, request.q, request.epsilon)
    except DomainError as e:
        raise HTTPException(status_code=400, detail=str(e))
    opts = RenderOptions(**request.model_dump(exclude={"p", "q", "epsilon"}))
    svg = envelope_service.render_report(report, OutputFormat.svg, opts)
    return Response(content=svg, media_type="image/svg+xml")
