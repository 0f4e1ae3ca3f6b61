# bezout_bezier/main.py

from fastapi import FastAPI

from bezout_bezier import __version__
from bezout_bezier.routers import envelope

app = FastAPI(
    title="Bezier-Bezout Envelope API",
    description="Bezout coefficients of coprime pairs and the Bezier-Bezout segments that approximate "
    "the quadratic Bezier curve through (p,q), (0,0), (q,p).",
    version=__version__,
)

app.include_router(envelope.router)


@app.get("/", tags=["Health"], summary="Health check")
def root():
    return {"status": "bezout-bezier is running"}
