"""HTTP front end: one route per operation, errors mapped to status codes."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import ConvergenceError, GspGateError, ParseError
from . import ops, schemas


def create_app() -> FastAPI:
    app = FastAPI(title="gspgate", version=__version__)

    @app.exception_handler(GspGateError)
    async def _domain_error(request: Request, exc: GspGateError) -> JSONResponse:
        if isinstance(exc, ParseError):
            status = 400
        elif isinstance(exc, ConvergenceError):
            status = 500
        else:
            status = 422
        return JSONResponse(
            status_code=status,
            content={"detail": str(exc), "error": type(exc).__name__},
        )

    @app.get("/health")
    async def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.get("/catalog", response_model=schemas.CatalogResponse)
    async def catalog() -> schemas.CatalogResponse:
        return ops.get_catalog()

    @app.post("/verdict", response_model=schemas.VerdictResponse)
    async def verdict(request: schemas.VerdictRequest) -> schemas.VerdictResponse:
        return ops.evaluate_verdict(request)

    @app.post("/max-depth", response_model=schemas.MaxDepthResponse)
    async def max_depth(request: schemas.MaxDepthRequest) -> schemas.MaxDepthResponse:
        return ops.evaluate_max_depth(request)

    @app.post("/runtime", response_model=schemas.RuntimeResponse)
    async def runtime(request: schemas.RuntimeRequest) -> schemas.RuntimeResponse:
        return ops.evaluate_runtime(request)

    @app.post("/scenarios", response_model=schemas.SweepResponse)
    async def scenarios(request: schemas.ScenariosRequest) -> schemas.SweepResponse:
        return ops.evaluate_scenarios(request)

    @app.post("/sweep", response_model=schemas.SweepResponse)
    async def sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
        return ops.evaluate_sweep(request)

    @app.post("/curve", response_model=schemas.CurveResponse)
    async def curve(request: schemas.CurveRequest) -> schemas.CurveResponse:
        return ops.evaluate_curve(request)

    @app.post("/spectral", response_model=schemas.SpectralResponse)
    async def spectral(request: schemas.SpectralRequest) -> schemas.SpectralResponse:
        return ops.evaluate_spectral(request)

    @app.post("/boost", response_model=schemas.BoostResponse)
    async def boost(request: schemas.BoostRequest) -> schemas.BoostResponse:
        return ops.evaluate_boost(request)

    return app


app = create_app()
