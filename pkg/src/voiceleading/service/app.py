"""FastAPI application exposing the analysis pipeline.

Run with ``uvicorn voiceleading.service:app``. Domain errors (bad scores,
bad axes, degenerate series) map to 400 responses; malformed payloads are
rejected by the schema layer with 422.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..errors import FixtureError, VoiceLeadingError
from . import ops
from .schemas import (
    AnalysisReportModel,
    AnalyzeRequest,
    CloudRequest,
    CloudResponse,
    DtwRequest,
    DtwResponse,
    FixtureInfo,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="voiceleading",
        version=__version__,
        description=(
            "Voice-leading complexity analysis: per-transition complexity "
            "vectors, complexity clouds and DTW comparison of scores."
        ),
    )

    @app.exception_handler(VoiceLeadingError)
    async def _domain_error(request: Request, exc: VoiceLeadingError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/analyze", response_model=AnalysisReportModel)
    def analyze(request: AnalyzeRequest) -> AnalysisReportModel:
        return ops.analyze_records(request)

    @app.post("/analyze/listing", response_class=PlainTextResponse)
    def analyze_listing(request: AnalyzeRequest) -> str:
        return ops.analyze_listing(request)

    @app.post("/cloud", response_model=CloudResponse)
    def cloud(
        request: CloudRequest,
        format: str = Query("records", pattern="^(records|csv)$"),
    ):
        if format == "csv":
            return PlainTextResponse(ops.cloud_csv(request), media_type="text/csv")
        return ops.cloud_response(request)

    @app.post("/dtw", response_model=DtwResponse)
    def dtw_endpoint(
        request: DtwRequest,
        format: str = Query("records", pattern="^(records|csv)$"),
        normalised: bool = Query(False),
    ):
        if format == "csv":
            return PlainTextResponse(
                ops.dtw_csv(request, normalised=normalised), media_type="text/csv"
            )
        return ops.dtw_response(request)

    @app.get("/fixtures", response_model=list[FixtureInfo])
    def fixtures_index() -> list[FixtureInfo]:
        return ops.fixture_list()

    @app.get("/fixtures/{name}", response_class=PlainTextResponse)
    def fixture(name: str) -> str:
        try:
            return ops.fixture_text(name)
        except FixtureError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc

    return app


app = create_app()
