"""FastAPI application exposing the analysis service.

Run with:  uvicorn newtonsing.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..errors import DomainError, ParseError, StabilizationError
from . import handlers
from .schemas import (AnalysisDocument, AnalyzeRequest, DeformRequest,
                      FacesRequest, NewtonNumberRequest, PathsDocument,
                      PathsRequest)


def create_app() -> FastAPI:
    app = FastAPI(
        title="newtonsing",
        description="Newton-polyhedron invariants of isolated hypersurface "
                    "singularities in 2 and 3 variables",
        version="0.1.0")

    def run(fn, req):
        try:
            return fn(req)
        except ParseError as exc:
            raise HTTPException(
                status_code=400,
                detail={"message": str(exc), "position": exc.position})
        except (DomainError, StabilizationError) as exc:
            raise HTTPException(status_code=422, detail={"message": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/analyze", response_model=AnalysisDocument)
    def analyze(req: AnalyzeRequest):
        return run(handlers.analyze, req)

    @app.post("/deform", response_model=AnalysisDocument)
    def deform(req: DeformRequest):
        return run(handlers.deform, req)

    @app.post("/paths", response_model=PathsDocument)
    def paths(req: PathsRequest):
        return run(handlers.paths, req)

    @app.post("/newton-number", response_model=AnalysisDocument)
    def newton_number(req: NewtonNumberRequest):
        return run(handlers.newton_number_document, req)

    @app.post("/faces", response_model=AnalysisDocument)
    def faces(req: FacesRequest):
        return run(handlers.faces, req)

    return app


app = create_app()
