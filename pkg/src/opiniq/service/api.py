"""HTTP JSON API over the platform.

Read endpoints work off immutable store snapshots and run in the thread
pool, so concurrent readers see the same results as serial execution. The
only mutating route is POST /api/ingest. Malformed parameters come back as
400 payloads naming the offending field; unknown ids as 404 payloads.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from ..store import QueryParamError
from .config import ConfigError
from .pipeline import Platform


def _parse_int(value: str | None, fieldname: str, default: int) -> int:
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise QueryParamError(fieldname, f"must be an integer, got {value!r}") from None


def build_app(platform: Platform) -> FastAPI:
    """Assemble the FastAPI application for a loaded platform."""
    app = FastAPI(title="opiniq", version="1.0.0", docs_url=None, redoc_url=None)

    @app.exception_handler(QueryParamError)
    async def _bad_param(request: Request, exc: QueryParamError):
        return JSONResponse(
            status_code=400,
            content={"error": "bad_param", "field": exc.field, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def _bad_request(request: Request, exc: RequestValidationError):
        errors = exc.errors()
        fieldname = str(errors[0]["loc"][-1]) if errors else "request"
        return JSONResponse(
            status_code=400,
            content={"error": "bad_param", "field": fieldname, "message": "invalid value"},
        )

    @app.exception_handler(ConfigError)
    async def _not_configured(request: Request, exc: ConfigError):
        return JSONResponse(
            status_code=503,
            content={"error": "not_configured", "message": str(exc)},
        )

    @app.get("/api/documents")
    def list_documents(request: Request):
        params = request.query_params
        page = _parse_int(params.get("page"), "page", 1)
        page_size = _parse_int(
            params.get("page_size"), "page_size", platform.config.page_size
        )
        result = platform.store.query(
            keyword=params.get("q"),
            date_from=params.get("from"),
            date_to=params.get("to"),
            media_type=params.get("media_type"),
            region=params.get("region"),
            page=page,
            page_size=page_size,
        )
        return {
            "total": result.total,
            "page": page,
            "page_size": page_size,
            "documents": [doc.to_record() for doc in result.documents],
        }

    @app.get("/api/documents/{doc_id}")
    def get_document(doc_id: str):
        doc = platform.store.get(doc_id)
        if doc is None:
            return JSONResponse(status_code=404, content={"error": "not_found"})
        return doc.to_record()

    @app.get("/api/trends")
    def get_trends(request: Request):
        params = request.query_params
        points = platform.trends(
            keyword=params.get("q"),
            date_from=params.get("from"),
            date_to=params.get("to"),
        )
        return [p.to_jsonable() for p in points]

    @app.get("/api/regions")
    def get_regions(request: Request):
        params = request.query_params
        stats = platform.region_stats(
            keyword=params.get("q"),
            date_from=params.get("from"),
            date_to=params.get("to"),
        )
        return [s.to_jsonable() for s in stats]

    @app.get("/api/media-summary")
    def get_media_summary(request: Request):
        params = request.query_params
        return platform.media_summary(
            keyword=params.get("q"),
            date_from=params.get("from"),
            date_to=params.get("to"),
        )

    @app.post("/api/classify")
    async def classify(request: Request):
        try:
            payload = await request.json()
        except Exception:
            raise QueryParamError("body", "body must be JSON") from None
        text = payload.get("text") if isinstance(payload, dict) else None
        if not isinstance(text, str):
            raise QueryParamError("text", "text must be a string")
        return platform.classify_text(text)

    @app.post("/api/ingest")
    async def ingest(request: Request):
        body = await request.body()
        try:
            lines = body.decode("utf-8").splitlines()
        except UnicodeDecodeError:
            raise QueryParamError("body", "body must be UTF-8 JSONL") from None
        report = platform.ingest_records(lines)
        return report.to_jsonable()

    if platform.config.static_dir:
        app.mount(
            "/", StaticFiles(directory=platform.config.static_dir, html=True), name="ui"
        )
    return app
