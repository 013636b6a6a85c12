"""JSON HTTP service: classification and log-analysis endpoints.

Routes (see API.md for the full field reference):

    POST /api/v1/classify-url   phishing verdict for one URL
    POST /api/v1/classify-text  spam verdict for one message
    POST /api/v1/logs           ingest log entries, return the window report
    GET  /api/v1/health         liveness + loaded models

All responses are JSON; errors use the envelope {"error": ..., "code": ...}.
Models are read-only shared state; replacing the bundle is a single
reference swap, so requests always see one consistent bundle.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..features.assemble import assemble_feature_vector
from ..features.providers import (
    StubPageContentProvider,
    StubSearchIndexProvider,
    StubWhoisProvider,
    query_external_features,
)
from ..models.boosting import gbdt_predict
from ..models.naive_bayes import nb_positive_probability, nb_predict
from ..netlog.window import InvalidEntry, LogEntry, LogWindow, analyze_window
from ..text.tokenizer import compute_text_stats, preprocess
from ..text.vectorize import vectorize
from ..urls.lexical import extract_lexical_features
from ..urls.parsing import MalformedUrl, parse_url
from .bundle import ModelBundle
from .config import ServiceConfig

INPUT_ECHO_LIMIT = 2048

_STUB_PROVIDERS = {
    "whois-stub": StubWhoisProvider,
    "search-stub": StubSearchIndexProvider,
    "page-stub": StubPageContentProvider,
}


class ApiError(Exception):
    def __init__(self, status_code: int, message: str):
        self.status_code = status_code
        self.message = message


class ClassifyUrlRequest(BaseModel):
    url: str
    enrich: bool | None = None


class ClassifyTextRequest(BaseModel):
    text: str


class LogEntryIn(BaseModel):
    timestamp_ms: int
    method: str
    url: str
    status_code: int
    origin_tab: str | None = None


class LogsRequest(BaseModel):
    entries: list[LogEntryIn]


class AppState:
    def __init__(self, config: ServiceConfig, bundle: ModelBundle | None = None):
        self.config = config
        self.bundle = bundle
        self.window = LogWindow(capacity=config.log_window.capacity,
                                window_span_s=config.log_window.span_seconds)
        self.providers = [
            _STUB_PROVIDERS[pid](seed=config.providers.stub_seed)
            for pid in config.providers.ids if pid in _STUB_PROVIDERS
        ]

    def swap_bundle(self, bundle: ModelBundle) -> None:
        # Single attribute assignment: requests see the old or the new
        # bundle, never a mix.
        self.bundle = bundle


def _echo(text: str) -> str:
    return text[:INPUT_ECHO_LIMIT]


def _classify_url(state: AppState, request: ClassifyUrlRequest) -> dict:
    bundle = state.bundle
    if bundle is None or bundle.gbdt_model is None:
        raise ApiError(503, "ModelNotLoaded: no URL model is loaded")
    started = time.perf_counter()
    try:
        parts = parse_url(request.url)
    except MalformedUrl as exc:
        raise ApiError(400, f"MalformedUrl: {exc}") from exc
    maps = [extract_lexical_features(request.url, parts)]
    enrich = (request.enrich if request.enrich is not None
              else state.config.providers.enabled)
    if enrich and state.providers:
        reports = query_external_features(
            parts, state.providers, timeout_ms=state.config.providers.timeout_ms)
        maps.extend(report.features for report in reports)
    vector = assemble_feature_vector(bundle.schema, maps)
    score = gbdt_predict(bundle.gbdt_model, vector)
    threshold = state.config.decision_threshold
    latency_ms = (time.perf_counter() - started) * 1000.0
    return {
        "input_echo": _echo(request.url),
        "verdict": "phishing" if score >= threshold else "legitimate",
        "score": score,
        "model_version": bundle.version_id(),
        "latency_ms": latency_ms,
        "imputed_feature_count": vector.imputed_count(),
    }


def _classify_text(state: AppState, request: ClassifyTextRequest) -> dict:
    bundle = state.bundle
    if bundle is None or bundle.nb_model is None:
        raise ApiError(503, "ModelNotLoaded: no text model is loaded")
    if not request.text:
        raise ApiError(400, "EmptyText: text must be nonempty")
    started = time.perf_counter()
    tokens = preprocess(request.text)
    vector = vectorize(tokens, bundle.vocabulary)
    label, _ = nb_predict(bundle.nb_model, vector)
    score = nb_positive_probability(bundle.nb_model, vector, "spam")
    stats = compute_text_stats(request.text)
    latency_ms = (time.perf_counter() - started) * 1000.0
    return {
        "input_echo": _echo(request.text),
        "verdict": label,
        "score": score,
        "model_version": bundle.version_id(),
        "latency_ms": latency_ms,
        "text_stats": {
            "num_characters": stats.num_characters,
            "num_words": stats.num_words,
            "num_sentences": stats.num_sentences,
        },
    }


def _ingest_logs(state: AppState, request: LogsRequest) -> dict:
    entries = []
    for i, item in enumerate(request.entries):
        try:
            entries.append(LogEntry(
                timestamp_ms=item.timestamp_ms, method=item.method,
                url=item.url, status_code=item.status_code,
                origin_tab=item.origin_tab))
        except InvalidEntry as exc:
            raise ApiError(400, f"InvalidEntry: entries[{i}]: {exc}") from exc
    for entry in entries:
        state.window.ingest(entry)
    # Anchor the report at the newest entry we know about so batches with
    # historic timestamps (and empty batches) still describe the window.
    snapshot = state.window.snapshot()
    if entries:
        now_ms = max(e.timestamp_ms for e in entries)
    elif snapshot:
        now_ms = snapshot[-1].timestamp_ms
    else:
        now_ms = int(time.time() * 1000)
    report = analyze_window(state.window, now_ms=now_ms,
                            thresholds=state.config.thresholds)
    return report.as_dict()


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="threatlens", docs_url=None, redoc_url=None,
                  openapi_url=None)
    app.state.engine = state

    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(state.config.cors_origins),
        allow_origin_regex=r"^(chrome|moz)-extension://.*$",
        allow_credentials=False,
        allow_methods=["GET", "POST"],
        allow_headers=["Content-Type"],
    )

    @app.exception_handler(ApiError)
    async def handle_api_error(_: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status_code,
                            content={"error": exc.message, "code": exc.status_code})

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_error(_: Request, exc: StarletteHTTPException):
        return JSONResponse(status_code=exc.status_code,
                            content={"error": str(exc.detail), "code": exc.status_code})

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(_: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400,
                            content={"error": f"InvalidRequest: {exc.errors()}",
                                     "code": 400})

    @app.post("/api/v1/classify-url")
    async def classify_url(request: ClassifyUrlRequest):
        return _classify_url(app.state.engine, request)

    @app.post("/api/v1/classify-text")
    async def classify_text(request: ClassifyTextRequest):
        return _classify_text(app.state.engine, request)

    @app.post("/api/v1/logs")
    async def logs(request: LogsRequest):
        return _ingest_logs(app.state.engine, request)

    @app.get("/api/v1/health")
    async def health():
        bundle = app.state.engine.bundle
        return {
            "status": "ok",
            "models_loaded": bundle.models_loaded() if bundle else [],
            "format_version": bundle.format_version if bundle else None,
        }

    return app
