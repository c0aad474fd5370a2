"""HTTP surface: POST /v1/compose, GET /v1/health, GET /v1/metrics.

Latency and traces only appear in a response when the request asks for a
trace: diagnostic timing is inherently nondeterministic, and compose
responses must be byte-identical for identical seeded requests. Metrics
aggregation is the only mutable shared state and sits behind a lock.
"""

from __future__ import annotations

import threading
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .errors import AdapterError, PipelineInputError
from .llm import PROMPT_VERSION
from .pipeline import ComposeRequest, ComposeResult, PipelineConfig, PipelineResources, run_pipeline


class ComposeBody(BaseModel):
    transcript: str
    content_type: Optional[str] = None
    trace: bool = False
    seed: int = Field(default=0, ge=0)
    adapter: str = "mock"


class ServiceMetrics:
    """Thread-safe request counters and latency percentiles."""

    def __init__(self):
        self._lock = threading.Lock()
        self._latencies: list[float] = []
        self._by_route: dict[str, list[float]] = {}
        self._routes: dict[str, int] = {}
        self._blocked = 0

    def record(self, result: ComposeResult) -> None:
        route = result.route.kind.value
        with self._lock:
            self._latencies.append(result.latency_ms)
            self._by_route.setdefault(route, []).append(result.latency_ms)
            self._routes[route] = self._routes.get(route, 0) + 1
            if result.blocked:
                self._blocked += 1

    @staticmethod
    def _percentile(values: list[float], q: float) -> float:
        if not values:
            return 0.0
        ordered = sorted(values)
        rank = max(0, min(len(ordered) - 1, round(q * (len(ordered) - 1))))
        return ordered[rank]

    def snapshot(self) -> dict:
        with self._lock:
            return {
                "requests": len(self._latencies),
                "blocked": self._blocked,
                "routes": dict(self._routes),
                "latency_ms": {
                    "p50": round(self._percentile(self._latencies, 0.5), 3),
                    "p90": round(self._percentile(self._latencies, 0.9), 3),
                },
                "latency_ms_by_route": {
                    route: {
                        "p50": round(self._percentile(vals, 0.5), 3),
                        "p90": round(self._percentile(vals, 0.9), 3),
                    }
                    for route, vals in self._by_route.items()
                },
            }


def result_payload(result: ComposeResult, trace: bool) -> dict:
    payload = {
        "output": result.output,
        "blocked": result.blocked,
        "route": {
            "kind": result.route.kind.value,
            "score": round(result.route.score, 6),
            "reason": result.route.reason,
        },
        "intent": {
            "input_type": result.intent.input_type.value,
            "content_type": result.intent.content_type.value,
            "endedness": result.intent.endedness.value,
        },
    }
    if trace:
        payload["traces"] = [
            {
                "stage_name": t.stage_name,
                "text_after": t.text_after,
                "labels_applied": list(t.labels_applied) if t.labels_applied else None,
                "elapsed_ms": round(t.elapsed_ms, 3),
            }
            for t in result.traces
        ]
        payload["latency_ms"] = round(result.latency_ms, 3)
        payload["stage_latency_ms"] = {
            name: round(ms, 3) for name, ms in result.stage_latency_ms.items()
        }
    return payload


def create_app(
    config: Optional[PipelineConfig] = None,
    resources: Optional[PipelineResources] = None,
) -> FastAPI:
    config = config or PipelineConfig()
    resources = resources or PipelineResources.build(config)
    metrics = ServiceMetrics()
    app = FastAPI(title="voicedraft", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.post("/v1/compose")
    def compose(body: ComposeBody) -> JSONResponse:
        request = ComposeRequest(
            transcript=body.transcript,
            content_type=body.content_type,
            trace=body.trace,
            seed=body.seed,
            adapter=body.adapter,
        )
        try:
            result = run_pipeline(request, resources)
        except PipelineInputError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except AdapterError as exc:
            raise HTTPException(
                status_code=502,
                detail={"stage": "compose", "adapter": exc.adapter_name, "error": str(exc)},
            )
        metrics.record(result)
        return JSONResponse(result_payload(result, body.trace))

    @app.get("/v1/health")
    def health() -> dict:
        return {
            "status": "ok",
            "versions": {
                "service": __version__,
                "punct_model": resources.punct_model.version,
                "prompt_template": PROMPT_VERSION,
            },
        }

    @app.get("/v1/metrics")
    def service_metrics() -> dict:
        return metrics.snapshot()

    if config.web_root:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.web_root, html=True), name="webdemo")

    return app


def serve(config: Optional[PipelineConfig] = None, host: str = "127.0.0.1") -> None:
    """Run the service until interrupted; finishes in-flight requests."""
    import uvicorn

    config = config or PipelineConfig()
    uvicorn.run(create_app(config), host=host, port=config.port)
