"""End-to-end orchestration: transcript in, composed draft out.

The service boundary is the transcript (speech recognition lives behind an
adapter). Shared resources — the punctuation model, lexicons, adapters —
load once and are immutable afterwards, so requests can run concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from time import perf_counter
from typing import Optional

from .comprehend import comprehend
from .errors import AdapterError, DataError, PipelineInputError
from .intent import ContentType, Endedness, InputType, Intent
from .llm import LlmAdapter, MockLlm
from .normalize import normalize
from .punct import PunctTaggerModel, default_punct_model
from .router import ROUTER_THRESHOLD, DEFAULT_WEIGHTS, Route, RouteKind, RouterWeights
from .sensitivity import BLOCK_THRESHOLD, LexiconScorer
from .transcript import Source, StageTrace, Transcript

CONFIG_FORMAT = "voicedraft-config-1"
DEFAULT_MAX_TOKENS = 512
DEFAULT_PORT = 8000

ADAPTER_NAMES = ("mock", "external")


@dataclass(frozen=True)
class PipelineConfig:
    """Startup configuration; serializable to versioned JSON."""

    max_tokens: int = DEFAULT_MAX_TOKENS
    router_threshold: float = ROUTER_THRESHOLD
    block_threshold: float = BLOCK_THRESHOLD
    signoff: str = "Best,"
    adapter: str = "mock"
    port: int = DEFAULT_PORT
    punct_model_path: Optional[str] = None
    sensitivity_lexicon_path: Optional[str] = None
    web_root: Optional[str] = None
    cors_origins: tuple[str, ...] = ("*",)
    router_weights: RouterWeights = field(default_factory=RouterWeights)

    @classmethod
    def from_file(cls, path) -> "PipelineConfig":
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DataError(f"invalid config JSON: {exc.msg}") from exc
        if payload.pop("format", CONFIG_FORMAT) != CONFIG_FORMAT:
            raise DataError("unsupported config format")
        weights = payload.pop("router_weights", None)
        config = cls(**{k: v for k, v in payload.items() if k != "cors_origins"})
        if "cors_origins" in payload:
            config = replace(config, cors_origins=tuple(payload["cors_origins"]))
        if weights:
            config = replace(config, router_weights=RouterWeights(**weights))
        return config

    def to_file(self, path) -> None:
        payload = {
            "format": CONFIG_FORMAT,
            "max_tokens": self.max_tokens,
            "router_threshold": self.router_threshold,
            "block_threshold": self.block_threshold,
            "signoff": self.signoff,
            "adapter": self.adapter,
            "port": self.port,
            "punct_model_path": self.punct_model_path,
            "sensitivity_lexicon_path": self.sensitivity_lexicon_path,
            "web_root": self.web_root,
            "cors_origins": list(self.cors_origins),
            "router_weights": dict(self.router_weights.__dict__),
        }
        Path(path).write_text(json.dumps(payload, indent=2), encoding="utf-8")


@dataclass(frozen=True)
class ComposeRequest:
    transcript: str
    content_type: Optional[str] = None
    trace: bool = False
    seed: int = 0
    adapter: str = "mock"


@dataclass(frozen=True)
class ComposeResult:
    output: str
    route: Route
    intent: Intent
    traces: tuple[StageTrace, ...]
    latency_ms: float
    stage_latency_ms: dict[str, float]
    blocked: bool


class PipelineResources:
    """Everything loaded at startup; read-only afterwards."""

    def __init__(
        self,
        config: PipelineConfig,
        punct_model: PunctTaggerModel,
        scorer: LexiconScorer,
        adapters: dict[str, LlmAdapter],
    ):
        self.config = config
        self.punct_model = punct_model
        self.scorer = scorer
        self.adapters = adapters

    @classmethod
    def build(cls, config: Optional[PipelineConfig] = None) -> "PipelineResources":
        config = config or PipelineConfig()
        if config.punct_model_path:
            model = PunctTaggerModel.load(config.punct_model_path)
        else:
            model = default_punct_model()
        if config.sensitivity_lexicon_path:
            from .lexicons import sensitivity_terms

            terms = sensitivity_terms(config.sensitivity_lexicon_path)
            scorer = LexiconScorer(terms, config.block_threshold)
        else:
            scorer = LexiconScorer(block_threshold=config.block_threshold)
        return cls(config, model, scorer, {"mock": MockLlm()})

    def adapter_for(self, name: str) -> LlmAdapter:
        adapter = self.adapters.get(name)
        if adapter is None:
            raise AdapterError(name, "no such adapter is configured")
        return adapter


_EMPTY_INTENT = Intent(InputType.DICTATION, ContentType.NOTES, Endedness.CLOSED)


def run_pipeline(request: ComposeRequest, resources: PipelineResources) -> ComposeResult:
    """Tokenize, normalize, and comprehend one transcript."""
    started = perf_counter()
    config = resources.config

    transcript = Transcript.from_text(request.transcript, Source.TYPED)
    if len(transcript) > config.max_tokens:
        raise PipelineInputError(
            f"input exceeds {config.max_tokens} tokens ({len(transcript)})"
        )

    hint: Optional[ContentType] = None
    if request.content_type:
        try:
            hint = ContentType(request.content_type)
        except ValueError:
            raise PipelineInputError(f"unknown content_type {request.content_type!r}")

    normalized, traces = normalize(transcript, resources.punct_model)

    if not normalized:
        result_route = Route(RouteKind.FT, 0.0, "empty input")
        elapsed = (perf_counter() - started) * 1000.0
        return ComposeResult(
            output="",
            route=result_route,
            intent=Intent(_EMPTY_INTENT.input_type, hint or _EMPTY_INTENT.content_type,
                          _EMPTY_INTENT.endedness),
            traces=tuple(traces),
            latency_ms=elapsed,
            stage_latency_ms={t.stage_name: t.elapsed_ms for t in traces},
            blocked=False,
        )

    comp = comprehend(
        normalized,
        adapter=resources.adapter_for(request.adapter),
        content_type_hint=hint,
        seed=request.seed,
        weights=config.router_weights,
        threshold=config.router_threshold,
        scorer=resources.scorer,
        signoff=config.signoff,
    )
    traces = list(traces) + list(comp.traces)

    elapsed = (perf_counter() - started) * 1000.0
    return ComposeResult(
        output=comp.text,
        route=comp.route,
        intent=comp.intent,
        traces=tuple(traces),
        latency_ms=elapsed,
        stage_latency_ms={t.stage_name: t.elapsed_ms for t in traces},
        blocked=comp.blocked,
    )
