"""The comprehension stage: intent, sensitivity gates, routing, composition.

Blocked input short-circuits to a refusal result before any adapter runs;
blocked output is replaced by the same notice. Everything is pure given
the adapter, so runs with the mock adapter are fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from time import perf_counter
from typing import Optional

from .composer import DEFAULT_SIGNOFF, compose_ft, render_composition
from .errors import AdapterError
from .intent import ContentType, Intent, classify_intent
from .llm import LlmAdapter, build_llm_prompt
from .router import DEFAULT_WEIGHTS, ROUTER_THRESHOLD, Route, RouteKind, RouterWeights, route
from .sensitivity import SensitivityScorer, sensitivity_score
from .transcript import StageTrace

REFUSAL_NOTICE = "This request was flagged as sensitive, so no draft was generated."

COMPREHEND_STAGES = ("intent", "sensitivity", "route", "compose")


@dataclass(frozen=True)
class ComprehendResult:
    text: str
    route: Route
    intent: Intent
    traces: tuple[StageTrace, ...]
    blocked: bool


def comprehend(
    text: str,
    adapter: LlmAdapter,
    content_type_hint: Optional[ContentType] = None,
    seed: int = 0,
    weights: RouterWeights = DEFAULT_WEIGHTS,
    threshold: float = ROUTER_THRESHOLD,
    scorer: Optional[SensitivityScorer] = None,
    signoff: str = DEFAULT_SIGNOFF,
) -> ComprehendResult:
    """Turn normalized text into a final draft (or a refusal)."""
    traces: list[StageTrace] = []

    start = perf_counter()
    intent = classify_intent(text)
    if content_type_hint is not None:
        intent = Intent(intent.input_type, content_type_hint, intent.endedness)
    traces.append(
        StageTrace(
            "intent",
            text,
            (intent.input_type.name, intent.content_type.name, intent.endedness.name),
            (perf_counter() - start) * 1000.0,
        )
    )

    start = perf_counter()
    verdict = sensitivity_score(text, scorer)
    traces.append(
        StageTrace(
            "sensitivity",
            text,
            (f"score={verdict.score:.2f}",) + verdict.matched_terms,
            (perf_counter() - start) * 1000.0,
        )
    )
    if verdict.blocked:
        gate_route = Route(RouteKind.FT, 0.0, "blocked by input sensitivity gate")
        return ComprehendResult(REFUSAL_NOTICE, gate_route, intent, tuple(traces), True)

    start = perf_counter()
    chosen = route(text, intent, verdict, weights, threshold)
    traces.append(
        StageTrace(
            "route",
            text,
            (chosen.kind.value, f"score={chosen.score:.3f}"),
            (perf_counter() - start) * 1000.0,
        )
    )

    start = perf_counter()
    if chosen.kind is RouteKind.FT:
        composition = compose_ft(text, intent, signoff)
        output = render_composition(composition, intent.content_type)
    else:
        prompt = build_llm_prompt(text, intent)
        try:
            output = adapter.complete(prompt, seed)
        except AdapterError:
            raise
        except Exception as exc:
            raise AdapterError(adapter.name, str(exc)) from exc

    blocked = False
    out_verdict = sensitivity_score(output, scorer)
    if out_verdict.blocked:
        output = REFUSAL_NOTICE
        blocked = True
    traces.append(
        StageTrace("compose", output, (chosen.kind.value,), (perf_counter() - start) * 1000.0)
    )

    return ComprehendResult(output, chosen, intent, tuple(traces), blocked)
