"""Binary routing between the template composer and the chat-model adapter.

A linear scorer over a handful of interpretable features picks the route;
a sensitivity penalty pulls sensitive inputs toward the faithful template
path. The hand weights can be replaced by perceptron-trained ones from a
labelled dataset.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional

from .errors import DataError
from .intent import Endedness, InputType, Intent, has_creativity_cue
from .sensitivity import SensitivityVerdict
from .transcript import tokenize

ROUTER_THRESHOLD = 0.5
LONG_INPUT_TOKENS = 40


class RouteKind(Enum):
    FT = "FT"
    LLM = "LLM"


@dataclass(frozen=True)
class Route:
    kind: RouteKind
    score: float  # LLM propensity in [0, 1]
    reason: str


@dataclass(frozen=True)
class RouterWeights:
    bias: float = -1.0
    open_ended: float = 0.8
    creativity: float = 1.2
    instruction: float = 0.4
    entity_density: float = -0.8
    long_input: float = -0.3
    # Must dominate the largest achievable positive margin so that
    # sensitivity.score == 1.0 always lands on FT.
    sensitivity_penalty: float = -2.5

    def scaled(self, factor: float) -> "RouterWeights":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return RouterWeights(**{k: v * factor for k, v in self.__dict__.items()})


DEFAULT_WEIGHTS = RouterWeights()


def entity_density(text: str) -> float:
    """Fraction of tokens that look like entities (names, numbers)."""
    tokens = tokenize(text)
    words = [t for t in tokens if not t.is_punct]
    if not words:
        return 0.0
    count = 0
    sentence_start = True
    for token in tokens:
        if token.is_punct:
            sentence_start = token.text in ".?!"
            continue
        if any(c.isdigit() for c in token.text):
            count += 1
        elif token.text[:1].isupper() and not sentence_start:
            count += 1
        sentence_start = False
    return count / len(words)


def route_features(text: str, intent: Intent) -> dict[str, float]:
    words = [t for t in tokenize(text) if not t.is_punct]
    return {
        "open_ended": 1.0 if intent.endedness is Endedness.OPEN else 0.0,
        "creativity": 1.0 if has_creativity_cue(text) else 0.0,
        "instruction": 1.0 if intent.input_type is InputType.INSTRUCTION else 0.0,
        "entity_density": entity_density(text),
        "long_input": 1.0 if len(words) > LONG_INPUT_TOKENS else 0.0,
    }


def route(
    text: str,
    intent: Intent,
    sensitivity: SensitivityVerdict,
    weights: RouterWeights = DEFAULT_WEIGHTS,
    threshold: float = ROUTER_THRESHOLD,
) -> Route:
    """Deterministic linear routing with a sensitivity gate."""
    feats = route_features(text, intent)
    linear = weights.bias + sum(getattr(weights, name) * value for name, value in feats.items())
    linear += weights.sensitivity_penalty * sensitivity.score
    score = 1.0 / (1.0 + math.exp(-linear))

    active = sorted(name for name, value in feats.items() if value)
    if sensitivity.score > 0:
        active.append(f"sensitivity={sensitivity.score:.2f}")
    reason = "+".join(active) if active else "no signals"

    if sensitivity.blocked:
        return Route(RouteKind.FT, score, f"sensitivity gate ({reason})")
    kind = RouteKind.LLM if score > threshold else RouteKind.FT
    return Route(kind, score, reason)


def load_router_dataset(path) -> list[tuple[str, str]]:
    """JSONL records {text, label: FT|LLM}."""
    records = []
    for lineno, raw in enumerate(Path(path).read_text("utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"line {lineno}: invalid record ({exc.msg})") from exc
        text, label = obj.get("text"), obj.get("label")
        if not isinstance(text, str) or label not in ("FT", "LLM"):
            raise DataError(f"line {lineno}: expected {{text, label: FT|LLM}}")
        records.append((text, label))
    return records


def train_router(
    records: Iterable[tuple[str, str]],
    epochs: int = 10,
    seed: int = 7,
    classify=None,
) -> RouterWeights:
    """Averaged perceptron over the same feature set as the hand weights.

    ``classify`` maps text to an Intent; defaults to ``classify_intent``.
    """
    from .intent import classify_intent

    classify = classify or classify_intent
    data = [(route_features(text, classify(text)), 1.0 if label == "LLM" else -1.0)
            for text, label in records]
    if not data:
        raise DataError("router dataset is empty")

    names = ["bias", "open_ended", "creativity", "instruction", "entity_density", "long_input"]
    w = {name: 0.0 for name in names}
    totals = {name: 0.0 for name in names}
    rng = random.Random(seed)
    order = list(range(len(data)))
    steps = 0
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            feats, y = data[idx]
            vector = {"bias": 1.0, **feats}
            margin = sum(w[name] * vector[name] for name in names)
            if y * margin <= 0:
                for name in names:
                    w[name] += y * vector[name]
            for name in names:
                totals[name] += w[name]
            steps += 1
    averaged = {name: totals[name] / steps for name in names}
    return replace(
        RouterWeights(**averaged),
        sensitivity_penalty=-(2.5 * max(1.0, max(abs(v) for v in averaged.values()))),
    )
