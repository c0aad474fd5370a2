"""Chat-model adapter contract, prompt templates, and a deterministic mock.

No real chat client ships here; ``LlmAdapter`` is the integration point.
Prompts embed the normalized text verbatim (no escaping games) and push
hard for brevity and faithfulness, since generative models tend toward
verbosity and invented details.
"""

from __future__ import annotations

import hashlib
import random
from abc import ABC, abstractmethod

from .intent import ContentType, Intent

PROMPT_VERSION = "pt-1"

_FORMAT_NAME = {
    ContentType.EMAIL: "email",
    ContentType.MESSAGE: "message",
    ContentType.NOTES: "note",
}

_PAYLOAD_OPEN = "<<<"
_PAYLOAD_CLOSE = ">>>"


def build_llm_prompt(text: str, intent: Intent) -> str:
    """Fixed per-content-type prompt; deterministic, text embedded verbatim."""
    kind = _FORMAT_NAME[intent.content_type]
    lines = [
        f"You are a writing assistant composing a {kind}. [{PROMPT_VERSION}]",
        f"Rewrite the request below into a complete, well-formatted {kind}.",
        "Keep it brief. Use only details present in the request; do not invent any.",
        "",
        f"Request: {_PAYLOAD_OPEN}{text}{_PAYLOAD_CLOSE}",
        "",
        "Draft:",
    ]
    return "\n".join(lines)


class LlmAdapter(ABC):
    """Contract for pluggable chat-model backends."""

    @property
    @abstractmethod
    def name(self) -> str: ...

    @abstractmethod
    def complete(self, prompt: str, seed: int) -> str: ...


def _stable_hash(text: str) -> int:
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")


class MockLlm(LlmAdapter):
    """Deterministic stand-in: echoes the request with seed-varied framing.

    Output is a pure function of (prompt, seed); different seeds produce
    different framings so "regenerate" visibly changes the draft.
    """

    _OPENERS = ("", "Quick draft: ", "Here goes: ", "As requested: ")
    _CLOSERS = ("", " Hope this works.", " Let me know what you think.")

    @property
    def name(self) -> str:
        return "mock"

    def complete(self, prompt: str, seed: int) -> str:
        rng = random.Random(seed ^ _stable_hash(prompt))
        start = prompt.find(_PAYLOAD_OPEN)
        end = prompt.rfind(_PAYLOAD_CLOSE)
        payload = prompt[start + len(_PAYLOAD_OPEN):end] if 0 <= start < end else prompt
        payload = payload.strip()
        if payload and payload[-1] not in ".?!":
            payload += "."
        body = payload[:1].upper() + payload[1:]
        return f"{rng.choice(self._OPENERS)}{body}{rng.choice(self._CLOSERS)}"
