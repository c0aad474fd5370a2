"""Transcript acquisition: JSONL corpora, the ASR adapter contract, and a
mock recognizer that injects realistic recognition noise.

No vendor speech client ships here. Real recognizers plug in behind
``AsrAdapter``; the rest of the pipeline only sees transcripts.
"""

from __future__ import annotations

import json
import random
import re
import unicodedata
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

from .errors import DataError
from .lexicons import filler_phrases, homophone_index
from .transcript import SUPPORTED_PUNCT, Source, Token, Transcript, tokenize

CONTENT_TYPES = ("email", "message", "notes")

# Characters the mock recognizer drops entirely (quotes and other symbols a
# speech channel never produces).
_NON_SPOKEN_RE = re.compile(r"[^\w\s'\-:]", re.UNICODE)


@dataclass(frozen=True)
class NoiseConfig:
    """Tunable corruption rates for the mock recognizer."""

    homophone_rate: float = 0.0
    drop_rate: float = 0.0
    filler_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        for name in ("homophone_rate", "drop_rate", "filler_rate"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")


@dataclass(frozen=True)
class CorpusRecord:
    """One line of an evaluation corpus."""

    transcript: Transcript
    gold: Optional[str] = None
    content_type: Optional[str] = None
    gold_disfluency_tags: Optional[tuple[str, ...]] = None


class AsrAdapter(ABC):
    """Contract for external speech recognizers.

    Implementations must return transcripts with ``source == Source.ASR``.
    This is the single integration point for any future vendor client.
    """

    @property
    @abstractmethod
    def name(self) -> str: ...

    @abstractmethod
    def transcribe(self, audio_ref: Any) -> Transcript: ...


def load_jsonl(path) -> list[CorpusRecord]:
    """Read a JSON Lines corpus: one object per line, blank lines skipped.

    Each record needs a "transcript" string; "gold", "content_type" and
    "gold_disfluency_tags" are optional.
    """
    records = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"line {lineno}: invalid record ({exc.msg})") from exc
        if not isinstance(obj, dict):
            raise DataError(f"line {lineno}: invalid record (expected object)")
        transcript = obj.get("transcript")
        if not isinstance(transcript, str):
            raise DataError(f"line {lineno}: missing 'transcript' field")
        gold = obj.get("gold")
        if gold is not None and not isinstance(gold, str):
            raise DataError(f"line {lineno}: 'gold' must be a string")
        content_type = obj.get("content_type")
        if content_type is not None and content_type not in CONTENT_TYPES:
            raise DataError(
                f"line {lineno}: content_type must be one of {'|'.join(CONTENT_TYPES)}"
            )
        tags = obj.get("gold_disfluency_tags")
        if tags is not None:
            if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
                raise DataError(f"line {lineno}: 'gold_disfluency_tags' must be a string list")
            tags = tuple(tags)
        records.append(
            CorpusRecord(
                transcript=Transcript.from_text(transcript, Source.FILE),
                gold=gold,
                content_type=content_type,
                gold_disfluency_tags=tags,
            )
        )
    return records


def asr_strip(text: str) -> list[str]:
    """Reduce text to the raw lowercase word stream a recognizer emits.

    Supported punctuation and casing are removed; apostrophes and in-word
    hyphens survive ("they're", "follow-up").
    """
    text = unicodedata.normalize("NFC", text).lower()
    text = _NON_SPOKEN_RE.sub(" ", text)
    return [t.text for t in tokenize(text) if not t.is_punct]


def mock_asr(clean_text: str, config: NoiseConfig) -> Transcript:
    """Simulate recognition: strip punctuation/case, then corrupt.

    Eligible words swap for homophones with ``homophone_rate``, words drop
    with ``drop_rate``, and fillers land in inter-word gaps with
    ``filler_rate``. Pure function of (clean_text, config).
    """
    rng = random.Random(config.seed)
    lexicon = homophone_index()
    fillers = filler_phrases()

    kept: list[str] = []
    for word in asr_strip(clean_text):
        group = lexicon.get(word)
        if group is not None and rng.random() < config.homophone_rate:
            variants = [v for v in group if v != word]
            word = rng.choice(variants)
        if rng.random() < config.drop_rate:
            continue
        kept.append(word)

    out: list[str] = []
    for gap in range(len(kept) + 1):
        if rng.random() < config.filler_rate:
            out.extend(rng.choice(fillers).split())
        if gap < len(kept):
            out.append(kept[gap])

    return Transcript.from_text(" ".join(out), Source.ASR)
