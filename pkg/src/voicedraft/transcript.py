"""Token and transcript data model shared by every pipeline stage.

Tokenization is deliberately simple: whitespace splitting plus peeling
leading/trailing punctuation into their own tokens. Every tagger in the
pipeline labels whole words, so nothing subword is needed. Text is NFC
normalized on ingestion so character spans stay stable.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

# Punctuation inventory the pipeline understands.
SUPPORTED_PUNCT = frozenset(".,;:-?!")
# Single-char tokens that attach to the preceding word when rendering.
NO_SPACE_BEFORE = frozenset(".,;:?!")

_CHUNK_RE = re.compile(r"\S+")


class Source(Enum):
    """Where a transcript came from."""

    ASR = "asr"
    FILE = "file"
    TYPED = "typed"
    SYNTHETIC = "synthetic"


@dataclass(frozen=True)
class Token:
    """A single whitespace-free unit of text.

    ``char_span`` is a half-open [start, end) offset pair into the NFC
    source text; when present, the source slice equals ``text``.
    """

    text: str
    index: int
    char_span: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if not self.text or any(c.isspace() for c in self.text):
            raise ValueError(f"token text must be non-empty without whitespace: {self.text!r}")
        if self.index < 0:
            raise ValueError(f"token index must be >= 0, got {self.index}")
        if self.char_span is not None and self.char_span[1] - self.char_span[0] != len(self.text):
            raise ValueError(f"char_span {self.char_span} does not cover {self.text!r}")

    @property
    def is_punct(self) -> bool:
        return len(self.text) == 1 and self.text in SUPPORTED_PUNCT


@dataclass(frozen=True)
class Transcript:
    """An ordered token sequence plus its provenance."""

    tokens: tuple[Token, ...]
    source: Source
    raw_text: str

    @classmethod
    def from_text(cls, text: str, source: Source = Source.TYPED) -> "Transcript":
        normalized = unicodedata.normalize("NFC", text)
        return cls(tokens=tuple(tokenize(normalized)), source=source, raw_text=normalized)

    @property
    def words(self) -> list[str]:
        return [t.text for t in self.tokens]

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class StageTrace:
    """Record of one pipeline sub-stage: resulting text, labels, timing."""

    stage_name: str
    text_after: str
    labels_applied: Optional[tuple[str, ...]] = None
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.elapsed_ms < 0:
            raise ValueError("elapsed_ms must be >= 0")


def tokenize(text: str) -> list[Token]:
    """Split text into word and punctuation tokens with character spans.

    Whitespace separates chunks; leading/trailing characters from the
    supported punctuation set become their own tokens. Apostrophes and
    in-word hyphens stay inside the word ("don't", "follow-up").
    """
    text = unicodedata.normalize("NFC", text)
    tokens: list[Token] = []

    def emit(piece: str, start: int) -> None:
        tokens.append(Token(piece, len(tokens), (start, start + len(piece))))

    for match in _CHUNK_RE.finditer(text):
        chunk, start = match.group(), match.start()
        left, right = 0, len(chunk)
        while left < right and chunk[left] in SUPPORTED_PUNCT:
            emit(chunk[left], start + left)
            left += 1
        trailing: list[int] = []
        while right > left and chunk[right - 1] in SUPPORTED_PUNCT:
            right -= 1
            trailing.append(right)
        if left < right:
            emit(chunk[left:right], start + left)
        for pos in reversed(trailing):
            emit(chunk[pos], start + pos)
    return tokens


def detokenize(tokens: Sequence[Union[Token, str]]) -> str:
    """Join tokens with spaces, attaching punctuation to the previous word.

    Inverts ``tokenize`` up to whitespace normalization.
    """
    parts: list[str] = []
    for tok in tokens:
        text = tok.text if isinstance(tok, Token) else tok
        if parts and not (len(text) == 1 and text in NO_SPACE_BEFORE):
            parts.append(" ")
        parts.append(text)
    return "".join(parts)


def word_tokens(tokens: Iterable[Token]) -> list[Token]:
    """Drop standalone punctuation tokens."""
    return [t for t in tokens if not t.is_punct]
