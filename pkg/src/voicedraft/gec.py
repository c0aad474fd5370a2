"""Grammatical error correction as per-token edit tags.

A deliberately small demonstrative rule set drives a general edit-tag
application engine: keep/delete/append/replace/capitalize, applied in a
single left-to-right pass. The engine is the reusable part; richer taggers
can emit the same tags.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .transcript import Token

VOWELS = frozenset("aeiou")

# Doubled occurrences of these are treated as typos rather than disfluencies
# (the disfluency stage normally catches them first; this is a backstop).
FUNCTION_WORDS = frozenset(
    "the a an to of in on at and or is it that this with for".split()
)


class EditKind(Enum):
    KEEP = "keep"
    DELETE = "delete"
    APPEND = "append"
    REPLACE = "replace"
    CASE_CAPITAL = "case_capital"


@dataclass(frozen=True)
class EditTag:
    kind: EditKind
    word: Optional[str] = None

    def __post_init__(self):
        needs_word = self.kind in (EditKind.APPEND, EditKind.REPLACE)
        if needs_word and not self.word:
            raise ValueError(f"{self.kind.name} requires a word payload")
        if not needs_word and self.word is not None:
            raise ValueError(f"{self.kind.name} takes no payload")

    def __str__(self) -> str:
        if self.word is not None:
            return f"{self.kind.name}({self.word})"
        return self.kind.name


KEEP = EditTag(EditKind.KEEP)
DELETE = EditTag(EditKind.DELETE)
CASE_CAPITAL = EditTag(EditKind.CASE_CAPITAL)


def append(word: str) -> EditTag:
    return EditTag(EditKind.APPEND, word)


def replace(word: str) -> EditTag:
    return EditTag(EditKind.REPLACE, word)


def _match_case(word: str, like: str) -> str:
    if like[:1].isupper():
        return word[:1].upper() + word[1:]
    return word


def gec_tag(tokens: Sequence[Token | str]) -> list[EditTag]:
    """Rule tagger: a/an agreement, standalone "i", doubled function words."""
    texts = [t.text if isinstance(t, Token) else t for t in tokens]
    words = [t.casefold() for t in texts]
    tags: list[EditTag] = []
    for i, w in enumerate(words):
        nxt = words[i + 1] if i + 1 < len(words) else ""
        if w in FUNCTION_WORDS and nxt == w:
            tags.append(DELETE)
        elif w == "a" and nxt[:1] in VOWELS:
            tags.append(replace(_match_case("an", texts[i])))
        elif w == "an" and nxt[:1].isalpha() and nxt[:1] not in VOWELS:
            tags.append(replace(_match_case("a", texts[i])))
        elif texts[i] == "i":
            tags.append(CASE_CAPITAL)
        else:
            tags.append(KEEP)
    return tags


def apply_edit_tags(tokens: Sequence[Token], tags: Sequence[EditTag]) -> list[Token]:
    """Apply edit tags in one left-to-right pass; no iterative refinement."""
    if len(tokens) != len(tags):
        raise ValueError(f"{len(tokens)} tokens but {len(tags)} tags")
    out: list[Token] = []

    def emit(text: str, span=None) -> None:
        out.append(Token(text, len(out), span))

    for token, tag in zip(tokens, tags):
        if tag.kind is EditKind.KEEP:
            emit(token.text, token.char_span)
        elif tag.kind is EditKind.DELETE:
            continue
        elif tag.kind is EditKind.REPLACE:
            emit(tag.word)
        elif tag.kind is EditKind.APPEND:
            emit(token.text, token.char_span)
            emit(tag.word)
        elif tag.kind is EditKind.CASE_CAPITAL:
            emit(token.text[:1].upper() + token.text[1:])
    return out
