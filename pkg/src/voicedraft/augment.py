"""Seeded, deterministic text augmentations.

Eight transforms reusable by the mock recognizer, synthetic-corpus
construction, and robustness tests. Every kind is the identity at rate 0
and a pure function of (spec, text). CLI chain syntax: "kind:rate:seed"
entries joined by commas.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import DataError
from .lexicons import (
    INSERTABLE_WORDS,
    MONTHS,
    STOPWORDS,
    WEEKDAYS,
    filler_phrases,
    homophone_index,
    nonwestern_names,
    western_names,
)


class AugmentationKind(Enum):
    HOMOPHONES = "homophones"
    FILLERS = "fillers"
    STRIP_PUNCT = "strip_punct"
    REPEAT_CONTENT = "repeat_content"
    WORD_NOISE = "word_noise"
    SENTENCE_SHUFFLE = "sentence_shuffle"
    GENDER_NEUTRAL = "gender_neutral"
    NAME_DATE_SWAP = "name_date_swap"


@dataclass(frozen=True)
class AugmentationSpec:
    kind: AugmentationKind
    rate: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.kind, AugmentationKind):
            raise DataError(f"unknown augmentation kind: {self.kind!r}")
        if not 0.0 <= self.rate <= 1.0:
            raise ValueError(f"rate must be in [0, 1], got {self.rate}")
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")


_GENDERED = {
    "he": "they", "she": "they",
    "him": "them",
    "his": "their", "hers": "theirs",
    "himself": "themselves", "herself": "themselves",
    "he's": "they're", "she's": "they're",
}
_WORD_RE = re.compile(r"[A-Za-z']+")
_SENTENCE_SPLIT_RE = re.compile(r"(?<=[.?!])\s+")
_JOINABLE_PERIOD_RE = re.compile(r"(?<=\w)\.")


def _match_case(replacement: str, original: str) -> str:
    if original.isupper() and len(original) > 1:
        return replacement.upper()
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def _split_word(token: str) -> tuple[str, str, str]:
    """Split a whitespace token into (prefix punct, core, suffix punct)."""
    match = re.match(r"^([^\w]*)(.*?)([^\w']*)$", token)
    return match.group(1), match.group(2), match.group(3)


def _swap_homophones(words: list[str], rate: float, rng: random.Random) -> list[str]:
    index = homophone_index()
    out = []
    for token in words:
        prefix, core, suffix = _split_word(token)
        group = index.get(core.lower())
        if group and rng.random() < rate:
            variant = rng.choice([v for v in group if v != core.lower()])
            core = _match_case(variant, core)
        out.append(prefix + core + suffix)
    return out


def _insert_fillers(
    words: list[str], rate: float, rng: random.Random
) -> tuple[list[str], list[int]]:
    fillers = filler_phrases()
    out: list[str] = []
    inserted: list[int] = []
    for gap in range(len(words) + 1):
        if rng.random() < rate:
            for piece in rng.choice(fillers).split():
                inserted.append(len(out))
                out.append(piece)
        if gap < len(words):
            out.append(words[gap])
    return out, inserted


def _repeat_content(
    words: list[str],
    rate: float,
    rng: random.Random,
    max_span: int = 3,
    repeatable: Optional[list[bool]] = None,
) -> tuple[list[str], list[int]]:
    """Duplicate words/short phrases in place.

    Returns the new words plus the indices of the first copies (the
    positions a disfluency filter should remove). Spans adjacent to an
    identical token are skipped so duplicates stay unambiguous.
    """
    out: list[str] = []
    firsts: list[int] = []
    i = 0
    while i < len(words):
        eligible = repeatable[i] if repeatable is not None else True
        if eligible and rng.random() < rate:
            span = 1 if rng.random() < 0.7 else rng.randint(2, max_span)
            span = min(span, len(words) - i)
            if repeatable is not None:
                while span > 1 and not all(repeatable[i : i + span]):
                    span -= 1
            chunk = words[i : i + span]
            boundary_clash = (
                (out and out[-1].lower() == chunk[0].lower())
                or (i + span < len(words) and words[i + span].lower() == chunk[-1].lower())
            )
            if not boundary_clash:
                firsts.extend(range(len(out), len(out) + span))
                out.extend(chunk)
                out.extend(chunk)
                i += span
                continue
        out.append(words[i])
        i += 1
    return out, firsts


def _is_entity(token: str) -> bool:
    _, core, _ = _split_word(token)
    return bool(core) and (core[:1].isupper() or any(c.isdigit() for c in core))


def _word_noise(words: list[str], rate: float, rng: random.Random) -> list[str]:
    out: list[str] = []
    for word in words:
        if rng.random() < rate / 2 and not _is_entity(word):
            _, core, suffix = _split_word(word)
            if core.lower() in STOPWORDS and not suffix:
                continue  # drop it
        out.append(word)
        if rng.random() < rate / 2:
            out.append(rng.choice(INSERTABLE_WORDS))
    return out


def _shuffle_sentences(text: str, rate: float, rng: random.Random) -> str:
    if rng.random() >= rate:
        return text
    sentences = [s for s in _SENTENCE_SPLIT_RE.split(text) if s]
    rng.shuffle(sentences)
    return " ".join(sentences)


def _strip_periods(text: str, rate: float, rng: random.Random) -> str:
    return _JOINABLE_PERIOD_RE.sub(lambda m: "" if rng.random() < rate else m.group(), text)


def _gender_neutral_text(text: str) -> str:
    def sub(match: re.Match) -> str:
        word = match.group()
        target = _GENDERED.get(word.lower())
        if target is None and word.lower() == "her":
            rest = text[match.end():]
            follows_word = re.match(r"\s+[A-Za-z]", rest) is not None
            target = "their" if follows_word else "them"
        if target is None:
            return word
        return _match_case(target, word)

    return _WORD_RE.sub(sub, text)


def _swap_names_dates(text: str, rate: float, rng: random.Random) -> str:
    western = {name.lower(): name for name in western_names()}
    pool = nonwestern_names()
    day_offset = rng.randint(1, 6)

    def sub(match: re.Match) -> str:
        word = match.group()
        low = word.lower()
        if low in western and rng.random() < rate:
            return _match_case(rng.choice(pool), word)
        if low in WEEKDAYS and rng.random() < rate:
            shifted = WEEKDAYS[(WEEKDAYS.index(low) + day_offset) % 7]
            return _match_case(shifted, word)
        if low in MONTHS and rng.random() < rate:
            shifted = MONTHS[(MONTHS.index(low) + day_offset) % 12]
            return _match_case(shifted, word)
        return word

    return _WORD_RE.sub(sub, text)


def apply_augmentation(spec: AugmentationSpec, text: str) -> str:
    """Apply one augmentation; deterministic under the spec's seed."""
    if spec.rate == 0.0:
        return text
    rng = random.Random(spec.seed)
    kind = spec.kind
    if kind in (
        AugmentationKind.HOMOPHONES,
        AugmentationKind.FILLERS,
        AugmentationKind.REPEAT_CONTENT,
        AugmentationKind.WORD_NOISE,
    ):
        words = text.split()
        if kind is AugmentationKind.HOMOPHONES:
            words = _swap_homophones(words, spec.rate, rng)
        elif kind is AugmentationKind.FILLERS:
            words, _ = _insert_fillers(words, spec.rate, rng)
        elif kind is AugmentationKind.REPEAT_CONTENT:
            words, _ = _repeat_content(words, spec.rate, rng)
        else:
            words = _word_noise(words, spec.rate, rng)
        return " ".join(words)
    if kind is AugmentationKind.STRIP_PUNCT:
        return _strip_periods(text, spec.rate, rng)
    if kind is AugmentationKind.SENTENCE_SHUFFLE:
        return _shuffle_sentences(text, spec.rate, rng)
    if kind is AugmentationKind.GENDER_NEUTRAL:
        return _gender_neutral_text(text) if rng.random() < spec.rate else text
    if kind is AugmentationKind.NAME_DATE_SWAP:
        return _swap_names_dates(text, spec.rate, rng)
    raise DataError(f"unknown augmentation kind: {kind!r}")


def compose_augmentations(specs: list[AugmentationSpec], text: str) -> str:
    """Left-to-right composition; equals iterated apply_augmentation."""
    for spec in specs:
        text = apply_augmentation(spec, text)
    return text


def parse_augmentation_chain(chain: str, default_seed: int = 0) -> list[AugmentationSpec]:
    """Parse "kind:rate[:seed]" entries separated by commas."""
    specs = []
    for entry in chain.split(","):
        entry = entry.strip()
        if not entry:
            continue
        parts = entry.split(":")
        if len(parts) not in (2, 3):
            raise DataError(f"augmentation entry must be kind:rate[:seed]: {entry!r}")
        name = parts[0].strip().lower()
        try:
            kind = AugmentationKind(name)
        except ValueError:
            valid = ", ".join(k.value for k in AugmentationKind)
            raise DataError(f"unknown augmentation kind {name!r} (choose from {valid})")
        try:
            rate = float(parts[1])
            seed = int(parts[2]) if len(parts) == 3 else default_seed
        except ValueError as exc:
            raise DataError(f"bad augmentation entry {entry!r}: {exc}") from exc
        specs.append(AugmentationSpec(kind=kind, rate=rate, seed=seed))
    if not specs:
        raise DataError("empty augmentation chain")
    return specs
