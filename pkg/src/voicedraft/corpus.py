"""Gold-annotated corpus manufacture.

Clean text goes in; noisy transcripts come out with the injected noise
positions recorded as gold disfluency tags. This closes the evaluation
loop without any human annotation: repeats become REPETITION gold, fillers
become RESTART gold, homophone swaps and word noise leave tags alone.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .asr import asr_strip
from .augment import (
    AugmentationKind,
    AugmentationSpec,
    _insert_fillers,
    _repeat_content,
    _swap_homophones,
    _word_noise,
)
from .disfluency import DisfluencyTag
from .errors import DataError

_SUPPORTED_NOISE = (
    AugmentationKind.HOMOPHONES,
    AugmentationKind.FILLERS,
    AugmentationKind.REPEAT_CONTENT,
    AugmentationKind.WORD_NOISE,
)


@dataclass(frozen=True)
class GoldRecord:
    transcript: str
    gold: str
    gold_disfluency_tags: tuple[str, ...]
    content_type: Optional[str] = None

    def to_json(self) -> str:
        payload = {
            "transcript": self.transcript,
            "gold": self.gold,
            "gold_disfluency_tags": list(self.gold_disfluency_tags),
        }
        if self.content_type:
            payload["content_type"] = self.content_type
        return json.dumps(payload, ensure_ascii=False)


def manufacture_record(
    line: str,
    specs: Sequence[AugmentationSpec],
    rng: random.Random,
    content_type: Optional[str] = None,
) -> GoldRecord:
    """Corrupt one clean line, tracking which tokens became disfluent.

    Noise is applied to the recognizer-form word stream (lowercase, no
    punctuation) in a fixed order: homophones, then fillers, then repeats,
    so repeated copies stay identical and filler insertions never split a
    repeat pair.
    """
    words = asr_strip(line)
    tags = [DisfluencyTag.FLUENT.name] * len(words)
    by_kind = {spec.kind: spec for spec in specs}
    for spec in specs:
        if spec.kind not in _SUPPORTED_NOISE:
            raise DataError(f"unsupported corpus noise kind: {spec.kind.value}")

    spec = by_kind.get(AugmentationKind.HOMOPHONES)
    if spec:
        words = _swap_homophones(words, spec.rate, rng)

    spec = by_kind.get(AugmentationKind.WORD_NOISE)
    if spec:
        before = list(words)
        words = _word_noise(words, spec.rate, rng)
        # Word noise invalidates positional tags; rebuild (all fluent).
        tags = [DisfluencyTag.FLUENT.name] * len(words)
        del before

    spec = by_kind.get(AugmentationKind.FILLERS)
    if spec:
        words, inserted = _insert_fillers(words, spec.rate, rng)
        new_tags = [DisfluencyTag.FLUENT.name] * len(words)
        kept_positions = [i for i in range(len(words)) if i not in set(inserted)]
        for old_tag, new_pos in zip(tags, kept_positions):
            new_tags[new_pos] = old_tag
        for pos in inserted:
            new_tags[pos] = DisfluencyTag.RESTART.name
        tags = new_tags

    spec = by_kind.get(AugmentationKind.REPEAT_CONTENT)
    if spec:
        repeatable = [tag == DisfluencyTag.FLUENT.name for tag in tags]
        new_words, firsts = _repeat_content(words, spec.rate, rng, repeatable=repeatable)
        first_set = set(firsts)
        new_tags = []
        old_iter = iter(tags)
        for pos in range(len(new_words)):
            if pos in first_set:
                new_tags.append(DisfluencyTag.REPETITION.name)
            else:
                new_tags.append(next(old_iter))
        words, tags = new_words, new_tags

    return GoldRecord(
        transcript=" ".join(words),
        gold=line.strip(),
        gold_disfluency_tags=tuple(tags),
        content_type=content_type,
    )


def manufacture_records(
    lines: Sequence[str],
    specs: Sequence[AugmentationSpec],
    seed: int = 0,
    content_type: Optional[str] = None,
) -> list[GoldRecord]:
    """One record per non-blank line, each with its own derived seed."""
    records = []
    for i, line in enumerate(lines):
        if not line.strip():
            continue
        rng = random.Random(f"{seed}:{i}")
        records.append(manufacture_record(line, specs, rng, content_type))
    return records


def write_jsonl(records: Sequence[GoldRecord], path) -> None:
    from pathlib import Path

    Path(path).write_text("".join(r.to_json() + "\n" for r in records), encoding="utf-8")
