"""The normalization stage: disfluency filtering, grammar fixes, punctuation.

Sub-stage order is disfluency -> GEC -> punctuation, so the punctuation
model sees grammatically corrected tokens. Input is first canonicalized to
the raw recognizer form (lowercase, punctuation stripped); already-clean
text therefore round-trips through the stage instead of confusing it.
"""

from __future__ import annotations

from time import perf_counter

from .disfluency import DEFAULT_RULES, DisfluencyRules, filter_disfluencies, tag_disfluencies
from .gec import apply_edit_tags, gec_tag
from .punct import PunctTaggerModel, apply_punct_labels, restore_punctuation
from .transcript import StageTrace, Token, Transcript, detokenize

NORMALIZE_STAGES = ("disfluency", "gec", "punctuation")


def normalize(
    transcript: Transcript,
    punct_model: PunctTaggerModel,
    rules: DisfluencyRules = DEFAULT_RULES,
) -> tuple[str, list[StageTrace]]:
    """Run the three normalization sub-stages, tracing each one."""
    traces: list[StageTrace] = []

    start = perf_counter()
    tokens = [
        Token(t.text.lower(), i)
        for i, t in enumerate(t for t in transcript.tokens if not t.is_punct)
    ]
    tags = tag_disfluencies(tokens, rules)
    kept = filter_disfluencies(tokens, tags)
    traces.append(
        StageTrace(
            "disfluency",
            detokenize(kept),
            tuple(tag.name for tag in tags),
            (perf_counter() - start) * 1000.0,
        )
    )

    start = perf_counter()
    edits = gec_tag(kept)
    edited = apply_edit_tags(kept, edits)
    traces.append(
        StageTrace(
            "gec",
            detokenize(edited),
            tuple(str(edit) for edit in edits),
            (perf_counter() - start) * 1000.0,
        )
    )

    start = perf_counter()
    labels = restore_punctuation(edited, punct_model)
    text = apply_punct_labels([t.text for t in edited], labels)
    traces.append(
        StageTrace(
            "punctuation",
            text,
            tuple(label.key() for label in labels),
            (perf_counter() - start) * 1000.0,
        )
    )

    return text, traces
