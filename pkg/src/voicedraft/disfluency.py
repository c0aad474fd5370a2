"""Rule-based speech disfluency tagging and filtering.

The reference tagger covers the three classic disfluency categories plus
filled pauses: adjacent repeated n-grams, corrections signalled by cue
phrases ("i mean", "no wait"), abandoned utterance starts, and fillers
(uh, um). Filtering only ever deletes tokens; it never rewrites them.

Any alternative tagger with the same ``tag_disfluencies`` signature can
replace this one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .lexicons import STOPWORDS, filler_words
from .transcript import Token


class DisfluencyTag(Enum):
    FLUENT = "fluent"
    REPETITION = "repetition"
    REPLACEMENT = "replacement"
    RESTART = "restart"


# Cue phrases that signal a self-correction. Multi-word cues are strong
# enough to tag on their own; single-word cues ("sorry", "rather") only
# fire when a parallel span confirms the correction, since they are common
# in fluent speech.
STRONG_CUES = (("no", "wait"), ("i", "mean"))
WEAK_CUES = (("sorry",), ("rather",))

# A fresh start after an abandoned fragment begins with one of these.
RESTART_PRONOUNS = frozenset({"i", "we", "let's", "lets"})
# Only verbs that rarely appear as nouns right after a determiner phrase;
# "call", "email", "note", "schedule" are too ambiguous.
RESTART_IMPERATIVES = frozenset({"send", "write", "remember", "pick", "please"})

# An abandoned fragment is a determiner-initial noun phrase ("the meeting",
# "a quick thing"); anything else is too likely to be fluent syntax.
FRAGMENT_OPENERS = frozenset({"the", "a", "an", "this", "that", "my", "our", "so", "and"})

# Words that disqualify a prefix from being a verbless fragment.
_VERBISH = frozenset(
    """
    is are was were am be been being do does did have has had
    will would can could should shall may might must
    want need think know go going gonna get got see said says say
    come coming make makes made take takes took
    """.split()
)
_FRAGMENT_BLOCKLIST = (
    _VERBISH
    | RESTART_PRONOUNS
    | RESTART_IMPERATIVES
    | {"you", "he", "she", "it", "they", "please"}
)


@dataclass(frozen=True)
class DisfluencyRules:
    """Thresholds for the rule tagger."""

    max_repeat_ngram: int = 4
    max_parallel_span: int = 3
    max_fragment_len: int = 3  # fragments shorter than 4 tokens
    fillers: frozenset[str] = field(default_factory=filler_words)


DEFAULT_RULES = DisfluencyRules()


def _words(tokens: Sequence[Token | str]) -> list[str]:
    return [(t.text if isinstance(t, Token) else t).casefold() for t in tokens]


def _mark(tags: list[DisfluencyTag], start: int, end: int, tag: DisfluencyTag) -> None:
    for i in range(start, end):
        if tags[i] is DisfluencyTag.FLUENT:
            tags[i] = tag


def _tag_fillers(words, tags, rules):
    for i, w in enumerate(words):
        if w in rules.fillers:
            tags[i] = DisfluencyTag.RESTART


def _tag_repetitions(words, tags, rules):
    n_tokens = len(words)
    for n in range(1, rules.max_repeat_ngram + 1):
        i = 0
        while i + 2 * n <= n_tokens:
            same = words[i : i + n] == words[i + n : i + 2 * n]
            untouched = all(tags[j] is DisfluencyTag.FLUENT for j in range(i, i + 2 * n))
            if same and untouched:
                _mark(tags, i, i + n, DisfluencyTag.REPETITION)
                i += n
            else:
                i += 1


def _shape(word: str) -> str:
    if any(c.isdigit() for c in word):
        return "digit"
    return "alpha"


def _parallel(before: list[str], after: list[str]) -> bool:
    """Heuristic structural parallelism between a reparandum and its repair."""
    if len(before) == 1:
        b, a = before[0], after[0]
        return b != a and _shape(b) == _shape(a) and b not in STOPWORDS and a not in STOPWORDS
    return before[0] == after[0] or before[-1] == after[-1]


def _tag_replacements(words, tags, rules):
    n_tokens = len(words)
    for cue in STRONG_CUES + WEAK_CUES:
        width = len(cue)
        for i in range(n_tokens - width + 1):
            if tuple(words[i : i + width]) != cue:
                continue
            if any(tags[j] is not DisfluencyTag.FLUENT for j in range(i, i + width)):
                continue
            end = i + width
            matched = 0
            for n in range(min(rules.max_parallel_span, i, n_tokens - end), 0, -1):
                if _parallel(words[i - n : i], words[end : end + n]):
                    matched = n
                    break
            if matched:
                _mark(tags, i - matched, end, DisfluencyTag.REPLACEMENT)
            elif cue in STRONG_CUES:
                _mark(tags, i, end, DisfluencyTag.REPLACEMENT)


def _tag_restart(words, tags, rules):
    if not words or words[0] not in FRAGMENT_OPENERS:
        return
    limit = min(rules.max_fragment_len, len(words) - 1)
    for k in range(1, limit + 1):
        marker = words[k]
        if marker in RESTART_PRONOUNS or marker in RESTART_IMPERATIVES:
            fragment = words[:k]
            if all(w not in _FRAGMENT_BLOCKLIST for w in fragment) and all(
                tags[j] is DisfluencyTag.FLUENT for j in range(k)
            ):
                _mark(tags, 0, k, DisfluencyTag.RESTART)
            return


def tag_disfluencies(
    tokens: Sequence[Token | str], rules: DisfluencyRules = DEFAULT_RULES
) -> list[DisfluencyTag]:
    """Tag each token; non-FLUENT tokens are removal candidates."""
    words = _words(tokens)
    tags = [DisfluencyTag.FLUENT] * len(words)
    _tag_fillers(words, tags, rules)
    _tag_repetitions(words, tags, rules)
    _tag_replacements(words, tags, rules)
    _tag_restart(words, tags, rules)
    return tags


def filter_disfluencies(
    tokens: Sequence[Token], tags: Sequence[DisfluencyTag]
) -> list[Token]:
    """Drop non-FLUENT tokens, preserving order and reassigning indices.

    Never inserts or substitutes anything.
    """
    if len(tokens) != len(tags):
        raise ValueError(f"{len(tokens)} tokens but {len(tags)} tags")
    kept = []
    for token, tag in zip(tokens, tags):
        if tag is DisfluencyTag.FLUENT:
            kept.append(Token(token.text, len(kept), token.char_span))
    return kept
