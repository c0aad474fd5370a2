"""Dictionary-based sensitivity scoring with a blocking tier.

Matching is word-boundary and case-insensitive, so "Scunthorpe" never
trips a substring. The lexicon scorer can be swapped for any object with
the same ``score(text)`` signature (e.g. a learned classifier).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Protocol

from .lexicons import sensitivity_terms

BLOCK_THRESHOLD = 0.8
_TIER_WEIGHT = {"score": 0.4, "block": 1.0}


@dataclass(frozen=True)
class SensitivityVerdict:
    score: float
    matched_terms: tuple[str, ...]
    blocked: bool


class SensitivityScorer(Protocol):
    def score(self, text: str) -> SensitivityVerdict: ...


class LexiconScorer:
    """Saturating weighted count of matched lexicon terms."""

    def __init__(self, terms=None, block_threshold: float = BLOCK_THRESHOLD):
        if terms is None:
            terms = sensitivity_terms()
        self.block_threshold = block_threshold
        self._patterns = [
            (term, tier, re.compile(rf"\b{re.escape(term)}\b", re.IGNORECASE))
            for term, tier in terms
        ]

    def score(self, text: str) -> SensitivityVerdict:
        matched = []
        raw = 0.0
        for term, tier, pattern in self._patterns:
            if pattern.search(text):
                matched.append(term)
                raw += _TIER_WEIGHT[tier]
        score = min(1.0, raw)
        return SensitivityVerdict(
            score=score,
            matched_terms=tuple(matched),
            blocked=score >= self.block_threshold,
        )


_default_scorer: Optional[LexiconScorer] = None


def sensitivity_score(text: str, scorer: Optional[SensitivityScorer] = None) -> SensitivityVerdict:
    global _default_scorer
    if scorer is None:
        if _default_scorer is None:
            _default_scorer = LexiconScorer()
        scorer = _default_scorer
    return scorer.score(text)
