"""Deterministic template composer for factual (closed-ended) inputs.

It strips instruction headers, adjusts a small table of pronoun patterns,
splits telegraphic comma chains into sentences, and wraps the result in the
structure each content type expects. It never adds content words beyond
template boilerplate, which makes the no-hallucination property testable
exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import CompositionError
from .intent import ContentType, Endedness, InputType, Intent

DEFAULT_SIGNOFF = "Best,"

# Words the templates may add; everything else in the output must come
# from the input.
TEMPLATE_BOILERPLATE = frozenset({"hi", "best"})
PRONOUN_TABLE_OUTPUTS = frozenset({"you", "are", "were", "have"})

_ADDRESS_HEADER_RE = re.compile(r"^\s*(?:Email|Text)\s+([A-Z][A-Za-z']*)\s*,\s*", re.IGNORECASE)
_SEND_HEADER_RE = re.compile(
    r"^\s*Send\s+(?:an?\s+)?(?:email|message|text|note)\s+to\s+([A-Z][A-Za-z']*)\s*[.,]?\s*",
    re.IGNORECASE,
)
_RELAY_RE = re.compile(
    r"^\s*(?:please\s+)?(?:let\s+(?:him|her|them)\s+know|tell\s+(?:him|her|them))"
    r"\s*(?:that\s+)?",
    re.IGNORECASE,
)
_LEAD_PRONOUN_RE = re.compile(
    r"^(he|she|they)\s+(is|are|was|were|has|have|will|should|can|could)\b", re.IGNORECASE
)
_VERB_TO_SECOND_PERSON = {
    "is": "are", "are": "are", "was": "were", "were": "were",
    "has": "have", "have": "have", "will": "will", "should": "should",
    "can": "can", "could": "could",
}


@dataclass(frozen=True)
class Composition:
    """Structured draft: optional salutation and signoff around body paragraphs."""

    body: tuple[tuple[str, ...], ...]
    salutation: Optional[str] = None
    signoff: Optional[str] = None
    recipient: Optional[str] = None

    @property
    def sentences(self) -> list[str]:
        return [s for paragraph in self.body for s in paragraph]


def _capitalize(sentence: str) -> str:
    return sentence[:1].upper() + sentence[1:]


def _split_sentences(text: str) -> list[str]:
    pieces = re.findall(r"[^.?!]+[.?!]?", text)
    return [p.strip() for p in pieces if p.strip()]


def _split_telegraphic(sentence: str) -> list[str]:
    """Break a comma-spliced chain of short clauses into sentences."""
    terminal = sentence[-1] if sentence[-1:] in ".?!" else "."
    core = sentence[:-1] if sentence[-1:] in ".?!" else sentence
    clauses = [c.strip() for c in core.split(",") if c.strip()]
    if len(clauses) < 3 or any(len(c.split()) < 2 for c in clauses):
        return [sentence]
    out = [_capitalize(c) + "." for c in clauses[:-1]]
    out.append(_capitalize(clauses[-1]) + terminal)
    return out


def compose_ft(
    text: str, intent: Intent, signoff: str = DEFAULT_SIGNOFF
) -> Composition:
    """Deterministically compose a draft from factual input.

    Open-ended instructions must be routed to the generative path; they are
    rejected here. Open-ended dictations (telegraphic but factual) are fine.
    """
    if intent.endedness is Endedness.OPEN and intent.input_type is InputType.INSTRUCTION:
        raise CompositionError("open-ended instruction reached the template composer")

    working = text.strip()
    recipient = None
    for pattern in (_ADDRESS_HEADER_RE, _SEND_HEADER_RE):
        match = pattern.match(working)
        if match:
            recipient = match.group(1)[:1].upper() + match.group(1)[1:]
            working = working[match.end():].strip()
            break

    match = _RELAY_RE.match(working)
    if match:
        working = working[match.end():].strip()
        lead = _LEAD_PRONOUN_RE.match(working)
        if lead:
            verb = _VERB_TO_SECOND_PERSON[lead.group(2).lower()]
            working = f"you {verb}{working[lead.end():]}"

    if intent.content_type is ContentType.MESSAGE:
        body: tuple[tuple[str, ...], ...] = ((_capitalize(working),),) if working else ()
        return Composition(body=body)

    sentences: list[str] = []
    for sentence in _split_sentences(working):
        sentences.extend(_split_telegraphic(sentence))
    sentences = [_capitalize(s) for s in sentences]

    if intent.content_type is ContentType.EMAIL:
        return Composition(
            body=(tuple(sentences),) if sentences else (),
            salutation=f"Hi {recipient}," if recipient else None,
            signoff=signoff if recipient else None,
            recipient=recipient,
        )
    return Composition(body=(tuple(sentences),) if sentences else (), recipient=recipient)


def render_composition(composition: Composition, content_type: ContentType) -> str:
    """Render the structured draft in the shape its content type expects."""
    if content_type is ContentType.MESSAGE:
        return " ".join(composition.sentences)
    if content_type is ContentType.NOTES:
        return "\n".join(composition.sentences)

    blocks: list[str] = []
    if composition.salutation:
        blocks.append(composition.salutation)
    for paragraph in composition.body:
        if paragraph:
            blocks.append(" ".join(paragraph))
    if composition.signoff:
        blocks.append(composition.signoff)
    return "\n\n".join(blocks)
