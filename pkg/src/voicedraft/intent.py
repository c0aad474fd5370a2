"""Intent classification over three axes: input type, content type, endedness.

The axes drive everything downstream: templates and prompts need an
explicit content type, the router needs endedness and creativity cues.
Rules are feature-based and deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class InputType(Enum):
    DICTATION = "dictation"
    INSTRUCTION = "instruction"


class ContentType(Enum):
    EMAIL = "email"
    MESSAGE = "message"
    NOTES = "notes"


class Endedness(Enum):
    OPEN = "open"
    CLOSED = "closed"


@dataclass(frozen=True)
class Intent:
    input_type: InputType
    content_type: ContentType
    endedness: Endedness


IMPERATIVE_VERBS = frozenset(
    """
    write send email text reply draft compose make create
    pick add remind schedule set note call
    """.split()
)

# "Email Sam, ..." is direct address followed by dictated content, not a
# command about content; it stays dictation. "Send an email to Joe." or
# "Email the team about X" are commands.
_DIRECT_ADDRESS_RE = re.compile(r"^\s*(?:[Ee]mail|[Tt]ext)\s+[A-Z][A-Za-z']*\s*,")

_EMAIL_CUES = re.compile(r"\b(email|dear|regards|inbox)\b", re.IGNORECASE)
_MESSAGE_CUES = re.compile(r"\b(hey|text|message|reply|chat)\b", re.IGNORECASE)
_SECOND_PERSON = re.compile(r"\byou\b", re.IGNORECASE)

CREATIVITY_RE = re.compile(
    r"\bwrite\s+(?:a|an|some)\b"
    r"|\bmake\s+(?:it|the|this)\b"
    r"|\bfrom the perspective\b"
    r"|\b(witty|funny|thoughtful|creative|heartfelt|poetic|inspiring|catchy)\b"
    r"|\b(blog post|poem|story|joke|wish|slogan)\b",
    re.IGNORECASE,
)


def has_creativity_cue(text: str) -> bool:
    """Does the input ask for content beyond the supplied facts?"""
    return CREATIVITY_RE.search(text) is not None


def _first_word(text: str) -> str:
    match = re.search(r"[A-Za-z']+", text)
    return match.group().lower() if match else ""


def _sentences(text: str) -> list[str]:
    return [s for s in re.split(r"(?<=[.?!])\s+", text) if s.strip()]


def classify_intent(text: str) -> Intent:
    """Classify normalized (punctuated) text along the three axes."""
    lead = _first_word(text)
    direct_address = _DIRECT_ADDRESS_RE.match(text) is not None
    instruction = lead in IMPERATIVE_VERBS and not direct_address
    input_type = InputType.INSTRUCTION if instruction else InputType.DICTATION

    if _EMAIL_CUES.search(text):
        content = ContentType.EMAIL
    elif _MESSAGE_CUES.search(text):
        content = ContentType.MESSAGE
    elif "?" in text and _SECOND_PERSON.search(text):
        content = ContentType.MESSAGE  # reply-like second-person question
    else:
        content = ContentType.NOTES

    if instruction:
        open_ended = has_creativity_cue(text)
    else:
        # Telegraphic dictation (long comma-spliced chains) needs fleshing
        # out; full sentences already carry their details.
        open_ended = any(s.count(",") >= 3 for s in _sentences(text))
    endedness = Endedness.OPEN if open_ended else Endedness.CLOSED

    return Intent(input_type=input_type, content_type=content, endedness=endedness)
