"""Bundled lexicon loading: homophones, fillers, names, sensitivity terms.

All files live under ``voicedraft/data`` and are plain text so they can be
inspected and overridden. Loading is cached; the results are read-only.
"""

from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .errors import DataError

PathLike = Union[str, Path]

# Words that may be dropped/inserted by noise transforms and that never count
# as content in parallelism checks. Closed class, intentionally small.
STOPWORDS = frozenset(
    """
    a an the to of in on at for and or but so just really very quite
    i you he she it we they me him her us them my your his its our their
    is are was were be been being am do does did have has had
    will would can could should shall may might must not no yes
    that this these those with from as by if then than there here
    when what who whom how why where about into over under again also too
    up down out off
    """.split()
)

# Plain adverb-ish words WORD_NOISE may inject; never entities.
INSERTABLE_WORDS = ("just", "really", "very", "actually", "basically", "so", "well")

WEEKDAYS = ("monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday")
MONTHS = (
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december",
)


def _read_lines(name: str, path: Optional[PathLike] = None) -> list[str]:
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
    else:
        text = resources.files("voicedraft.data").joinpath(name).read_text(encoding="utf-8")
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


@lru_cache(maxsize=None)
def homophone_groups() -> tuple[tuple[str, ...], ...]:
    groups = []
    for line in _read_lines("homophones.txt"):
        members = tuple(line.split())
        if len(members) < 2:
            raise DataError(f"homophone group needs >= 2 members: {line!r}")
        groups.append(members)
    return tuple(groups)


@lru_cache(maxsize=None)
def homophone_index() -> dict[str, tuple[str, ...]]:
    """Map each member word to its full group."""
    index: dict[str, tuple[str, ...]] = {}
    for group in homophone_groups():
        for member in group:
            index[member] = group
    return index


@lru_cache(maxsize=None)
def filler_phrases() -> tuple[str, ...]:
    return tuple(_read_lines("fillers.txt"))


@lru_cache(maxsize=None)
def filler_words() -> frozenset[str]:
    """Single-word fillers plus common spoken variants, for the disfluency rules.

    Multi-word fillers ("you know") are excluded on purpose: removing them
    blindly breaks sentences like "you know the answer".
    """
    single = {f for f in filler_phrases() if " " not in f}
    return frozenset(single | {"uhh", "umm", "er", "erm", "hmm", "mhm"})


@lru_cache(maxsize=None)
def western_names() -> tuple[str, ...]:
    return tuple(_read_lines("names_western.txt"))


@lru_cache(maxsize=None)
def nonwestern_names() -> tuple[str, ...]:
    return tuple(_read_lines("names_nonwestern.txt"))


def sensitivity_terms(path: Optional[PathLike] = None) -> list[tuple[str, str]]:
    """Parse the sensitivity lexicon into (term, tier) pairs.

    Tier is ``"block"`` when the line carries the " block" suffix,
    otherwise ``"score"``.
    """
    terms = []
    for line in _read_lines("sensitivity.txt", path):
        if line.endswith(" block"):
            term, tier = line[: -len(" block")].strip(), "block"
        else:
            term, tier = line, "score"
        if not term:
            raise DataError(f"empty sensitivity term in line {line!r}")
        terms.append((term.lower(), tier))
    return terms
