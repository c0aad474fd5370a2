"""Deterministic text generators shared by unit and acceptance tests."""

from __future__ import annotations

import random
import re

NAMES = ["Sam", "Joe", "Maria", "Priya", "Kenji", "Amara", "Omar", "Kate", "Tom", "Emma"]
SUBJECTS = ["the team", "maria", "the client", "everyone", "the vendor", "our group"]
VERBS = ["reviewed", "finished", "shared", "updated", "approved", "checked"]
THINGS = ["the report", "the invoice", "the slides", "the agenda", "the budget", "the summary"]
WHEN = ["yesterday", "this morning", "after lunch", "on friday", "last night"]
EVENTS = ["meeting", "demo", "call", "review", "workshop"]
ITEMS = ["apples", "bread", "coffee", "milk", "paper", "batteries", "eggs", "rice"]


def clean_sentence(rng: random.Random) -> str:
    """A lowercase sentence with no repeated adjacent words or cue phrases."""
    kind = rng.randrange(4)
    if kind == 0:
        return f"{rng.choice(SUBJECTS)} {rng.choice(VERBS)} {rng.choice(THINGS)} {rng.choice(WHEN)}"
    if kind == 1:
        return f"please send {rng.choice(THINGS)} to {rng.choice(NAMES).lower()} {rng.choice(WHEN)}"
    if kind == 2:
        a, b = rng.sample(ITEMS, 2)
        return f"we still need {a} and {b} for the {rng.choice(EVENTS)}"
    return f"the {rng.choice(EVENTS)} went well and {rng.choice(SUBJECTS)} was happy"


def clean_sentences(count: int, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        sentence = clean_sentence(rng)
        words = sentence.split()
        if all(a != b for a, b in zip(words, words[1:])):
            out.append(sentence)
    return out


def canonical_sentence(rng: random.Random) -> str:
    """Capitalized sentence over canonical punctuation (, . ?) only."""
    words = []
    length = rng.randint(3, 10)
    vocab = [w for t in THINGS + ITEMS for w in t.split()] + [s for x in SUBJECTS for s in x.split()]
    for i in range(length):
        word = rng.choice(vocab)
        if rng.random() < 0.25:
            word = word.capitalize()
        if 0 < i < length - 1 and rng.random() < 0.15:
            word += ","
        words.append(word)
    text = " ".join(words)
    text = text[0].upper() + text[1:]
    return text + rng.choice([".", ".", ".", "?"])


def canonical_sentences(count: int, seed: int = 1) -> list[str]:
    rng = random.Random(seed)
    return [canonical_sentence(rng) for _ in range(count)]


def closed_input(rng: random.Random) -> str:
    """A closed-ended request of the kinds the template composer handles."""
    name, other = rng.sample(NAMES, 2)
    kind = rng.randrange(5)
    if kind == 0:
        return (
            f"Email {name}, we met with {other} today, "
            f"the {rng.choice(EVENTS)} went well, follow-up next week."
        )
    if kind == 1:
        return f"Hey {name}, are you coming to the {rng.choice(EVENTS)} later today?"
    if kind == 2:
        return f"Pick up {rng.choice(ITEMS)} at 5 pm tomorrow."
    if kind == 3:
        return (
            f"Send an email to {name}. "
            f"Let him know that the {rng.choice(EVENTS)} is confirmed for Friday."
        )
    return f"The {rng.choice(EVENTS)} went well. {name} shared {rng.choice(THINGS)} {rng.choice(WHEN)}."


def closed_inputs(count: int, seed: int = 2) -> list[str]:
    rng = random.Random(seed)
    return [closed_input(rng) for _ in range(count)]


AUGMENT_VOCAB = (
    "the cat sat he she his her they them we need to go home there their "
    "meeting report on monday january Sam John Maria 5 pm at for and it"
).split()


def augment_text(rng: random.Random) -> str:
    sentences = []
    for _ in range(rng.randint(1, 3)):
        n = rng.randint(3, 8)
        words = [rng.choice(AUGMENT_VOCAB) for _ in range(n)]
        sentence = " ".join(words)
        sentence = sentence[0].upper() + sentence[1:]
        sentences.append(sentence + rng.choice([".", ".", "?"]))
    return " ".join(sentences)


def content_words(text: str) -> list[str]:
    """Lowercased word stream for multiset faithfulness checks."""
    return re.findall(r"[a-z0-9']+", text.lower())


def brute_force_edit_distance(a, b) -> int:
    """Independent oracle: plain recursive Levenshtein with memoization."""
    from functools import lru_cache

    a, b = tuple(a), tuple(b)

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> int:
        if i == len(a):
            return len(b) - j
        if j == len(b):
            return len(a) - i
        if a[i] == b[j]:
            return go(i + 1, j + 1)
        return 1 + min(go(i + 1, j + 1), go(i + 1, j), go(i, j + 1))

    return go(0, 0)
