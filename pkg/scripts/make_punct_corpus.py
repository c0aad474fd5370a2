#!/usr/bin/env python3
"""Generate the bundled punctuation training corpus.

Deterministic template expansion over everyday dictation vocabulary:
reminders, status updates, greetings, questions, telegraphic email
dictations, and short multi-sentence notes. Original synthetic text,
regenerate with: python scripts/make_punct_corpus.py
"""

from __future__ import annotations

import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "voicedraft" / "data" / "punct_corpus.txt"

SEED = 20240601
TARGET_LINES = 1500

NAMES = [
    "Sam", "Joe", "John", "Mary", "Emily", "Maria", "David", "Laura", "Anna",
    "Peter", "Karen", "Paul", "Linda", "Nancy", "Rachel", "Tom", "Claire",
    "Henry", "Alice", "Jim", "Kate", "Emma", "Priya", "Kenji", "Amara", "Wei",
    "Fatima", "Ravi", "Omar", "Nadia", "Arjun", "Mei", "Tariq", "Yuki",
]
ACTIONS = ["Pick up", "Drop off", "Buy", "Order", "Collect", "Grab"]
OBJECTS = [
    "groceries", "the dry cleaning", "the kids", "milk", "coffee",
    "the package", "flowers", "stamps", "the tickets", "dinner",
]
TIMES = ["5 pm", "3 pm", "noon", "8 am", "7 pm", "10 am", "9 am", "6 pm"]
DAYS = [
    "tomorrow", "today", "on Monday", "on Tuesday", "on Wednesday",
    "on Thursday", "on Friday", "next week", "this evening", "tonight",
]
WEEKDAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
SUBJECTS = [
    "I", "We", "They", "The team", "The client", "Our manager", "The vendor",
    "Maria", "Sam", "Joe", "Priya", "Kenji", "Amara", "Everyone",
]
VERBS_PAST = ["sent", "reviewed", "finished", "shared", "updated", "drafted", "approved", "checked"]
VERBS_BASE = ["send", "review", "finish", "share", "update", "draft", "approve", "check"]
THINGS = [
    "the report", "the invoice", "the slides", "the notes", "the draft",
    "the agenda", "the budget", "the schedule", "the summary", "the proposal",
]
EVENTS = ["meeting", "demo", "call", "interview", "review", "workshop", "standup", "presentation"]
ADJ = ["well", "great", "smoothly", "fine", "better than expected"]
WHEN_PAST = ["yesterday", "this morning", "last night", "on Wednesday", "after lunch", "an hour ago"]
WHEN_SOON = ["later today", "tomorrow", "on Friday", "tonight", "this afternoon", "next week"]
ITEMS = ["apples", "bread", "coffee", "milk", "paper", "tape", "batteries", "eggs", "cheese", "rice"]
PRONOUNS = ["him", "her", "them"]


def statement(rng: random.Random) -> str:
    kind = rng.randrange(12)
    if kind == 0:
        return f"{rng.choice(ACTIONS)} {rng.choice(OBJECTS)} at {rng.choice(TIMES)} {rng.choice(DAYS)}."
    if kind == 1:
        return f"{rng.choice(SUBJECTS)} {rng.choice(VERBS_PAST)} {rng.choice(THINGS)} {rng.choice(WHEN_PAST)}."
    if kind == 2:
        return f"{rng.choice(SUBJECTS)} will {rng.choice(VERBS_BASE)} {rng.choice(THINGS)} {rng.choice(WHEN_SOON)}."
    if kind == 3:
        return f"The {rng.choice(EVENTS)} went {rng.choice(ADJ)} {rng.choice(WHEN_PAST)}."
    if kind == 4:
        return rng.choice(
            [
                "Hello.",
                "Hello.",
                f"Thanks, {rng.choice(NAMES)}.",
                "Good morning, everyone.",
                "Hi, thanks for the update.",
                "Thanks for the quick reply.",
            ]
        )
    if kind == 5:
        return rng.choice(
            [
                "I want to go home.",
                "We want to go home now.",
                "I need to go to the store.",
                "I want to see the final version.",
                "We need to leave before traffic.",
                "I have to call the bank today.",
            ]
        )
    if kind == 6:
        return rng.choice(
            [
                f"If you can, please call {rng.choice(NAMES)} before {rng.choice(TIMES)}.",
                f"After the {rng.choice(EVENTS)}, we should talk.",
                f"When you get a chance, send me {rng.choice(THINGS)}.",
                f"Once the {rng.choice(EVENTS)} wraps up, grab lunch.",
            ]
        )
    if kind == 7:
        a, b, c = rng.sample(ITEMS, 3)
        return f"We need {a}, {b}, and {c}."
    if kind == 8:
        name, other = rng.sample(NAMES, 2)
        return rng.choice(
            [
                f"Email {name}, we met with {other} today, the {rng.choice(EVENTS)} went well, follow-up with {rng.choice(PRONOUNS)} next week.",
                f"Email {name}, {rng.choice(THINGS)} is ready, let me know if anything is missing.",
                f"Text {name}, running late, start without me.",
                f"Email {name}, the {rng.choice(EVENTS)} moved to {rng.choice(WEEKDAYS)}, please update the invite.",
            ]
        )
    if kind == 9:
        name = rng.choice(NAMES)
        return rng.choice(
            [
                f"Send an email to {name}.",
                f"Let {rng.choice(PRONOUNS)} know that the {rng.choice(EVENTS)} is confirmed.",
                f"Schedule a call with {name} for {rng.choice(WEEKDAYS)}.",
                f"Remind me to {rng.choice(VERBS_BASE)} {rng.choice(THINGS)} {rng.choice(WHEN_SOON)}.",
            ]
        )
    if kind == 10:
        return rng.choice(
            [
                f"Here is the plan: ship on {rng.choice(WEEKDAYS)}.",
                f"The {rng.choice(EVENTS)} worked; everyone was happy.",
                f"One thing matters now: {rng.choice(THINGS)}.",
            ]
        )
    years = rng.choice(["ten", "twenty", "thirty", "fifty"])
    return (
        f"After more than {years} years the group announced a new tour. "
        f"On {rng.choice(WEEKDAYS)} the team shared the news."
    )


def question(rng: random.Random) -> str:
    name = rng.choice(NAMES)
    return rng.choice(
        [
            f"Are you coming to the {rng.choice(EVENTS)} {rng.choice(WHEN_SOON)}?",
            f"What time is the {rng.choice(EVENTS)}?",
            f"Did {name} send {rng.choice(THINGS)}?",
            f"Can we move the {rng.choice(EVENTS)} to {rng.choice(WEEKDAYS)}?",
            f"How did the {rng.choice(EVENTS)} go?",
            f"Where should we meet {rng.choice(WHEN_SOON)}?",
            f"Hey {name}, are you free for lunch {rng.choice(WHEN_SOON)}?",
            f"Is {rng.choice(THINGS)} ready?",
            f"Do you have {rng.choice(THINGS)}?",
            f"Will {name} join the {rng.choice(EVENTS)}?",
            "Hello, how are you?",
        ]
    )


def make_line(rng: random.Random) -> str:
    def sentence() -> str:
        return question(rng) if rng.random() < 0.3 else statement(rng)

    roll = rng.random()
    count = 1 if roll < 0.55 else (2 if roll < 0.85 else 3)
    return " ".join(sentence() for _ in range(count))


def main() -> None:
    rng = random.Random(SEED)
    lines: list[str] = []
    seen: set[str] = set()
    while len(lines) < TARGET_LINES:
        line = make_line(rng)
        if line in seen:
            continue
        seen.add(line)
        lines.append(line)
    sentence_count = sum(line.count(".") + line.count("?") for line in lines)
    OUT.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} lines, {sentence_count} sentences -> {OUT}")


if __name__ == "__main__":
    main()
