#!/usr/bin/env python3
"""Generate the bundled synthetic routing dataset (1000 labelled examples).

Factual, detail-complete requests are labelled FT; requests that ask the
system to invent content are labelled LLM. Regenerate with:
python scripts/make_router_dataset.py
"""

from __future__ import annotations

import json
import random
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "voicedraft" / "data" / "router_dataset.jsonl"

SEED = 20240602
COUNT = 1000

NAMES = ["Sam", "Joe", "John", "Maria", "Priya", "Kenji", "Amara", "Omar", "Emily", "Ravi", "Kate", "Tom"]
EVENTS = ["meeting", "demo", "call", "review", "workshop", "standup"]
THINGS = ["the report", "the invoice", "the slides", "the agenda", "the budget", "the summary"]
TIMES = ["5 pm", "3 pm", "noon", "8 am", "7 pm"]
DAYS = ["tomorrow", "today", "on Monday", "on Wednesday", "on Friday", "next week"]
TOPICS = [
    "remote work", "city gardens", "home cooking", "morning routines",
    "travel planning", "team culture", "budget travel", "weekend hikes",
]
STYLES = ["witty", "funny", "thoughtful", "heartfelt", "poetic", "inspiring", "catchy"]
PERSPECTIVES = [
    "a 30-year-old adult", "a retired teacher", "a new parent",
    "a first-time traveler", "a small business owner",
]


def ft_example(rng: random.Random) -> str:
    name, other = rng.sample(NAMES, 2)
    kind = rng.randrange(6)
    if kind == 0:
        return f"Pick up {rng.choice(['groceries', 'the kids', 'coffee'])} at {rng.choice(TIMES)} {rng.choice(DAYS)}."
    if kind == 1:
        return f"Hey {name}, are you coming to the {rng.choice(EVENTS)} later today?"
    if kind == 2:
        return (
            f"Email {name}, we met with {other} today, the {rng.choice(EVENTS)} went well, "
            f"follow-up with them next week."
        )
    if kind == 3:
        return (
            f"Send an email to {name}. Let him know that the {rng.choice(EVENTS)} is confirmed "
            f"for {rng.choice(DAYS)} at {rng.choice(TIMES)}."
        )
    if kind == 4:
        return f"The {rng.choice(EVENTS)} went well. {name} will send {rng.choice(THINGS)} {rng.choice(DAYS)}."
    return f"Text {name}, running late, start without me."


def llm_example(rng: random.Random) -> str:
    name = rng.choice(NAMES)
    kind = rng.randrange(5)
    if kind == 0:
        return (
            f"Write a {rng.choice(STYLES)} birthday wish for {name}. "
            f"Make the message {rng.choice(STYLES)}."
        )
    if kind == 1:
        return f"Write a blog post on {rng.choice(TOPICS)} from the perspective of {rng.choice(PERSPECTIVES)}."
    if kind == 2:
        return f"Draft a {rng.choice(STYLES)} note thanking the team for the launch."
    if kind == 3:
        return f"Write a poem about {rng.choice(TOPICS)}."
    return f"Write a {rng.choice(STYLES)} slogan for a {rng.choice(TOPICS)} club."


def main() -> None:
    rng = random.Random(SEED)
    rows = []
    for i in range(COUNT):
        if i % 2 == 0:
            rows.append({"text": ft_example(rng), "label": "FT"})
        else:
            rows.append({"text": llm_example(rng), "label": "LLM"})
    OUT.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in rows), "utf-8")
    print(f"wrote {len(rows)} examples -> {OUT}")


if __name__ == "__main__":
    main()
