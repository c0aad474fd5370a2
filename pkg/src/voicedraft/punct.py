"""Punctuation and capitalization restoration.

Labels are composite (capitalize flag + appended punctuation class) so a
one-token sentence can be both capitalized and period-terminated; the
five-way projection used by the evaluation (COMMA, PERIOD, QUESTIONMARK,
CAPITALIZATION, NONE) is derived from the composite form.

The trainable model is an averaged perceptron over sparse string features;
it serializes to versioned JSON (feature -> label -> weight).
"""

from __future__ import annotations

import json
import random
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from .errors import DataError
from .transcript import SUPPORTED_PUNCT, Token, tokenize

MODEL_FORMAT = "punct-ap-1"

# Paper-style class groupings with a canonical rendering for each class.
_CLASS_OF_CHAR = {
    ",": "COMMA", ";": "COMMA", ":": "COMMA", "-": "COMMA",
    ".": "PERIOD",
    "?": "QUESTIONMARK", "!": "QUESTIONMARK",
}


class PunctClass(Enum):
    NONE = ""
    COMMA = ","
    PERIOD = "."
    QUESTIONMARK = "?"

    @property
    def render(self) -> str:
        return self.value


@dataclass(frozen=True)
class PunctLabel:
    """Per-token action: capitalize the word and/or append punctuation."""

    capitalize: bool
    append: PunctClass = PunctClass.NONE

    def project(self) -> str:
        """Collapse onto the five-way scheme used for evaluation."""
        if self.append is not PunctClass.NONE:
            return self.append.name
        return "CAPITALIZATION" if self.capitalize else "NONE"

    def key(self) -> str:
        return f"{'C' if self.capitalize else '-'}|{self.append.name}"

    @classmethod
    def from_key(cls, key: str) -> "PunctLabel":
        cap, _, name = key.partition("|")
        return cls(capitalize=(cap == "C"), append=PunctClass[name])


FIVE_WAY_CLASSES = ("COMMA", "PERIOD", "QUESTIONMARK", "CAPITALIZATION", "NONE")


def _check_supported(text: str) -> None:
    bad = sorted(
        {
            c
            for c in text
            if not (c.isalnum() or c.isspace() or c in SUPPORTED_PUNCT or c in "'’")
        }
    )
    if bad:
        raise DataError(f"unsupported characters: {', '.join(repr(c) for c in bad)}")


def extract_punct_labels(gold_text: str) -> tuple[list[str], list[PunctLabel]]:
    """Strip gold text to lowercase words plus the labels that restore it.

    The self-supervision oracle: train pairs come straight out of clean
    punctuated text.
    """
    _check_supported(gold_text)
    words: list[str] = []
    labels: list[PunctLabel] = []
    for token in tokenize(gold_text):
        if token.is_punct:
            if not words:
                continue  # stray leading punctuation has no word to label
            if labels[-1].append is PunctClass.NONE:
                labels[-1] = PunctLabel(
                    capitalize=labels[-1].capitalize,
                    append=PunctClass[_CLASS_OF_CHAR[token.text]],
                )
            continue
        words.append(token.text.lower())
        labels.append(PunctLabel(capitalize=token.text[:1].isupper()))
    return words, labels


def apply_punct_labels(
    tokens: Sequence[Union[Token, str]], labels: Sequence[PunctLabel]
) -> str:
    """Render tokens with their labels into punctuated, cased text.

    Capitalization only ever uppercases; canonical characters render each
    punctuation class; an utterance whose last label appends nothing gets a
    terminal period.
    """
    if len(tokens) != len(labels):
        raise ValueError(f"{len(tokens)} tokens but {len(labels)} labels")
    parts = []
    for tok, label in zip(tokens, labels):
        word = tok.text if isinstance(tok, Token) else tok
        if label.capitalize:
            word = word[:1].upper() + word[1:]
        parts.append(word + label.append.render)
    text = " ".join(parts)
    if labels and labels[-1].append is PunctClass.NONE:
        text += "."
    return text


def _shape(word: str) -> str:
    out = []
    for c in word:
        if c.isdigit():
            k = "d"
        elif c.isalpha():
            k = "x"
        else:
            k = c
        if not out or out[-1] != k:
            out.append(k)
    return "".join(out)


def _bucket(i: int, n: int) -> str:
    if i == 0:
        return "first"
    if i == n - 1:
        return "last"
    if i == n - 2:
        return "penult"
    third = (3 * i) // n
    return ("early", "mid", "late")[third]


def token_features(words: Sequence[str], i: int, prev_label: str) -> list[str]:
    n = len(words)
    w = words[i]
    wm1 = words[i - 1] if i >= 1 else "<s>"
    wm2 = words[i - 2] if i >= 2 else "<s>"
    wp1 = words[i + 1] if i + 1 < n else "</s>"
    wp2 = words[i + 2] if i + 2 < n else "</s>"
    bucket = _bucket(i, n)
    return [
        "bias",
        f"w0={w}",
        f"w-1={wm1}",
        f"w-2={wm2}",
        f"w+1={wp1}",
        f"w+2={wp2}",
        f"shape={_shape(w)}",
        f"pos={bucket}",
        f"prev={prev_label}",
        f"w0|pos={w}|{bucket}",
        f"w0|w+1={w}|{wp1}",
        f"pos|w+1={bucket}|{wp1}",
    ]


class PunctTaggerModel:
    """Averaged-perceptron token classifier over composite punctuation labels."""

    def __init__(
        self,
        weights: dict[str, dict[str, float]],
        labels: Sequence[str],
        version: str,
    ):
        self.weights = weights
        self.labels = list(labels)
        self.version = version

    def _best_label(self, feats: Sequence[str], prev: str) -> str:
        scores = {label: 0.0 for label in self.labels}
        for feat in feats:
            per_label = self.weights.get(feat)
            if per_label:
                for label, weight in per_label.items():
                    scores[label] += weight
        # Ties resolve by fixed label order, keeping decoding deterministic.
        return max(self.labels, key=lambda lab: (scores[lab], -self.labels.index(lab)))

    def predict(self, words: Sequence[str]) -> list[PunctLabel]:
        """Greedy left-to-right decode with the previous predicted label."""
        lowered = [w.lower() for w in words]
        out: list[PunctLabel] = []
        prev = "<start>"
        for i in range(len(lowered)):
            key = self._best_label(token_features(lowered, i, prev), prev)
            out.append(PunctLabel.from_key(key))
            prev = key
        return out

    def to_json(self) -> str:
        payload = {
            "format": MODEL_FORMAT,
            "version": self.version,
            "labels": self.labels,
            "weights": self.weights,
        }
        return json.dumps(payload, ensure_ascii=False, sort_keys=True)

    def save(self, path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def from_json(cls, text: str) -> "PunctTaggerModel":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DataError(f"invalid model JSON: {exc.msg}") from exc
        if payload.get("format") != MODEL_FORMAT:
            raise DataError(f"unsupported model format: {payload.get('format')!r}")
        return cls(payload["weights"], payload["labels"], payload["version"])

    @classmethod
    def load(cls, path) -> "PunctTaggerModel":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def train_punct_tagger(
    corpus: Iterable[str], epochs: int = 5, seed: int = 13
) -> PunctTaggerModel:
    """Train the averaged perceptron on (stripped words, labels) pairs.

    Deterministic given corpus order and seed; epochs shuffle with the
    seeded generator. Decoding during training uses the predicted previous
    label so the model learns to recover from its own mistakes.
    """
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    pairs = []
    for line in corpus:
        line = line.strip()
        if not line:
            continue
        words, labels = extract_punct_labels(line)
        if words:
            pairs.append((words, [lab.key() for lab in labels]))
    if not pairs:
        raise DataError("training corpus is empty")

    label_set = sorted({key for _, keys in pairs for key in keys})
    label_index = {lab: i for i, lab in enumerate(label_set)}

    weights: dict[str, dict[str, float]] = defaultdict(lambda: defaultdict(float))
    totals: dict[str, dict[str, float]] = defaultdict(lambda: defaultdict(float))
    stamps: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
    t = 1

    def bump(feat: str, label: str, delta: float) -> None:
        totals[feat][label] += (t - stamps[feat][label]) * weights[feat][label]
        stamps[feat][label] = t
        weights[feat][label] += delta

    def best(feats: Sequence[str]) -> str:
        scores = [0.0] * len(label_set)
        for feat in feats:
            per_label = weights.get(feat)
            if per_label:
                for label, weight in per_label.items():
                    scores[label_index[label]] += weight
        top = max(range(len(label_set)), key=lambda k: (scores[k], -k))
        return label_set[top]

    rng = random.Random(seed)
    order = list(range(len(pairs)))
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            words, gold_keys = pairs[idx]
            prev = "<start>"
            for i, gold in enumerate(gold_keys):
                feats = token_features(words, i, prev)
                pred = best(feats)
                if pred != gold:
                    for feat in feats:
                        bump(feat, gold, +1.0)
                        bump(feat, pred, -1.0)
                prev = pred
                t += 1

    averaged: dict[str, dict[str, float]] = {}
    for feat, per_label in weights.items():
        row = {}
        for label, weight in per_label.items():
            total = totals[feat][label] + (t - stamps[feat][label]) * weight
            value = round(total / t, 6)
            if value != 0.0:
                row[label] = value
        if row:
            averaged[feat] = row

    version = f"{MODEL_FORMAT}.e{epochs}.n{len(pairs)}.s{seed}"
    return PunctTaggerModel(averaged, label_set, version)


def restore_punctuation(
    tokens: Sequence[Union[Token, str]], model: PunctTaggerModel
) -> list[PunctLabel]:
    """Predict one label per token; the first token is always capitalized."""
    words = [t.text if isinstance(t, Token) else t for t in tokens]
    labels = model.predict(words)
    if labels:
        labels[0] = PunctLabel(capitalize=True, append=labels[0].append)
    return labels


_DEFAULT_MODEL: Optional[PunctTaggerModel] = None

DEFAULT_EPOCHS = 5
DEFAULT_SEED = 13


def bundled_corpus_lines() -> list[str]:
    from importlib import resources

    text = resources.files("voicedraft.data").joinpath("punct_corpus.txt").read_text("utf-8")
    return [line for line in text.splitlines() if line.strip()]


def default_punct_model() -> PunctTaggerModel:
    """Train (once per process) on the bundled corpus with fixed settings."""
    global _DEFAULT_MODEL
    if _DEFAULT_MODEL is None:
        _DEFAULT_MODEL = train_punct_tagger(
            bundled_corpus_lines(), epochs=DEFAULT_EPOCHS, seed=DEFAULT_SEED
        )
    return _DEFAULT_MODEL
