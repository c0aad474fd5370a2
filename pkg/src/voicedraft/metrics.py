"""Evaluation metrics: word alignment, WER/WRR, tagging P/R/F1, BLEU, ROUGE.

All pure computation over token sequences. Alignment uses unit-cost
dynamic programming with a canonical tie-break (match > substitution >
deletion > insertion) so operation traces are reproducible.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

from .asr import asr_strip


@dataclass(frozen=True)
class AlignmentOps:
    hits: int
    substitutions: int
    deletions: int
    insertions: int
    ref_len: int

    def __post_init__(self):
        counts = (self.hits, self.substitutions, self.deletions, self.insertions, self.ref_len)
        if any(c < 0 for c in counts):
            raise ValueError("alignment counts must be non-negative")
        if self.hits + self.substitutions + self.deletions != self.ref_len:
            raise ValueError("hits + substitutions + deletions must equal ref_len")

    def __add__(self, other: "AlignmentOps") -> "AlignmentOps":
        return AlignmentOps(
            self.hits + other.hits,
            self.substitutions + other.substitutions,
            self.deletions + other.deletions,
            self.insertions + other.insertions,
            self.ref_len + other.ref_len,
        )


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f1: float
    support: int

    @classmethod
    def from_counts(cls, tp: int, predicted: int, gold: int) -> "PRF":
        precision = tp / predicted if predicted else 0.0
        recall = tp / gold if gold else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        return cls(precision, recall, f1, gold)


def align(ref_tokens: Sequence[str], hyp_tokens: Sequence[str]) -> AlignmentOps:
    """Minimal-edit word alignment with unit costs."""
    n, m = len(ref_tokens), len(hyp_tokens)
    dist = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        dist[i][0] = i
    for j in range(1, m + 1):
        dist[0][j] = j
    for i in range(1, n + 1):
        ref_word = ref_tokens[i - 1]
        row, prev = dist[i], dist[i - 1]
        for j in range(1, m + 1):
            if ref_word == hyp_tokens[j - 1]:
                row[j] = prev[j - 1]
            else:
                row[j] = 1 + min(prev[j - 1], prev[j], row[j - 1])

    hits = subs = dels = ins = 0
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and ref_tokens[i - 1] == hyp_tokens[j - 1] and dist[i][j] == dist[i - 1][j - 1]:
            hits += 1
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and dist[i][j] == dist[i - 1][j - 1] + 1:
            subs += 1
            i, j = i - 1, j - 1
        elif i > 0 and dist[i][j] == dist[i - 1][j] + 1:
            dels += 1
            i -= 1
        else:
            ins += 1
            j -= 1
    return AlignmentOps(hits, subs, dels, ins, n)


def sum_ops(all_ops: Iterable[AlignmentOps]) -> AlignmentOps:
    total = AlignmentOps(0, 0, 0, 0, 0)
    for ops in all_ops:
        total = total + ops
    return total


def wer_wrr(ops: AlignmentOps) -> tuple[float, float]:
    """WER = (S+D+I)/N; WRR = H/N. Insertions do not reduce recognition."""
    if ops.ref_len == 0:
        raise ValueError("wer_wrr undefined for an empty reference")
    wer = (ops.substitutions + ops.deletions + ops.insertions) / ops.ref_len
    wrr = ops.hits / ops.ref_len
    return wer, wrr


def normalize_for_eval(text: str) -> list[str]:
    """Case- and punctuation-normalized word stream for alignment."""
    return asr_strip(text)


LabelSeq = Sequence[Union[str, Enum]]


def _label_name(label: Union[str, Enum]) -> str:
    return label.name if isinstance(label, Enum) else label


def tag_prf(
    gold_labels: Union[LabelSeq, Sequence[LabelSeq]],
    pred_labels: Union[LabelSeq, Sequence[LabelSeq]],
    target: Union[str, Iterable[str]],
) -> PRF:
    """Micro-averaged P/R/F1 for a label (or label set) over paired sequences.

    Pass the set {PERIOD, QUESTIONMARK} for the sentence-boundary metric.
    """
    def is_nested(seqs) -> bool:
        return bool(seqs) and isinstance(seqs[0], (list, tuple))

    gold_seqs = list(gold_labels) if is_nested(gold_labels) else [list(gold_labels)]
    pred_seqs = list(pred_labels) if is_nested(pred_labels) else [list(pred_labels)]
    if len(gold_seqs) != len(pred_seqs):
        raise ValueError(f"{len(gold_seqs)} gold sequences but {len(pred_seqs)} predicted")

    targets = {target} if isinstance(target, str) else {_label_name(t) for t in target}
    tp = predicted = gold_count = 0
    for gold_seq, pred_seq in zip(gold_seqs, pred_seqs):
        if len(gold_seq) != len(pred_seq):
            raise ValueError(f"sequence length mismatch: {len(gold_seq)} vs {len(pred_seq)}")
        for g, p in zip(gold_seq, pred_seq):
            g_in = _label_name(g) in targets
            p_in = _label_name(p) in targets
            tp += g_in and p_in
            gold_count += g_in
            predicted += p_in
    return PRF.from_counts(tp, predicted, gold_count)


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu_stats(
    references: Sequence[Sequence[str]], hypothesis: Sequence[str], max_n: int = 4
) -> tuple[int, int, list[int], list[int]]:
    """(hyp_len, closest_ref_len, clipped matches per n, totals per n)."""
    hyp = list(hypothesis)
    refs = [list(r) for r in references]
    if not refs:
        raise ValueError("bleu needs at least one reference")
    ref_len = min((abs(len(r) - len(hyp)), len(r)) for r in refs)[1]
    clipped, totals = [], []
    for n in range(1, max_n + 1):
        hyp_counts = _ngrams(hyp, n)
        total = sum(hyp_counts.values())
        max_ref: Counter = Counter()
        for ref in refs:
            for gram, count in _ngrams(ref, n).items():
                if count > max_ref[gram]:
                    max_ref[gram] = count
        clipped.append(sum(min(c, max_ref[g]) for g, c in hyp_counts.items()))
        totals.append(total)
    return len(hyp), ref_len, clipped, totals


def bleu_from_stats(
    hyp_len: int, ref_len: int, clipped: Sequence[int], totals: Sequence[int]
) -> float:
    """Combine pooled statistics: add-one smoothing for orders >= 2."""
    if hyp_len == 0:
        return 0.0
    if totals[0] == 0 or clipped[0] == 0:
        return 0.0
    log_sum = math.log(clipped[0] / totals[0])
    for k in range(1, len(totals)):
        log_sum += math.log((clipped[k] + 1) / (totals[k] + 1))
    brevity = 1.0 if hyp_len > ref_len else math.exp(1 - ref_len / hyp_len)
    return brevity * math.exp(log_sum / len(totals))


def bleu(
    references: Sequence[Sequence[str]], hypothesis: Sequence[str], max_n: int = 4
) -> float:
    """BLEU with brevity penalty, in [0, 1]; empty hypothesis scores 0."""
    if not list(hypothesis):
        return 0.0
    return bleu_from_stats(*bleu_stats(references, hypothesis, max_n))


def corpus_bleu(
    pairs: Sequence[tuple[Sequence[Sequence[str]], Sequence[str]]], max_n: int = 4
) -> float:
    """Standard corpus BLEU: pool n-gram statistics, then combine."""
    hyp_len = ref_len = 0
    clipped = [0] * max_n
    totals = [0] * max_n
    for references, hypothesis in pairs:
        h, r, c, t = bleu_stats(references, hypothesis, max_n)
        hyp_len += h
        ref_len += r
        for k in range(max_n):
            clipped[k] += c[k]
            totals[k] += t[k]
    return bleu_from_stats(hyp_len, ref_len, clipped, totals)


class RougeVariant(Enum):
    R1 = 1
    R2 = 2
    RL = "L"


def _lcs_len(a: Sequence[str], b: Sequence[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        row = [0]
        for j, y in enumerate(b, start=1):
            row.append(prev[j - 1] + 1 if x == y else max(prev[j], row[-1]))
        prev = row
    return prev[-1]


def rouge(
    reference: Sequence[str], hypothesis: Sequence[str], variant: RougeVariant
) -> PRF:
    """ROUGE-1/2 by n-gram overlap, ROUGE-L by longest common subsequence."""
    ref, hyp = list(reference), list(hypothesis)
    if variant is RougeVariant.RL:
        lcs = _lcs_len(ref, hyp)
        return PRF.from_counts(lcs, len(hyp), len(ref))
    n = variant.value
    ref_counts, hyp_counts = _ngrams(ref, n), _ngrams(hyp, n)
    overlap = sum(min(c, ref_counts[g]) for g, c in hyp_counts.items())
    return PRF.from_counts(overlap, sum(hyp_counts.values()), sum(ref_counts.values()))
