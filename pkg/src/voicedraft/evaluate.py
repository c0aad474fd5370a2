"""Per-stage evaluation reports with JSON and markdown rendering.

Report shapes mirror the usual ASR/tagging/composition summary tables:
WER/WRR for recognition, per-label P/R/F1 for the taggers (with a combined
sentence-boundary column), BLEU/ROUGE for composition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .asr import CorpusRecord
from .disfluency import DisfluencyTag, tag_disfluencies
from .errors import DataError
from .metrics import (
    PRF,
    RougeVariant,
    align,
    bleu_from_stats,
    bleu_stats,
    normalize_for_eval,
    rouge,
    sum_ops,
    tag_prf,
    wer_wrr,
)
from .punct import PunctTaggerModel, extract_punct_labels, restore_punctuation

EVAL_STAGES = ("asr", "disfluency", "punct", "compose")

SENTENCE_BOUNDARY = frozenset({"PERIOD", "QUESTIONMARK"})

PUNCT_REPORT_COLUMNS = ("Sentence", "Comma", "Period", "Question")


@dataclass
class MetricReport:
    """A named table: one row per system, one column per metric."""

    title: str
    columns: tuple[str, ...]
    rows: list[tuple[str, dict[str, object]]] = field(default_factory=list)

    def add_row(self, name: str, cells: dict[str, object]) -> None:
        missing = [c for c in self.columns if c not in cells]
        if missing:
            raise ValueError(f"row {name!r} missing cells: {missing}")
        self.rows.append((name, cells))

    def to_json(self) -> str:
        payload = {
            "title": self.title,
            "columns": list(self.columns),
            "rows": [{"name": name, **cells} for name, cells in self.rows],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2)

    def to_markdown(self) -> str:
        def fmt(value: object) -> str:
            if isinstance(value, float):
                return f"{value:.2f}"
            if isinstance(value, dict):
                return " / ".join(f"{100 * value[k]:.1f}" for k in ("precision", "recall", "f1"))
            return str(value)

        header = ["System"] + list(self.columns)
        body = [[name] + [fmt(cells[c]) for c in self.columns] for name, cells in self.rows]
        widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
        lines = [
            "| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |",
            "| " + " | ".join("-" * w for w in widths) + " |",
        ]
        for row in body:
            lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
        return f"### {self.title}\n\n" + "\n".join(lines) + "\n"


def _prf_cell(prf: PRF) -> dict[str, float]:
    return {"precision": prf.precision, "recall": prf.recall, "f1": prf.f1, "support": prf.support}


def _require_gold(records: Sequence[CorpusRecord], stage: str) -> None:
    for i, record in enumerate(records):
        if record.gold is None:
            raise DataError(f"record {i}: stage '{stage}' needs the 'gold' field")


def eval_asr(records: Sequence[CorpusRecord], system_name: str = "system") -> MetricReport:
    """Word error and recognition rates of transcripts against gold text."""
    _require_gold(records, "asr")
    ops = sum_ops(
        align(normalize_for_eval(r.gold), normalize_for_eval(r.transcript.raw_text))
        for r in records
    )
    wer, wrr = wer_wrr(ops)
    report = MetricReport("Transcription quality", ("WER", "WRR"))
    report.add_row(system_name, {"WER": round(100 * wer, 2), "WRR": round(100 * wrr, 2)})
    return report


def eval_disfluency(
    records: Sequence[CorpusRecord], system_name: str = "rule-tagger"
) -> MetricReport:
    """P/R/F1 of the disfluency tagger against manufactured gold tags."""
    gold_seqs, pred_seqs = [], []
    for i, record in enumerate(records):
        if record.gold_disfluency_tags is None:
            raise DataError(f"record {i}: stage 'disfluency' needs the 'gold_disfluency_tags' field")
        words = record.transcript.words
        if len(words) != len(record.gold_disfluency_tags):
            raise DataError(
                f"record {i}: {len(record.gold_disfluency_tags)} tags for {len(words)} tokens"
            )
        gold_seqs.append(list(record.gold_disfluency_tags))
        pred_seqs.append([t.name for t in tag_disfluencies(words)])

    report = MetricReport(
        f"Disfluency tagging ({system_name})", ("Precision", "Recall", "F1")
    )
    categories = [
        (DisfluencyTag.REPETITION.name, {DisfluencyTag.REPETITION.name}),
        (DisfluencyTag.REPLACEMENT.name, {DisfluencyTag.REPLACEMENT.name}),
        (DisfluencyTag.RESTART.name, {DisfluencyTag.RESTART.name}),
        ("ANY_DISFLUENT", {t.name for t in DisfluencyTag if t is not DisfluencyTag.FLUENT}),
    ]
    for name, targets in categories:
        prf = tag_prf(gold_seqs, pred_seqs, targets)
        report.add_row(
            name,
            {
                "Precision": round(100 * prf.precision, 2),
                "Recall": round(100 * prf.recall, 2),
                "F1": round(100 * prf.f1, 2),
            },
        )
    return report


def eval_punct(
    records: Sequence[CorpusRecord], model: PunctTaggerModel, system_name: Optional[str] = None
) -> MetricReport:
    """Per-class P/R/F1 of punctuation restoration on stripped gold text."""
    _require_gold(records, "punct")
    gold_seqs, pred_seqs = [], []
    for record in records:
        words, gold_labels = extract_punct_labels(record.gold)
        if not words:
            continue
        predicted = restore_punctuation(words, model)
        gold_seqs.append([lab.project() for lab in gold_labels])
        pred_seqs.append([lab.project() for lab in predicted])

    report = MetricReport("Punctuation restoration", PUNCT_REPORT_COLUMNS)
    cells = {
        "Sentence": _prf_cell(tag_prf(gold_seqs, pred_seqs, SENTENCE_BOUNDARY)),
        "Comma": _prf_cell(tag_prf(gold_seqs, pred_seqs, "COMMA")),
        "Period": _prf_cell(tag_prf(gold_seqs, pred_seqs, "PERIOD")),
        "Question": _prf_cell(tag_prf(gold_seqs, pred_seqs, "QUESTIONMARK")),
    }
    report.add_row(system_name or model.version, cells)
    return report


def eval_compose(
    records: Sequence[CorpusRecord],
    resources,
    seed: int = 0,
    system_name: str = "pipeline",
) -> MetricReport:
    """BLEU/ROUGE of end-to-end pipeline output against gold compositions."""
    from .pipeline import ComposeRequest, run_pipeline

    _require_gold(records, "compose")
    pooled = None
    rouge_sums = {v: 0.0 for v in RougeVariant}
    count = 0
    for record in records:
        request = ComposeRequest(
            transcript=record.transcript.raw_text,
            content_type=record.content_type,
            seed=seed,
        )
        result = run_pipeline(request, resources)
        ref = normalize_for_eval(record.gold)
        hyp = normalize_for_eval(result.output)
        stats = bleu_stats([ref], hyp)
        pooled = stats if pooled is None else (
            pooled[0] + stats[0],
            pooled[1] + stats[1],
            [a + b for a, b in zip(pooled[2], stats[2])],
            [a + b for a, b in zip(pooled[3], stats[3])],
        )
        for variant in RougeVariant:
            rouge_sums[variant] += rouge(ref, hyp, variant).f1
        count += 1
    if count == 0:
        raise DataError("stage 'compose' needs at least one record")

    report = MetricReport("Composition quality", ("BLEU", "ROUGE-1", "ROUGE-2", "ROUGE-L"))
    report.add_row(
        system_name,
        {
            "BLEU": round(100 * bleu_from_stats(*pooled), 2),
            "ROUGE-1": round(100 * rouge_sums[RougeVariant.R1] / count, 2),
            "ROUGE-2": round(100 * rouge_sums[RougeVariant.R2] / count, 2),
            "ROUGE-L": round(100 * rouge_sums[RougeVariant.RL] / count, 2),
        },
    )
    return report


def run_eval(
    records: Sequence[CorpusRecord],
    stage: str,
    punct_model: Optional[PunctTaggerModel] = None,
    resources=None,
    system_name: Optional[str] = None,
    seed: int = 0,
) -> MetricReport:
    """Dispatch to the per-stage report builders."""
    if stage == "asr":
        return eval_asr(records, system_name or "system")
    if stage == "disfluency":
        return eval_disfluency(records, system_name or "rule-tagger")
    if stage == "punct":
        if punct_model is None:
            from .punct import default_punct_model

            punct_model = default_punct_model()
        return eval_punct(records, punct_model, system_name)
    if stage == "compose":
        if resources is None:
            from .pipeline import PipelineResources

            resources = PipelineResources.build()
        return eval_compose(records, resources, seed, system_name or "pipeline")
    raise DataError(f"unknown evaluation stage {stage!r} (choose from {', '.join(EVAL_STAGES)})")
