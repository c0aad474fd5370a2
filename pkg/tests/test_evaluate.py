import json

import pytest

from voicedraft.asr import CorpusRecord, NoiseConfig, mock_asr
from voicedraft.errors import DataError
from voicedraft.evaluate import (
    PUNCT_REPORT_COLUMNS,
    MetricReport,
    eval_asr,
    eval_disfluency,
    eval_punct,
    run_eval,
)
from voicedraft.transcript import Source, Transcript


def record(transcript, gold=None, tags=None, content_type=None):
    return CorpusRecord(
        transcript=Transcript.from_text(transcript, Source.FILE),
        gold=gold,
        content_type=content_type,
        gold_disfluency_tags=tuple(tags) if tags else None,
    )


def test_metric_report_rendering():
    report = MetricReport("Demo", ("A", "B"))
    report.add_row("sys", {"A": 1.25, "B": {"precision": 0.5, "recall": 1.0, "f1": 2 / 3}})
    md = report.to_markdown()
    assert "| System | A    | B" in md
    assert "50.0 / 100.0 / 66.7" in md
    payload = json.loads(report.to_json())
    assert payload["columns"] == ["A", "B"]
    assert payload["rows"][0]["name"] == "sys"


def test_metric_report_missing_cell():
    report = MetricReport("Demo", ("A",))
    with pytest.raises(ValueError):
        report.add_row("sys", {})


def test_eval_asr_perfect_copy():
    records = [record("hello there", gold="Hello there.")]
    report = eval_asr(records)
    assert report.rows[0][1] == {"WER": 0.0, "WRR": 100.0}


def test_eval_asr_requires_gold():
    with pytest.raises(DataError, match="'gold'"):
        eval_asr([record("hi")])


def test_eval_asr_counts_substitutions():
    records = [record("their plan works", gold="there plan works")]
    report = eval_asr(records)
    assert report.rows[0][1]["WER"] == pytest.approx(100 / 3, abs=0.01)


def test_eval_disfluency_perfect_and_shape():
    words = "i i want to go".split()
    tags = ["REPETITION", "FLUENT", "FLUENT", "FLUENT", "FLUENT"]
    report = eval_disfluency([record(" ".join(words), tags=tags)])
    assert report.columns == ("Precision", "Recall", "F1")
    by_name = dict(report.rows)
    assert by_name["REPETITION"]["F1"] == 100.0


def test_eval_disfluency_requires_tags():
    with pytest.raises(DataError, match="gold_disfluency_tags"):
        eval_disfluency([record("x y")])


def test_eval_disfluency_tag_length_mismatch():
    with pytest.raises(DataError, match="tags for"):
        eval_disfluency([record("x y", tags=["FLUENT"])])


def test_eval_punct_shape_and_perfect_system(punct_model):
    records = [record("", gold=line) for line in ("Hello, team.", "Are you there?")]
    report = eval_punct(records, punct_model)
    assert report.columns == PUNCT_REPORT_COLUMNS
    cells = report.rows[0][1]
    assert set(cells) == set(PUNCT_REPORT_COLUMNS)
    assert 0.0 <= cells["Period"]["f1"] <= 1.0


def test_eval_compose_end_to_end(resources):
    records = [
        record(
            "pick up groceries at 5 pm tomorrow",
            gold="Pick up groceries at 5 pm tomorrow.",
            content_type="notes",
        )
    ]
    report = run_eval(records, "compose", resources=resources)
    cells = report.rows[0][1]
    assert cells["BLEU"] == pytest.approx(100.0, abs=0.01)
    assert cells["ROUGE-L"] == pytest.approx(100.0, abs=0.01)


def test_run_eval_unknown_stage():
    with pytest.raises(DataError, match="unknown evaluation stage"):
        run_eval([], "vibes")


def test_wer_on_synthetic_noise_small():
    lines = ["their plan is to meet here for two days"] * 40
    records = []
    for i, line in enumerate(lines):
        noisy = mock_asr(line, NoiseConfig(homophone_rate=0.2, seed=i))
        records.append(CorpusRecord(transcript=noisy, gold=line))
    report = eval_asr(records)
    wer = report.rows[0][1]["WER"]
    assert 5.0 < wer < 35.0  # ~20% of covered words swapped
