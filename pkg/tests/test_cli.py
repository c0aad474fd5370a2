import json

import pytest

from voicedraft.cli import main


@pytest.fixture
def model_path(tmp_path, punct_model):
    path = tmp_path / "model.json"
    punct_model.save(path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compose_prints_note(capsys, model_path):
    code, out, _ = run(
        capsys, "compose", "--text", "pick up groceries at 5 pm tomorrow", "--model", model_path
    )
    assert code == 0
    assert out.strip() == "Pick up groceries at 5 pm tomorrow."


def test_compose_trace_stage_names_match_service(capsys, model_path):
    code, _, err = run(
        capsys, "compose", "--text", "i i want uh to go home", "--trace", "--model", model_path
    )
    assert code == 0
    stages = [line.split("]")[0].strip("[") for line in err.splitlines() if line.startswith("[")]
    assert stages == ["disfluency", "gec", "punctuation", "intent", "sensitivity", "route", "compose"]


def test_normalize_subcommand(capsys, model_path):
    code, out, _ = run(capsys, "normalize", "--text", "i i want to go home", "--model", model_path)
    assert code == 0
    assert out.strip() == "I want to go home."


def test_augment_deterministic(capsys):
    code, first, _ = run(capsys, "augment", "--spec", "sentence_shuffle:1.0:42", "--text", "A one. B two.")
    assert code == 0
    code, second, _ = run(capsys, "augment", "--spec", "sentence_shuffle:1.0:42", "--text", "A one. B two.")
    assert first == second


def test_train_and_evaluate_round_trip(capsys, tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text(
        "Send the report to Maria.\nAre you coming to the demo?\n" * 10, encoding="utf-8"
    )
    model_out = tmp_path / "model.json"
    code, out, _ = run(
        capsys, "train-punct", "--corpus", str(corpus), "--out", str(model_out),
        "--epochs", "3", "--seed", "1",
    )
    assert code == 0 and model_out.exists()

    eval_corpus = tmp_path / "eval.jsonl"
    eval_corpus.write_text(
        json.dumps({"transcript": "send the report to maria", "gold": "Send the report to Maria."})
        + "\n",
        encoding="utf-8",
    )
    report_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "evaluate", "--corpus", str(eval_corpus), "--stage", "punct",
        "--model", str(model_out), "--report", str(report_path),
    )
    assert code == 0
    payload = json.loads(report_path.read_text())
    assert payload["columns"] == ["Sentence", "Comma", "Period", "Question"]


def test_evaluate_perfect_copy_corpus_wer_zero(capsys, tmp_path):
    corpus = tmp_path / "asr.jsonl"
    corpus.write_text(
        json.dumps({"transcript": "hello there team", "gold": "Hello there, team."}) + "\n",
        encoding="utf-8",
    )
    code, out, _ = run(capsys, "evaluate", "--corpus", str(corpus), "--stage", "asr")
    assert code == 0
    assert "0.00" in out


def test_make_corpus_then_evaluate_disfluency(capsys, tmp_path):
    source = tmp_path / "clean.txt"
    source.write_text("we need apples and bread\nthe meeting went well today\n", encoding="utf-8")
    out_path = tmp_path / "noisy.jsonl"
    code, _, _ = run(
        capsys, "make-corpus", "--source", str(source), "--noise", "repeat_content:0.4",
        "--seed", "3", "--out", str(out_path),
    )
    assert code == 0
    code, out, _ = run(capsys, "evaluate", "--corpus", str(out_path), "--stage", "disfluency")
    assert code == 0
    assert "REPETITION" in out


def test_usage_error_exit_code_1(capsys):
    code, _, err = run(capsys, "compose", "--bogus-flag")
    assert code == 1
    code, _, err = run(capsys, "not-a-command")
    assert code == 1


def test_data_error_exit_code_2(capsys, tmp_path):
    bad = tmp_path / "bad.jsonl"
    bad.write_text("not json\n", encoding="utf-8")
    code, _, err = run(capsys, "evaluate", "--corpus", str(bad), "--stage", "asr")
    assert code == 2
    assert "invalid record" in err


def test_missing_required_text_is_usage_error(capsys):
    code, _, _ = run(capsys, "compose")
    assert code == 1
