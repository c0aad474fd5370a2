"""Operator command line: every pipeline capability without the service.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Optional

import click

from .asr import load_jsonl
from .augment import compose_augmentations, parse_augmentation_chain
from .corpus import manufacture_records, write_jsonl
from .errors import DataError, PipelineInputError, VoicedraftError
from .evaluate import EVAL_STAGES, run_eval
from .normalize import normalize as normalize_stage
from .pipeline import ComposeRequest, PipelineConfig, PipelineResources, run_pipeline
from .punct import PunctTaggerModel, default_punct_model, train_punct_tagger
from .transcript import Source, Transcript


@click.group(name="voicedraft")
def cli() -> None:
    """Voice-to-composition pipeline tools."""


def _read_text_arg(text: Optional[str], use_stdin: bool) -> str:
    if use_stdin:
        return sys.stdin.read()
    if text is None:
        raise click.UsageError("provide --text or --stdin")
    return text


def _load_model(path: Optional[str]) -> PunctTaggerModel:
    if path:
        return PunctTaggerModel.load(path)
    return default_punct_model()


@cli.command()
@click.option("--text", help="Transcript text.")
@click.option("--stdin", "use_stdin", is_flag=True, help="Read the transcript from stdin.")
@click.option("--content-type", type=click.Choice(["email", "message", "notes"]))
@click.option("--trace", is_flag=True, help="Print per-stage traces to stderr.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False))
def compose(text, use_stdin, content_type, trace, seed, model_path) -> None:
    """Run the full pipeline on one transcript and print the draft."""
    transcript = _read_text_arg(text, use_stdin)
    config = PipelineConfig(punct_model_path=model_path)
    resources = PipelineResources.build(config)
    request = ComposeRequest(
        transcript=transcript, content_type=content_type, trace=trace, seed=seed
    )
    result = run_pipeline(request, resources)
    click.echo(result.output)
    if trace:
        for stage in result.traces:
            click.echo(f"[{stage.stage_name}] {stage.text_after}", err=True)


@cli.command("normalize")
@click.option("--text", required=True, help="Raw transcript text.")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False))
def normalize_cmd(text, model_path) -> None:
    """Run only the normalization stage (disfluency, GEC, punctuation)."""
    model = _load_model(model_path)
    normalized, _ = normalize_stage(Transcript.from_text(text, Source.TYPED), model)
    click.echo(normalized)


@cli.command()
@click.option("--spec", required=True, help="Chain like homophones:0.1:42,fillers:0.2:7")
@click.option("--text", required=True)
@click.option("--seed", type=int, default=0, show_default=True, help="Default seed for entries without one.")
def augment(spec, text, seed) -> None:
    """Apply a deterministic augmentation chain to text."""
    specs = parse_augmentation_chain(spec, default_seed=seed)
    click.echo(compose_augmentations(specs, text))


@cli.command()
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--stage", required=True, type=click.Choice(list(EVAL_STAGES)))
@click.option("--report", "report_path", type=click.Path(dir_okay=False), help="Write .json or .md.")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--system-name", default=None)
def evaluate(corpus_path, stage, report_path, model_path, seed, system_name) -> None:
    """Evaluate one pipeline stage against a gold-annotated JSONL corpus."""
    records = load_jsonl(corpus_path)
    model = PunctTaggerModel.load(model_path) if model_path else None
    report = run_eval(records, stage, punct_model=model, system_name=system_name, seed=seed)
    click.echo(report.to_markdown())
    if report_path:
        path = Path(report_path)
        if path.suffix == ".json":
            path.write_text(report.to_json() + "\n", encoding="utf-8")
        elif path.suffix == ".md":
            path.write_text(report.to_markdown(), encoding="utf-8")
        else:
            raise click.UsageError("--report must end in .json or .md")
        click.echo(f"report written to {path}", err=True)


@cli.command("train-punct")
@click.option("--corpus", "corpus_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--epochs", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=13, show_default=True)
def train_punct(corpus_path, out_path, epochs, seed) -> None:
    """Train the punctuation tagger on one-sentence-per-line text."""
    lines = Path(corpus_path).read_text(encoding="utf-8").splitlines()
    model = train_punct_tagger(lines, epochs=epochs, seed=seed)
    model.save(out_path)
    click.echo(f"model {model.version} written to {out_path}")


@cli.command("make-corpus")
@click.option("--source", "source_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--noise", required=True, help="Chain like homophones:0.1,fillers:0.2")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--content-type", type=click.Choice(["email", "message", "notes"]))
def make_corpus(source_path, noise, seed, out_path, content_type) -> None:
    """Build a gold-annotated JSONL corpus from clean text plus noise."""
    lines = Path(source_path).read_text(encoding="utf-8").splitlines()
    specs = parse_augmentation_chain(noise, default_seed=seed)
    records = manufacture_records(lines, specs, seed=seed, content_type=content_type)
    write_jsonl(records, out_path)
    click.echo(f"{len(records)} records written to {out_path}")


@cli.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--port", type=int, default=None, help="Override the configured port.")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(config_path, port, host) -> None:
    """Start the HTTP service."""
    from dataclasses import replace

    from .service import serve as run_service

    config = PipelineConfig.from_file(config_path) if config_path else PipelineConfig()
    if port is not None:
        config = replace(config, port=port)
    run_service(config, host=host)


def main(argv: Optional[list[str]] = None) -> int:
    """Run the CLI, mapping errors onto the documented exit codes."""
    try:
        cli.main(args=argv, prog_name="voicedraft", standalone_mode=False)
        return 0
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except (DataError, PipelineInputError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except (VoicedraftError, OSError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
