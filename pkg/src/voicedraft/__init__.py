"""voicedraft: staged voice-to-composition text pipeline.

Noisy, unpunctuated, disfluent transcripts in; well-formatted emails,
messages, and notes out. Library-first: everything the HTTP service and
the CLI expose is callable directly.
"""

__version__ = "0.1.0"

from .asr import NoiseConfig, load_jsonl, mock_asr
from .augment import AugmentationKind, AugmentationSpec, apply_augmentation, compose_augmentations
from .comprehend import REFUSAL_NOTICE, comprehend
from .composer import Composition, compose_ft, render_composition
from .disfluency import DisfluencyTag, filter_disfluencies, tag_disfluencies
from .gec import EditKind, EditTag, apply_edit_tags, gec_tag
from .intent import ContentType, Endedness, InputType, Intent, classify_intent
from .llm import LlmAdapter, MockLlm, build_llm_prompt
from .metrics import AlignmentOps, PRF, RougeVariant, align, bleu, rouge, tag_prf, wer_wrr
from .normalize import normalize
from .pipeline import ComposeRequest, ComposeResult, PipelineConfig, PipelineResources, run_pipeline
from .punct import (
    PunctClass,
    PunctLabel,
    PunctTaggerModel,
    apply_punct_labels,
    extract_punct_labels,
    restore_punctuation,
    train_punct_tagger,
)
from .router import Route, RouteKind, RouterWeights, route
from .sensitivity import SensitivityVerdict, sensitivity_score
from .transcript import Source, StageTrace, Token, Transcript, detokenize, tokenize

__all__ = [
    "AlignmentOps",
    "AugmentationKind",
    "AugmentationSpec",
    "ComposeRequest",
    "ComposeResult",
    "Composition",
    "ContentType",
    "DisfluencyTag",
    "EditKind",
    "EditTag",
    "Endedness",
    "InputType",
    "Intent",
    "LlmAdapter",
    "MockLlm",
    "NoiseConfig",
    "PRF",
    "PipelineConfig",
    "PipelineResources",
    "PunctClass",
    "PunctLabel",
    "PunctTaggerModel",
    "REFUSAL_NOTICE",
    "Route",
    "RouteKind",
    "RougeVariant",
    "RouterWeights",
    "SensitivityVerdict",
    "Source",
    "StageTrace",
    "Token",
    "Transcript",
    "align",
    "apply_augmentation",
    "apply_edit_tags",
    "apply_punct_labels",
    "bleu",
    "build_llm_prompt",
    "classify_intent",
    "compose_augmentations",
    "compose_ft",
    "comprehend",
    "detokenize",
    "extract_punct_labels",
    "filter_disfluencies",
    "gec_tag",
    "load_jsonl",
    "mock_asr",
    "normalize",
    "render_composition",
    "restore_punctuation",
    "rouge",
    "route",
    "run_pipeline",
    "sensitivity_score",
    "tag_disfluencies",
    "tag_prf",
    "tokenize",
    "train_punct_tagger",
    "wer_wrr",
]
