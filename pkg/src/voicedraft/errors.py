"""Shared exception types for the pipeline."""


class VoicedraftError(Exception):
    """Base class for all pipeline errors."""


class DataError(VoicedraftError):
    """Malformed corpus, lexicon, or model data."""


class PipelineInputError(VoicedraftError):
    """Request rejected before any processing (client-side fault)."""


class CompositionError(VoicedraftError):
    """Template composer received input the router must not send it."""


class AdapterError(VoicedraftError):
    """A pluggable adapter (LLM, ASR) failed; carries the adapter name."""

    def __init__(self, adapter_name: str, message: str):
        self.adapter_name = adapter_name
        super().__init__(f"adapter '{adapter_name}': {message}")
