import pytest

from voicedraft.pipeline import PipelineResources
from voicedraft.punct import default_punct_model


@pytest.fixture(scope="session")
def punct_model():
    return default_punct_model()


@pytest.fixture(scope="session")
def resources():
    return PipelineResources.build()
