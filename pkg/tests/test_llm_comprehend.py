import pytest

from voicedraft.comprehend import COMPREHEND_STAGES, REFUSAL_NOTICE, comprehend
from voicedraft.errors import AdapterError
from voicedraft.intent import ContentType, classify_intent
from voicedraft.llm import MockLlm, build_llm_prompt
from voicedraft.router import RouteKind


class SpyAdapter(MockLlm):
    def __init__(self):
        self.calls = 0

    def complete(self, prompt, seed):
        self.calls += 1
        return super().complete(prompt, seed)


class FailingAdapter(MockLlm):
    @property
    def name(self):
        return "flaky"

    def complete(self, prompt, seed):
        raise RuntimeError("boom")


def test_prompt_contains_text_and_format_word():
    text = "Send a reminder about the picnic."
    intent = classify_intent("Email Sam, the picnic is on.")
    prompt = build_llm_prompt(text, intent)
    assert text in prompt
    assert "email" in prompt


def test_prompt_deterministic():
    intent = classify_intent("Write a witty poem.")
    a = build_llm_prompt("same text", intent)
    assert a == build_llm_prompt("same text", intent)


def test_prompt_preserves_braces_and_quotes():
    tricky = 'He said "use {braces} and \\ slashes".'
    prompt = build_llm_prompt(tricky, classify_intent(tricky))
    assert tricky in prompt


def test_mock_llm_deterministic_and_seed_sensitive():
    adapter = MockLlm()
    prompt = build_llm_prompt("write a poem about rain", classify_intent("Write a poem about rain."))
    assert adapter.complete(prompt, 5) == adapter.complete(prompt, 5)
    outputs = {adapter.complete(prompt, seed) for seed in range(6)}
    assert len(outputs) > 1


def test_comprehend_closed_notes_routes_ft():
    result = comprehend("Pick up groceries at 5 pm tomorrow.", adapter=MockLlm())
    assert result.route.kind is RouteKind.FT
    assert result.text == "Pick up groceries at 5 pm tomorrow."
    assert [t.stage_name for t in result.traces] == list(COMPREHEND_STAGES)
    assert not result.blocked


def test_comprehend_open_routes_llm_with_mock_output():
    result = comprehend(
        "Write a blog post on AI from the perspective of a 30-year-old adult.",
        adapter=MockLlm(),
        seed=3,
    )
    assert result.route.kind is RouteKind.LLM
    assert result.text
    assert result.traces[-1].text_after == result.text


def test_blocked_input_refuses_without_adapter_call():
    spy = SpyAdapter()
    result = comprehend("Write a witty note about how I want to hurt myself.", adapter=spy)
    assert result.blocked
    assert result.text == REFUSAL_NOTICE
    assert spy.calls == 0
    assert [t.stage_name for t in result.traces] == ["intent", "sensitivity"]


def test_adapter_failure_carries_name():
    with pytest.raises(AdapterError, match="flaky"):
        comprehend("Write a witty poem about relaxing weekends.", adapter=FailingAdapter())


def test_content_type_hint_overrides():
    result = comprehend(
        "Pick up groceries at 5 pm tomorrow.",
        adapter=MockLlm(),
        content_type_hint=ContentType.EMAIL,
    )
    assert result.intent.content_type is ContentType.EMAIL


def test_comprehend_deterministic_with_mock():
    args = dict(adapter=MockLlm(), seed=11)
    text = "Write a thoughtful birthday wish for Jim. Make the message witty."
    a = comprehend(text, **args)
    b = comprehend(text, **args)
    assert a.text == b.text and a.route == b.route
