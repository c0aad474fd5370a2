import pytest
from hypothesis import given, strategies as st

from voicedraft.disfluency import (
    DisfluencyTag,
    filter_disfluencies,
    tag_disfluencies,
)
from voicedraft.transcript import Token

F = DisfluencyTag.FLUENT
REP = DisfluencyTag.REPETITION
RPL = DisfluencyTag.REPLACEMENT
RST = DisfluencyTag.RESTART


def toks(words):
    return [Token(w, i) for i, w in enumerate(words)]


def test_adjacent_duplicate_keeps_last():
    assert tag_disfluencies(["i", "i", "want", "to", "go"]) == [REP, F, F, F, F]


def test_stutter_run_keeps_one():
    assert tag_disfluencies(["i", "i", "i", "go"]) == [REP, REP, F, F]


def test_bigram_repetition():
    assert tag_disfluencies(["i", "want", "i", "want", "to", "go"]) == [REP, REP, F, F, F, F]


def test_no_disfluency_all_fluent():
    assert tag_disfluencies(["hello", "how", "are", "you"]) == [F, F, F, F]


def test_cue_phrase_replacement_with_parallel_word():
    tags = tag_disfluencies(["meet", "on", "tuesday", "i", "mean", "wednesday"])
    assert tags == [F, F, RPL, RPL, RPL, F]


def test_strong_cue_without_parallel_still_tagged():
    tags = tag_disfluencies(["we", "can", "no", "wait", "we", "should", "go"])
    assert tags[2] is RPL and tags[3] is RPL


def test_weak_cue_needs_parallel_span():
    # "rather" in fluent use survives
    assert tag_disfluencies(["i", "would", "rather", "stay"]) == [F, F, F, F]


def test_fillers_tagged_for_removal():
    tags = tag_disfluencies(["uh", "hello", "um", "there"])
    assert tags == [RST, F, RST, F]


def test_restart_fragment_before_pronoun():
    tags = tag_disfluencies(["the", "meeting", "we", "should", "talk", "tomorrow"])
    assert tags == [RST, RST, F, F, F, F]


def test_no_restart_when_fragment_contains_verbish_word():
    tags = tag_disfluencies(["email", "sam", "i", "think", "this", "works"])
    assert tags == [F, F, F, F, F, F]


def test_filter_removes_non_fluent():
    kept = filter_disfluencies(toks(["i", "i", "go"]), [REP, F, F])
    assert [t.text for t in kept] == ["i", "go"]
    assert [t.index for t in kept] == [0, 1]


def test_filter_identity_when_all_fluent():
    tokens = toks(["a", "b", "c"])
    assert [t.text for t in filter_disfluencies(tokens, [F, F, F])] == ["a", "b", "c"]


def test_filter_restart_example():
    kept = filter_disfluencies(toks(["uh", "hi"]), [RST, F])
    assert [t.text for t in kept] == ["hi"]


def test_filter_length_mismatch():
    with pytest.raises(ValueError):
        filter_disfluencies(toks(["a"]), [F, F])


@given(st.lists(st.sampled_from(["a", "b", "go", "we", "the"]), max_size=12))
def test_filter_output_is_subsequence(words):
    tokens = toks(words) if words else []
    tags = tag_disfluencies(tokens)
    kept = [t.text for t in filter_disfluencies(tokens, tags)]
    it = iter(words)
    assert all(any(w == k for w in it) for k in kept)  # subsequence, order preserved
