import pytest
from hypothesis import given, strategies as st

from voicedraft.gec import (
    CASE_CAPITAL,
    DELETE,
    KEEP,
    EditKind,
    EditTag,
    append,
    apply_edit_tags,
    gec_tag,
    replace,
)
from voicedraft.transcript import Token


def toks(words):
    return [Token(w, i) for i, w in enumerate(words)]


def test_a_before_vowel():
    assert gec_tag(["a", "apple"]) == [replace("an"), KEEP]


def test_an_before_consonant():
    assert gec_tag(["an", "book"]) == [replace("a"), KEEP]


def test_case_preserved_in_replacement():
    assert gec_tag(["A", "apple"]) == [replace("An"), KEEP]


def test_standalone_i_capitalized():
    assert gec_tag(["i", "agree"]) == [CASE_CAPITAL, KEEP]
    assert gec_tag(["I", "agree"]) == [KEEP, KEEP]


def test_doubled_function_word_deleted():
    assert gec_tag(["the", "the", "end"]) == [DELETE, KEEP, KEEP]


def test_doubled_content_word_kept():
    assert gec_tag(["really", "really", "good"]) == [KEEP, KEEP, KEEP]


def test_apply_edit_tags_combo():
    out = apply_edit_tags(
        toks(["i", "has", "a", "apple"]),
        [CASE_CAPITAL, replace("have"), replace("an"), KEEP],
    )
    assert [t.text for t in out] == ["I", "have", "an", "apple"]


def test_apply_all_keep_is_identity():
    tokens = toks(["x", "y"])
    assert [t.text for t in apply_edit_tags(tokens, [KEEP, KEEP])] == ["x", "y"]


def test_apply_append():
    out = apply_edit_tags(toks(["go"]), [append("now")])
    assert [t.text for t in out] == ["go", "now"]


def test_apply_length_mismatch():
    with pytest.raises(ValueError):
        apply_edit_tags(toks(["a"]), [KEEP, KEEP])


def test_edit_tag_payload_validation():
    with pytest.raises(ValueError):
        EditTag(EditKind.REPLACE)
    with pytest.raises(ValueError):
        EditTag(EditKind.KEEP, "oops")


tag_st = st.sampled_from([KEEP, DELETE, CASE_CAPITAL, append("w"), replace("v")])


@given(st.lists(st.sampled_from(["a", "the", "cat", "go"]), min_size=1, max_size=10), st.data())
def test_apply_length_bounds(words, data):
    tags = [data.draw(tag_st) for _ in words]
    out = apply_edit_tags(toks(words), tags)
    deletes = sum(t.kind is EditKind.DELETE for t in tags)
    appends = sum(t.kind is EditKind.APPEND for t in tags)
    assert len(words) - deletes <= len(out) <= len(words) + appends
