import json

import pytest
from hypothesis import given, strategies as st

from lyreval.documents import (
    Language,
    Line,
    dump_document,
    make_aligned_pair,
    parse_document,
)
from lyreval.errors import AlignmentError, ParseError, ValidationError

from conftest import make_doc


def test_parse_twinkle_shape(twinkle_en):
    assert twinkle_en.language is Language.EN
    assert twinkle_en.section_count == 2
    assert twinkle_en.line_counts == (6, 6)
    assert twinkle_en.line_count == 12
    assert twinkle_en.sections[0].lines[0].text == "Twinkle, twinkle, little star"


def test_parse_preserves_order(twinkle_en):
    texts = [line.text for line in twinkle_en.iter_lines()]
    assert texts[8] == "When the blazing sun is gone"
    assert texts[11] == "Twinkle, twinkle, all the night"


def test_round_trip(twinkle_en, twinkle_ja, twinkle_ko, snowman_en):
    for doc in (twinkle_en, twinkle_ja, twinkle_ko, snowman_en):
        assert parse_document(dump_document(doc)) == doc


def test_malformed_json_reports_position():
    with pytest.raises(ParseError, match=r"line 1 column"):
        parse_document('{"language": "EN",')


def test_zero_sections_rejected():
    raw = {
        "language": "EN",
        "metadata": {"title": "t", "artist": "a", "genre": "g",
                     "original_language": "EN", "official": True},
        "sections": [],
    }
    with pytest.raises(ValidationError, match="at least one section"):
        parse_document(raw)


def test_whitespace_only_line_rejected():
    raw = {
        "language": "EN",
        "metadata": {"title": "t", "artist": "a", "genre": "g",
                     "original_language": "EN", "official": True},
        "sections": [{"lines": [{"text": "   "}]}],
    }
    with pytest.raises(ValidationError, match=r"sections\[0\].lines\[0\]"):
        parse_document(raw)


def test_unknown_language_tag_rejected():
    raw = {
        "language": "FR",
        "metadata": {"title": "t", "artist": "a", "genre": "g",
                     "original_language": "EN", "official": True},
        "sections": [{"lines": [{"text": "hi"}]}],
    }
    with pytest.raises(ValidationError, match="unknown language tag"):
        parse_document(raw)


def test_line_invariants():
    with pytest.raises(ValidationError):
        Line(text="")
    with pytest.raises(ValidationError):
        Line(text="ok", gloss="  ")


def test_make_aligned_pair_valid(twinkle_en, twinkle_ko):
    pair = make_aligned_pair(twinkle_en, twinkle_ko, singable=True)
    assert pair.section_count == 2
    assert pair.line_count == 12


def test_section_count_mismatch_names_counts(twinkle_en, doc_builder):
    ja = doc_builder([["きらきら"], ["ひかる"], ["ほしよ"]], language=Language.JA)
    with pytest.raises(AlignmentError, match="source has 2, target has 3"):
        make_aligned_pair(twinkle_en, ja)


def test_line_count_mismatch_names_section_index(doc_builder):
    en = doc_builder([["one two", "three four"], ["five six"]])
    ja = doc_builder([["きらきら", "ひかる"], ["ほしよ", "そらの"]], language=Language.JA)
    with pytest.raises(AlignmentError, match="section 1"):
        make_aligned_pair(en, ja)


def test_same_language_pair_rejected(twinkle_en):
    other = make_doc([["Silent night holy night"]])
    with pytest.raises(ValidationError, match="same language"):
        make_aligned_pair(twinkle_en, other)


@given(
    shape_a=st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
    shape_b=st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
)
def test_alignment_validation_is_symmetric(shape_a, shape_b):
    en = make_doc([[f"line {i} {j}" for j in range(n)] for i, n in enumerate(shape_a)])
    ja = make_doc(
        [["きらきら"] * n for n in shape_b], language=Language.JA
    )

    def outcome(a, b):
        try:
            make_aligned_pair(a, b)
            return "ok"
        except AlignmentError:
            return "misaligned"

    assert outcome(en, ja) == outcome(ja, en)


def test_document_json_matches_schema(twinkle_ja):
    data = json.loads(dump_document(twinkle_ja))
    assert set(data) == {"language", "metadata", "sections"}
    assert set(data["metadata"]) == {"title", "artist", "genre", "original_language", "official"}
    assert all("text" in line for sec in data["sections"] for line in sec["lines"])
