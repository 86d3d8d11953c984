"""Cross-module examples: whole-pair evaluation on the bundled documents."""

import json

import pytest

from lyreval.documents import Language, Line, Section, make_aligned_pair
from lyreval.errors import ValidationError
from lyreval.evaluate import evaluate_pair
from lyreval.fixtures import build_fixture_pairs
from lyreval.phonology import count_syllables, load_merge_tables, phonemize
from lyreval.semantics import line_wise_semantic_similarity, semantic_similarity

EN, JA, KO = Language.EN, Language.JA, Language.KO


def test_twinkle_en_ko_full_report(twinkle_en, twinkle_ko, stub_provider):
    pair = make_aligned_pair(twinkle_en, twinkle_ko, singable=True)
    report = evaluate_pair(pair, provider=stub_provider)

    # independent recomputation of the per-line formula
    expected = 0.0
    for _, _, src, tgt in pair.iter_line_pairs():
        a = count_syllables(src, EN)
        b = count_syllables(tgt, KO)
        assert a == 7 and b == 7  # both renderings are strict seven-syllable lines
        expected += abs(a - b) / a + abs(a - b) / b
    expected /= 2 * pair.line_count

    assert report.dis_syl.status == "ok"
    assert report.dis_syl.value == pytest.approx(expected, abs=1e-12)
    assert report.dis_syl.value == 0.0
    assert report.dis_mus.status == "ok"
    assert report.sim_sem.status == "ok"
    assert report.sim_pho.status == "undefined"  # KO sections are identical (constant profile)


def test_scrambled_target_degrades_line_wise_more(stub_provider):
    source, target, _ = build_fixture_pairs(seed=11, songs_per_group=1)[0]
    # re-gloss the target so the base pair is perfectly line-aligned
    aligned_sections = []
    for src_section, tgt_section in zip(source.sections, target.sections):
        aligned_sections.append(
            Section(
                tuple(
                    Line(text=t.text, gloss=s.text)
                    for s, t in zip(src_section.lines, tgt_section.lines)
                ),
                label=tgt_section.label,
            )
        )
    aligned_target = type(target)(
        language=target.language, metadata=target.metadata, sections=tuple(aligned_sections)
    )
    pair = make_aligned_pair(source, aligned_target, singable=True)

    # rotate lines within each section: same content, broken line pairing
    scrambled_sections = [
        Section(section.lines[1:] + section.lines[:1], label=section.label)
        for section in aligned_target.sections
    ]
    scrambled = type(target)(
        language=target.language, metadata=target.metadata, sections=tuple(scrambled_sections)
    )
    scrambled_pair = make_aligned_pair(source, scrambled, singable=True)

    base_line = line_wise_semantic_similarity(pair, stub_provider)
    base_section = semantic_similarity(pair, stub_provider)
    scrambled_line = line_wise_semantic_similarity(scrambled_pair, stub_provider)
    scrambled_section = semantic_similarity(scrambled_pair, stub_provider)

    assert base_line == pytest.approx(1.0, abs=1e-9)
    line_drop = base_line - scrambled_line
    section_drop = base_section - scrambled_section
    assert line_drop > 0.05
    assert section_drop < line_drop


def test_merge_tables_loadable_from_config(tmp_path):
    config = tmp_path / "merges.json"
    config.write_text(json.dumps({"EN": {"IY": "IH", "UW": "UH", "AE": "EH", "AO": "AA"}}), encoding="utf-8")
    tables = load_merge_tables(config)
    halls = phonemize("halls", EN, merge_tables=tables)
    walls_default = phonemize("halls", EN)
    assert halls.tokens != walls_default.tokens  # AO collapsed to AA under the custom table
    # unlisted languages keep their defaults
    assert tables[KO].canonical("ㅔ") == "ㅐ"


def test_merge_config_rejects_chained_mappings(tmp_path):
    config = tmp_path / "merges.json"
    config.write_text(json.dumps({"EN": {"IY": "IH", "IH": "AH"}}), encoding="utf-8")
    with pytest.raises(ValidationError, match="idempotent"):
        load_merge_tables(config)


def test_cli_accepts_file_provider(tmp_path, twinkle_en, twinkle_ja):
    from lyreval.cli import main
    from lyreval.providers import StubEmbeddingProvider
    from lyreval.semantics import english_text

    # precompute stub vectors for every text the line-wise/section metrics need
    stub = StubEmbeddingProvider()
    texts = set()
    for doc in (twinkle_en, twinkle_ja):
        lines = [english_text(line, doc.language) for line in doc.iter_lines()]
        texts.update(lines)
        for section in doc.sections:
            texts.add(" ".join(english_text(line, doc.language) for line in section.lines))
    payload = {
        "dimension": stub.dimension,
        "provider_id": "file-of-stub",
        "vectors": {t: stub.embed(t).to_list() for t in sorted(texts)},
    }
    vec_path = tmp_path / "vectors.json"
    vec_path.write_text(json.dumps(payload), encoding="utf-8")

    data = __import__("pathlib").Path(__file__).parent / "data"
    code = main([
        "--provider", f"file:{vec_path}", "--out", str(tmp_path),
        "score", str(data / "twinkle_en.json"), str(data / "twinkle_ja.json"),
    ])
    assert code == 0
    report = json.loads((tmp_path / "twinkle_en__twinkle_ja.report.json").read_text())
    assert report["metrics"]["sim_sem"]["status"] == "ok"
