"""Deterministic synthetic fixture corpora.

The shipped corpus stands in for real song data: singable fixtures are
built with matched per-line syllable counts, mirrored chorus/verse
repetition structure, and section-preserving glosses; non-singable
fixtures get inflated line lengths, an inverted repetition profile, and
no shared sectional structure. The construction guarantees the expected
metric orderings (lower syllable and structure distance, higher
repetition similarity for singable pairs) without depending on any
external data.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from .documents import (
    Language,
    Line,
    LyricsDocument,
    Section,
    SongMetadata,
    document_to_dict,
)
from .phonology.korean import compose_hangul

_EN_ONE = (
    "star moon night day dream heart love song rain snow wind gold light time way "
    "hand home road stone crown sail wave tide shore sun sky bird wing cloud breeze sand bloom bridge"
).split()
_EN_TWO = (
    "river mountain ocean garden shadow silver golden morning winter summer water story "
    "echo meadow valley candle mirror harbor island flower feather thunder lantern castle "
    "kingdom journey rainbow sunset sunrise midnight whisper crystal"
).split()

_KANA = list(
    "かきくけこさしすせそたちつてとなにぬねのはひふへほまみむめも"
    "やゆよらりるれろわあいうえおがぎぐげござじずぜぞだでどばびぶべぼ"
)
_KO_ONSETS = list("ㄱㄴㄷㄹㅁㅂㅅㅈㅊㅋㅌㅍㅎ")
_KO_NUCLEI = list("ㅏㅓㅗㅜㅡㅣㅐㅔㅑㅕㅛㅠ")
_KO_CODAS = [None, None, None, "ㄴ", "ㄹ", "ㅁ", "ㅇ"]

_CHORUS_COUNTS = (8, 8, 8, 8)
_VERSE_COUNTS = (7, 9, 8)


def _en_repetitive_line(rng: random.Random, syllables: int) -> str:
    a, b = rng.sample(_EN_ONE, 2)
    unit = [a, b]
    words = (unit * ((syllables // 2) + 1))[: syllables - (syllables % 2)]
    if syllables % 2:
        words.append(a)
    return " ".join(words)


def _en_varied_line(rng: random.Random, syllables: int) -> str:
    words: list[str] = []
    remaining = syllables
    pool_two = rng.sample(_EN_TWO, len(_EN_TWO))
    pool_one = rng.sample(_EN_ONE, len(_EN_ONE))
    while remaining > 0:
        if remaining >= 2 and pool_two and rng.random() < 0.6:
            words.append(pool_two.pop())
            remaining -= 2
        else:
            words.append(pool_one.pop())
            remaining -= 1
    return " ".join(words)


def _ja_repetitive_line(rng: random.Random, morae: int) -> str:
    unit = "".join(rng.sample(_KANA, 2))
    text = (unit * ((morae // 2) + 1))[:morae]
    return text


def _ja_varied_line(rng: random.Random, morae: int) -> str:
    return "".join(rng.choice(_KANA) for _ in range(morae))


def _ko_block(rng: random.Random) -> str:
    return compose_hangul(rng.choice(_KO_ONSETS), rng.choice(_KO_NUCLEI), rng.choice(_KO_CODAS))


def _ko_repetitive_line(rng: random.Random, blocks: int) -> str:
    unit = _ko_block(rng) + _ko_block(rng)
    return (unit * ((blocks // 2) + 1))[:blocks]


def _ko_varied_line(rng: random.Random, blocks: int) -> str:
    return "".join(_ko_block(rng) for _ in range(blocks))


def _target_line(rng: random.Random, language: Language, count: int, repetitive: bool) -> str:
    if language is Language.JA:
        return _ja_repetitive_line(rng, count) if repetitive else _ja_varied_line(rng, count)
    if language is Language.KO:
        return _ko_repetitive_line(rng, count) if repetitive else _ko_varied_line(rng, count)
    return _en_repetitive_line(rng, count) if repetitive else _en_varied_line(rng, count)


def _source_document(rng: random.Random, title: str, genre: str) -> LyricsDocument:
    chorus_text = [_en_repetitive_line(rng, c) for c in _CHORUS_COUNTS]
    verse_text = [_en_varied_line(rng, c) for c in _VERSE_COUNTS]
    sections = (
        Section(tuple(Line(t) for t in chorus_text), label="chorus"),
        Section(tuple(Line(t) for t in verse_text), label="verse"),
        Section(tuple(Line(t) for t in chorus_text), label="chorus"),
    )
    metadata = SongMetadata(title=title, artist="Fixture Ensemble", genre=genre,
                            original_language=Language.EN, official=True)
    return LyricsDocument(language=Language.EN, metadata=metadata, sections=sections)


def _shift(texts: list[str]) -> list[str]:
    return texts[1:] + texts[:1]


def _target_document(
    rng: random.Random,
    source: LyricsDocument,
    language: Language,
    singable: bool,
    title: str,
) -> LyricsDocument:
    sections = []
    chorus_cache: tuple[str, ...] | None = None
    for section in source.sections:
        # the generator owns both sides, so the intended syllable counts
        # come from the construction tables rather than re-counting
        if section.label == "chorus":
            source_counts = list(_CHORUS_COUNTS)
        else:
            source_counts = list(_VERSE_COUNTS)
        repetitive_section = section.label == "chorus"
        if singable:
            counts = source_counts
            repetitive = repetitive_section
        else:
            counts = [c * 2 + rng.randrange(0, 4) for c in source_counts]
            repetitive = not repetitive_section  # inverted repetition profile
        if singable and repetitive_section:
            if chorus_cache is None:
                chorus_cache = tuple(_target_line(rng, language, c, True) for c in counts)
            texts = list(chorus_cache)
        else:
            texts = [_target_line(rng, language, c, repetitive) for c in counts]
        source_texts = [line.text for line in section.lines]
        glosses = _shift(source_texts) if singable else list(source_texts)
        sections.append(
            Section(
                tuple(Line(text=t, gloss=g) for t, g in zip(texts, glosses)),
                label=section.label,
            )
        )
    metadata = SongMetadata(title=title, artist="Fixture Ensemble", genre=source.metadata.genre,
                            original_language=Language.EN, official=singable)
    return LyricsDocument(language=language, metadata=metadata, sections=tuple(sections))


def build_fixture_pairs(
    seed: int = 7, songs_per_group: int = 5
) -> list[tuple[LyricsDocument, LyricsDocument, bool]]:
    """(source, target, singable) triples: EN->JA and EN->KO, singable and not."""
    genres = ("pop", "animation", "theatre")
    out = []
    index = 0
    for target_language in (Language.JA, Language.KO):
        for singable in (True, False):
            for _ in range(songs_per_group):
                rng = random.Random(seed * 100003 + index)
                title = f"Fixture Song {index:03d}"
                source = _source_document(rng, title, genres[index % len(genres)])
                target = _target_document(rng, source, target_language, singable, title)
                out.append((source, target, singable))
                index += 1
    return out


def write_fixture_corpus(dest: str | Path, *, seed: int = 7, songs_per_group: int = 5) -> Path:
    """Write documents plus a manifest under ``dest``; returns the manifest path."""
    dest = Path(dest)
    docs_dir = dest / "docs"
    docs_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    for i, (source, target, singable) in enumerate(build_fixture_pairs(seed, songs_per_group)):
        src_name = f"docs/song{i:03d}_{source.language.value}.json"
        tgt_name = f"docs/song{i:03d}_{target.language.value}.json"
        for name, doc in ((src_name, source), (tgt_name, target)):
            (dest / name).write_text(
                json.dumps(document_to_dict(doc), ensure_ascii=False, indent=2) + "\n",
                encoding="utf-8",
            )
        entries.append({"source": src_name, "target": tgt_name, "singable": singable})
    manifest = dest / "manifest.json"
    manifest.write_text(json.dumps({"pairs": entries}, indent=2) + "\n", encoding="utf-8")
    return manifest
