"""Singability metrics over aligned lyric pairs.

* line_syllable_count_distance: mean relative per-line syllable gap,
  normalized by both sides; 0 iff every aligned line matches.
* phoneme_distinct2: unique/total consecutive phoneme bi-grams over the
  contiguous token stream of one or more sections (one EOS per line, so a
  line-final EOS forms a bi-gram with the next line's first phoneme, and
  total bi-grams == tokens - 1).
* phoneme_repetition_similarity: Spearman correlation of the per-section
  distinct-2 profiles of the two documents.
* section_dissimilarity / self_dissimilarity_matrix: distinct-2 of the
  concatenated pair plus the absolute distinct-2 gap; concatenation order
  is canonicalized (lower index first) so matrices are exactly symmetric.
* musical_structure_distance: RMS-style distance between the two
  self-dissimilarity matrices over all ordered section pairs, including
  the diagonal, scaled by 1/m^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .documents import AlignedPair, Language, LyricsDocument, Section
from .errors import DomainError
from .phonology import EOS, Lexicon, MergeTable, count_syllables, phonemize_section


@dataclass(frozen=True)
class SectionPhoStats:
    """Distinct-2 ratio with its raw bi-gram counts."""

    pho: float
    unique_bigrams: int
    total_bigrams: int


@dataclass(frozen=True)
class DissimilarityMatrix:
    entries: tuple[tuple[float, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return self.entries[i][j]


def bigram_stats(tokens: Sequence[str]) -> tuple[int, int]:
    """(unique, total) consecutive-pair counts over a token stream."""
    if len(tokens) < 2:
        return 0, 0
    bigrams = list(zip(tokens, tokens[1:]))
    return len(set(bigrams)), len(bigrams)


def _sections_tokens(
    sections: Section | Sequence[Section],
    language: Language,
    lexicon: Lexicon | None,
    merge_tables: dict[Language, MergeTable] | None,
) -> list[str]:
    if isinstance(sections, Section):
        sections = [sections]
    tokens: list[str] = []
    for section in sections:
        tokens.extend(phonemize_section(section, language, lexicon=lexicon, merge_tables=merge_tables).tokens)
    return tokens


def _stats_from_tokens(tokens: Sequence[str]) -> SectionPhoStats:
    if all(t == EOS for t in tokens):
        raise DomainError("phoneme distinct-2 needs at least one line with one phoneme")
    unique, total = bigram_stats(tokens)
    return SectionPhoStats(pho=unique / total, unique_bigrams=unique, total_bigrams=total)


def phoneme_distinct2(
    sections: Section | Sequence[Section],
    language: Language,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> SectionPhoStats:
    """Distinct-2 over the token stream of one section, or of several concatenated in argument order."""
    tokens = _sections_tokens(sections, language, lexicon, merge_tables)
    return _stats_from_tokens(tokens)


def line_syllable_count_distance(pair: AlignedPair, *, lexicon: Lexicon | None = None) -> float:
    """Average relative syllable-count gap over all aligned lines."""
    total = 0.0
    n = 0
    for si, li, src, tgt in pair.iter_line_pairs():
        a = count_syllables(src, pair.source.language, lexicon=lexicon)
        b = count_syllables(tgt, pair.target.language, lexicon=lexicon)
        if a == 0 or b == 0:
            side = "source" if a == 0 else "target"
            text = src.text if a == 0 else tgt.text
            raise DomainError(f"zero-syllable {side} line at section {si}, line {li}: {text!r}")
        gap = abs(a - b)
        total += gap / a + gap / b
        n += 1
    return total / (2 * n)


def _tie_averaged_ranks(values: Sequence[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        # 1-based ranks i+1..j+1 share their average
        avg = (i + j + 2) / 2
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman(a: Sequence[float], b: Sequence[float]) -> float | None:
    """Pearson correlation of tie-averaged ranks; None when either side has no rank variance."""
    if len(a) != len(b):
        raise DomainError(f"spearman needs equal-length inputs, got {len(a)} and {len(b)}")
    if len(a) < 2:
        raise DomainError("spearman needs at least two observations")
    ra = _tie_averaged_ranks(a)
    rb = _tie_averaged_ranks(b)
    n = len(ra)
    mean_a = sum(ra) / n
    mean_b = sum(rb) / n
    da = [x - mean_a for x in ra]
    db = [x - mean_b for x in rb]
    var_a = sum(x * x for x in da)
    var_b = sum(x * x for x in db)
    if var_a == 0.0 or var_b == 0.0:
        return None
    cov = sum(x * y for x, y in zip(da, db))
    return cov / math.sqrt(var_a * var_b)


def pho_profile(
    doc: LyricsDocument,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> list[float]:
    """Per-section distinct-2 values in section order."""
    return [
        phoneme_distinct2(section, doc.language, lexicon=lexicon, merge_tables=merge_tables).pho
        for section in doc.sections
    ]


def phoneme_repetition_similarity(
    pair: AlignedPair,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> float | None:
    """Spearman correlation between the two per-section distinct-2 profiles.

    None when a profile has zero variance; DomainError for fewer than two
    sections.
    """
    if pair.section_count < 2:
        raise DomainError("phoneme repetition similarity needs at least two sections")
    a = pho_profile(pair.source, lexicon=lexicon, merge_tables=merge_tables)
    b = pho_profile(pair.target, lexicon=lexicon, merge_tables=merge_tables)
    return spearman(a, b)


def section_dissimilarity(
    xi: Section,
    xj: Section,
    language: Language,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> float:
    """Distinct-2 of the concatenated sections plus the absolute gap of their own values."""
    joint = phoneme_distinct2([xi, xj], language, lexicon=lexicon, merge_tables=merge_tables)
    pi = phoneme_distinct2(xi, language, lexicon=lexicon, merge_tables=merge_tables)
    pj = phoneme_distinct2(xj, language, lexicon=lexicon, merge_tables=merge_tables)
    return joint.pho + abs(pi.pho - pj.pho)


def self_dissimilarity_matrix(
    doc: LyricsDocument,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> DissimilarityMatrix:
    """m x m section dissimilarity matrix, exactly symmetric.

    Concatenation order for off-diagonal cells is canonicalized to the
    lower section index first.
    """
    streams = [
        list(phonemize_section(section, doc.language, lexicon=lexicon, merge_tables=merge_tables).tokens)
        for section in doc.sections
    ]
    pho = [_stats_from_tokens(s).pho for s in streams]
    m = len(streams)
    entries = [[0.0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            joint = _stats_from_tokens(streams[i] + streams[j]).pho
            value = joint + abs(pho[i] - pho[j])
            entries[i][j] = value
            entries[j][i] = value
    return DissimilarityMatrix(tuple(tuple(row) for row in entries))


def structure_distance_between(a: DissimilarityMatrix, b: DissimilarityMatrix) -> float:
    """Scaled Frobenius distance between two equal-size dissimilarity matrices."""
    if a.size != b.size:
        raise DomainError(f"matrix size mismatch: {a.size} vs {b.size}")
    m = a.size
    total = 0.0
    for i in range(m):
        for j in range(m):
            diff = a.entries[i][j] - b.entries[i][j]
            total += diff * diff
    return math.sqrt(total) / (m * m)


def musical_structure_distance(
    pair: AlignedPair,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> float:
    source = self_dissimilarity_matrix(pair.source, lexicon=lexicon, merge_tables=merge_tables)
    target = self_dissimilarity_matrix(pair.target, lexicon=lexicon, merge_tables=merge_tables)
    return structure_distance_between(source, target)
