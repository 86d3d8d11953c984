"""Embedding-backed semantic similarity over aligned pairs.

All comparisons happen in English: a line's ``gloss`` wins when present,
English text passes through, and anything else goes to the configured
TranslationProvider (or raises ConfigurationError). Lines are joined with
single spaces when a section or window is embedded as one text.

Negative cosines are clamped to zero only in cross-scape grids; the
section- and line-wise similarity values keep the raw cosine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .documents import AlignedPair, Language, Line, LyricsDocument, Section
from .errors import ConfigurationError, DomainError, ValidationError
from .providers import EmbeddingCache, EmbeddingProvider, TranslationProvider


def english_text(line: Line, language: Language, translator: TranslationProvider | None = None) -> str:
    """English rendering of one line: gloss, else identity for EN, else translation."""
    if line.gloss is not None:
        return line.gloss.strip()
    if language is Language.EN:
        return line.text.strip()
    if translator is not None:
        return translator.translate(line.text, language).strip()
    raise ConfigurationError(
        f"{language.value} line has no gloss and no translation provider is configured: {line.text!r}"
    )


def section_english_text(
    section: Section, language: Language, translator: TranslationProvider | None = None
) -> str:
    return " ".join(english_text(line, language, translator) for line in section.lines)


def sts(
    a: str,
    b: str,
    provider: EmbeddingProvider,
    cache: EmbeddingCache | None = None,
) -> float:
    """Cosine similarity between the embeddings of two texts."""
    if not a.strip() or not b.strip():
        raise DomainError("semantic textual similarity needs two non-empty texts")
    if cache is None:
        cache = EmbeddingCache()
    va, vb = cache.get_many(provider, [a, b])
    return va.cosine(vb)


def _document_english_lines(doc: LyricsDocument, translator: TranslationProvider | None) -> list[str]:
    lines = [english_text(line, doc.language, translator) for line in doc.iter_lines()]
    return lines


def semantic_similarity(
    pair: AlignedPair,
    provider: EmbeddingProvider,
    translator: TranslationProvider | None = None,
    cache: EmbeddingCache | None = None,
) -> float:
    """Line-count-weighted mean of per-section similarity; weights sum to one."""
    if cache is None:
        cache = EmbeddingCache()
    n = pair.line_count
    total = 0.0
    for src, tgt in zip(pair.source.sections, pair.target.sections):
        a = section_english_text(src, pair.source.language, translator)
        b = section_english_text(tgt, pair.target.language, translator)
        total += (len(src) / n) * sts(a, b, provider, cache)
    return total


def line_wise_semantic_similarity(
    pair: AlignedPair,
    provider: EmbeddingProvider,
    translator: TranslationProvider | None = None,
    cache: EmbeddingCache | None = None,
) -> float:
    """Unweighted mean of per-line similarity; the baseline the section-wise metric improves on."""
    if cache is None:
        cache = EmbeddingCache()
    src_lines = _document_english_lines(pair.source, translator)
    tgt_lines = _document_english_lines(pair.target, translator)
    values = [sts(a, b, provider, cache) for a, b in zip(src_lines, tgt_lines)]
    return sum(values) / len(values)


@dataclass(frozen=True)
class CrossScapeGrid:
    """Triangular grid: level k holds similarities of all k-line windows, clamped to [0, 1]."""

    levels: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.levels)
        for k, row in enumerate(self.levels, start=1):
            if len(row) != n - k + 1:
                raise ValidationError(f"cross-scape level {k} must have {n - k + 1} cells, got {len(row)}")

    @property
    def n(self) -> int:
        return len(self.levels)

    @property
    def base_row(self) -> tuple[float, ...]:
        return self.levels[0]

    @property
    def apex(self) -> float:
        return self.levels[-1][0]


def _clamp01(value: float) -> float:
    return min(max(value, 0.0), 1.0)


def cross_scape(
    pair: AlignedPair,
    provider: EmbeddingProvider,
    translator: TranslationProvider | None = None,
    cache: EmbeddingCache | None = None,
) -> CrossScapeGrid:
    """Similarity of every contiguous k-line window, from single lines to the whole lyric."""
    if cache is None:
        cache = EmbeddingCache()
    src_lines = _document_english_lines(pair.source, translator)
    tgt_lines = _document_english_lines(pair.target, translator)
    n = len(src_lines)
    levels = []
    for k in range(1, n + 1):
        row = []
        for i in range(n - k + 1):
            a = " ".join(src_lines[i : i + k])
            b = " ".join(tgt_lines[i : i + k])
            row.append(_clamp01(sts(a, b, provider, cache)))
        levels.append(tuple(row))
    return CrossScapeGrid(tuple(levels))


def section_similarity_matrix(
    pair: AlignedPair,
    provider: EmbeddingProvider,
    translator: TranslationProvider | None = None,
    *,
    granularity: str = "section",
    cache: EmbeddingCache | None = None,
) -> tuple[tuple[float, ...], ...]:
    """Similarity between every source unit i and target unit j at line or section granularity."""
    if granularity not in ("line", "section"):
        raise DomainError(f"granularity must be 'line' or 'section', got {granularity!r}")
    if cache is None:
        cache = EmbeddingCache()
    if granularity == "section":
        src_units = [
            section_english_text(s, pair.source.language, translator) for s in pair.source.sections
        ]
        tgt_units = [
            section_english_text(s, pair.target.language, translator) for s in pair.target.sections
        ]
    else:
        src_units = _document_english_lines(pair.source, translator)
        tgt_units = _document_english_lines(pair.target, translator)
    return tuple(
        tuple(sts(a, b, provider, cache) for b in tgt_units) for a in src_units
    )
