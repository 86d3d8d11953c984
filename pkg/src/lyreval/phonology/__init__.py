"""Per-language phonological parsing: phoneme sequences and syllable counts.

The two entry points used by the metrics layer are :func:`phonemize`
(line -> normalized phoneme tokens + end-of-line marker) and
:func:`count_syllables`. Both are pure for a fixed lexicon and merge
tables, and dispatch is total over the three supported languages.
"""

from __future__ import annotations

from ..documents import Language, Line, Section
from ..errors import DomainError
from . import english, japanese, korean
from .english import Lexicon, default_lexicon
from .sequences import (
    EOS,
    MergeTable,
    PhonemeSequence,
    apply_merge_table,
    default_merge_tables,
    is_eos,
    load_merge_tables,
)

__all__ = [
    "EOS",
    "Lexicon",
    "MergeTable",
    "PhonemeSequence",
    "apply_merge_table",
    "count_syllables",
    "default_lexicon",
    "default_merge_tables",
    "is_eos",
    "language_inventory",
    "load_merge_tables",
    "phonemize",
    "phonemize_section",
]


def language_inventory(language: Language) -> frozenset[str]:
    if language is Language.EN:
        return frozenset(english.INVENTORY)
    if language is Language.JA:
        return frozenset(japanese.INVENTORY)
    return frozenset(korean.INVENTORY)


def _line_text(line: Line | str) -> str:
    return line.text if isinstance(line, Line) else line


def phonemize(
    line: Line | str,
    language: Language,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> PhonemeSequence:
    """Normalized phoneme tokens for one line, terminated by one EOS.

    A line that is empty after filtering yields a sequence containing
    only EOS.
    """
    text = _line_text(line)
    if language is Language.EN:
        lex = lexicon if lexicon is not None else default_lexicon()
        tokens = english.line_phonemes(text, lex)
    elif language is Language.JA:
        tokens = japanese.line_phonemes(text)
    else:
        tokens = korean.line_phonemes(text)
    seq = PhonemeSequence(tuple(tokens) + (EOS,), language)
    tables = merge_tables if merge_tables is not None else default_merge_tables()
    return tables[language].apply(seq)


def phonemize_section(
    section: Section,
    language: Language,
    *,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
) -> PhonemeSequence:
    """Concatenated line sequences in order; one EOS per line."""
    tokens: list[str] = []
    for line in section.lines:
        tokens.extend(phonemize(line, language, lexicon=lexicon, merge_tables=merge_tables).tokens)
    return PhonemeSequence(tuple(tokens), language)


def count_syllables(line: Line | str, language: Language, *, lexicon: Lexicon | None = None) -> int:
    """Per-language syllable count: EN vowel phonemes, JA morae, KO hangul blocks."""
    text = _line_text(line)
    if language is Language.EN:
        lex = lexicon if lexicon is not None else default_lexicon()
        return english.line_syllables(text, lex)
    if language is Language.JA:
        return japanese.mora_count(text)
    if language is Language.KO:
        return korean.syllable_count(text)
    raise DomainError(f"unsupported language: {language!r}")
