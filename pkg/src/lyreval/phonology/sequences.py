"""Phoneme sequences and per-language vowel merge tables.

Tokens are plain strings drawn from a per-language closed inventory, plus
the distinguished end-of-line marker ``EOS`` appended after each line's
phonemes. Merge tables canonicalize acoustically interchangeable vowels:

* English merges IY->IH, UW->UH, AE->EH (slant-rhyme pairs), leaving a
  12-vowel canonical inventory out of the 15 raw ARPABET vowels.
* Japanese merges nothing; palatalized vowels (YA/YU/YO) stay distinct
  from their plain counterparts.
* Korean merges {ae/e} nuclei to one vowel and {oe/wae/we} to one vowel.

Tables are idempotent by construction (no canonical symbol is itself a
key) and total over the inventory (unlisted symbols map to themselves).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..documents import Language
from ..errors import ValidationError

EOS = "<eos>"


def is_eos(token: str) -> bool:
    return token == EOS


@dataclass(frozen=True)
class PhonemeSequence:
    """Ordered phoneme tokens for a line or section, including EOS markers."""

    tokens: tuple[str, ...]
    language: Language

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def eos_count(self) -> int:
        return sum(1 for t in self.tokens if t == EOS)

    def __add__(self, other: "PhonemeSequence") -> "PhonemeSequence":
        if other.language != self.language:
            raise ValidationError("cannot concatenate phoneme sequences of different languages")
        return PhonemeSequence(self.tokens + other.tokens, self.language)


@dataclass(frozen=True)
class MergeTable:
    language: Language
    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        as_dict = dict(self.mapping)
        for symbol, canonical in as_dict.items():
            if symbol == EOS or canonical == EOS:
                raise ValidationError("merge table may not remap the end-of-line marker")
            if canonical in as_dict:
                raise ValidationError(
                    f"merge table for {self.language.value} is not idempotent: "
                    f"{symbol!r} -> {canonical!r} but {canonical!r} is itself remapped"
                )

    def canonical(self, token: str) -> str:
        if token == EOS:
            return token
        return dict(self.mapping).get(token, token)

    def apply(self, seq: PhonemeSequence) -> PhonemeSequence:
        table = dict(self.mapping)
        return PhonemeSequence(
            tuple(t if t == EOS else table.get(t, t) for t in seq.tokens),
            seq.language,
        )


# Canonical member of each merged group is the first-listed symbol.
_EN_MERGES = (("IY", "IH"), ("UW", "UH"), ("AE", "EH"))
_KO_MERGES = (("ㅔ", "ㅐ"), ("ㅙ", "ㅚ"), ("ㅞ", "ㅚ"))


def default_merge_tables() -> dict[Language, MergeTable]:
    return {
        Language.EN: MergeTable(Language.EN, _EN_MERGES),
        Language.JA: MergeTable(Language.JA, ()),
        Language.KO: MergeTable(Language.KO, _KO_MERGES),
    }


def load_merge_tables(path: str | Path) -> dict[Language, MergeTable]:
    """Load merge tables from a JSON config: ``{"EN": {"IY": "IH", ...}, ...}``.

    Languages absent from the file keep their default table.
    """
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(data, dict):
        raise ValidationError(f"{path}: merge table config must be an object")
    tables = default_merge_tables()
    for tag, mapping in data.items():
        language = Language.from_tag(tag, where=f"{path}")
        if not isinstance(mapping, dict):
            raise ValidationError(f"{path}: entry for {tag} must be an object")
        tables[language] = MergeTable(language, tuple(sorted(mapping.items())))
    return tables


def apply_merge_table(seq: PhonemeSequence, tables: dict[Language, MergeTable] | None = None) -> PhonemeSequence:
    """Replace every token with its canonical symbol; EOS untouched, length preserved."""
    tables = tables if tables is not None else default_merge_tables()
    return tables[seq.language].apply(seq)
