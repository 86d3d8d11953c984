"""Aligned-lyrics data model: documents, sections, lines, and pairs.

Input documents are UTF-8 JSON with explicit section boundaries:

    {
      "language": "EN" | "JA" | "KO",
      "metadata": {"title": str, "artist": str, "genre": str,
                   "original_language": str, "official": bool},
      "sections": [
        {"label"?: str, "lines": [{"text": str, "gloss"?: str}, ...]},
        ...
      ]
    }

Structure is never inferred from blank lines; the section list is
authoritative. All types are immutable after construction and safe to
share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterator

from .errors import AlignmentError, ParseError, ValidationError


class Language(str, Enum):
    EN = "EN"
    JA = "JA"
    KO = "KO"

    @classmethod
    def from_tag(cls, tag: Any, where: str = "language") -> "Language":
        try:
            return cls(tag)
        except (ValueError, TypeError):
            valid = ", ".join(lang.value for lang in cls)
            raise ValidationError(f"{where}: unknown language tag {tag!r} (expected one of {valid})") from None


@dataclass(frozen=True)
class Line:
    """One lyric line; ``gloss`` optionally carries a pre-translated English rendering."""

    text: str
    gloss: str | None = None

    def __post_init__(self) -> None:
        if not self.text or not self.text.strip():
            raise ValidationError("line text must be non-empty")
        if self.gloss is not None and not self.gloss.strip():
            raise ValidationError("line gloss, when present, must be non-empty")


@dataclass(frozen=True)
class Section:
    lines: tuple[Line, ...]
    label: str | None = None

    def __post_init__(self) -> None:
        if not self.lines:
            raise ValidationError("section must contain at least one line")

    def __len__(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class SongMetadata:
    title: str
    artist: str
    genre: str
    original_language: Language
    official: bool


@dataclass(frozen=True)
class LyricsDocument:
    """One song in one language: ordered sections of ordered lines."""

    language: Language
    metadata: SongMetadata
    sections: tuple[Section, ...]

    def __post_init__(self) -> None:
        if not self.sections:
            raise ValidationError("document must contain at least one section")

    @property
    def section_count(self) -> int:
        return len(self.sections)

    @property
    def line_counts(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sections)

    @property
    def line_count(self) -> int:
        return sum(self.line_counts)

    def iter_lines(self) -> Iterator[Line]:
        for section in self.sections:
            yield from section.lines


@dataclass(frozen=True)
class AlignedPair:
    """Two documents with identical line/section shape; the unit every metric consumes."""

    source: LyricsDocument
    target: LyricsDocument
    singable: bool = field(default=True)

    def __post_init__(self) -> None:
        _check_alignment(self.source, self.target)

    @property
    def section_count(self) -> int:
        return self.source.section_count

    @property
    def line_count(self) -> int:
        return self.source.line_count

    def iter_line_pairs(self) -> Iterator[tuple[int, int, Line, Line]]:
        """Yield (section_index, line_index, source_line, target_line)."""
        for i, (src, tgt) in enumerate(zip(self.source.sections, self.target.sections)):
            for j, (a, b) in enumerate(zip(src.lines, tgt.lines)):
                yield i, j, a, b


def _check_alignment(source: LyricsDocument, target: LyricsDocument) -> None:
    if source.language == target.language:
        raise ValidationError(f"source and target share the same language ({source.language.value})")
    if source.section_count != target.section_count:
        raise AlignmentError(
            f"section count mismatch: source has {source.section_count}, target has {target.section_count}"
        )
    for i, (a, b) in enumerate(zip(source.sections, target.sections)):
        if len(a) != len(b):
            raise AlignmentError(f"line count mismatch in section {i}: source has {len(a)}, target has {len(b)}")


def make_aligned_pair(source: LyricsDocument, target: LyricsDocument, singable: bool = True) -> AlignedPair:
    """Build an AlignedPair, raising AlignmentError/ValidationError on shape or language violations."""
    return AlignedPair(source=source, target=target, singable=singable)


def _require(mapping: dict, key: str, kind: type, where: str) -> Any:
    if key not in mapping:
        raise ValidationError(f"{where}: missing required field {key!r}")
    value = mapping[key]
    if kind is bool:
        if not isinstance(value, bool):
            raise ValidationError(f"{where}.{key}: expected a boolean, got {type(value).__name__}")
    elif not isinstance(value, kind) or isinstance(value, bool):
        raise ValidationError(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def parse_document(raw: str | bytes | dict, source_name: str = "<document>") -> LyricsDocument:
    """Parse and validate one JSON lyrics document.

    ``raw`` may be JSON text/bytes or an already-decoded mapping. Section
    and line order is preserved exactly. Malformed JSON raises ParseError
    with line/column; structural violations raise ValidationError naming
    the offending path.
    """
    if isinstance(raw, (str, bytes)):
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as e:
            raise ParseError(f"{source_name}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    else:
        data = raw
    if not isinstance(data, dict):
        raise ValidationError(f"{source_name}: top level must be an object")

    language = Language.from_tag(data.get("language"), where=f"{source_name}.language")

    meta_raw = _require(data, "metadata", dict, source_name)
    where = f"{source_name}.metadata"
    metadata = SongMetadata(
        title=_require(meta_raw, "title", str, where),
        artist=_require(meta_raw, "artist", str, where),
        genre=_require(meta_raw, "genre", str, where),
        original_language=Language.from_tag(meta_raw.get("original_language"), where=f"{where}.original_language"),
        official=_require(meta_raw, "official", bool, where),
    )

    sections_raw = _require(data, "sections", list, source_name)
    if not sections_raw:
        raise ValidationError(f"{source_name}.sections: document must contain at least one section")
    sections = []
    for i, sec in enumerate(sections_raw):
        where = f"{source_name}.sections[{i}]"
        if not isinstance(sec, dict):
            raise ValidationError(f"{where}: expected an object")
        lines_raw = _require(sec, "lines", list, where)
        if not lines_raw:
            raise ValidationError(f"{where}.lines: section must contain at least one line")
        lines = []
        for j, ln in enumerate(lines_raw):
            lwhere = f"{where}.lines[{j}]"
            if not isinstance(ln, dict):
                raise ValidationError(f"{lwhere}: expected an object")
            text = _require(ln, "text", str, lwhere)
            if not text.strip():
                raise ValidationError(f"{lwhere}.text: line text must be non-empty")
            gloss = ln.get("gloss")
            if gloss is not None:
                if not isinstance(gloss, str) or not gloss.strip():
                    raise ValidationError(f"{lwhere}.gloss: gloss, when present, must be a non-empty string")
            lines.append(Line(text=text, gloss=gloss))
        label = sec.get("label")
        if label is not None and not isinstance(label, str):
            raise ValidationError(f"{where}.label: expected a string")
        sections.append(Section(lines=tuple(lines), label=label))

    return LyricsDocument(language=language, metadata=metadata, sections=tuple(sections))


def load_document(path: str | Path) -> LyricsDocument:
    """Read and parse a document file."""
    path = Path(path)
    return parse_document(path.read_text(encoding="utf-8"), source_name=str(path))


def document_to_dict(doc: LyricsDocument) -> dict:
    """Serialize a document back to its JSON object form (round-trips through parse_document)."""
    sections = []
    for sec in doc.sections:
        out: dict[str, Any] = {}
        if sec.label is not None:
            out["label"] = sec.label
        out["lines"] = [
            {"text": ln.text} if ln.gloss is None else {"text": ln.text, "gloss": ln.gloss} for ln in sec.lines
        ]
        sections.append(out)
    return {
        "language": doc.language.value,
        "metadata": {
            "title": doc.metadata.title,
            "artist": doc.metadata.artist,
            "genre": doc.metadata.genre,
            "original_language": doc.metadata.original_language.value,
            "official": doc.metadata.official,
        },
        "sections": sections,
    }


def dump_document(doc: LyricsDocument) -> str:
    return json.dumps(document_to_dict(doc), ensure_ascii=False, indent=2) + "\n"
