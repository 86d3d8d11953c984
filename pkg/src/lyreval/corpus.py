"""Corpus loading from a JSON manifest.

Manifest format: ``{"pairs": [{"source": path, "target": path,
"singable": bool}, ...]}`` with paths resolved relative to the manifest's
directory. Strict mode (the default) fails fast on the first bad entry;
lenient mode skips bad entries and reports each skip with its reason.
Results are order-stable by manifest order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .documents import AlignedPair, load_document, make_aligned_pair
from .errors import LyrevalError, ParseError, ValidationError


@dataclass(frozen=True)
class SkippedPair:
    index: int
    source: str
    target: str
    reason: str


@dataclass(frozen=True)
class CorpusLoadResult:
    pairs: tuple[AlignedPair, ...]
    skipped: tuple[SkippedPair, ...]


def load_corpus(manifest_path: str | Path, *, strict: bool = True) -> CorpusLoadResult:
    manifest_path = Path(manifest_path)
    try:
        data = json.loads(manifest_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ParseError(f"{manifest_path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict) or not isinstance(data.get("pairs"), list):
        raise ValidationError(f"{manifest_path}: manifest must be an object with a 'pairs' list")

    root = manifest_path.parent
    pairs: list[AlignedPair] = []
    skipped: list[SkippedPair] = []
    for i, entry in enumerate(data["pairs"]):
        if not isinstance(entry, dict) or "source" not in entry or "target" not in entry:
            problem = f"{manifest_path}: pairs[{i}] must be an object with 'source' and 'target'"
            if strict:
                raise ValidationError(problem)
            skipped.append(SkippedPair(i, "", "", problem))
            continue
        src_path = str(entry["source"])
        tgt_path = str(entry["target"])
        singable = entry.get("singable", True)
        if not isinstance(singable, bool):
            problem = f"{manifest_path}: pairs[{i}].singable must be a boolean"
            if strict:
                raise ValidationError(problem)
            skipped.append(SkippedPair(i, src_path, tgt_path, problem))
            continue
        try:
            source = load_document(root / src_path)
            target = load_document(root / tgt_path)
            pairs.append(make_aligned_pair(source, target, singable=singable))
        except (LyrevalError, OSError) as e:
            if strict:
                raise
            skipped.append(SkippedPair(i, src_path, tgt_path, str(e)))
    return CorpusLoadResult(pairs=tuple(pairs), skipped=tuple(skipped))
