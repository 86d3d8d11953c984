"""Per-pair metric reports and corpus-level grouped averages.

A MetricReport carries one slot per metric; each slot is ok/undefined/
skipped/error, never a silent zero. Per-metric failures are recorded in
the report so one bad song never aborts a corpus run. Grouped averages
aggregate by (source language, target language, singable), averaging the
correlation metric over defined values only and reporting the counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .documents import AlignedPair, Language
from .errors import DomainError, LyrevalError
from .metrics import (
    DissimilarityMatrix,
    line_syllable_count_distance,
    pho_profile,
    self_dissimilarity_matrix,
    spearman,
    structure_distance_between,
)
from .phonology import Lexicon, MergeTable
from .providers import EmbeddingCache, EmbeddingProvider, TranslationProvider
from .semantics import (
    CrossScapeGrid,
    cross_scape,
    line_wise_semantic_similarity,
    semantic_similarity,
)

ALL_METRICS = ("syl", "pho", "mus", "sem")


@dataclass(frozen=True)
class MetricValue:
    status: str  # "ok" | "undefined" | "skipped" | "error"
    value: float | None = None
    reason: str | None = None

    @classmethod
    def ok(cls, value: float) -> "MetricValue":
        return cls(status="ok", value=value)

    @classmethod
    def undefined(cls, reason: str) -> "MetricValue":
        return cls(status="undefined", reason=reason)

    @classmethod
    def skipped(cls) -> "MetricValue":
        return cls(status="skipped")

    @classmethod
    def error(cls, reason: str) -> "MetricValue":
        return cls(status="error", reason=reason)

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.value is not None:
            out["value"] = self.value
        if self.reason is not None:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class MetricReport:
    source_title: str
    target_title: str
    source_language: Language
    target_language: Language
    singable: bool
    dis_syl: MetricValue = field(default_factory=MetricValue.skipped)
    sim_pho: MetricValue = field(default_factory=MetricValue.skipped)
    dis_mus: MetricValue = field(default_factory=MetricValue.skipped)
    line_sem: MetricValue = field(default_factory=MetricValue.skipped)
    sim_sem: MetricValue = field(default_factory=MetricValue.skipped)
    per_section_pho: dict[str, list[float]] | None = None
    matrices: dict[str, DissimilarityMatrix] | None = None
    cross_scape_grid: CrossScapeGrid | None = None

    def to_json_dict(self) -> dict:
        out: dict = {
            "schema_version": 1,
            "source": {"title": self.source_title, "language": self.source_language.value},
            "target": {"title": self.target_title, "language": self.target_language.value},
            "singable": self.singable,
            "metrics": {
                "dis_syl": self.dis_syl.to_dict(),
                "sim_pho": self.sim_pho.to_dict(),
                "dis_mus": self.dis_mus.to_dict(),
                "line_sem": self.line_sem.to_dict(),
                "sim_sem": self.sim_sem.to_dict(),
            },
        }
        if self.per_section_pho is not None:
            out["per_section_pho"] = self.per_section_pho
        if self.matrices is not None:
            out["dissimilarity_matrices"] = {
                side: [list(row) for row in matrix.entries] for side, matrix in self.matrices.items()
            }
        if self.cross_scape_grid is not None:
            out["cross_scape"] = [list(row) for row in self.cross_scape_grid.levels]
        return out


def evaluate_pair(
    pair: AlignedPair,
    *,
    metrics: Sequence[str] = ALL_METRICS,
    provider: EmbeddingProvider | None = None,
    translator: TranslationProvider | None = None,
    lexicon: Lexicon | None = None,
    merge_tables: dict[Language, MergeTable] | None = None,
    include_cross_scape: bool = False,
    cache: EmbeddingCache | None = None,
) -> MetricReport:
    """Compute the requested metrics; record per-metric errors instead of raising."""
    unknown = set(metrics) - set(ALL_METRICS)
    if unknown:
        raise DomainError(f"unknown metric selection: {sorted(unknown)} (valid: {list(ALL_METRICS)})")
    values: dict[str, MetricValue] = {
        "dis_syl": MetricValue.skipped(),
        "sim_pho": MetricValue.skipped(),
        "dis_mus": MetricValue.skipped(),
        "line_sem": MetricValue.skipped(),
        "sim_sem": MetricValue.skipped(),
    }
    per_section_pho: dict[str, list[float]] | None = None
    matrices: dict[str, DissimilarityMatrix] | None = None
    grid: CrossScapeGrid | None = None

    if "syl" in metrics:
        try:
            values["dis_syl"] = MetricValue.ok(line_syllable_count_distance(pair, lexicon=lexicon))
        except LyrevalError as e:
            values["dis_syl"] = MetricValue.error(str(e))

    if "pho" in metrics or "mus" in metrics:
        try:
            per_section_pho = {
                "source": pho_profile(pair.source, lexicon=lexicon, merge_tables=merge_tables),
                "target": pho_profile(pair.target, lexicon=lexicon, merge_tables=merge_tables),
            }
        except LyrevalError as e:
            per_section_pho = None
            if "pho" in metrics:
                values["sim_pho"] = MetricValue.error(str(e))
            if "mus" in metrics:
                values["dis_mus"] = MetricValue.error(str(e))

    if "pho" in metrics and per_section_pho is not None:
        if pair.section_count < 2:
            values["sim_pho"] = MetricValue.undefined("fewer than two sections")
        else:
            corr = spearman(per_section_pho["source"], per_section_pho["target"])
            if corr is None:
                values["sim_pho"] = MetricValue.undefined("zero variance in a per-section profile")
            else:
                values["sim_pho"] = MetricValue.ok(corr)

    if "mus" in metrics and per_section_pho is not None:
        try:
            matrices = {
                "source": self_dissimilarity_matrix(pair.source, lexicon=lexicon, merge_tables=merge_tables),
                "target": self_dissimilarity_matrix(pair.target, lexicon=lexicon, merge_tables=merge_tables),
            }
            values["dis_mus"] = MetricValue.ok(structure_distance_between(matrices["source"], matrices["target"]))
        except LyrevalError as e:
            values["dis_mus"] = MetricValue.error(str(e))

    if "sem" in metrics:
        if provider is None:
            values["line_sem"] = MetricValue.error("no embedding provider configured")
            values["sim_sem"] = MetricValue.error("no embedding provider configured")
        else:
            shared_cache = cache if cache is not None else EmbeddingCache()
            try:
                values["sim_sem"] = MetricValue.ok(
                    semantic_similarity(pair, provider, translator, shared_cache)
                )
                values["line_sem"] = MetricValue.ok(
                    line_wise_semantic_similarity(pair, provider, translator, shared_cache)
                )
                if include_cross_scape:
                    grid = cross_scape(pair, provider, translator, shared_cache)
            except LyrevalError as e:
                message = str(e)
                for slot in ("line_sem", "sim_sem"):
                    if values[slot].status == "skipped":
                        values[slot] = MetricValue.error(message)

    return MetricReport(
        source_title=pair.source.metadata.title,
        target_title=pair.target.metadata.title,
        source_language=pair.source.language,
        target_language=pair.target.language,
        singable=pair.singable,
        dis_syl=values["dis_syl"],
        sim_pho=values["sim_pho"],
        dis_mus=values["dis_mus"],
        line_sem=values["line_sem"],
        sim_sem=values["sim_sem"],
        per_section_pho=per_section_pho,
        matrices=matrices,
        cross_scape_grid=grid,
    )


def evaluate_corpus(
    pairs: Sequence[AlignedPair],
    *,
    workers: int = 1,
    **kwargs,
) -> list[MetricReport]:
    """Evaluate every pair; order-stable by input order regardless of worker count."""
    if workers <= 1:
        return [evaluate_pair(p, **kwargs) for p in pairs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: evaluate_pair(p, **kwargs), pairs))


@dataclass(frozen=True, order=True)
class GroupKey:
    source: Language
    target: Language
    singable: bool


@dataclass(frozen=True)
class MetricAverage:
    mean: float | None
    count: int


@dataclass(frozen=True)
class GroupStats:
    key: GroupKey
    pair_count: int
    dis_syl: MetricAverage
    sim_pho: MetricAverage
    dis_mus: MetricAverage
    line_sem: MetricAverage
    sim_sem: MetricAverage

    def to_json_dict(self) -> dict:
        def avg(a: MetricAverage) -> dict:
            out: dict = {"count": a.count}
            if a.mean is not None:
                out["mean"] = a.mean
            return out

        return {
            "source": self.key.source.value,
            "target": self.key.target.value,
            "singable": self.key.singable,
            "pair_count": self.pair_count,
            "metrics": {
                "dis_syl": avg(self.dis_syl),
                "sim_pho": avg(self.sim_pho),
                "dis_mus": avg(self.dis_mus),
                "line_sem": avg(self.line_sem),
                "sim_sem": avg(self.sim_sem),
            },
        }


def _average(values: list[float]) -> MetricAverage:
    if not values:
        return MetricAverage(mean=None, count=0)
    # summing in sorted order keeps the mean permutation-invariant bit-for-bit
    return MetricAverage(mean=math.fsum(sorted(values)) / len(values), count=len(values))


def grouped_averages(reports: Iterable[MetricReport]) -> list[GroupStats]:
    """Arithmetic means per (source, target, singable) group, over defined values only."""
    groups: dict[GroupKey, list[MetricReport]] = {}
    for report in reports:
        key = GroupKey(report.source_language, report.target_language, report.singable)
        groups.setdefault(key, []).append(report)

    stats = []
    for key in sorted(groups, key=lambda k: (k.source.value, k.target.value, k.singable)):
        members = groups[key]

        def collect(name: str) -> list[float]:
            return [
                getattr(r, name).value
                for r in members
                if getattr(r, name).status == "ok" and getattr(r, name).value is not None
            ]

        stats.append(
            GroupStats(
                key=key,
                pair_count=len(members),
                dis_syl=_average(collect("dis_syl")),
                sim_pho=_average(collect("sim_pho")),
                dis_mus=_average(collect("dis_mus")),
                line_sem=_average(collect("line_sem")),
                sim_sem=_average(collect("sim_sem")),
            )
        )
    return stats
