"""Command-line front end.

Subcommands:

* ``score <src> <tgt>`` — metric report JSON for one aligned pair
* ``matrix <doc>`` — self-dissimilarity matrix (CSV/SVG)
* ``crossscape <src> <tgt>`` — cross-scape grid (CSV/SVG)
* ``semmatrix <src> <tgt>`` — line- or section-wise similarity matrix
* ``corpus <manifest>`` — per-pair reports plus grouped averages
* ``phonemize <doc>`` / ``syllables <doc>`` — diagnostics

Exit codes: 0 success, 1 validation/usage error, 2 I/O or provider error.
Providers: ``--provider stub | file:PATH | remote:URL`` (the URL may come
from ``LYREVAL_PROVIDER_URL``), ``--translator none | remote:URL``.
All artifacts are UTF-8; identical invocations on identical inputs write
byte-identical artifacts with the stub provider.
"""

from __future__ import annotations

import csv
import io
import json
import os
import sys
from pathlib import Path

import click

from .corpus import load_corpus
from .documents import Language, LyricsDocument, load_document, make_aligned_pair
from .errors import ConfigurationError, LyrevalError, ProviderError
from .evaluate import ALL_METRICS, evaluate_corpus, evaluate_pair, grouped_averages
from .metrics import DissimilarityMatrix, self_dissimilarity_matrix
from .phonology import (
    Lexicon,
    count_syllables,
    default_merge_tables,
    load_merge_tables,
    phonemize,
)
from .providers import (
    EmbeddingProvider,
    FileEmbeddingProvider,
    RemoteEmbeddingProvider,
    RemoteTranslationProvider,
    StubEmbeddingProvider,
    TranslationProvider,
)
from .semantics import cross_scape, section_similarity_matrix
from .svg import cross_scape_svg, matrix_svg

PROVIDER_URL_ENV = "LYREVAL_PROVIDER_URL"


def _make_provider(spec: str) -> EmbeddingProvider:
    if spec == "stub":
        return StubEmbeddingProvider()
    if spec.startswith("file:"):
        return FileEmbeddingProvider.from_path(spec[len("file:") :])
    if spec == "remote" or spec.startswith("remote:"):
        url = spec[len("remote:") :] if spec.startswith("remote:") else ""
        url = url or os.environ.get(PROVIDER_URL_ENV, "")
        if not url:
            raise ConfigurationError(
                f"remote provider needs a URL (remote:URL or {PROVIDER_URL_ENV})"
            )
        return RemoteEmbeddingProvider(url)
    raise ConfigurationError(f"unknown provider {spec!r} (expected stub, file:PATH, or remote:URL)")


def _make_translator(spec: str) -> TranslationProvider | None:
    if spec == "none":
        return None
    if spec.startswith("remote:") and spec[len("remote:") :]:
        return RemoteTranslationProvider(spec[len("remote:") :])
    raise ConfigurationError(f"unknown translator {spec!r} (expected none or remote:URL)")


def _json_dump(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _matrix_csv(entries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(range(1, len(entries[0]) + 1))
    for row in entries:
        writer.writerow([repr(v) for v in row])
    return buf.getvalue()


def _crossscape_csv(levels) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["level", "start_line", "value"])
    for k, row in enumerate(levels, start=1):
        for i, value in enumerate(row, start=1):
            writer.writerow([k, i, repr(value)])
    return buf.getvalue()


def _write(out_dir: Path, name: str, content: str) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(content, encoding="utf-8")
    return path


@click.group()
@click.option("--provider", default="stub", show_default=True, help="stub | file:PATH | remote:URL")
@click.option("--translator", default="none", show_default=True, help="none | remote:URL")
@click.option("--lexicon", "lexicon_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="English pronouncing-dictionary file (WORD PH1 PH2 ...)")
@click.option("--merge-config", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON vowel merge tables, per language")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=".", show_default=True)
@click.option("--formats", default="json,csv,svg", show_default=True,
              help="comma-separated subset of json,csv,svg")
@click.pass_context
def cli(ctx, provider, translator, lexicon_path, merge_config, out_dir, formats):
    """Evaluate singable lyric translations (EN/JA/KO)."""
    ctx.ensure_object(dict)
    ctx.obj["provider_spec"] = provider
    ctx.obj["translator_spec"] = translator
    ctx.obj["lexicon"] = Lexicon.from_file(lexicon_path) if lexicon_path else None
    ctx.obj["merge_tables"] = load_merge_tables(merge_config) if merge_config else default_merge_tables()
    ctx.obj["out_dir"] = Path(out_dir)
    wanted = [f.strip() for f in formats.split(",") if f.strip()]
    unknown = set(wanted) - {"json", "csv", "svg"}
    if unknown:
        raise ConfigurationError(f"unknown output formats: {sorted(unknown)}")
    ctx.obj["formats"] = wanted


def _ctx_provider(obj) -> EmbeddingProvider:
    if "provider" not in obj:
        obj["provider"] = _make_provider(obj["provider_spec"])
    return obj["provider"]


def _ctx_translator(obj) -> TranslationProvider | None:
    if "translator" not in obj:
        obj["translator"] = _make_translator(obj["translator_spec"])
    return obj["translator"]


def _load_pair(src: str, tgt: str):
    return make_aligned_pair(load_document(src), load_document(tgt))


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@click.option("--metrics", default=",".join(ALL_METRICS), show_default=True,
              help="comma-separated subset of syl,pho,mus,sem")
@click.option("--cross-scape/--no-cross-scape", "with_grid", default=False,
              help="include the cross-scape grid in the report")
@click.pass_context
def score(ctx, source, target, metrics, with_grid):
    """Metric report for one aligned pair."""
    selected = tuple(m.strip() for m in metrics.split(",") if m.strip())
    if not selected:
        raise ConfigurationError("at least one metric must be selected")
    pair = _load_pair(source, target)
    provider = _ctx_provider(ctx.obj) if "sem" in selected else None
    translator = _ctx_translator(ctx.obj) if "sem" in selected else None
    report = evaluate_pair(
        pair,
        metrics=selected,
        provider=provider,
        translator=translator,
        lexicon=ctx.obj["lexicon"],
        merge_tables=ctx.obj["merge_tables"],
        include_cross_scape=with_grid,
    )
    payload = _json_dump(report.to_json_dict())
    name = f"{Path(source).stem}__{Path(target).stem}.report.json"
    path = _write(ctx.obj["out_dir"], name, payload)
    click.echo(payload, nl=False)
    click.echo(f"wrote {path}", err=True)


@cli.command()
@click.argument("document", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def matrix(ctx, document):
    """Self-dissimilarity matrix of one document (CSV and/or SVG)."""
    doc = load_document(document)
    m = self_dissimilarity_matrix(doc, lexicon=ctx.obj["lexicon"], merge_tables=ctx.obj["merge_tables"])
    stem = Path(document).stem
    written = []
    if "csv" in ctx.obj["formats"]:
        written.append(_write(ctx.obj["out_dir"], f"{stem}.matrix.csv", _matrix_csv(m.entries)))
    if "svg" in ctx.obj["formats"]:
        svg = matrix_svg(m.entries, vmax=2.0, title=f"self-dissimilarity: {doc.metadata.title}")
        written.append(_write(ctx.obj["out_dir"], f"{stem}.matrix.svg", svg))
    if "json" in ctx.obj["formats"]:
        payload = _json_dump({"size": m.size, "entries": [list(r) for r in m.entries]})
        written.append(_write(ctx.obj["out_dir"], f"{stem}.matrix.json", payload))
    for path in written:
        click.echo(f"wrote {path}")


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def crossscape(ctx, source, target):
    """Cross-scape similarity grid for one aligned pair."""
    pair = _load_pair(source, target)
    grid = cross_scape(pair, _ctx_provider(ctx.obj), _ctx_translator(ctx.obj))
    stem = f"{Path(source).stem}__{Path(target).stem}"
    written = []
    if "csv" in ctx.obj["formats"]:
        written.append(_write(ctx.obj["out_dir"], f"{stem}.crossscape.csv", _crossscape_csv(grid.levels)))
    if "svg" in ctx.obj["formats"]:
        svg = cross_scape_svg(grid.levels, title=f"cross-scape: {stem}")
        written.append(_write(ctx.obj["out_dir"], f"{stem}.crossscape.svg", svg))
    if "json" in ctx.obj["formats"]:
        payload = _json_dump({"levels": [list(r) for r in grid.levels]})
        written.append(_write(ctx.obj["out_dir"], f"{stem}.crossscape.json", payload))
    for path in written:
        click.echo(f"wrote {path}")


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@click.option("--granularity", type=click.Choice(["line", "section"]), default="section", show_default=True)
@click.pass_context
def semmatrix(ctx, source, target, granularity):
    """Semantic similarity matrix between all source and target units."""
    pair = _load_pair(source, target)
    entries = section_similarity_matrix(
        pair, _ctx_provider(ctx.obj), _ctx_translator(ctx.obj), granularity=granularity
    )
    stem = f"{Path(source).stem}__{Path(target).stem}.{granularity}"
    written = []
    if "csv" in ctx.obj["formats"]:
        written.append(_write(ctx.obj["out_dir"], f"{stem}.semmatrix.csv", _matrix_csv(entries)))
    if "svg" in ctx.obj["formats"]:
        svg = matrix_svg(entries, vmax=1.0, title=f"semantic similarity: {stem}")
        written.append(_write(ctx.obj["out_dir"], f"{stem}.semmatrix.svg", svg))
    if "json" in ctx.obj["formats"]:
        payload = _json_dump({"granularity": granularity, "entries": [list(r) for r in entries]})
        written.append(_write(ctx.obj["out_dir"], f"{stem}.semmatrix.json", payload))
    for path in written:
        click.echo(f"wrote {path}")


@cli.command()
@click.argument("manifest", type=click.Path(exists=True, dir_okay=False))
@click.option("--metrics", default=",".join(ALL_METRICS), show_default=True)
@click.option("--strict/--lenient", default=True, show_default=True,
              help="strict fails on the first bad manifest entry; lenient skips and reports")
@click.option("--workers", default=1, show_default=True)
@click.pass_context
def corpus(ctx, manifest, metrics, strict, workers):
    """Evaluate a corpus manifest: per-pair reports plus grouped averages."""
    selected = tuple(m.strip() for m in metrics.split(",") if m.strip())
    if not selected:
        raise ConfigurationError("at least one metric must be selected")
    result = load_corpus(manifest, strict=strict)
    for skip in result.skipped:
        click.echo(f"skipped pairs[{skip.index}] ({skip.source} -> {skip.target}): {skip.reason}", err=True)
    provider = _ctx_provider(ctx.obj) if "sem" in selected else None
    translator = _ctx_translator(ctx.obj) if "sem" in selected else None
    reports = evaluate_corpus(
        result.pairs,
        workers=workers,
        metrics=selected,
        provider=provider,
        translator=translator,
        lexicon=ctx.obj["lexicon"],
        merge_tables=ctx.obj["merge_tables"],
    )
    out_dir = ctx.obj["out_dir"]
    reports_dir = out_dir / "reports"
    for i, report in enumerate(reports):
        name = f"pair{i:04d}_{report.source_language.value}-{report.target_language.value}.json"
        _write(reports_dir, name, _json_dump(report.to_json_dict()))
    stats = grouped_averages(reports)
    written = [
        _write(out_dir, "groups.json", _json_dump([g.to_json_dict() for g in stats])),
    ]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["source", "target", "singable", "metric", "mean", "count"])
    for g in stats:
        for name in ("dis_syl", "sim_pho", "dis_mus", "line_sem", "sim_sem"):
            avg = getattr(g, name)
            writer.writerow(
                [g.key.source.value, g.key.target.value, g.key.singable, name,
                 "" if avg.mean is None else repr(avg.mean), avg.count]
            )
    written.append(_write(out_dir, "groups.csv", buf.getvalue()))
    click.echo(f"evaluated {len(reports)} pairs ({len(result.skipped)} skipped)")
    for path in written:
        click.echo(f"wrote {path}")


def _doc_lines(doc: LyricsDocument):
    for si, section in enumerate(doc.sections):
        for li, line in enumerate(section.lines):
            yield si, li, line


@cli.command("phonemize")
@click.argument("document", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def phonemize_cmd(ctx, document):
    """Per-line phoneme tokens (diagnostics)."""
    doc = load_document(document)
    out = []
    for si, li, line in _doc_lines(doc):
        seq = phonemize(line, doc.language, lexicon=ctx.obj["lexicon"], merge_tables=ctx.obj["merge_tables"])
        out.append({"section": si, "line": li, "text": line.text, "phonemes": list(seq.tokens)})
    click.echo(_json_dump(out), nl=False)


@cli.command("syllables")
@click.argument("document", type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def syllables_cmd(ctx, document):
    """Per-line syllable counts (diagnostics)."""
    doc = load_document(document)
    out = []
    total = 0
    for si, li, line in _doc_lines(doc):
        count = count_syllables(line, doc.language, lexicon=ctx.obj["lexicon"])
        total += count
        out.append({"section": si, "line": li, "text": line.text, "syllables": count})
    click.echo(_json_dump({"lines": out, "total": total}), nl=False)


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    try:
        cli.main(args=argv, standalone_mode=False, obj={})
        return 0
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.exceptions.ClickException as e:
        e.show()
        return 1
    except (ProviderError, OSError) as e:
        click.echo(f"error: {e}", err=True)
        return 2
    except LyrevalError as e:
        click.echo(f"error: {e}", err=True)
        return 1


if __name__ == "__main__":
    sys.exit(main())
