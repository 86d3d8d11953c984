import csv
import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from lyreval.cli import main
from lyreval.fixtures import write_fixture_corpus

DATA = Path(__file__).parent / "data"
TW_EN = str(DATA / "twinkle_en.json")
TW_JA = str(DATA / "twinkle_ja.json")
TW_KO = str(DATA / "twinkle_ko.json")
SNOWMAN = str(DATA / "snowman_en.json")


def run(*argv):
    return main(list(argv))


def test_score_writes_report(tmp_path, capsys):
    code = run("--out", str(tmp_path), "score", TW_EN, TW_KO, "--metrics", "syl,pho")
    assert code == 0
    report_path = tmp_path / "twinkle_en__twinkle_ko.report.json"
    assert report_path.exists()
    payload = json.loads(report_path.read_text(encoding="utf-8"))
    assert payload["schema_version"] == 1
    assert payload["metrics"]["dis_syl"]["status"] == "ok"
    assert payload["metrics"]["dis_syl"]["value"] == 0.0
    assert payload["metrics"]["sim_pho"]["status"] == "undefined"
    assert payload["metrics"]["dis_mus"]["status"] == "skipped"
    stdout = capsys.readouterr().out
    assert json.loads(stdout)["schema_version"] == 1


def test_score_full_metrics_with_stub(tmp_path):
    code = run("--out", str(tmp_path), "score", TW_EN, TW_JA)
    assert code == 0
    payload = json.loads((tmp_path / "twinkle_en__twinkle_ja.report.json").read_text())
    for name in ("dis_syl", "dis_mus", "line_sem", "sim_sem"):
        assert payload["metrics"][name]["status"] == "ok"


def test_score_misaligned_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    doc = json.loads(Path(TW_JA).read_text(encoding="utf-8"))
    doc["sections"] = doc["sections"][:1]
    bad.write_text(json.dumps(doc), encoding="utf-8")
    code = run("--out", str(tmp_path), "score", TW_EN, str(bad))
    assert code == 1
    err = capsys.readouterr().err
    assert "section count mismatch" in err


def test_unknown_flag_exits_one(capsys):
    assert run("score", "--nonsense") == 1


def test_unreadable_input_exits_one(tmp_path):
    assert run("--out", str(tmp_path), "score", "no_such.json", TW_KO) == 1


def test_unreachable_remote_provider_exits_two(tmp_path):
    code = run(
        "--provider", "remote:http://127.0.0.1:1", "--out", str(tmp_path),
        "score", TW_EN, TW_JA, "--metrics", "sem",
    )
    assert code == 2


def test_matrix_outputs_are_symmetric_and_valid(tmp_path):
    code = run("--out", str(tmp_path), "matrix", TW_EN)
    assert code == 0
    with open(tmp_path / "twinkle_en.matrix.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["1", "2"]
    values = [[float(x) for x in row] for row in rows[1:]]
    assert len(values) == 2
    assert values[0][1] == values[1][0]

    tree = ET.parse(tmp_path / "twinkle_en.matrix.svg")
    ns = {"svg": "http://www.w3.org/2000/svg"}
    rects = tree.getroot().findall(".//svg:rect", ns)
    assert len(rects) == 4
    by_cell = {(r.get("data-row"), r.get("data-col")): float(r.get("data-value")) for r in rects}
    assert by_cell[("0", "1")] == values[0][1]


def test_crossscape_outputs(tmp_path):
    code = run("--out", str(tmp_path), "crossscape", TW_EN, TW_JA)
    assert code == 0
    with open(tmp_path / "twinkle_en__twinkle_ja.crossscape.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["level", "start_line", "value"]
    n = 12
    assert len(rows) - 1 == n * (n + 1) // 2
    assert all(0.0 <= float(r[2]) <= 1.0 for r in rows[1:])

    tree = ET.parse(tmp_path / "twinkle_en__twinkle_ja.crossscape.svg")
    rects = tree.getroot().findall(".//{http://www.w3.org/2000/svg}rect")
    assert len(rects) == n * (n + 1) // 2


def test_semmatrix_granularity(tmp_path):
    code = run("--out", str(tmp_path), "semmatrix", TW_EN, TW_JA, "--granularity", "line")
    assert code == 0
    with open(tmp_path / "twinkle_en__twinkle_ja.line.semmatrix.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 13  # header + 12 lines
    assert len(rows[1]) == 12


def test_phonemize_diagnostics(capsys):
    assert run("phonemize", TW_JA) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload[0]["phonemes"][0] == "K"
    assert payload[0]["phonemes"][-1] == "<eos>"
    assert len(payload) == 12


def test_syllables_diagnostics(capsys):
    assert run("syllables", TW_KO) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lines"][0]["syllables"] == 7
    assert payload["total"] == sum(l["syllables"] for l in payload["lines"])


def test_corpus_run_and_artifacts(tmp_path):
    corpus_dir = tmp_path / "corpus"
    manifest = write_fixture_corpus(corpus_dir, songs_per_group=2)
    out = tmp_path / "out"
    code = run("--out", str(out), "corpus", str(manifest))
    assert code == 0
    groups = json.loads((out / "groups.json").read_text(encoding="utf-8"))
    assert {g["singable"] for g in groups} == {True, False}
    with open(out / "groups.csv", newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["source", "target", "singable", "metric", "mean", "count"]
    reports = sorted((out / "reports").glob("pair*.json"))
    assert len(reports) == 8


def test_corpus_lenient_reports_skips(tmp_path, capsys):
    corpus_dir = tmp_path / "corpus"
    manifest = write_fixture_corpus(corpus_dir, songs_per_group=1)
    data = json.loads(manifest.read_text(encoding="utf-8"))
    data["pairs"].insert(0, {"source": "missing.json", "target": "also_missing.json", "singable": True})
    manifest.write_text(json.dumps(data), encoding="utf-8")
    out = tmp_path / "out"
    assert run("--out", str(out), "corpus", str(manifest), "--lenient") == 0
    assert "skipped pairs[0]" in capsys.readouterr().err
    assert run("--out", str(out), "corpus", str(manifest)) == 2  # strict: missing file is I/O


def test_identical_invocations_byte_identical(tmp_path):
    out_a = tmp_path / "a"
    out_b = tmp_path / "b"
    for out in (out_a, out_b):
        assert run("--out", str(out), "score", TW_EN, TW_JA) == 0
        assert run("--out", str(out), "matrix", SNOWMAN) == 0
    for name in ("twinkle_en__twinkle_ja.report.json", "snowman_en.matrix.csv", "snowman_en.matrix.svg"):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()


def test_svg_encodes_exact_values(tmp_path):
    assert run("--out", str(tmp_path), "matrix", SNOWMAN) == 0
    payload = json.loads((tmp_path / "snowman_en.matrix.json").read_text(encoding="utf-8"))
    tree = ET.parse(tmp_path / "snowman_en.matrix.svg")
    rects = tree.getroot().findall(".//{http://www.w3.org/2000/svg}rect")
    for rect in rects:
        i, j = int(rect.get("data-row")), int(rect.get("data-col"))
        assert float(rect.get("data-value")) == payload["entries"][i][j]
