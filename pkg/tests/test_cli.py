"""Command-line interface end to end (in process)."""

from __future__ import annotations

import json

from ringline import builtin_catalog, emit_ring_file, ring_zn
from ringline.cli import main
from ringline.catalog import CatalogEntry
from ringline.stats import ExpectedSignature


def test_ring_show_recipe(capsys):
    assert main(["ring", "show", "zn:4"]) == 0
    out = capsys.readouterr().out
    assert "ring Z4" in out and "order 4" in out
    assert "# order/zero-divisors: 4/2" in out


def test_ring_show_file(tmp_path, capsys):
    path = tmp_path / "z6.ring"
    path.write_text(emit_ring_file(ring_zn(6)))
    assert main(["ring", "show", str(path)]) == 0
    assert "order 6" in capsys.readouterr().out


def test_ring_show_bad_recipe(capsys):
    assert main(["ring", "show", "nonsense:9"]) == 1
    assert "error:" in capsys.readouterr().err


def test_ring_show_beyond_ideal_cap(capsys):
    # order 256: tables print fine, ideal counts are skipped gracefully
    assert main(["ring", "show", "mat(zn:4,2)"]) == 0
    out = capsys.readouterr().out
    assert "# order/zero-divisors: 256/160" in out
    assert "ideal counts skipped" in out


def test_ring_validate(tmp_path, capsys):
    path = tmp_path / "z4.ring"
    path.write_text(emit_ring_file(ring_zn(4)))
    assert main(["ring", "validate", str(path)]) == 0
    assert "valid ring of order 4" in capsys.readouterr().out


def test_ring_validate_rejects_corrupt_file(tmp_path, capsys):
    text = emit_ring_file(ring_zn(4)).splitlines()
    text[8] = "2 3 1 0"  # corrupt one multiplication row
    path = tmp_path / "bad.ring"
    path.write_text("\n".join(text) + "\n")
    assert main(["ring", "validate", str(path)]) == 1
    assert "error:" in capsys.readouterr().err


def test_line_compute_z4(capsys):
    assert main(["line", "compute", "zn:4"]) == 0
    out = capsys.readouterr().out
    assert "Tot 6" in out
    assert "1N 1 (constant)" in out


def test_line_compute_right_breakdown(capsys):
    assert main(["line", "compute", "mat(gf:2,2)", "--side", "right"]) == 0
    out = capsys.readouterr().out
    assert "BREAKDOWN" in out
    assert "classes of size" in out


def test_line_compute_export(tmp_path, capsys):
    out_path = tmp_path / "line.json"
    assert main(["line", "compute", "tri(gf:2,2)", "--export", str(out_path)]) == 0
    payload = json.loads(out_path.read_text())
    assert payload["signature"]["tot"] == 18
    assert len(payload["points"]) == 18
    assert len(payload["distantAdjacency"]) == 18


def test_catalog_run_single_entry(capsys):
    assert main(["catalog", "run", "--entry", "m2f2"]) == 0
    out = capsys.readouterr().out
    assert "m2f2" in out and "PASS" in out
    assert "right BREAKDOWN" in out
    assert "overall: PASS" in out


def test_catalog_run_unknown_entry(capsys):
    assert main(["catalog", "run", "--entry", "nope"]) == 1
    assert "no catalog entry" in capsys.readouterr().err


def test_catalog_run_exports(tmp_path, capsys):
    json_path = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    code = main(
        ["catalog", "run", "--entry", "t2f2", "--entry", "skewgf4",
         "--json", str(json_path), "--csv", str(csv_path)]
    )
    assert code == 0
    payload = json.loads(json_path.read_text())
    assert payload["passed"] is True
    assert [e["name"] for e in payload["entries"]] == ["skewgf4", "t2f2"]
    header = csv_path.read_text().splitlines()[0]
    assert header == "type,Tot,TpI,1N,cap2N,cap3N,MD,JcbA,JcbB,JcbC,rightLineStatus"


def test_catalog_run_failure_exit_code(monkeypatch, capsys):
    doctored = CatalogEntry(
        name="t2f2bad",
        paper_row="8/6",
        provenance="paper-row",
        recipe="tri(gf:2,2)",
        expected=ExpectedSignature(18, 14, 9, 4, 0, 4, jcb=1),  # wrong MD
    )
    monkeypatch.setattr("ringline.cli.builtin_catalog", lambda: (doctored,))
    assert main(["catalog", "run"]) == 2
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_catalog_table1(capsys):
    assert main(["catalog", "table1"]) == 0
    out = capsys.readouterr().out
    assert "16/10" in out and "16/12" in out
    assert "UNRESOLVED" in out
    assert "overall: PASS" in out


def test_catalog_table1_json(tmp_path, capsys):
    path = tmp_path / "table1.json"
    assert main(["catalog", "table1", "--json", str(path)]) == 0
    rows = json.loads(path.read_text())
    assert [r["row"] for r in rows] == [
        "27/15", "24/20", "16/4", "16/8", "16/10", "16/12", "16/14", "8/6",
    ]
    by_row = {r["row"]: r for r in rows}
    assert by_row["16/12"]["status"] == "UNRESOLVED"
    assert by_row["16/10"]["status"] == "PASS"
    assert len(by_row["16/10"]["entries"]) == 3  # paper row plus two counterparts


def test_full_catalog_names_unique():
    names = [e.name for e in builtin_catalog()]
    assert len(names) == len(set(names))
