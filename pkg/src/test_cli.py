"""
命令列介面測試
"""

import io
import json
import os
import sys

# 添加專案路徑
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from thompson_knots.main import (EXIT_DOMAIN, EXIT_MISMATCH, EXIT_OK,
                                 EXIT_USAGE, run)

TREFOIL_PD = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]


def test_parse_with_fraction(capsys):
    assert run(["parse", "[3 2]", "--fraction"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "[3 2]"
    assert "fraction 7/3" in out


def test_build_product_writes_tree_pair(capsys):
    assert run(["build", "product", "3"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["top"] == "10" + "110100" * 3 + "0"
    assert data["leaves"] == 11


def test_build_then_psi_then_invariant(tmp_path):
    element = tmp_path / "elem.json"
    diagram = tmp_path / "pd.json"
    report = tmp_path / "inv.json"
    assert run(["build", "product", "2", "-o", str(element)]) == EXIT_OK
    assert run(["psi", str(element), "-o", str(diagram)]) == EXIT_OK
    assert run(["invariant", str(diagram), "--det", "-o", str(report)]) == EXIT_OK
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["determinant"] == 2
    assert "bracket" not in data


def test_invariant_of_trefoil_pd(tmp_path, capsys):
    path = tmp_path / "trefoil.json"
    path.write_text(json.dumps({"crossings": TREFOIL_PD, "loops": 0}), encoding="utf-8")
    assert run(["invariant", str(path)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["crossings"] == 3
    assert data["components"] == 1
    assert data["determinant"] == 3
    assert len(data["jones"]) == 1


def test_trefoil_pd_file_through_reverse(tmp_path, capsys):
    path = tmp_path / "trefoil.json"
    path.write_text(json.dumps({"crossings": TREFOIL_PD, "loops": 0}), encoding="utf-8")
    assert run(["reverse", str(path)]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["top"]) == len(data["bottom"])


def test_legacy_pd_key_is_rejected(tmp_path, capsys):
    path = tmp_path / "legacy.json"
    path.write_text(json.dumps({"pd": TREFOIL_PD}), encoding="utf-8")
    assert run(["invariant", str(path)]) == EXIT_DOMAIN
    assert "error:" in capsys.readouterr().err


def test_zero_component_diagram_is_domain_error(tmp_path, capsys):
    path = tmp_path / "empty.json"
    path.write_text(json.dumps({"crossings": [], "loops": 0}), encoding="utf-8")
    assert run(["invariant", str(path)]) == EXIT_DOMAIN
    assert "at least one loop" in capsys.readouterr().err


def test_psi_prime_reads_chairs_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"kind": "product", "spec": [3]})))
    assert run(["psi", "-", "--variant", "psi-prime"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert len(data["crossings"]) == 3 + 1 + 1
    assert data["loops"] == 0


def test_closure_gauss_code(capsys):
    assert run(["closure", "[3]", "--gauss"]) == EXIT_OK
    assert len(capsys.readouterr().out.split()) >= 1


def test_verify_product(tmp_path, capsys):
    report = tmp_path / "report.json"
    assert run(["verify", "product", "3", "-o", str(report)]) == EXIT_OK
    assert "jones equal: trefoil class" in capsys.readouterr().out
    assert json.loads(report.read_text(encoding="utf-8"))["passed"] is True


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN}) == 4


def test_unknown_subcommand_is_usage_error():
    assert run(["frobnicate"]) == EXIT_USAGE


def test_invalid_tree_is_domain_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"top": "10", "bottom": "100"}), encoding="utf-8")
    assert run(["psi", str(path)]) == EXIT_DOMAIN
    assert capsys.readouterr().err.startswith("error:")


def test_conway_syntax_error_is_domain_error(capsys):
    assert run(["parse", "(3 4"]) == EXIT_DOMAIN
    assert "error:" in capsys.readouterr().err


def test_missing_file_is_usage_error(tmp_path):
    assert run(["reverse", str(tmp_path / "missing.json")]) == EXIT_USAGE


def test_render_chairs_svg(tmp_path):
    chairs = tmp_path / "chairs.json"
    svg = tmp_path / "chairs.svg"
    assert run(["build", "product", "2", "2", "--chairs", "-o", str(chairs)]) == EXIT_OK
    assert run(["render", str(chairs), "--svg", "chairs", "-o", str(svg)]) == EXIT_OK
    text = svg.read_text(encoding="utf-8")
    assert "<svg" in text
    assert "#d62728" in text


def test_render_is_deterministic(tmp_path):
    element = tmp_path / "elem.json"
    element.write_text(json.dumps({"top": "11000", "bottom": "10100"}), encoding="utf-8")
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(["render", str(element), "-o", str(first)]) == EXIT_OK
    assert run(["render", str(element), "-o", str(second)]) == EXIT_OK
    assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")


def test_graph_steps_chain(tmp_path):
    diagram = tmp_path / "pd.json"
    planar = tmp_path / "planar.json"
    midline = tmp_path / "midline.json"
    normal = tmp_path / "normal.json"
    assert run(["closure", "[2 2]", "-o", str(diagram)]) == EXIT_OK
    assert run(["graph", "extract", str(diagram), "-o", str(planar)]) == EXIT_OK
    assert run(["graph", "linearize", str(planar), "-o", str(midline)]) == EXIT_OK
    assert run(["graph", "normalize", str(midline), "-o", str(normal)]) == EXIT_OK
    data = json.loads(normal.read_text(encoding="utf-8"))
    assert data["vertices"] >= json.loads(midline.read_text(encoding="utf-8"))["vertices"]
