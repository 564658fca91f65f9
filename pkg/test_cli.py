# Tests for the command-line interface

import json

from quadratic_superalgebras import io
from quadratic_superalgebras.cli import main
from quadratic_superalgebras.quadratic import validate_quadratic


def test_validate_catalog_key(capsys):
    assert main(["validate", "g_4_2_s"]) == 0
    assert capsys.readouterr().out.strip() == "quadratic Lie superalgebra: OK"


def test_validate_plain_algebra(capsys):
    assert main(["validate", "heisenberg", "--param", "n=2", "--param", "m=1"]) == 0
    assert capsys.readouterr().out.strip() == "Lie superalgebra: OK"


def test_validate_broken_document(capsys, fixture_path):
    assert main(["validate", fixture_path("broken_jacobi.json")]) == 1
    out = capsys.readouterr().out
    assert "super Jacobi" in out
    assert "A" in out and "B" in out and "C" in out


def test_validate_json_format(capsys, fixture_path):
    assert main(["validate", fixture_path("broken_jacobi.json"), "--format", "json"]) == 1
    document = json.loads(capsys.readouterr().out)
    assert not document["ok"]
    assert {v["axiom"] for v in document["violations"]} == {"super Jacobi"}
    assert all(len(v["witness"]) == 3 for v in document["violations"])


def test_betti_table_text(capsys):
    assert main(["betti", "g_4_2_s", "--max-degree", "2"]) == 0
    last = capsys.readouterr().out.strip().splitlines()[-1]
    assert last.split() == ["2", "8", "3", "3", "0"]


def test_cohomology_json(capsys):
    assert main(["cohomology", "g_6_s", "--degree", "2", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    [result] = document["results"]
    assert (result["degree"], result["betti"]) == (2, 6)


def test_cohomology_with_parameters(capsys):
    args = ["cohomology", "g_8_2_4_s", "--degree", "1", "--param", "lambda=2", "--param", "mu=-1/2"]
    assert main(args + ["--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert document["parameters"] == {"lambda": "2", "mu": "-1/2"}


def test_errors_exit_with_two(capsys, tmp_path):
    assert main(["validate", "no_such_algebra"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["validate", "g_6_2", "--param", "lambda=0"]) == 2
    assert main(["validate", "g_6_2", "--param", "lambda"]) == 2
    assert main(["poisson", "heisenberg"]) == 2
    config = tmp_path / "tight.yaml"
    config.write_text("max_cochain_dim: 5\n")
    assert main(["--config", str(config), "betti", "g_6_s", "--max-degree", "2"]) == 2


def test_double_extend(tmp_path, fixture_path):
    output = tmp_path / "extended.json"
    args = [
        "double-extend",
        "g_4_1_s",
        "--derivation",
        fixture_path("g_4_1_s_derivation.json"),
        "--output",
        str(output),
        "--name",
        "g41_ext",
    ]
    assert main(args) == 0
    extended = io.load(output)
    assert extended.name == "g41_ext"
    assert extended.dim == 6
    assert validate_quadratic(extended, with_algebra=True).ok


def test_double_extend_inline_derivation_must_be_skew(capsys):
    args = ["double-extend", "g_4_1_s", "--derivation", "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"]
    assert main(args) == 2
    assert "error:" in capsys.readouterr().err


def test_double_extend_by_an_odd_derivation(tmp_path, capsys):
    # ad(Y1) on g_4_1_s: Y0 -> 2 X1, Y1 -> -2 X0
    output = tmp_path / "odd.json"
    ad_y1 = "0,0,0,-2;0,0,0,0;0,2,0,0;0,0,0,0"
    args = ["double-extend", "g_4_1_s", "--derivation", ad_y1, "--parity", "1"]
    assert main(args + ["--output", str(output)]) == 0
    extended = io.load(output)
    assert extended.basis.labels == ("X0", "Y0", "e", "X1", "Y1", "f")
    assert extended.basis.odd_dim == 4
    assert validate_quadratic(extended, with_algebra=True).ok
    identity = "1,0,0,0;0,1,0,0;0,0,1,0;0,0,0,1"
    assert main(["double-extend", "g_4_1_s", "--derivation", identity, "--parity", "1"]) == 2
    assert "error:" in capsys.readouterr().err


def test_export_round_trip(tmp_path):
    output = tmp_path / "g6s.json"
    assert main(["export", "g_6_s", "--output", str(output)]) == 0
    assert main(["validate", str(output)]) == 0


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert len(out.strip().splitlines()) == 18
    assert main(["list", "--format", "json"]) == 0
    document = json.loads(capsys.readouterr().out)
    assert len(document["entries"]) == 18
    assert [e["key"] for e in document["entries"]] == sorted(e["key"] for e in document["entries"])


def test_poisson(capsys):
    assert main(["poisson", "g_4_1_s"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1] == "{I, I} = 0"
    assert "MISMATCH" not in "\n".join(lines)
    assert len(lines) == 2 + 4
