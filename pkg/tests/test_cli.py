import json
import subprocess
import sys

import pytest

from qcf import jsonio
from qcf.cli import main, parse_grid_axis, render_text
from qcf.presets import SEC3, SEC4
from qcf.solver import search
from fractions import Fraction as Q


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    doc = json.loads(out.out) if out.out.strip().startswith("{") else out.out
    return code, doc, out.err


@pytest.fixture
def sec3_gens(tmp_path):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps([jsonio.ecpoint_json(P) for P in SEC3.generators]))
    return str(path)


def test_derive_sec3(capsys):
    code, doc, _ = run(capsys, "derive", "--params", "2,1,16", "--basepoint", "44,760")
    assert code == 0
    assert doc["schema"] == "1" and doc["command"] == "derive"
    assert doc["quartic"] == {"f4": "1/2", "f2": "-2009/3", "f0": "80/3"}
    assert doc["weierstrass"]["a1"] == "41789/285"
    assert doc["shifted"]["q"] == "760"
    assert doc["positivity"]["passes"] is True
    assert doc["window"] == {"lo": 36.59635926, "hi": 36.623675}


def test_derive_prefilter_failure_exit_2(capsys, caplog):
    code, doc, _ = run(capsys, "derive", "--params", "2,1,0")
    assert code == 2
    assert doc["positivity"]["passes"] is False
    assert "prefilter" in caplog.text


def test_derive_force_continues(capsys):
    code, doc, _ = run(capsys, "derive", "--params", "2,1,0", "--force")
    assert code in (0, 3)
    assert doc["window"] is None


def test_derive_singular(capsys):
    code, doc, _ = run(capsys, "derive", "--params", "0,1,1")
    assert code == 0
    assert doc["singular"] is True
    assert doc["conic"] == {"A": "1/2", "B": "-1/2", "base": {"s": "1", "w": "0"}}
    assert "family" in doc["hint"]


def test_derive_finds_basepoint(capsys):
    code, doc, _ = run(capsys, "derive", "--params", "2,1,16")
    assert code == 0
    assert doc["basepoint"] == {"t": "44", "v": "760"}


def test_derive_rejects_bad_basepoint(capsys):
    code, _, err = run(capsys, "derive", "--params", "2,1,16", "--basepoint", "44,761")
    assert code == 1 and "not on the quartic" in err


def test_derive_rejects_decimal(capsys):
    with pytest.raises(SystemExit):
        main(["derive", "--params", "2.0,1,16"])


def test_point_search(capsys):
    code, doc, _ = run(capsys, "point-search", "--params", "10,0,18", "--height", "10")
    assert code == 0 and doc["basepoint"] == {"t": "5", "v": "30"}
    code, doc, _ = run(capsys, "point-search", "--params", "1,1,1", "--height", "1")
    assert code == 3 and doc["basepoint"] is None


def test_search_preset(capsys):
    code, doc, _ = run(capsys, "search", "--preset", "ib-sec3", "--bound", "2")
    assert code == 0 and doc["count"] == 1
    s = doc["solutions"][0]
    assert s["combo"] == [2, -1]
    assert tuple(Q(s[k]) for k in jsonio.SEXTUPLE) == SEC3.expected["solution"]


def test_search_empty_exit_3(capsys):
    code, doc, _ = run(capsys, "search", "--preset", "ib-sec3", "--bound", "1")
    assert code == 3 and doc["solutions"] == []


def test_search_allow_zero(capsys):
    code, doc, _ = run(capsys, "search", "--preset", "ib-sec4", "--bound", "1", "--mode", "allow-zero")
    assert code == 0 and doc["mode"] == "allow-zero"


def test_search_integer(capsys):
    code, doc, _ = run(capsys, "search", "--preset", "ib-sec3", "--bound", "2", "--integer")
    z = doc["solutions"][0]["integer"]
    xs = [int(z[k]) for k in ("X1", "X2", "X3")]
    ys = [int(z[k]) for k in ("Y1", "Y2", "Y3")]
    assert sum(x**5 for x in xs) == sum(y**3 for y in ys)


def test_search_params_requires_gens(capsys):
    code, _, err = run(capsys, "search", "--params", "2,1,16", "--bound", "1")
    assert code == 1 and "--gens" in err


def test_search_params_with_gens(capsys, sec3_gens):
    code, doc, _ = run(capsys, "search", "--params", "2,1,16", "--basepoint", "44,760",
                       "--gens", sec3_gens, "--bound", "2")
    assert code == 0 and doc["count"] == 1


def test_derive_then_search_roundtrip(capsys, tmp_path, sec3_gens):
    derived = tmp_path / "derived.json"
    assert main(["derive", "--params", "2,1,16", "--out", str(derived)]) == 0
    code, doc, _ = run(capsys, "search", "--derived", str(derived), "--gens", sec3_gens, "--bound", "3")
    assert code == 0
    expected = [jsonio.solution_json(s) for s in search(SEC3, 3)]
    assert doc["solutions"] == expected


def test_search_bad_generators(capsys, tmp_path):
    gens = tmp_path / "bad.json"
    gens.write_text(json.dumps([["1", "1"]]))
    code, _, err = run(capsys, "search", "--params", "2,1,16", "--basepoint", "44,760",
                       "--gens", str(gens), "--bound", "1")
    assert code == 1 and "not on E" in err


def test_family_k2(capsys):
    code, doc, _ = run(capsys, "family", "--name", "sec51", "--k", "2", "--integer", "--minimize")
    assert code == 0
    row = doc["results"][0]
    assert row["solution"]["Y1"] == "27/49"
    assert row["integer"]["multiplier"] == "7" and row["integer"]["minimal"] is True
    assert doc["closed_form"]["X1"] == "(2*k^2 + 1) / (2*k^2 - 1)"


def test_family_range(capsys):
    code, doc, _ = run(capsys, "family", "--name", "sec53", "--k-range", "1..3", "--step", "1/2")
    assert code == 0
    assert [r["k"] for r in doc["results"]] == ["1", "3/2", "2", "5/2", "3"]
    assert [r["positive"] for r in doc["results"]][:1] == [False]


def test_verify_file(capsys, tmp_path):
    path = tmp_path / "sols.json"
    path.write_text(json.dumps([["8", "6", "14", "-110", "124", "14"]]))
    code, doc, _ = run(capsys, "verify", str(path))
    assert code == 0 and doc["all_hold"] is True
    assert doc["reports"][0]["lhs"] == "578368"


def test_verify_failure_exit_3(capsys, tmp_path):
    path = tmp_path / "sols.json"
    path.write_text(json.dumps([["1", "1", "1", "1", "1", "2"]]))
    code, doc, _ = run(capsys, "verify", str(path))
    assert code == 3 and doc["all_hold"] is False


def test_verify_accepts_search_output(capsys, tmp_path):
    out = tmp_path / "search.json"
    assert main(["search", "--preset", "ib-sec3", "--bound", "2", "--out", str(out)]) == 0
    code, doc, _ = run(capsys, "verify", str(out))
    assert code == 0
    assert doc["reports"][0]["positive"] is True


def test_map_point_combo(capsys):
    code, doc, _ = run(capsys, "map-point", "--preset", "ib-sec3", "--combo", "2,-1")
    assert code == 0
    assert doc["quartic_point"]["t"] == jsonio.point_json(SEC3.expected["source"])["t"]
    assert doc["prop1"] == {"strict": True, "allow-zero": True}


def test_map_point_x_root(capsys):
    x0 = jsonio.format_rat(SEC4.expected["x0"])
    code, doc, _ = run(capsys, "map-point", "--preset", "ib-sec4", "--x", x0, "--root", "low")
    assert code == 0
    assert Q(doc["quartic_point"]["t"]) == SEC4.expected["t0"]


def test_map_point_basepoint_to_infinity(capsys):
    code, doc, _ = run(capsys, "map-point", "--preset", "ib-sec3", "--t", "44", "--v", "760")
    assert code == 3 and doc["ec_point"] == {"infinity": True}


def test_scan(capsys):
    code, doc, _ = run(capsys, "scan", "--x1", "0..2", "--alpha", "1", "--beta", "1,16")
    assert code == 0 and doc["grid_size"] == 6
    assert all(r["prefilter"] and r["basepoint"] for r in doc["rows"])
    code, doc, _ = run(capsys, "scan", "--x1", "2", "--alpha", "1", "--beta", "0", "--all")
    assert code == 0 and doc["rows"][0]["prefilter"] is False


def test_scan_jobs_match_serial(capsys):
    argv = ["scan", "--x1", "0..2", "--alpha", "1,2", "--beta", "1..3", "--all"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert serial == parallel


def test_parse_grid_axis():
    assert parse_grid_axis("0..1:1/2,3") == [0, Q(1, 2), 1, 3]
    with pytest.raises(ValueError):
        parse_grid_axis("0..1:0")


def test_text_format(capsys):
    code = main(["derive", "--preset", "ib-sec52", "--format", "text"])
    out = capsys.readouterr().out
    assert code == 0
    assert "weierstrass.a1" in out and "4/3" in out
    assert render_text({"a": {"b": 1}}) == "a.b  1\n"


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qcf", "verify", "-"], input='[["1","1","0","1","1","0"]]',
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["reports"][0]["equation_class"] == "both_zero"
