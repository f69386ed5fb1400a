import json

import pytest

from linkbound.cli import main
from linkbound.laurent import laurent_from_json


@pytest.fixture
def trefoil_file(tmp_path):
    path = tmp_path / "trefoil.json"
    path.write_text(json.dumps({"braid": {"strands": 2, "word": [1, 1, 1]}}))
    return str(path)


@pytest.fixture
def t35_file(tmp_path):
    path = tmp_path / "t35.json"
    path.write_text(json.dumps({"braid": "strands=3; 1 2 1 2 1 2 1 2 1 2"}))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_trefoil(capsys, trefoil_file):
    code, out, _ = run(capsys, "invariants", trefoil_file)
    assert code == 0
    obj = json.loads(out)
    assert obj["alexander_str"] == "t^2-t+1"
    assert obj["beta"] == 0
    assert obj["components"] == 1
    assert obj["genus"] == 1
    assert laurent_from_json(obj["alexander"]) == \
        laurent_from_json({"0": 1, "1": -1, "2": 1})
    assert obj["signature_function"]["interval_values"] == [[-2, 0], [0, 0]]


@pytest.fixture
def unknot_file(tmp_path):
    path = tmp_path / "unknot.json"
    path.write_text(json.dumps({"braid": {"strands": 1, "word": []}}))
    return str(path)


def test_unknot_through_all_commands(capsys, unknot_file):
    code, out, _ = run(capsys, "invariants", unknot_file)
    assert code == 0
    obj = json.loads(out)
    assert obj["alexander_str"] == "1"
    assert obj["signature_function"]["breakpoints"] == []
    code, out, _ = run(capsys, "bound", unknot_file)
    obj = json.loads(out)
    assert (obj["lower"], obj["upper"], obj["exact"]) == (0, 0, True)
    code, out, _ = run(capsys, "signature-csv", unknot_file)
    lines = out.strip().splitlines()
    assert lines[1:] == ["-2.0,2.0,0.0,0,exact"]


def test_invariants_deterministic(capsys, t35_file):
    code1, out1, _ = run(capsys, "invariants", t35_file)
    code2, out2, _ = run(capsys, "invariants", t35_file)
    assert code1 == code2 == 0
    assert out1 == out2


def test_invariants_zero_alexander(capsys, tmp_path):
    path = tmp_path / "unlink.json"
    path.write_text(json.dumps({"seifert_matrix": [[0]], "components": 2}))
    code, out, _ = run(capsys, "invariants", str(path))
    assert code == 0
    obj = json.loads(out)
    assert obj["alexander"] == {}
    assert obj["alexander_str"] == "0"
    assert obj["width"] is None
    assert obj["beta"] == 1


def test_bound_t35(capsys, t35_file):
    code, out, _ = run(capsys, "bound", t35_file)
    assert code == 0
    obj = json.loads(out)
    assert (obj["lower"], obj["upper"], obj["exact"]) == (4, 4, True)


def test_bound_with_band_cert(capsys, trefoil_file):
    code, out, _ = run(capsys, "bound", trefoil_file, "--band-cert", "3,2")
    assert code == 0
    obj = json.loads(out)
    assert obj["upper"] == 1


def test_bound_bad_cert_syntax(capsys, trefoil_file):
    code, _, err = run(capsys, "bound", trefoil_file, "--band-cert", "x,y")
    assert code == 2 and "band-cert" in err


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "invariants", str(path))
    assert code == 2
    assert ":1:" in err  # line/column diagnostics


def test_invalid_matrix_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"seifert_matrix": [[0, 2], [0, 0]], "components": 1}))
    code, _, err = run(capsys, "invariants", str(path))
    assert code == 3
    assert "unimodular" in err


def test_split_braid_exit_code(capsys, tmp_path):
    path = tmp_path / "split.json"
    path.write_text(json.dumps({"braid": {"strands": 3, "word": [1, 1]}}))
    code, _, err = run(capsys, "invariants", str(path))
    assert code == 3


def test_infect_flow(capsys, tmp_path, t35_file):
    code, out, _ = run(capsys, "bound", t35_file)
    report_path = tmp_path / "report.json"
    report_path.write_text(out)
    decl_path = tmp_path / "decl.json"
    decl_path.write_text(json.dumps({
        "axes": 2, "linking_numbers": [[0], [0]],
        "double_points": 7, "milnor_vanishing_length": 14}))
    code, out, _ = run(capsys, "infect", str(report_path), str(decl_path))
    assert code == 0
    obj = json.loads(out)
    assert (obj["lower"], obj["upper"], obj["exact"]) == (4, 4, True)
    assert obj["assumptions"]


def test_infect_missing_milnor(capsys, tmp_path, t35_file):
    code, out, _ = run(capsys, "bound", t35_file)
    report_path = tmp_path / "report.json"
    report_path.write_text(out)
    decl_path = tmp_path / "decl.json"
    decl_path.write_text(json.dumps({
        "axes": 1, "linking_numbers": [[0]],
        "double_points": 3, "milnor_vanishing_length": 0}))
    code, _, err = run(capsys, "infect", str(report_path), str(decl_path))
    assert code == 3
    assert "not declared" in err


def test_signature_csv(capsys, trefoil_file):
    code, out, _ = run(capsys, "signature-csv", trefoil_file, "--samples", "100")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x_lo,x_hi,sigma,nullity,source"
    exact = [l for l in lines[1:] if l.endswith("exact")]
    oracle = [l for l in lines[1:] if l.endswith("oracle")]
    assert len(exact) == 3  # two intervals + one breakpoint row
    assert len(oracle) == 100
    # oracle rows agree with the exact piecewise values away from the jump
    for line in oracle:
        x, _, sigma, nullity, _ = line.split(",")
        x, sigma = float(x), float(sigma)
        if abs(x - 1.0) > 1e-3:
            assert sigma == (-2.0 if x < 1 else 0.0)
            assert int(nullity) == 0


def test_verify_builtin(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "PASS torus_3_5" in out
    assert out.strip().endswith("catalog entries passed")


def test_verify_corrupted_catalog(capsys, tmp_path):
    catalog = [{
        "name": "bad_trefoil",
        "input": {"braid": {"strands": 2, "word": [1, 1, 1]}},
        "expected": {"alexander": {"0": 7}},
    }]
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps(catalog))
    code, out, _ = run(capsys, "verify", "--catalog", str(path))
    assert code == 5
    assert "FAIL bad_trefoil" in out


def test_verify_empty_catalog(capsys, tmp_path):
    path = tmp_path / "catalog.json"
    path.write_text("[]")
    code, out, err = run(capsys, "verify", "--catalog", str(path))
    assert code == 0
    assert "empty catalog" in err


def test_verify_env_var(capsys, tmp_path, monkeypatch):
    path = tmp_path / "catalog.json"
    path.write_text(json.dumps([{
        "name": "unknot",
        "input": {"braid": {"strands": 1, "word": []}},
        "expected": {"max_abs_sigma": 0},
    }]))
    monkeypatch.setenv("LINKBOUND_CATALOG", str(path))
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "PASS unknot" in out


def test_missing_input(capsys):
    code, _, err = run(capsys, "invariants")
    assert code == 2


def test_input_flag_alias(capsys, trefoil_file):
    code, out, _ = run(capsys, "invariants", "--input", trefoil_file)
    assert code == 0
    assert json.loads(out)["alexander_str"] == "t^2-t+1"
