import json

import pytest

from TplusH.cli import exit_code_for, main
from TplusH.runtime.config_utils import dumps_report, loads_strict
from TplusH.runtime import engine
from TplusH.symbols.rational import monomial
from TplusH.utils.errors import (
    InvalidSymbol,
    NotFredholmPair,
    NotMatchingPair,
    OracleDisagreement,
    RootOnCircle,
)

A = '{"laurent": [[0, 2, 0], [1, 1, 0]]}'
B = '{"laurent": [[0, 2, 0], [-1, 1, 0]]}'
SHIFT = '{"laurent": [[-1, 1, 0]]}'
ONE = '{"laurent": [[0, 1, 0]]}'


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_analyze_invertible_pair(capsys):
    code, out = run(capsys, "--a", A, "--b", B, "--n", "16", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["kappa1"] == 0 and report["kappa2"] == 0
    assert report["quadrant"] == "PP"
    for sign in ("+", "-"):
        op = report["operators"][sign]
        assert (op["dim_ker"], op["dim_coker"]) == (0, 0)
        assert op["oracle"]["agrees_with_analytic"]


def test_kernel_mode_single_sign(capsys):
    code, out = run(capsys, "--mode", "kernel", "--a", SHIFT, "--b", ONE, "--sign", "minus", "--json")
    assert code == 0
    report = json.loads(out)
    assert list(report["operators"]) == ["-"]
    op = report["operators"]["-"]
    assert op["dim_ker"] == 1 and op["dim_coker"] == 0


def test_text_report(capsys):
    code, out = run(capsys, "--mode", "kernel", "--a", SHIFT, "--b", ONE, "--sign", "plus")
    assert code == 0
    assert "mode: kernel" in out
    assert "dim ker 1" in out


def test_not_matching_pair(capsys):
    code, out = run(capsys, "--a", A, "--b", ONE, "--json")
    assert code == 2
    assert "not a matching pair" in json.loads(out)["error"]


def test_degenerate_symbol(capsys):
    code, out = run(capsys, "--a", '{"laurent": [[0, 1, 0], [1, -1, 0]]}', "--b", ONE, "--json")
    assert code == 3


def test_zero_symbols(capsys):
    zero = '{"laurent": []}'
    code, out = run(capsys, "--a", zero, "--b", zero, "--json")
    assert code == 1
    assert json.loads(out)["error_type"] == "DegenerateSymbol"


def test_oracle_disagreement(capsys, monkeypatch):
    kernel_cokernel = engine.kernel_cokernel
    # describe the invertible pair with the kernel of T(t^-1)
    monkeypatch.setattr(engine, "kernel_cokernel", lambda a, b, s: kernel_cokernel(monomial(-1), 1, s))
    code, out = run(capsys, "--mode", "oracle", "--a", A, "--b", B, "--sign", "plus", "--n", "8", "--json")
    assert code == 4
    report = json.loads(out)
    assert report["error_type"] == "OracleDisagreement"
    oracle = report["operators"]["+"]["oracle"]
    assert not oracle["agrees_with_analytic"]
    assert oracle["truncation_n"] == 32


def test_malformed_literal(capsys):
    code, _ = run(capsys, "--a", '{"laurent": [[0.5, 1, 0]]}', "--b", ONE, "--json")
    assert code == 1


def test_pc_check(capsys):
    a = '{"arcs": [[0.0, 1.0, 0.0], [3.141592653589793, -1.0, 0.0]]}'
    b = '{"arcs": [[0.0, 0.0, 0.0]]}'
    code, out = run(capsys, "--mode", "pc-check", "--a", a, "--b", b, "--sign", "plus",
                    "--p_sweep", "2", "3", "--json")
    assert code == 0
    results = json.loads(out)["pc"]["+"]
    assert [r["is_fredholm"] for r in results] == [False, True]
    assert results[1]["critical_candidate"]


def test_pc_check_malformed_arcs(capsys):
    code, out = run(capsys, "--mode", "pc-check", "--a", '{"arcs": [[0.0, 1.0]]}',
                    "--b", '{"arcs": [[0.0, 0.0, 0.0]]}', "--json")
    assert code == 2
    assert json.loads(out)["error_type"] == "InvalidSymbol"


def test_missing_symbols(capsys):
    code, out = run(capsys, "--mode", "kernel", "--json")
    assert code == 1
    assert "required" in json.loads(out)["error"]


def test_pair_and_report_files(tmp_path, capsys):
    pair = tmp_path / "pair.json"
    pair.write_text(json.dumps({"a": json.loads(SHIFT), "b": json.loads(ONE), "sign": "plus", "n": 16}))
    out_file = tmp_path / "report.json"
    code, out = run(capsys, "--mode", "oracle", "--pair", str(pair), "--report", str(out_file), "--json")
    assert code == 0
    on_disk = out_file.read_text()
    assert on_disk.strip() == out.strip()
    report = loads_strict(on_disk)
    assert report["request"]["n"] == 16
    assert report["operators"]["+"]["oracle"]["truncation_n"] == 16


def test_report_round_trip_is_byte_identical(capsys):
    _, out = run(capsys, "--mode", "factorize", "--a", SHIFT, "--b", ONE, "--json")
    text = out.strip()
    assert dumps_report(loads_strict(text)) == text


def test_duplicate_keys_are_rejected():
    with pytest.raises(ValueError):
        loads_strict('{"a": 1, "a": 2}')


def test_exit_codes():
    assert exit_code_for(NotMatchingPair("x")) == 2
    assert exit_code_for(RootOnCircle("x")) == 3
    assert exit_code_for(NotFredholmPair("x")) == 3
    assert exit_code_for(OracleDisagreement("x")) == 4
    assert exit_code_for(InvalidSymbol("x"), "pc-check") == 2
    assert exit_code_for(InvalidSymbol("x"), "analyze") == 1
    assert exit_code_for(RuntimeError("x")) == 1
