"""End-to-end CLI runs against temporary output directories."""
import json
import math
import os

import numpy as np
import pytest

from leeyang.cli import RunConfig, main
from leeyang.dynamics.models import ModelSpec


def read_csv(path):
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        rows = [line.strip().split(",") for line in fh if line.strip()]
    return header, rows


def run_ok(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    assert code == 0, out
    return json.loads(out)


def test_config_round_trip(tmp_path):
    config = RunConfig(model=ModelSpec("fibonacci", 9), out=str(tmp_path),
                       normalization="paper", gap_mult=4.0, m_max=12,
                       bins=17, seed=3)
    again = RunConfig.from_dict(config.to_dict())
    assert again == config


def test_coeffs_fibonacci_row_count(tmp_path, capsys):
    out = str(tmp_path / "fib")
    run_ok(["coeffs", "--model", "fibonacci", "--n", "10", "--out", out], capsys)
    header, rows = read_csv(os.path.join(out, "coeffs.csv"))
    assert header == ["n", "re_alpha", "im_alpha"]
    assert len(rows) == 144                        # |u_10| = F_12: the full word
    header, rows = read_csv(os.path.join(out, "couplings.csv"))
    assert header == ["n", "p_n", "alpha_n"]
    assert len(rows) == 144
    assert float(rows[0][1]) == pytest.approx(2 / 3, rel=1e-15)


def test_explicit_passthrough_identical(tmp_path, capsys):
    config = {"model": {"kind": "explicit-list", "n": 0,
                        "params": {"couplings": [0.25, 0.5, 1.0]}},
              "out": str(tmp_path / "x")}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))
    run_ok(["coeffs", "--config", str(cfg_path)], capsys)
    _, rows = read_csv(str(tmp_path / "x" / "couplings.csv"))
    assert [float(r[1]) for r in rows] == [0.25, 0.5, 1.0]


def test_zeros_single_coupling(tmp_path, capsys):
    config = {"model": {"kind": "explicit-list", "n": 0,
                        "params": {"couplings": [math.log(2)]}},
              "out": str(tmp_path / "z")}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))
    run_ok(["zeros", "--config", str(cfg_path)], capsys)
    header, rows = read_csv(str(tmp_path / "z" / "zeros.csv"))
    assert header == ["k", "theta", "re", "im", "circle_deviation"]
    thetas = [float(r[1]) for r in rows]
    assert thetas == pytest.approx([0.25, 0.75], abs=1e-12)
    assert all(float(r[4]) <= 1e-10 for r in rows)


def test_ids_jump_points(tmp_path, capsys):
    config = {"model": {"kind": "explicit-list", "n": 0,
                        "params": {"couplings": [math.log(2)]}},
              "out": str(tmp_path / "i"), "normalization": "operator"}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))
    run_ok(["ids", "--config", str(cfg_path)], capsys)
    _, rows = read_csv(str(tmp_path / "i" / "ids.csv"))
    assert [(float(r[0]), float(r[1])) for r in rows] == [(0.25, 0.5), (0.75, 1.0)]


def test_gaps_empty_on_uniform(tmp_path, capsys):
    # free chain: all couplings equal gives evenly spread zeros -> no gaps
    config = {"model": {"kind": "explicit-list", "n": 0,
                        "params": {"alphas": [[0.0, 0.0]] * 16}},
              "out": str(tmp_path / "g")}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))
    run_ok(["gaps", "--config", str(cfg_path)], capsys)
    _, rows = read_csv(str(tmp_path / "g" / "gaps.csv"))
    assert rows == []


def test_gaps_and_labels_fibonacci(tmp_path, capsys):
    out = str(tmp_path / "lab")
    run_ok(["labels", "--model", "fibonacci", "--n", "9", "--out", out,
            "--m-max", "30"], capsys)
    header, rows = read_csv(os.path.join(out, "labels.csv"))
    assert header == ["left_theta", "right_theta", "length", "label", "n", "m", "residual"]
    assert rows, "expected detected gaps"
    # rows ordered widest first, all matched
    lengths = [float(r[2]) for r in rows]
    assert lengths == sorted(lengths, reverse=True)
    assert all(r[4] != "" and r[5] != "" for r in rows)
    group = json.loads((tmp_path / "lab" / "group.json").read_text())
    assert group["kind"] == "rank2"
    assert group["gamma"] == pytest.approx((math.sqrt(5) - 1) / 2)


def test_labels_requires_group(tmp_path, capsys):
    code = main(["labels", "--model", "uamo", "--n", "8", "--out", str(tmp_path)])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert out["error"]["type"] == "DomainError"


def test_hist_output(tmp_path, capsys):
    out = str(tmp_path / "h")
    run_ok(["hist", "--model", "uamo", "--n", "32", "--out", out, "--bins", "6"], capsys)
    _, rows = read_csv(os.path.join(out, "hist.csv"))
    assert len(rows) == 6
    assert sum(int(r[2]) for r in rows) == 32
    assert sum(float(r[3]) for r in rows) == pytest.approx(1.0)


def test_bandwidth_command(tmp_path, capsys):
    out = str(tmp_path / "b")
    run_ok(["bandwidth", "--model", "uamo", "--n", "24", "--out", out], capsys)
    summary = json.loads((tmp_path / "b" / "bandwidth.json").read_text())
    assert summary["dim"] == 24
    assert summary["max_offset_before"] == 23       # corners give full bandwidth
    assert summary["max_offset_after"] == 4
    assert summary["eigenphase_residual"] <= 1e-10
    _, rows = read_csv(os.path.join(out, "matrix_reordered.csv"))
    assert all(abs(int(r[0]) - int(r[1])) <= 4 for r in rows)


def test_error_json_for_invalid_coefficient(tmp_path, capsys):
    config = {"model": {"kind": "explicit-list", "n": 0,
                        "params": {"alphas": [[1.5, 0.0]]}},
              "out": str(tmp_path)}
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(config))
    code = main(["zeros", "--config", str(cfg_path)])
    payload = json.loads(capsys.readouterr().out)
    assert code == 1
    assert payload["error"]["type"] == "DomainError"
    assert "alpha" in payload["error"]["message"]


def test_missing_model_is_an_error(capsys):
    code = main(["zeros"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 1 and "error" in payload


def test_determinism_byte_identical(tmp_path, capsys):
    args = lambda out: ["zeros", "--model", "sft", "--n", "30", "--seed", "9",
                        "--out", out]
    run_ok(args(str(tmp_path / "one")), capsys)
    run_ok(args(str(tmp_path / "two")), capsys)
    one = (tmp_path / "one" / "zeros.csv").read_bytes()
    two = (tmp_path / "two" / "zeros.csv").read_bytes()
    assert one == two


def test_cat_map_precision_rerun_stable(tmp_path, capsys):
    run_ok(["coeffs", "--model", "cat-map", "--n", "100",
            "--out", str(tmp_path / "lo")], capsys)
    run_ok(["coeffs", "--model", "cat-map", "--n", "100", "--precision-bits", "2048",
            "--out", str(tmp_path / "hi")], capsys)
    _, lo = read_csv(str(tmp_path / "lo" / "coeffs.csv"))
    _, hi = read_csv(str(tmp_path / "hi" / "coeffs.csv"))
    worst = max(abs(float(a[1]) - float(b[1])) for a, b in zip(lo, hi))
    assert worst < 1e-14


def test_verify_quick_profile(tmp_path, capsys):
    code = main(["verify", "--quick", "--seed", "42", "--out", str(tmp_path / "v")])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0, payload
    report = json.loads((tmp_path / "v" / "verify.json").read_text())
    assert report["all_passed"] is True
    assert {c["name"] for c in report["checks"]} >= {
        "trace_formula_oracle", "zero_set_equivalence", "determinant_identity",
        "bandwidth_reduction", "unit_circle_certificate"}
