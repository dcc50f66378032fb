import json

import pytest

from octf4.cli import main
from octf4.normalize import branch_samples, canonical_real, ZERO_VECTOR


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims")
    assert code == 0
    dims = json.loads(out.splitlines()[0])
    assert dims == {"w1": 52, "w2": 1274, "w3": 273, "w4": 26}
    assert "nilradical 15" in out


def test_sample_classify_reduce_verify(tmp_path, capsys):
    code, out, _ = run(capsys, "--seed", "12", "sample", "-n", "2",
                       "--out", str(tmp_path / "s"))
    assert code == 0
    sample = tmp_path / "s" / "sample_0000.json"
    assert sample.exists()

    code, out, _ = run(capsys, "classify", "--in", str(sample))
    assert code == 0
    rep = json.loads(out)
    assert rep["on_cone"] and "branch" in rep

    trace_file = tmp_path / "trace.json"
    code, _, err = run(capsys, "reduce", "--in", str(sample),
                       "--out", str(trace_file))
    assert code == 0
    assert "residual" in err

    code, out, _ = run(capsys, "verify-trace", "--in", str(trace_file))
    assert code == 0
    assert out.startswith("PASS")


def test_reduce_real_via_cli(tmp_path, capsys):
    f = tmp_path / "real.json"
    f.write_text(json.dumps(canonical_real().to_json()))
    code, out, _ = run(capsys, "reduce", "--in", str(f))
    assert code == 0
    trace = json.loads(out)
    assert trace["input"]["real"]
    assert trace["residual"] < 1e-8


def test_reduce_branch_sample(tmp_path, capsys):
    f = tmp_path / "zv.json"
    f.write_text(json.dumps(branch_samples()[ZERO_VECTOR].to_json()))
    code, out, _ = run(capsys, "reduce", "--in", str(f))
    assert code == 0


def test_malformed_input_exits_1(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"nope": true}')
    code, _, err = run(capsys, "classify", "--in", str(f))
    assert code == 1
    assert "error" in err
    code, _, err = run(capsys, "reduce", "--in", str(tmp_path / "missing.json"))
    assert code == 1


def test_off_cone_reduce_exits_2(tmp_path, capsys):
    f = tmp_path / "id.json"
    from octf4.jordan import HermMat3
    f.write_text(json.dumps(HermMat3.identity().to_json()))
    code, _, err = run(capsys, "reduce", "--in", str(f))
    assert code == 2
    assert "not on the variety" in err


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "--seed", "1", "verify", "--suite", "identities", "-n", "50")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "--seed", "1", "verify", "--suite", "automorphism", "-n", "10")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "--seed", "1", "verify", "--suite", "orbit", "-n", "5")
    assert code == 0 and "PASS" in out


def test_env_seed(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("OCTF4_SEED", "99")
    run(capsys, "sample", "-n", "1", "--out", str(tmp_path / "a"))
    monkeypatch.delenv("OCTF4_SEED")
    run(capsys, "--seed", "99", "sample", "-n", "1", "--out", str(tmp_path / "b"))
    a = (tmp_path / "a" / "sample_0000.json").read_text()
    b = (tmp_path / "b" / "sample_0000.json").read_text()
    assert a == b


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"seed": 7, "tol": {"accept": 1e-7}}))
    code, _, _ = run(capsys, "--config", str(cfg), "sample", "-n", "1",
                     "--out", str(tmp_path / "s"))
    assert code == 0
    bad = tmp_path / "bad_cfg.json"
    bad.write_text(json.dumps({"tol": {"accept": -1.0}}))
    code, _, err = run(capsys, "--config", str(bad), "dims")
    assert code == 1
