import json

import pytest

from truncriesz.cli import main

HAT = {"x": {"domain": "interval", "breakpoints": ["-1", "0", "1"], "values": ["0", "-2", "0"]}, "alpha": "1"}
VEC = {"x": {"entries": ["2", "-3"]}, "alpha": "1"}


def _write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def test_norms_interval(tmp_path, capsys):
    assert main(["norms", "--input", _write(tmp_path, "h.json", HAT)]) == 0
    rows = {r["norm"]: r["value"] for r in json.loads(capsys.readouterr().out)}
    assert rows == {"norm1": "1", "norm0": "1/2", "normC": "2", "gauge": "1", "uL1": "1/2"}


def test_norms_coordinate_tsv(tmp_path, capsys):
    assert main(["norms", "--input", _write(tmp_path, "v.json", VEC), "--format", "tsv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "norm\tvalue" and "norm1\t5/2" in out and "gauge\t3" in out


def test_norm_not_applicable(tmp_path):
    assert main(["norms", "--input", _write(tmp_path, "v.json", VEC), "--norm", "uL1"]) == 2


def test_bad_input_file(tmp_path):
    assert main(["norms", "--input", str(tmp_path / "missing.json")]) == 2
    assert main(["norms", "--input", _write(tmp_path, "f.json", {"x": {"entries": [0.5]}})]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--bogus"])
    assert exc.value.code == 2


def test_verify_report_byte_identical(tmp_path):
    args = ["verify", "--trials", "20", "--property", "sandwich_classic", "--property", "lemma_unit"]
    a, b = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    assert main(args + ["--report", a]) == 0
    assert main(args + ["--report", b]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()


def test_verify_skip_warns(capsys):
    assert main(["verify", "--carrier", "interval", "--property", "lemma_unit", "--trials", "5"]) == 0
    assert "skipped" in capsys.readouterr().err


def test_verify_unknown_property():
    assert main(["verify", "--property", "nope"]) == 2


def test_example_unit_kernel(capsys):
    assert main(["example", "unit-kernel"]) == 0
    assert "‖e−1‖₀ = 0, e−1 ≠ 0" in capsys.readouterr().out


def test_example_fn_sequence(capsys):
    assert main(["example", "fn-sequence", "--n-max", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[1:] == ["2\t1/4\t1", "3\t1/6\t1", "4\t1/8\t1"]


def test_repr(tmp_path, capsys):
    data = {"x": {"entries": ["2", "-3"]}, "alpha": "0"}
    assert main(["repr", "--input", _write(tmp_path, "r.json", data)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["image"] == ["2", "-3", "0"] and out["gauge"] == "3" and out["isometric"]


def test_verify_failure_writes_counterexamples(tmp_path, monkeypatch):
    from truncriesz import verifier

    broken = verifier.Property("always_false", "deliberately false", lambda s: (s.scalar(),),
                               lambda c, r: r > 100)
    monkeypatch.setitem(verifier.CATALOGUE, "always_false", broken)
    report = str(tmp_path / "r.json")
    assert main(["verify", "--carrier", "interval", "--property", "always_false",
                 "--trials", "5", "--report", report]) == 1
    found = json.loads(open(report + ".counterexamples.json").read())
    # shrinking drives the scalar to 0
    assert found[0]["first_counterexample"]["inputs"] == ["0"]
