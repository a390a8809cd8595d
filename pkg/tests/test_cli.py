"""Command-line interface: artifacts, formats, exit codes.

Everything runs in-process through main(argv) so the tests can assert
on return codes and monkeypatch the numerical layer.  File contents are
parsed back and compared against the same library calls the commands
wrap, plus a handful of closed-form values.
"""

import json
import math

import numpy as np
import pytest

from bandedzeros import cli
from bandedzeros.errors import NumericalFailure


def read_csv(path):
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# meta ")
    meta = json.loads(lines[0][len("# meta ") :])
    header = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return meta, header, rows


def test_traces_example_values(tmp_path):
    out = tmp_path / "t.csv"
    code = cli.main(
        ["traces", "--scheme", "gue", "--n", "5", "--moments", "4", "--out", str(out)]
    )
    assert code == 0
    meta, header, rows = read_csv(out)
    assert meta["command"] == "traces"
    assert set(meta["versions"]) == {"bandedzeros", "numpy", "scipy"}
    assert header == [
        "N",
        "ell",
        "mean",
        "zero_side",
        "gap",
        "gap_bound",
        "variance",
        "variance_bound",
    ]
    table = {(int(r[0]), int(r[1])): [float(x) for x in r[2:]] for r in rows}
    assert table[(5, 2)][0] == 1.0
    assert table[(5, 2)][1] == 0.8
    assert table[(5, 0)] == [1.0, 1.0, 0.0, 0.0, 0.0, 0.0]
    assert table[(5, 1)][4] == pytest.approx(1 / 25, abs=1e-12)  # 1/N^2 at ell = 1
    assert set(n for n, _ in table) == {5}
    assert set(ell for _, ell in table) == {0, 1, 2, 3, 4}


def test_traces_multiple_ranks(tmp_path):
    out = tmp_path / "t.csv"
    assert (
        cli.main(
            ["traces", "--scheme", "gue", "--n", "2,10", "--moments", "2", "--out", str(out)]
        )
        == 0
    )
    _, _, rows = read_csv(out)
    ranks = {int(r[0]) for r in rows}
    assert ranks == {2, 10}


def test_curve_density_example(tmp_path):
    out = tmp_path / "c.csv"
    code = cli.main(
        [
            "curve", "--kind", "hermite", "--q", "1", "--a", "0",
            "--density", "0", "--eps", "1e-6", "--out", str(out),
        ]
    )
    assert code == 0
    _, header, rows = read_csv(out)
    assert header == ["x", "density"]
    assert float(rows[0][1]) == pytest.approx(1 / math.pi, abs=1e-4)


def test_curve_table_and_moments(tmp_path):
    out = tmp_path / "c.json"
    code = cli.main(
        [
            "curve", "--kind", "laguerre", "--q", "1", "--a", "1",
            "--alpha", "1", "--moments", "4", "--out", str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["kind"] == "laguerre"
    assert payload["deg_w"] == 2
    assert payload["table"] == [[-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]]
    assert np.allclose(payload["moments"], [1, 1, 2, 5, 14], atol=1e-8)


def test_zeros_json_summary(tmp_path):
    out = tmp_path / "z.json"
    code = cli.main(
        [
            "zeros", "--scheme", "gue", "--n", "30", "--moments", "4",
            "--format", "json", "--out", str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["N"] == 30
    assert payload["real"] is True
    assert payload["max_imag"] <= 1e-10
    assert len(payload["moments"]) == 5
    assert payload["moments"][2] == pytest.approx(1 - 1 / 30, abs=1e-10)


def test_zeros_csv_points(tmp_path):
    out = tmp_path / "z.csv"
    assert (
        cli.main(
            ["zeros", "--scheme", "gue", "--n", "2", "--moments", "1", "--out", str(out)]
        )
        == 0
    )
    _, header, rows = read_csv(out)
    assert header == ["index", "re", "im"]
    pts = sorted(float(r[1]) for r in rows)
    root = math.sqrt(0.5)
    assert pts == pytest.approx([-root, root], abs=1e-12)
    assert all(float(r[2]) == 0.0 for r in rows)


def test_mop_zeros_first_moment(tmp_path):
    out = tmp_path / "m.json"
    code = cli.main(
        [
            "mop-zeros", "--kind", "multiple-laguerre", "--q", "1/2,1/2",
            "--a", "1,2", "--alpha", "1", "--n", "12", "--moments", "2",
            "--format", "json", "--out", str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["real"] is True
    assert payload["moments"][1] == pytest.approx(1.5, abs=1e-9)


def test_gap_sweep_exact_column_and_slope(tmp_path):
    out = tmp_path / "g.csv"
    code = cli.main(
        [
            "gap-sweep", "--scheme", "gue", "--n", "25,50,100,200",
            "--moments", "2", "--out", str(out),
        ]
    )
    assert code == 0
    _, header, rows = read_csv(out)
    assert header == ["N", "ell", "mean", "zero_side", "gap", "gap_bound", "slope"]
    for r in rows:
        n, ell = int(r[0]), int(r[1])
        if ell == 2:
            assert float(r[4]) == pytest.approx(1 / n, rel=1e-12)
            assert float(r[6]) == pytest.approx(-1.0, abs=0.01)
        if ell == 0:
            assert float(r[4]) == 0.0


def test_variance_sweep_slope(tmp_path):
    out = tmp_path / "v.csv"
    code = cli.main(
        [
            "variance-sweep", "--scheme", "gue", "--n", "25,50,100,200",
            "--moments", "1", "--out", str(out),
        ]
    )
    assert code == 0
    _, header, rows = read_csv(out)
    assert header == ["N", "ell", "variance", "variance_bound", "slope"]
    slopes = {float(r[4]) for r in rows if int(r[1]) == 1}
    assert len(slopes) == 1
    assert slopes.pop() == pytest.approx(-2.0, abs=0.01)


def test_kva_moment_table(tmp_path):
    out = tmp_path / "k.csv"
    assert cli.main(["kva", "--scheme", "gue", "--moments", "6", "--out", str(out)]) == 0
    _, header, rows = read_csv(out)
    assert header == ["ell", "moment"]
    moments = [float(r[1]) for r in rows]
    assert np.allclose(moments, [1, 0, 1, 0, 2, 0, 5], atol=1e-9)


def test_free_conv_exact_strings(tmp_path):
    out = tmp_path / "f.json"
    code = cli.main(
        [
            "free-conv", "--op", "add", "--mu", "sc",
            "--nu", "atoms:1@1/2,-1@1/2", "--moments", "6", "--out", str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["op"] == "add"
    assert payload["moments"] == [1.0, 0.0, 2.0, 0.0, 7.0, 0.0, 30.0]
    assert payload["moments_exact"] == ["1", "0", "2", "0", "7", "0", "30"]

    out2 = tmp_path / "f2.json"
    code = cli.main(
        [
            "free-conv", "--op", "mul", "--mu", "mp:2",
            "--nu", "atoms:1@1/2,1/2@1/2", "--moments", "3", "--out", str(out2),
        ]
    )
    assert code == 0
    payload = json.loads(out2.read_text())
    assert payload["moments_exact"] == ["1", "3/2", "29/8", "351/32"]


def test_sample_payload_shape(tmp_path):
    out = tmp_path / "s.json"
    code = cli.main(
        [
            "sample", "--model", "gue", "--n", "8", "--samples", "5",
            "--seed", "3", "--moments", "2", "--out", str(out),
        ]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["model"] == "gue"
    assert payload["N"] == 8 and payload["samples"] == 5 and payload["seed"] == 3
    assert len(payload["mean"]) == len(payload["var"]) == len(payload["se"]) == 3
    assert payload["mean"][0] == 1.0


def test_byte_identical_reruns(tmp_path):
    out = tmp_path / "r.csv"
    args = ["traces", "--scheme", "wishart", "--alpha", "1", "--n", "6",
            "--moments", "3", "--out", str(out)]
    assert cli.main(args) == 0
    first = out.read_bytes()
    assert cli.main(args) == 0
    assert out.read_bytes() == first

    outj = tmp_path / "r.json"
    argsj = ["sample", "--model", "wishart", "--n", "6", "--alpha", "1",
             "--samples", "4", "--seed", "9", "--moments", "2", "--out", str(outj)]
    assert cli.main(argsj) == 0
    firstj = outj.read_bytes()
    assert cli.main(argsj) == 0
    assert outj.read_bytes() == firstj


def test_run_config_reproduces_flag_invocation(tmp_path):
    out = tmp_path / "eq.csv"
    flags = ["traces", "--scheme", "gue", "--n", "5", "--moments", "2",
             "--out", str(out)]
    assert cli.main(flags) == 0
    via_flags = out.read_bytes()
    out.unlink()

    # same raw values as the flags, so the config hash in the meta agrees too
    cfg = tmp_path / "cfg.json"
    cfg.write_text(
        json.dumps(
            {
                "command": "traces",
                "scheme": "gue",
                "n": "5",
                "moments": "2",
                "out": str(out),
            }
        )
    )
    assert cli.main(["run", str(cfg)]) == 0
    assert out.read_bytes() == via_flags

    # JSON-typed values are accepted as well and produce the same rows
    cfg2 = tmp_path / "cfg2.json"
    cfg2.write_text(
        json.dumps(
            {"command": "traces", "scheme": "gue", "n": [5], "moments": 2,
             "out": str(out)}
        )
    )
    assert cli.main(["run", str(cfg2)]) == 0
    assert out.read_bytes().splitlines()[1:] == via_flags.splitlines()[1:]


def test_default_output_path(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli.main(["kva", "--scheme", "gue", "--moments", "2"]) == 0
    assert (tmp_path / "kva.csv").exists()


def test_validation_exit_codes(tmp_path, capsys):
    # conflicting / missing scheme specification
    assert cli.main(["traces", "--n", "5", "--moments", "2"]) == 2
    assert "scheme" in capsys.readouterr().err
    # jacobi needs positive parameters
    assert (
        cli.main(["traces", "--scheme", "jacobi", "--alpha", "-1", "--beta", "1",
                  "--n", "5", "--moments", "2"])
        == 2
    )
    # sweep ranks must ascend
    assert (
        cli.main(["gap-sweep", "--scheme", "gue", "--n", "50,25", "--moments", "2"])
        == 2
    )
    capsys.readouterr()
    # unknown law string
    assert (
        cli.main(["free-conv", "--op", "add", "--mu", "cauchy", "--nu", "sc",
                  "--moments", "2"])
        == 2
    )
    assert "mu" in capsys.readouterr().err
    # hermite curve takes no alpha
    assert (
        cli.main(["curve", "--kind", "hermite", "--q", "1", "--a", "0",
                  "--alpha", "1", "--moments", "2"])
        == 2
    )
    # source model without a source
    assert (
        cli.main(["sample", "--model", "gue_source", "--n", "8", "--samples", "2",
                  "--moments", "1"])
        == 2
    )
    # plain model with source arguments
    assert (
        cli.main(["sample", "--model", "gue", "--n", "8", "--samples", "2",
                  "--moments", "1", "--ratios", "1/2,1/2", "--atoms", "1,-1"])
        == 2
    )


def test_run_config_validation(tmp_path, capsys):
    missing = tmp_path / "missing.json"
    assert cli.main(["run", str(missing)]) == 2

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["run", str(bad)]) == 2

    nocmd = tmp_path / "nocmd.json"
    nocmd.write_text(json.dumps({"scheme": "gue"}))
    assert cli.main(["run", str(nocmd)]) == 2
    assert "command" in capsys.readouterr().err

    unknown = tmp_path / "unknown.json"
    unknown.write_text(
        json.dumps(
            {"command": "traces", "scheme": "gue", "n": 5, "moments": 2, "bogus": 1}
        )
    )
    assert cli.main(["run", str(unknown)]) == 2
    err = capsys.readouterr().err
    assert "bogus" in err


def test_numerical_failure_exit_code(tmp_path, capsys, monkeypatch):
    def boom(config, meta):
        raise NumericalFailure("injected instability")

    monkeypatch.setitem(cli._HANDLERS, "zeros", boom)
    code = cli.main(["zeros", "--scheme", "gue", "--n", "4", "--moments", "2",
                     "--out", str(tmp_path / "z.csv")])
    assert code == 3
    assert "numerical failure" in capsys.readouterr().err
