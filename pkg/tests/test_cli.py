import json

import pytest
from click.testing import CliRunner

from pvi_rmt.cli import main

SSE = ["--n", "2", "--mu", "0.3", "--omega1", "0.25", "--omega2", "0.1", "--xi-star", "0.4"]


def run(args):
    return CliRunner(mix_stderr=False).invoke(main, args) if _has_mix() else CliRunner().invoke(main, args)


def _has_mix():
    import inspect
    return "mix_stderr" in inspect.signature(CliRunner.__init__).parameters


def results(out):
    doc = json.loads(out)
    assert set(doc) == {"command", "inputs", "results", "flags", "elapsed_ms"}
    return {r["name"]: complex(r["re"], r["im"]) for r in doc["results"]}, doc


def test_an_constant_weight():
    r = run(["an", "--n", "1", "--mu", "0", "--omega1", "0", "--omega2", "0", "--xi-star", "0",
             "--t-re", "0.1"])
    assert r.exit_code == 0
    vals, _ = results(r.stdout)
    assert abs(vals["A_N"] - 1) < 1e-12


def test_an_toeplitz_vs_series_and_ode():
    tp = results(run(["an", *SSE, "--t-re", "0.001"]).stdout)[0]
    se = results(run(["an", *SSE, "--t-re", "0.001", "--method", "series"]).stdout)[0]
    # agreement only to the size of the omitted orders
    assert abs(se["A_N"] / tp["A_N"] - 1) < 1.0
    a = results(run(["an", *SSE, "--t-re", "0.35"]).stdout)[0]
    b = results(run(["an", *SSE, "--t-re", "0.35", "--method", "ode"]).stdout)[0]
    assert abs(a["t(t-1)dlogA_N"] - b["t(t-1)dlogA_N"]) < 1e-8


def test_an_exit_codes():
    assert run(["an", "--n", "x", "--mu", "0", "--omega1", "0", "--t-re", "0.1"]).exit_code == 2
    assert run(["an", *SSE, "--t-re", "0.5"]).exit_code == 4
    bad = ["--n", "2", "--mu", "0.25", "--omega1", "0.25", "--omega2", "0", "--xi-star", "0.4"]
    assert run(["an", *bad, "--t-re", "0.1"]).exit_code == 3


def test_gap_commands():
    vals, _ = results(run(["gap", "--ensemble", "jacobi", "--n", "2", "--a", "0.5", "--b", "0.5",
                           "--t", "0.99", "--xi", "1"]).stdout)
    assert abs(vals["nystrom"] - vals["gram"]) < 1e-9
    vals, doc = results(run(["gap", "--ensemble", "un", "--n", "2", "--x", "0.05", "--xi", "1"]).stdout)
    assert abs(vals["determinant"] - vals["series"]) < 1e-9 and "series_agrees" in doc["flags"]
    for ens in ("un", "o-plus", "o-minus"):
        vals, _ = results(run(["gap", "--ensemble", ens, "--n", "2", "--x", "0.3", "--xi", "0"]).stdout)
        assert vals["determinant"] == 1
    assert run(["gap", "--ensemble", "jacobi", "--n", "2", "--xi", "1"]).exit_code == 2


def test_monodromy_command():
    vals, doc = results(run(["monodromy", "--case", "B", *SSE]).stdout)
    assert "Mt_is_(-1)^N_I=true" in doc["flags"]
    assert vals["cyclic_residual"].real < 1e-12
    assert vals["Mt[0,1]"] == 0 and vals["Mt[0,0]"] == 1
    _, doc = results(run(["monodromy", "--case", "A", *SSE]).stdout)
    tri = [f for f in doc["flags"] if "triangular" in f]
    assert len(tri) == 3 and all(f.endswith("=true") for f in tri)


def test_csv_format():
    r = run(["gap", "--ensemble", "un", "--n", "2", "--x", "0.05", "--xi", "1", "--format", "csv"])
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "name,re,im,err" and len(lines) == 3


@pytest.mark.slow
def test_crosscheck_inject_failure_and_determinism():
    r = run(["crosscheck", "--inject-failure"])
    assert r.exit_code == 1
    assert "fail:2 U(N) series vs Toeplitz" in json.loads(r.stdout)["flags"]
    a = json.loads(run(["crosscheck", "--suite", "full", "--seed", "7"]).stdout)
    b = json.loads(run(["crosscheck", "--suite", "full", "--seed", "7"]).stdout)
    assert a["results"] == b["results"] and a["flags"] == b["flags"]
