import pathlib

import pytest

import spectra

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_polynomial_helpers():
    assert spectra.poly_gcd("(x+1)*(x-y)", "(x-y)*y") == "x - y"
    assert spectra.resultant("x^2 - 2", "x - 1", "x") != "0"
    with pytest.raises(spectra.ParseError):
        spectra.poly_gcd("x +", "y")


def test_hitchin_and_lambda():
    assert spectra.hitchin_dim(2, 2) == 5
    assert spectra.hitchin_dim(1, 3) == 3
    degrees, all_negative = spectra.lambda_degrees(2, 1, 3, 0)
    assert degrees == [(0, -6), (2, -4)]
    assert all_negative


def test_scalar_only_and_numerics():
    v = spectra.scalar_only(2, 1, 3, 0, reduced="yes", regular="yes")
    assert v["verdict"] == "yes"
    assert spectra.discriminant_numbers(2, 0, 3) == (12, 12)
    assert spectra.end_twist_ranks("split_pair") == (4, 6)
    assert spectra.end_twist_ranks("atiyah", 4) == (4, 7)


def test_model_and_certificates():
    rep = spectra.model((DATA / "model_u4_v6.json").read_text())
    assert rep["validation"]["delta_squarefree"] == "holds"
    certs = spectra.spectral_certificates((DATA / "model_u4_v6.json").read_text(),
                                          (DATA / "spectral_r2_e3.json").read_text(), seed=1)
    assert certs["smooth"]["verdict"] in {"yes", "no", "unknown"}


def test_symkernel_and_errors():
    out = spectra.symkernel("x", "y", 3, samples=5)
    assert out["associates"] and out["witness_passed"] == 5
    with pytest.raises(spectra.HypothesisViolation):
        spectra.symkernel("x", "2*x", 2)


def test_run_matches_cli_contract():
    code, report = spectra.run("hitchin-dim", g=2, r=2)
    assert code == 0 and report["result"]["hitchin_dim"] == 5
    code, report = spectra.run("symkernel-verify", f="x", g_expr="2*x", r=2)
    assert code == 2 and report["error"]["kind"] == "hypothesis_violation"
    code, report = spectra.run("sweep", sweep_r="2", sweep_d="1", sweep_g="0", sweep_e="0..5")
    cases = [row["conjecture_case"] for row in report["result"]["rows"]]
    assert cases == ["not_applicable"] * 2 + ["holds"] * 4
