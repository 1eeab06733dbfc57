import json
from fractions import Fraction

import pytest

import stabdiv

XY = ["x", "y"]
WXY = ["w", "x", "y"]


def test_textbook_division_blows_up():
    out = stabdiv.divide("x^5", ["x^2+2xy", "y^2"], XY, order="grlex:x>y")
    assert out["quotients"] == ["x^3 - 2*x^2*y + 4*x*y^2 - 8*y^3", "16*x*y^2"]
    assert out["remainder"] == "0"


def test_stable_strategy():
    out = stabdiv.divide("x^5", ["x^2+2xy", "y^2"], XY, order="grlex:x>y", strategy="BIVARIATE_STABLE")
    assert out["quotients"] == ["x^3 - 2*x^2*y", "4*x^3"]


def test_groebner_and_check():
    basis = stabdiv.groebner(["x^2+w*y", "y^2"], WXY, order="lex:w>x>y")
    assert basis == ["w*y + x^2", "x^4", "x^2*y", "y^2"]
    assert stabdiv.is_groebner_basis(basis, WXY, order="lex:w>x>y")
    assert not stabdiv.is_groebner_basis(["x^2+w*y", "y^2"], WXY, order="lex:w>x>y")


def test_norms_are_exact():
    assert stabdiv.h2_norm_sq("x*y", XY) == Fraction(1, 2)
    assert stabdiv.l1_norm("x^2 - 1/3y", XY) == Fraction(4, 3)


def test_rescale():
    out = stabdiv.rescale(["x^2+2xy", "y^2"], XY, order="grlex:x>y")
    assert out["lambdas"] == [5832, 18]
    assert out["rho"] == Fraction(1, 162)
    assert out["basis"] == ["x^2 + 1/162*x*y", "y^2"]


def test_scan_and_hilbert():
    rows = stabdiv.stability_scan(["x", "y"], XY, n_min=0, n_max=4)
    assert rows[0]["c_n"] is None
    assert all(abs(r["c_n"] - 1.0) < 1e-10 for r in rows[1:])
    assert stabdiv.hilbert_dimension(["x"], XY) == 1
    assert stabdiv.hilbert_dimension(["x^2", "y^2"], XY) == 0


def test_errors_map_to_exceptions():
    with pytest.raises(stabdiv.ParseError):
        stabdiv.divide("x^", ["x"], XY)
    with pytest.raises(stabdiv.ValidationError):
        stabdiv.groebner(["x"], XY, order="grlex:x>z")
    assert issubclass(stabdiv.ParseError, stabdiv.StabdivError)


def test_run_job():
    config = {"task": "hilbert", "variables": XY, "generators": ["x"]}
    code, message, files = stabdiv.run_job(config)
    assert code == 0, message
    assert json.loads(files["hilbert.json"])["dimension"] == 1
    code, _, _ = stabdiv.run_job(dict(config, generators=["x^"]))
    assert code == 2
