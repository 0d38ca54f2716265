import math

import pytest

import robinspec as rs

GOLDEN_ANNULUS = -2.4063183671746  # d=2, r1=1, r2=2, alpha=1


def test_engines_agree_on_annulus():
    d = rs.Domain.annulus(2, 1.0, 2.0)
    s = rs.first_eigenvalue(d, 1.0)
    b = rs.first_eigenvalue(d, 1.0, engine="bessel")
    assert s == pytest.approx(GOLDEN_ANNULUS, rel=1e-12)
    assert abs(s - b) <= 1e-8 * abs(s)


def test_ball_second_eigenvalue_vanishes_at_inverse_radius():
    vals = rs.spectrum(rs.Domain.ball(2, 1.0), 1.0, 4)
    assert vals[0] < 0
    assert abs(vals[1]) < 1e-8 and abs(vals[2]) < 1e-8
    assert vals[3] > 0


def test_eigenpairs_profile():
    (pair,) = rs.eigenpairs(rs.Domain.ball(3, 1.0), 2.0)
    assert pair["n"] == 1 and pair["ell"] == 0
    assert len(pair["radius"]) == len(pair["value"])
    assert all(v > 0 for v in pair["value"])


def test_hadamard_and_stationarity():
    h = rs.hadamard_outer(1.0, 2.0, 1.0)
    assert h["hadamard"] > 0
    assert h["rel_discrepancy"] < 1e-4
    a = rs.locate_stationary_alpha(1.0, 2.0, 2.0, 5.0)
    assert abs(rs.stationarity_G(1.0, 2.0, a)) < 1e-12


def test_bessel_half_integer():
    x = 1.7
    assert rs.bessel_k(0.5, x) == pytest.approx(math.sqrt(math.pi / (2 * x)) * math.exp(-x), rel=1e-13)
    assert rs.bessel_i(0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sinh(x), rel=1e-13)


def test_verify_and_errors():
    recs = rs.verify("pinch", {"pinch_epsilons": [0.05]})
    assert [r["check_name"] for r in recs] == ["pinch"]
    assert recs[0]["passed"] is True
    assert "all" in rs.suite_names()
    with pytest.raises(rs.ConfigError):
        rs.verify("pinch", {"colour": 1})
    with pytest.raises(ValueError):
        rs.Domain.annulus(2, 2.0, 1.0)
