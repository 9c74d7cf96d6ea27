import cmath
import math

import pytest

import dirac_shell as ds


def test_transform_is_exact_at_pi():
    t = ds.transform("3", "1", "pi")
    assert t["exact"] and t["admissible"]
    assert t["gamma"]["text"] == "-4"
    assert t["target"]["lambda_e"]["text"] == "-3/2"
    assert t["target"]["lambda_n"]["text"] == "1/2"


def test_coro1_is_an_involution():
    once = ds.coro1("3", "1")
    twice = ds.coro1(once["lambda_e"]["text"], once["lambda_n"]["text"])
    assert twice["lambda_e"]["text"] == "3"
    assert twice["lambda_n"]["text"] == "1"


def test_domain_errors_surface_as_value_errors():
    with pytest.raises(ValueError):
        ds.coro1("1", "1")
    with pytest.raises(ValueError):
        ds.transform("1/", "1", "pi")


def test_classify_excluded_curve():
    assert ds.classify("2", "0")["on_d4"]
    assert ds.classify("1/2", "0")["applicable"] == ["self_adjoint", "coro1"]


def test_rewriting_and_identities():
    assert ds.rewrite_word("CnCn") == (-0.25, "")
    assert ds.check_intertwining(3.0, 1.0, math.pi)["equal"]
    assert ds.check_factorization(1.0, 0.0)["deviation"] == 0.0


def test_gauge():
    assert abs(ds.gauge_rhs(0.0, 2.0) - 1j) < 1e-15
    assert abs(ds.boundary_coeff_check(0.7, 3.0)) < 1e-14
    lam = [3 * math.sin(2 * math.pi * k / 200) for k in range(201)]
    theta, info = ds.theta_from_lambda(lam, 4.0)
    assert len(theta) == 201
    assert info["reconstruction_error"] < 1e-12
    assert max(abs(cmath.exp(1j * t) - ds.gauge_rhs(l, 4.0)) for t, l in zip(theta, lam)) < 1e-12


def test_fast_suites_pass():
    for result in (ds.algebra_suite(), ds.symbolic_suite(7, 20), ds.param_suite(7, 20), ds.gauge_suite(7)):
        assert result["passed"], result["suite"]
