import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracpow.errors import ConvergenceError, DomainError
from fracpow.specfun import SeriesControl, hyp2f1, lambert_w0, log_gamma

from oracles import lambert_w_mp


@pytest.mark.parametrize("x, expected", [
    (1.0, 0.0),
    (6.0, math.log(120.0)),
    (0.5, 0.5 * math.log(math.pi)),
])
def test_log_gamma_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-13, abs=1e-15)


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)


def test_log_gamma_recurrence():
    for x in np.linspace(0.1, 100, 500):
        assert abs(log_gamma(x + 1) - log_gamma(x) - math.log(x)) <= 1e-12


def test_lambert_w_values():
    assert lambert_w0(0.0) == 0.0
    assert lambert_w0(math.e) == pytest.approx(1.0, rel=1e-15)
    assert lambert_w0(1.0) == pytest.approx(0.5671432904097838, rel=1e-15)


def test_lambert_w_matches_mpmath():
    for x in np.geomspace(1e-6, 1e12, 50):
        assert lambert_w0(x) == pytest.approx(lambert_w_mp(x), rel=1e-14)


def test_lambert_w_branch_region():
    for x in (-0.36, -0.3, -0.1):
        w = lambert_w0(x)
        assert abs(w * math.exp(w) - x) <= 1e-14
        assert w > -1


def test_lambert_w_domain():
    with pytest.raises(DomainError):
        lambert_w0(-0.5)


def test_lambert_w_back_substitution_grid():
    for x in np.geomspace(1e-6, 1e12, 1000):
        w = lambert_w0(x)
        assert abs(w * math.exp(w) - x) <= 1e-14 * max(1.0, x)


@given(st.floats(min_value=1e-6, max_value=1e12))
def test_lambert_w_property(x):
    w = lambert_w0(x)
    assert abs(w * math.exp(w) - x) <= 1e-14 * max(1.0, x)


def test_hyp2f1_trivial_and_terminating():
    assert hyp2f1(2.3, -0.7, 1.9, 0.0) == 1.0
    assert hyp2f1(-1, 1, 0.5, 0.2) == pytest.approx(0.6, rel=1e-15)
    # terminating polynomial accepted far outside the series domain
    assert hyp2f1(-2, 3, 0.5, 5.0) == pytest.approx(1 - 6 * 5 / 0.5 + (-2 * -1 * 3 * 4) / (0.5 * 1.5 * 2) * 25)


def test_hyp2f1_binomial_value():
    assert hyp2f1(1, 0.5, 1, 0.3) == pytest.approx(0.7 ** -0.5, rel=1e-12)
    assert hyp2f1(1, 0.5, 1, 0.3) == pytest.approx(1.195228609, rel=1e-9)


@pytest.mark.parametrize("alpha", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
def test_hyp2f1_binomial_identity(alpha):
    for z in np.linspace(-0.9, 0.9, 37):
        assert hyp2f1(1, alpha, 1, z) == pytest.approx((1 - z) ** -alpha, rel=1e-10)


@pytest.mark.parametrize("a, b, c, z", [
    (9, 8.25, 17, -9.0),
    (9, 8.25, 17, 0.9),
    (3, 2.5, 5, 0.7),
    (5, 4.75, 9, -0.3),
    (30, 29.5, 61, -9.0),
    (0.3, 1.7, 2.2, -0.75),
])
def test_hyp2f1_against_mpmath(a, b, c, z):
    import mpmath
    with mpmath.workdps(30):
        ref = float(mpmath.hyp2f1(a, b, c, z))
    assert hyp2f1(a, b, c, z) == pytest.approx(ref, rel=1e-12)


@settings(max_examples=200)
@given(st.floats(-3, 3), st.floats(-3, 3), st.floats(0.1, 5), st.floats(-0.95, 0.95))
def test_hyp2f1_symmetry(a, b, c, z):
    assert hyp2f1(a, b, c, z) == hyp2f1(b, a, c, z)


def test_hyp2f1_domain_and_convergence():
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, -2.0, 0.1)
    with pytest.raises(ConvergenceError):
        hyp2f1(0.5, 0.5, 1.5, 0.4, SeriesControl(max_terms=3))


def test_series_control_validation():
    with pytest.raises(DomainError):
        SeriesControl(max_terms=0)
    with pytest.raises(DomainError):
        SeriesControl(rel_tol=1.0)
