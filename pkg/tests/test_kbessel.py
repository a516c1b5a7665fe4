import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import bessel_i_direct, bessel_j_direct
from kbint.errors import ConvergenceError, DomainError
from kbint.kbessel import (KBesselParams, SeriesControl, i_kbessel, j_kbessel, reduced_series,
                           w_kbessel, w_kbessel_series, w_kbessel_terms)
from kbint.special_core import gamma_k


def test_params_validation():
    with pytest.raises(DomainError):
        KBesselParams(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        KBesselParams(2.0, -2.0, 1.0)
    with pytest.raises(DomainError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(DomainError):
        SeriesControl(max_terms=0)


def test_value_at_zero():
    assert w_kbessel(KBesselParams(1.5, 0.3, 2.0), 0.0) == 0.0
    np.testing.assert_allclose(w_kbessel(KBesselParams(2.0, 0.0, 1.0), 0.0), 1 / gamma_k(2.0, 2.0))
    assert j_kbessel(1, 1, 0) == 0.0
    assert i_kbessel(1, 0, 0) == 1.0
    with pytest.raises(DomainError):
        w_kbessel(KBesselParams(1.0, -0.5, 1.0), 0.0)


def test_negative_argument_rejected():
    with pytest.raises(DomainError):
        w_kbessel(KBesselParams(1.0, 0.0, 1.0), -1.0)
    with pytest.raises(DomainError):
        w_kbessel(KBesselParams(1.0, 0.0, 1.0), np.array([0.5, -1.0]))


def test_classical_values():
    # J0(1), I0(1), I1(1) from direct mpmath summation at 40 digits
    np.testing.assert_allclose(w_kbessel(KBesselParams(1, 0, 1), 1.0), 0.7651976865579666, rtol=1e-15)
    np.testing.assert_allclose(w_kbessel(KBesselParams(1, 0, -1), 1.0), 1.2660658777520084, rtol=1e-15)
    np.testing.assert_allclose(i_kbessel(1, 1, 1.0), 0.5651591039924851, rtol=1e-15)


def test_first_zero_of_j0():
    # root of the direct series found by mpmath.findroot
    assert abs(j_kbessel(1, 0, 2.404825557695773)) < 1e-10


def test_k2_against_twenty_term_sum():
    with mpmath.workdps(30):
        g2 = lambda z: mpmath.mpf(2) ** (z / 2 - 1) * mpmath.gamma(z / 2)
        ref = sum((-1) ** n * mpmath.mpf(0.5) ** (2 * n) / (g2(2 * n + 2) * mpmath.factorial(n))
                  for n in range(20))
    assert float(ref) == pytest.approx(0.8788524182710931, rel=1e-15)
    np.testing.assert_allclose(j_kbessel(2, 0, 1.0), float(ref), rtol=1e-14)


@pytest.mark.parametrize("v", [0.0, 0.5, 1.0, 2.5])
@pytest.mark.parametrize("z", [0.1, 1.0, 3.7, 6.0, 10.0])
def test_k1_c1_is_classical_bessel(v, z):
    np.testing.assert_allclose(w_kbessel(KBesselParams(1.0, v, 1.0), z), bessel_j_direct(v, z), rtol=1e-10)


@pytest.mark.parametrize("v", [0.0, 1.5])
@pytest.mark.parametrize("z", [0.2, 4.0, 9.0])
def test_k1_cminus1_is_modified_bessel(v, z):
    np.testing.assert_allclose(i_kbessel(1.0, v, z), bessel_i_direct(v, z), rtol=1e-12)


def test_delegation_is_exact():
    for k, v, z in [(1.5, 0.4, 2.2), (0.5, 0.0, 1.1)]:
        assert j_kbessel(k, v, z) == w_kbessel(KBesselParams(k, v, 1.0), z)
        assert i_kbessel(k, v, z) == w_kbessel(KBesselParams(k, v, -1.0), z)


@given(k=st.floats(0.2, 4.0), nu=st.floats(0.0, 4.0), z=st.floats(0.01, 6.0))
@settings(max_examples=60, deadline=None)
def test_modified_dominates_classical(k, nu, z):
    assert i_kbessel(k, nu * k, z) >= j_kbessel(k, nu * k, z)
    assert i_kbessel(k, nu * k, z) > 0


def test_c_zero_is_single_term():
    p = KBesselParams(2.0, 1.0, 0.0)
    res = w_kbessel_series(p, 1.3)
    assert res.terms == 1
    np.testing.assert_allclose(res.value, (1.3 / 2) ** 0.5 / gamma_k(3.0, 2.0), rtol=1e-14)


def test_array_evaluation_matches_scalar():
    p = KBesselParams(0.7, 0.35, 1.3)
    z = np.linspace(0.0, 5.0, 41)
    vec = w_kbessel(p, z)
    np.testing.assert_allclose(vec, [w_kbessel(p, float(x)) for x in z], rtol=1e-15, atol=0)


@pytest.mark.parametrize("k,v,c,z", [(1.0, 0.0, 1.0, 3.0), (2.0, 1.0, -1.5, 2.0),
                                     (0.5, -0.25, 0.8, 1.7), (3.0, 4.5, 2.0, 4.0)])
def test_recurrence_matches_log_space_terms(k, v, c, z):
    p = KBesselParams(k, v, c)
    rec = w_kbessel_terms(p, z, 40, "recurrence")
    direct = w_kbessel_terms(p, z, 40, "log")
    np.testing.assert_allclose(rec, direct, rtol=1e-12, atol=0)


@pytest.mark.parametrize("k,v,c,z", [(1.0, 0.0, 1.0, 3.0), (2.0, 0.5, 2.0, 2.5), (0.5, 1.0, 0.3, 1.0)])
def test_alternating_truncation_bound(k, v, c, z):
    p = KBesselParams(k, v, c)
    terms = w_kbessel_terms(p, z, 60)
    partial = np.cumsum(terms)
    for n in range(3, 40):
        if abs(terms[n]) <= abs(terms[n - 1]):
            bound = abs(terms[n])
            roundoff = 8 * np.finfo(float).eps * abs(partial[n + 4])
            assert abs(partial[n - 1] - partial[n + 4]) <= bound + roundoff


@given(
    k=st.floats(0.3, 3.0), nu=st.floats(-0.9, 3.0), c=st.floats(-1.5, 1.5),
    z=st.floats(0.05, 3.0), s=st.sampled_from([0.5, 2.0, 3.0]),
)
@settings(max_examples=80, deadline=None)
def test_scaling_symmetry(k, nu, c, z, s):
    p, scaled = KBesselParams(k, nu * k, c), KBesselParams(k, nu * k, c / s**2)
    lhs = w_kbessel(scaled, s * z)
    rhs = s ** nu * w_kbessel(p, z)
    # measure against the largest series term so near-zeros of W do not blow up the relative error
    scale = np.max(np.abs(w_kbessel_terms(p, z, 60))) * s ** nu
    assert abs(lhs - rhs) <= 1e-10 * scale


def test_factorized_form():
    # equal c z^2 / (4k) gives equal reduced series; the leading power carries the rest
    k, v = 1.5, 0.9
    z1, c1 = 0.8, 2.0
    z2 = 1.6
    c2 = c1 * z1**2 / z2**2
    w1 = w_kbessel(KBesselParams(k, v, c1), z1)
    w2 = w_kbessel(KBesselParams(k, v, c2), z2)
    nu = v / k
    g1 = w1 / ((z1 / 2) ** nu * k ** -nu)
    g2 = w2 / ((z2 / 2) ** nu * k ** -nu)
    np.testing.assert_allclose(g1, g2, rtol=1e-14)
    s, _, _ = reduced_series(nu, np.array([-c1 * z1**2 / (4 * k)]))
    np.testing.assert_allclose(g1, s[0], rtol=1e-14)


def test_nonconvergence_raises():
    with pytest.raises(ConvergenceError):
        w_kbessel(KBesselParams(1.0, 0.0, 1.0), 30.0, SeriesControl(max_terms=5))


def test_growing_terms_do_not_stop_early():
    # c < 0 at large z: terms grow for a while before decaying
    z = 20.0
    np.testing.assert_allclose(i_kbessel(1.0, 0.0, z), bessel_i_direct(0, z), rtol=1e-13)
