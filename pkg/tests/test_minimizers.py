import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dirichlet_bounds.bounds import li_yau_sum, melas_bounds
from dirichlet_bounds.errors import InputError
from dirichlet_bounds.minimizers import (
    RadialProfile, cap_height, correction_coefficient, correction_excess_exact,
    correction_leading_coefficient, melas_s_k, phi_corrected, phi_li_yau, phi_melas,
    profile_energy, profile_mass,
)

V_ = st.floats(0.05, 50)
K_ = st.floats(1, 1e5)


def test_li_yau_example():
    p = phi_li_yau(4 * math.pi, 1)
    assert p.breakpoints[-1] == pytest.approx(1.0) and p.values[0] == pytest.approx(1 / math.pi)


@settings(max_examples=100, deadline=None)
@given(V_, K_)
def test_li_yau_mass_energy(V, k):
    p = phi_li_yau(V, k)
    assert profile_mass(p) == pytest.approx(k, rel=1e-12)
    assert profile_energy(p) == pytest.approx(li_yau_sum(V, k), rel=1e-12)


@settings(max_examples=100, deadline=None)
@given(V_, st.floats(1.0, 20.0), K_)
def test_melas_large_k(V, ratio, k):
    I = ratio * V * V / (2 * math.pi)
    p = phi_melas(V, I, k)
    assert p.tag == "large-k"
    assert profile_mass(p) == pytest.approx(k, rel=1e-10)
    assert profile_energy(p) >= melas_bounds(V, I, k)[1] * (1 - 1e-12)
    assert melas_s_k(V, I, k) == pytest.approx(melas_s_k(V, I, k, method="bisect"), rel=1e-10, abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(V_, st.floats(1.0, 20.0), st.floats(0.01, 0.99))
def test_melas_small_k(V, ratio, frac):
    I = ratio * V * V / (2 * math.pi)
    k = frac * V * V / (48 * math.pi * I)
    p = phi_melas(V, I, k)
    L = 2 * (2 * math.pi) ** -2 * math.sqrt(V * I)
    assert p.tag == "small-k"
    assert (p.values[0] - p.values[1]) / (p.breakpoints[1] - p.breakpoints[0]) == pytest.approx(L)
    assert p.values[0] <= cap_height(V) * (1 + 1e-12)
    assert profile_mass(p) == pytest.approx(k, rel=1e-10)
    uni, br, tag = melas_bounds(V, I, k)
    assert tag == "small-k" and profile_energy(p) >= br * (1 - 1e-12)


def test_melas_unit_square_k10():
    p = phi_melas(1.0, 1 / 6, 10)
    assert p.tag == "large-k"
    assert profile_mass(p) == pytest.approx(10, rel=1e-12)
    assert 2 * math.pi * p.moment_quad(1) == pytest.approx(10, rel=1e-12)
    assert np.all(np.diff(p.values) <= 0)


def test_melas_minimal_inertia_cone():
    V, I = 1.0, 1 / (2 * math.pi)
    p = phi_melas(V, I, 0.01)
    assert p.tag == "small-k" and len(p.breakpoints) == 2


def test_corrected_profile():
    V, eps, delta, k = 1.0, 1e-3, 0.5, 100
    p = phi_corrected(V, eps, delta, k)
    h = 1 / (4 * math.pi**2) - 1e-4
    assert p.values[0] == pytest.approx(h, rel=1e-14)
    assert p.breakpoints[-1] == pytest.approx(math.sqrt(100 / (math.pi * h)), rel=1e-14)
    assert profile_energy(p) == pytest.approx(k * k / (2 * math.pi * h), rel=1e-13)
    q = phi_corrected(V, 0.0, delta, k)
    np.testing.assert_allclose(q.breakpoints, phi_li_yau(V, k).breakpoints)
    with pytest.raises(InputError):
        phi_corrected(V, 1.0, 0.5, 1)


@settings(max_examples=100, deadline=None)
@given(V_, st.floats(0, 1e-3), st.floats(0.1, 1), K_)
def test_corrected_mass(V, eps, delta, k):
    if eps * k**-delta >= cap_height(V):
        return
    p = phi_corrected(V, eps, delta, k)
    assert profile_mass(p) == pytest.approx(k, rel=1e-10)


def test_quadrature_cross_check():
    for p in (phi_li_yau(2.0, 7), phi_melas(1.0, 0.3, 12), phi_melas(1.0, 0.3, 0.001), phi_corrected(1, 1e-3, 0.5, 9)):
        for n in (1, 3):
            assert p.moment(n) == pytest.approx(p.moment_quad(n), rel=1e-12)


def test_zero_profile():
    z = RadialProfile(np.array([0.0, 1.0]), np.array([0.0, 0.0]), 1.0)
    assert profile_mass(z) == 0 and profile_energy(z) == 0
    assert float(z(2.0)) == 0.0


def test_profile_validation():
    with pytest.raises(InputError):
        RadialProfile(np.array([0.0, 1.0]), np.array([0.1, 0.2]), 1.0)
    with pytest.raises(InputError):
        RadialProfile(np.array([0.0, 1.0]), np.array([2.0, 0.0]), 1.0)


def test_correction_fit():
    ks = np.logspace(3, 6, 13)
    f = correction_coefficient(1.0, 1e-4, 0.5, ks)
    assert f.exponent == pytest.approx(1.5, rel=1e-2)
    assert f.A_analytic == pytest.approx(8 * math.pi**3 * 1e-4)
    assert f.A_empirical == pytest.approx(f.A_analytic, rel=1e-2)
    np.testing.assert_allclose(f.excess, correction_excess_exact(1.0, 1e-4, 0.5, ks), rtol=1e-6)
    g = correction_coefficient(1.0, 2e-4, 0.5, ks)
    assert g.A_empirical / f.A_empirical == pytest.approx(2.0, rel=1e-2)
    z = correction_coefficient(1.0, 0.0, 0.5, ks)
    assert z.A_empirical == 0 and np.allclose(z.excess, 0, atol=1e-9 * ks**2)
    with pytest.raises(InputError):
        correction_coefficient(1.0, 1e-4, 0.5, [10, 20])


def test_leading_coefficient_from_expansion():
    V, eps, delta = 2.0, 1e-3, 0.75
    k = 1e12
    ratio = correction_excess_exact(V, eps, delta, k) / k ** (2 - delta)
    assert ratio == pytest.approx(correction_leading_coefficient(V, eps), rel=1e-6)
