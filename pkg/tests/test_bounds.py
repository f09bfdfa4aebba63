import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polygons
from dirichlet_bounds.bounds import (
    BoundReport, functional_lower_chain, general_corrected_bound, heaviside, li_yau_individual,
    li_yau_sum, melas_bounds, polygon_corrected_bound, polygon_reports, reports_to_csv, weyl_two_term,
)
from dirichlet_bounds.constants import C3, C_TILDE_2, epsilon_k
from dirichlet_bounds.errors import InputError
from dirichlet_bounds.geometry import Polygon, moment_of_inertia
from dirichlet_bounds.spectra import rectangle_spectrum

UNIT = Polygon.rectangle(1, 1)
TWO_PI = 2 * math.pi


def test_heaviside_zero():
    assert heaviside(0.0) == 0.0 and heaviside(1e-300) == 1.0 and heaviside(-1) == 0.0


def test_li_yau_values():
    assert li_yau_sum(1, 1) == pytest.approx(TWO_PI)
    assert li_yau_sum(TWO_PI, 1) == pytest.approx(1.0)
    assert li_yau_sum(1, 100) == pytest.approx(TWO_PI * 1e4)
    assert li_yau_sum(1, 1) <= 2 * math.pi**2


def test_li_yau_individual():
    lam = rectangle_spectrum(1, 1, 5).eigenvalues
    assert li_yau_individual(1, 5) == pytest.approx(10 * math.pi)
    assert lam[4] == pytest.approx(10 * math.pi**2)
    for k in range(1, 6):
        assert li_yau_individual(1, k) <= lam[k - 1]
    assert li_yau_individual(4, 3) == pytest.approx(li_yau_individual(1, 3) / 4)


def test_melas_unit_square():
    uni, br, tag = melas_bounds(1.0, 1 / 6, 1)
    assert tag == "large-k"
    assert uni == pytest.approx(TWO_PI + 0.1875, rel=1e-15) and br == uni


def test_melas_small_k_branch():
    V, I = 1.0, 1 / TWO_PI
    k = 0.02  # below V^2 / (48 pi I) = 1/24
    uni, br, tag = melas_bounds(V, I, k)
    L = 2 * (2 * math.pi) ** -2 * math.sqrt(V * I)
    coef = (1 - 10 * 2 ** (-5 / 3) * 3 ** (-4 / 3)) * 0.3 * (2 / math.pi) ** (2 / 3)
    assert tag == "small-k"
    assert br == pytest.approx(coef * L ** (-2 / 3) * k ** (5 / 3), rel=1e-14)


def test_melas_thin_rectangle_has_no_small_integer_k():
    P = Polygon.rectangle(0.01, 100)
    I = moment_of_inertia(P)[0]
    assert P.area**2 / (48 * math.pi * I) < 1  # every integer k is on the large-k branch
    assert melas_bounds(P.area, I, 1)[2] == "large-k"


def test_melas_errors():
    with pytest.raises(InputError):
        melas_bounds(1, 0, 1)
    with pytest.warns(UserWarning):
        melas_bounds(1, 0.1, 1)


def test_polygon_bound_k12_k13():
    I = 1 / 6
    for a in (0, 0.25, 0.5, 1):
        b = polygon_corrected_bound(UNIT, 12, a)
        assert b.active == ()
        assert b.value == pytest.approx(li_yau_sum(1, 12) + (1 - a) * 12 / (32 * I), rel=1e-15)
    b = polygon_corrected_bound(UNIT, 13, 1.0)
    assert b.active == (0, 1, 2, 3)
    extra = 4 * C3 * 13 ** (1.5 - epsilon_k(13)) * 4
    assert b.value - li_yau_sum(1, 13) == pytest.approx(extra, rel=1e-9)


def test_polygon_alpha_zero_is_melas():
    for k in (1, 13, 500):
        assert polygon_corrected_bound(UNIT, k, 0.0).value == melas_bounds(1, moment_of_inertia(UNIT)[0], k)[0]


def test_alpha_out_of_range():
    with pytest.raises(InputError):
        polygon_corrected_bound(UNIT, 3, 1.5)


def test_general_bound():
    v = general_corrected_bound(1.0, 1 / TWO_PI, [(1.0, 50.0)], 51, 1.0)
    assert v.active == (0,)
    assert v.value == pytest.approx(li_yau_sum(1, 51) + C3 * 51 ** (1.5 - epsilon_k(51)), rel=1e-14)
    assert general_corrected_bound(1.0, 1 / TWO_PI, [(1.0, 50.0)], 50, 1.0).active == ()
    huge = general_corrected_bound(1.0, 1 / TWO_PI, [(3.5, 1e12), (1.0, math.inf)], 100, 0.5)
    assert huge.active == () and huge.value == pytest.approx(li_yau_sum(1, 100) + 0.5 * 100 * TWO_PI / 32)
    assert general_corrected_bound(1.0, 0.2, [(1.0, 0.0)], 7, 0.0).value == melas_bounds(1.0, 0.2, 7)[0]


def test_weyl():
    assert C_TILDE_2 == pytest.approx(8 * math.sqrt(2) / 9)
    assert weyl_two_term(1, 0, 10) == li_yau_sum(1, 10)
    S = rectangle_spectrum(1, 1, 10**4).cumulative()
    gap = lambda k: abs(S[k - 1] - weyl_two_term(1, 4, k)) / S[k - 1]  # noqa: E731
    assert gap(10**4) < gap(10**3)


def test_functional_chain():
    V, lam = 2.5, 7.0
    assert functional_lower_chain(V, V / (4 * math.pi**2), lam) == pytest.approx(lam**2 * V / TWO_PI)
    assert functional_lower_chain(V, V / (8 * math.pi**2), lam) == pytest.approx(2 * lam**2 * V / TWO_PI)
    assert functional_lower_chain(1, 1 / (8 * math.pi**2), TWO_PI) == pytest.approx(4 * math.pi)
    with pytest.raises(InputError):
        functional_lower_chain(1, 0, 1)


@settings(max_examples=40, deadline=None)
@given(polygons(), st.floats(0, 1))
def test_ordering_and_monotonicity(P, a):
    I = moment_of_inertia(P)[0]
    prev = -1.0
    for k in range(1, 200, 7):
        ly = li_yau_sum(P.area, k)
        mu = melas_bounds(P.area, I, k)[0]
        c = polygon_corrected_bound(P, k, a, I=I).value
        assert ly < mu
        assert c >= ly
        assert c >= prev
        prev = c


@settings(max_examples=40, deadline=None)
@given(polygons(), st.integers(1, 3000))
def test_affine_in_alpha(P, k):
    I = moment_of_inertia(P)[0]
    b0 = polygon_corrected_bound(P, k, 0.0, I=I)
    b1 = polygon_corrected_bound(P, k, 1.0, I=I)
    total = sum(P.side_lengths[j] for j in b1.active)
    slope = (4 * C3 * k ** (1.5 - epsilon_k(k)) * P.area**-1.5 * total if total else 0.0) - P.area * k / (32 * I)
    assert b1.value - b0.value == pytest.approx(slope, rel=1e-9, abs=1e-9 * b0.value)
    mid = polygon_corrected_bound(P, k, 0.3, I=I).value
    assert mid == pytest.approx(0.7 * b0.value + 0.3 * b1.value, rel=1e-13)


def test_activation_monotone():
    P = Polygon([[0, 0], [3, 0], [2, 1], [0, 2]])
    seen = set()
    for k in range(1, 400):
        act = set(polygon_corrected_bound(P, k, 1.0).active)
        assert seen <= act
        seen = act


def test_reports_and_csv():
    S = rectangle_spectrum(1, 1, 20).cumulative()
    reps = polygon_reports(UNIT, 20, 0.5, S)
    assert all(isinstance(r, BoundReport) and r.satisfied() for r in reps)
    assert set(reps[0].corrected) == {0.0, 0.5, 1.0}
    text = reports_to_csv(reps)
    lines = text.strip().splitlines()
    assert lines[0] == "k,trueSum,liYau,melasUniform,melasBranch,corrected,weyl2,activeSides"
    assert len(lines) == 21 and lines[13].endswith("0 1 2 3")
