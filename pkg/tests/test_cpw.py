import math

import numpy as np
import pytest
import scipy.special
from hypothesis import given
from hypothesis import strategies as st

from qpack.emnet import (NoSolutionError, cpw_char_impedance, elliptic_k,
                         solve_gap_for_impedance)


def scipy_k(k: float) -> float:
    # scipy's ellipk takes the parameter m = k^2
    return float(scipy.special.ellipk(k * k))


def test_elliptic_k_analytic_points():
    assert elliptic_k(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    # K(0.5) against an independent implementation
    assert elliptic_k(0.5) == pytest.approx(1.685750354812596, rel=1e-12)
    assert elliptic_k(0.5) == pytest.approx(scipy_k(0.5), rel=1e-13)


def test_elliptic_k_symmetry_point():
    k = 1 / math.sqrt(2)
    kp = math.sqrt(1 - k * k)
    assert elliptic_k(kp) / elliptic_k(k) == pytest.approx(1.0, rel=1e-14)


def test_elliptic_k_domain():
    with pytest.raises(ValueError):
        elliptic_k(1.0)
    with pytest.raises(ValueError):
        elliptic_k(-0.1)


def test_elliptic_k_against_scipy_corpus():
    rng = np.random.default_rng(2024)
    for k in rng.uniform(0.0, 1.0 - 1e-12, size=1000):
        ours = elliptic_k(float(k))
        ref = scipy_k(float(k))
        assert abs(ours - ref) / ref < 1e-12


def test_homogeneous_vacuum_value():
    # k = 1/sqrt(2) makes K(k')/K(k) = 1, so Z0 = 30*pi in vacuum
    # k = w/(w+2s) = 1/sqrt(2)  =>  s = w*(sqrt(2)-1)/2
    w = 1e-3
    s = w * (math.sqrt(2) - 1) / 2
    assert cpw_char_impedance(w, s, 1.0) == pytest.approx(30 * math.pi, rel=1e-12)


def test_solve_gap_for_paper_design():
    gap = solve_gap_for_impedance(0.5e-3, 3.66, 50.0)
    assert 0.09e-3 <= gap <= 0.12e-3
    assert abs(cpw_char_impedance(0.5e-3, gap, 3.66) - 50.0) < 0.01


def test_solve_gap_roundtrip():
    z0 = cpw_char_impedance(0.5e-3, 0.2e-3, 3.66)
    gap = solve_gap_for_impedance(0.5e-3, 3.66, z0)
    assert gap == pytest.approx(0.2e-3, rel=1e-3)


def test_solve_gap_unreachable_target():
    with pytest.raises(NoSolutionError):
        solve_gap_for_impedance(0.5e-3, 3.66, 1.0)


def test_monotonicity_in_permittivity_and_gap():
    z_low = cpw_char_impedance(0.5e-3, 0.1e-3, 2.0)
    z_high = cpw_char_impedance(0.5e-3, 0.1e-3, 6.0)
    assert z_high < z_low
    z_narrow = cpw_char_impedance(0.5e-3, 0.05e-3, 3.66)
    z_wide = cpw_char_impedance(0.5e-3, 0.3e-3, 3.66)
    assert z_narrow < z_wide


@given(st.floats(min_value=1e-5, max_value=5e-3),
       st.floats(min_value=1e-6, max_value=2e-3),
       st.floats(min_value=0.1, max_value=50.0))
def test_scale_invariance(w, s, factor):
    z1 = cpw_char_impedance(w, s, 3.66)
    z2 = cpw_char_impedance(w * factor, s * factor, 3.66)
    assert z2 == pytest.approx(z1, rel=1e-12)
