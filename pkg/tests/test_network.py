import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpack.emnet import (C_LIGHT, FrequencyGrid, GridMismatchError,
                         TransmissionLineSegment, TwoPortNetwork,
                         ViaDiscontinuity, abcd_to_s, cascade,
                         identity_network, line_network, s_to_abcd,
                         series_resistor_network, sweep_s21, via_network)

BAND = FrequencyGrid.linear(3e9, 8e9, 101)


def test_grid_validation():
    with pytest.raises(ValueError):
        FrequencyGrid(np.array([1e9, 1e9, 2e9]))
    with pytest.raises(ValueError):
        FrequencyGrid(np.array([0.0, 1e9]))
    with pytest.raises(ValueError):
        FrequencyGrid(np.array([]))


def test_matched_lossless_line():
    seg = TransmissionLineSegment(z0=50.0, effective_permittivity=3.66,
                                  length=0.02)
    net = line_network(seg, BAND, 50.0)
    assert np.max(np.abs(net.s11)) < 1e-12
    assert np.abs(np.abs(net.s21) - 1.0).max() < 1e-12


def test_zero_length_line_is_identity():
    seg = TransmissionLineSegment(z0=72.0, effective_permittivity=2.0,
                                  length=0.0)
    net = line_network(seg, BAND, 50.0)
    ident = identity_network(BAND, 50.0)
    assert np.max(np.abs(net.s - ident.s)) < 1e-12


def test_quarter_wave_transformer():
    # z0 = 70.7 ohm quarter-wave section between 50 ohm references acts as
    # the classic impedance transformer: Zin = z0^2 / 50 at f0
    f0 = 5e9
    zline = 70.7
    length = C_LIGHT / (4 * f0)
    seg = TransmissionLineSegment(z0=zline, effective_permittivity=1.0,
                                  length=length)
    grid = FrequencyGrid(np.array([f0]))
    net = line_network(seg, grid, 50.0)
    zin = zline**2 / 50.0
    expected = abs((zin - 50.0) / (zin + 50.0))
    assert abs(net.s11[0]) == pytest.approx(expected, rel=1e-10)


def test_via_identity_when_zero():
    net = via_network(ViaDiscontinuity(0.0, 0.0), BAND, 50.0)
    ident = identity_network(BAND, 50.0)
    assert np.max(np.abs(net.s - ident.s)) < 1e-12


def test_via_dip_monotone_in_inductance():
    f = FrequencyGrid(np.array([6e9]))
    dips = []
    for l_h in [0.1e-9, 0.2e-9, 0.5e-9, 1.0e-9]:
        net = via_network(ViaDiscontinuity(l_h, 0.1e-12), f, 50.0)
        dips.append(abs(net.s21[0]))
    assert all(a > b for a, b in zip(dips, dips[1:]))


def test_default_via_envelope():
    net = via_network(ViaDiscontinuity(0.2e-9, 0.1e-12), BAND, 50.0)
    db = 20 * np.log10(np.abs(net.s21))
    assert np.min(db) >= -1.5


def test_cascade_identity():
    seg = TransmissionLineSegment(z0=60.0, effective_permittivity=2.5,
                                  length=0.013)
    net = line_network(seg, BAND, 50.0)
    combined = cascade([identity_network(BAND, 50.0), net])
    assert np.max(np.abs(combined.s - net.s)) < 1e-10


def test_cascade_associative():
    a = line_network(TransmissionLineSegment(60.0, 2.0, 0.01), BAND, 50.0)
    b = via_network(ViaDiscontinuity(0.3e-9, 0.2e-12), BAND, 50.0)
    c = series_resistor_network(0.5, BAND, 50.0)
    left = cascade([cascade([a, b]), c])
    right = cascade([a, cascade([b, c])])
    assert np.max(np.abs(left.s - right.s)) < 1e-9


def test_cascade_of_line_segments_composes():
    seg10 = TransmissionLineSegment(50.0, 3.66, 0.010)
    seg20 = TransmissionLineSegment(50.0, 3.66, 0.020)
    two = cascade([line_network(seg10, BAND, 50.0),
                   line_network(seg10, BAND, 50.0)])
    one = line_network(seg20, BAND, 50.0)
    assert np.max(np.abs(two.s - one.s)) < 1e-10


def test_cascade_grid_mismatch():
    other = FrequencyGrid.linear(3e9, 8e9, 51)
    seg = TransmissionLineSegment(50.0, 3.66, 0.01)
    with pytest.raises(GridMismatchError):
        cascade([line_network(seg, BAND, 50.0), line_network(seg, other, 50.0)])


def test_sweep_s21_matched_line():
    seg = TransmissionLineSegment(50.0, 3.66, 0.0289)
    s21 = sweep_s21([seg], BAND)
    assert np.abs(np.abs(s21) - 1.0).max() < 1e-12


def test_second_via_deepens_ripple():
    via = ViaDiscontinuity(0.2e-9, 0.1e-12)
    line = TransmissionLineSegment(50.0, 3.66, 0.0289)
    one = sweep_s21([line, via], BAND)
    two = sweep_s21([line, via, TransmissionLineSegment(50.0, 3.66, 0.01), via],
                    BAND)
    assert np.min(np.abs(two)) < np.min(np.abs(one))


def _random_passive_s(rng) -> np.ndarray:
    while True:
        s = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        norm = np.linalg.svd(s, compute_uv=False).max()
        s *= rng.uniform(0.3, 0.95) / norm
        if abs(s[1, 0]) > 0.05:
            return s


def test_abcd_s_roundtrip_random_passive():
    rng = np.random.default_rng(11)
    for _ in range(200):
        s = _random_passive_s(rng)
        back = abcd_to_s(s_to_abcd(s, 50.0), 50.0)
        assert np.max(np.abs(back - s)) / np.max(np.abs(s)) < 1e-10


@settings(max_examples=100)
@given(st.floats(min_value=20.0, max_value=150.0),
       st.floats(min_value=1.0, max_value=12.0),
       st.floats(min_value=0.0, max_value=0.1),
       st.floats(min_value=0.0, max_value=20.0))
def test_line_networks_reciprocal_and_passive(z0, er, length, alpha):
    seg = TransmissionLineSegment(z0=z0, effective_permittivity=er,
                                  length=length, attenuation=alpha)
    net = line_network(seg, BAND, 50.0)
    assert net.reciprocity_error() < 1e-9
    assert net.passivity_margin() <= 1.0 + 1e-9


@settings(max_examples=100)
@given(st.floats(min_value=0.0, max_value=2e-9),
       st.floats(min_value=0.0, max_value=1e-12))
def test_via_networks_reciprocal_and_passive(l_h, c_f):
    net = via_network(ViaDiscontinuity(l_h, c_f), BAND, 50.0)
    assert net.reciprocity_error() < 1e-9
    assert net.passivity_margin() <= 1.0 + 1e-9
