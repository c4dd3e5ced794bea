import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpack.emnet import (DB_FLOOR, CoupledPair, FrequencyGrid,
                         TransmissionLineSegment, crosstalk_s21,
                         default_coupled_line)

BAND = FrequencyGrid.linear(3e9, 8e9, 201)


def test_uncoupled_pair_hits_floor():
    pair = CoupledPair(default_coupled_line(), 0.0, "buried_cpw")
    db = crosstalk_s21(pair, BAND)
    assert np.all(db == DB_FLOOR)


def test_buried_preset_band():
    db = crosstalk_s21(CoupledPair.preset("buried_cpw"), BAND)
    assert np.all(db <= -40.0)
    assert np.all(db >= -60.0)


def test_wire_bond_preset_band():
    db = crosstalk_s21(CoupledPair.preset("wire_bond"), BAND)
    assert np.all(db <= -25.0)
    assert np.all(db >= -40.0)


def test_wire_bond_pointwise_worse():
    buried = crosstalk_s21(CoupledPair.preset("buried_cpw"), BAND)
    wire = crosstalk_s21(CoupledPair.preset("wire_bond"), BAND)
    assert np.all(wire > buried)


def test_trace_never_positive():
    db = crosstalk_s21(CoupledPair.preset("wire_bond"), BAND)
    assert np.all(db <= 0.0)


@given(st.floats(min_value=1e-6, max_value=0.5),
       st.floats(min_value=1.01, max_value=100.0))
def test_ordering_for_any_coefficient_pair(kappa, ratio):
    line = default_coupled_line()
    weaker = CoupledPair(line, kappa, "buried_cpw")
    stronger_kappa = min(kappa * ratio, 0.99)
    stronger = CoupledPair(line, stronger_kappa, "wire_bond")
    weak_db = crosstalk_s21(weaker, BAND)
    strong_db = crosstalk_s21(stronger, BAND)
    assert np.all(strong_db >= weak_db)


def test_coefficient_bounds():
    with pytest.raises(ValueError):
        CoupledPair(default_coupled_line(), 1.0, "buried_cpw")
    with pytest.raises(ValueError):
        CoupledPair(default_coupled_line(), 0.1, "bond_wire")


def test_custom_line_changes_pattern():
    long_line = TransmissionLineSegment(z0=50.0, effective_permittivity=3.66,
                                        length=30e-3)
    db = crosstalk_s21(CoupledPair(long_line, 3e-3, "buried_cpw"), BAND)
    # a long coupled run sweeps through sin nulls, far below the preset band
    assert np.min(db) < -60.0
