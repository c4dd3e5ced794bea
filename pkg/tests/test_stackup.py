import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qpack import presets
from qpack.stackup import (Contact, CpwTrace, Layer, LayerStack,
                           dc_resistance, resistivity_from_measurement,
                           series_path_resistance, validate_stackup)


def longest_trace() -> CpwTrace:
    return CpwTrace(strip_width=0.5e-3, gap=0.11e-3, length=28.9e-3,
                    metal_thickness=35e-6, resistivity=9e-8)


def test_dc_resistance_matches_measurement():
    # 28.9 mm strip, 0.5 x 0.035 mm cross-section, rho = 9e-8
    r = dc_resistance(longest_trace())
    assert r == pytest.approx(0.1486, abs=2e-4)
    assert abs(r - 0.15) / 0.15 < 0.01


def test_dc_resistance_zero_length():
    trace = dataclasses.replace(longest_trace(), length=0.0)
    assert dc_resistance(trace) == 0.0


def test_dc_resistance_width_scaling():
    t1 = longest_trace()
    t2 = dataclasses.replace(t1, strip_width=2 * t1.strip_width)
    assert dc_resistance(t2) == pytest.approx(dc_resistance(t1) / 2, rel=1e-12)


def test_nonpositive_geometry_rejected():
    with pytest.raises(ValueError):
        CpwTrace(strip_width=0.0, gap=1e-4, length=1e-2,
                 metal_thickness=35e-6, resistivity=9e-8)
    with pytest.raises(ValueError):
        CpwTrace(strip_width=1e-4, gap=1e-4, length=-1e-2,
                 metal_thickness=35e-6, resistivity=9e-8)


def test_resistivity_from_measurement():
    rho = resistivity_from_measurement(0.15, longest_trace())
    assert rho == pytest.approx(9.08e-8, rel=1e-2)
    assert round(rho, 8) == pytest.approx(9e-8)


def test_resistivity_zero_resistance():
    assert resistivity_from_measurement(0.0, longest_trace()) == 0.0


def test_resistivity_zero_length_rejected():
    trace = dataclasses.replace(longest_trace(), length=0.0)
    with pytest.raises(ValueError):
        resistivity_from_measurement(0.15, trace)


@given(st.floats(min_value=1e-4, max_value=1.0),
       st.floats(min_value=1e-5, max_value=1e-2),
       st.floats(min_value=1e-6, max_value=1e-3),
       st.floats(min_value=1e-9, max_value=1e-6))
def test_resistivity_roundtrip(length, width, thickness, rho):
    trace = CpwTrace(strip_width=width, gap=1e-4, length=length,
                     metal_thickness=thickness, resistivity=rho)
    recovered = resistivity_from_measurement(dc_resistance(trace), trace)
    assert abs(recovered - rho) / rho < 1e-12


@given(st.floats(min_value=1e-4, max_value=1.0),
       st.floats(min_value=1.1, max_value=10.0))
def test_dc_resistance_linear_in_length(length, factor):
    base = dataclasses.replace(longest_trace(), length=length)
    longer = dataclasses.replace(base, length=length * factor)
    assert dc_resistance(longer) == pytest.approx(
        factor * dc_resistance(base), rel=1e-12)


def test_series_path_resistance():
    contact = Contact(area=1e-6, protrusion=1e-4, contact_resistance=0.05)
    total = series_path_resistance(longest_trace(), contact)
    assert total == pytest.approx(0.1486 + 0.05, abs=2e-4)
    zero_len = dataclasses.replace(longest_trace(), length=0.0)
    assert series_path_resistance(zero_len, contact) == pytest.approx(0.05)
    two = series_path_resistance(longest_trace(), contact, contact)
    one = series_path_resistance(longest_trace(), contact)
    assert two - one == pytest.approx(0.05)


def test_paper_preset_is_valid():
    report = validate_stackup(presets.nju13_stackup())
    assert report.ok
    stack = presets.nju13_stackup()
    assert len(stack.layers) == 7
    assert len(stack.metals()) == 4
    assert len(stack.dielectrics()) == 3
    assert [round(l.thickness * 1e6) for l in stack.metals()] == [35, 35, 87, 35]


def test_empty_stack():
    report = validate_stackup(LayerStack(layers=()))
    assert "empty stack" in report.violations
    assert not report.ok


def test_adjacent_dielectrics_flagged():
    stack = presets.nju13_stackup()
    layers = list(stack.layers)
    layers[2] = Layer(name="L3", kind="dielectric", thickness=0.508e-3,
                      relative_permittivity=3.66)
    report = validate_stackup(LayerStack(layers=tuple(layers),
                                         chip_window=stack.chip_window))
    assert any("non-alternating" in v for v in report.violations)


def _mutations(stack):
    layers = list(stack.layers)
    yield LayerStack(layers=tuple(layers[:1] + layers[:1] + layers[1:]),
                     chip_window=stack.chip_window)  # metal next to metal
    bad_thickness = dataclasses.replace(layers[0], thickness=0.0)
    yield LayerStack(layers=tuple([bad_thickness] + layers[1:]),
                     chip_window=stack.chip_window)
    bad_metal = dataclasses.replace(layers[0], resistivity=None)
    yield LayerStack(layers=tuple([bad_metal] + layers[1:]),
                     chip_window=stack.chip_window)
    bad_diel = dataclasses.replace(layers[1], relative_permittivity=0.5)
    yield LayerStack(layers=tuple([layers[0], bad_diel] + layers[2:]),
                     chip_window=stack.chip_window)
    yield LayerStack(layers=stack.layers, chip_window=None)
    bad_window = dataclasses.replace(stack.chip_window, width=-1.0)
    yield LayerStack(layers=stack.layers, chip_window=bad_window)
    bad_depth = dataclasses.replace(stack.chip_window,
                                    depth_layers=frozenset({"L9"}))
    yield LayerStack(layers=stack.layers, chip_window=bad_depth)


def test_every_breaking_mutation_rejected():
    stack = presets.nju13_stackup()
    for mutated in _mutations(stack):
        assert not validate_stackup(mutated).ok
