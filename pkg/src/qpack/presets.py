"""The built-in "nju13" package configuration.

One canonical fixture ties the modules together: a seven-layer PCB with
four copper layers (35/35/87/35 um) and three RO4350B dielectrics
(0.508 mm, er = 3.66), a 16.2 x 16.2 mm chip window on L6/L7, thirteen
1 x 1 mm contacts at 50 mOhm, the longest buried CPW strip (28.9 mm,
0.5 x 0.035 mm cross-section), and the signal chain of one control line:
SMA connector stub, buried CPW, vertical via, contact.
"""

from __future__ import annotations

from .emnet.cpw import solve_gap_for_impedance
from .emnet.network import TransmissionLineSegment, ViaDiscontinuity
from .lattice import ChipLayout, nju13_layout
from .stackup import (DIELECTRIC, METAL, ChipWindow, Contact, CpwTrace, Layer,
                      LayerStack)

NJU13 = "nju13"

COPPER_RESISTIVITY = 9e-8  # ohm*m, measured on the longest strip
RO4350B_PERMITTIVITY = 3.66
RO4350B_THICKNESS = 0.508e-3  # m

STRIP_WIDTH = 0.5e-3  # m
STRIP_THICKNESS = 35e-6  # m
LONGEST_TRACE_LENGTH = 28.9e-3  # m

CONTACT_AREA = 1e-6  # m^2 (1 x 1 mm)
CONTACT_PROTRUSION = 0.1e-3  # m
CONTACT_RESISTANCE = 50e-3  # ohm

VIA_HEIGHT = 0.508e-3  # m
# calibration knobs, not published values: chosen so the in-band dip
# envelope respects the ~1.25 dB loss-peak scale
VIA_SERIES_INDUCTANCE = 0.2e-9  # H
VIA_SHUNT_CAPACITANCE = 0.1e-12  # F

BAND_MIN = 3e9  # Hz, qubit/resonator working band
BAND_MAX = 8e9


def nju13_stackup() -> LayerStack:
    metal_thickness = {"L1": 35e-6, "L3": 35e-6, "L5": 87e-6, "L7": 35e-6}
    layers = []
    for i in range(1, 8):
        name = f"L{i}"
        if i % 2 == 1:
            layers.append(Layer(name=name, kind=METAL,
                                thickness=metal_thickness[name],
                                resistivity=COPPER_RESISTIVITY))
        else:
            layers.append(Layer(name=name, kind=DIELECTRIC,
                                thickness=RO4350B_THICKNESS,
                                relative_permittivity=RO4350B_PERMITTIVITY))
    window = ChipWindow(width=16.2e-3, height=16.2e-3,
                        depth_layers=frozenset({"L6", "L7"}))
    return LayerStack(layers=tuple(layers), chip_window=window)


def nju13_trace() -> CpwTrace:
    """The longest buried CPW strip on L3, gap solved for 50 ohm."""
    gap = solve_gap_for_impedance(STRIP_WIDTH, RO4350B_PERMITTIVITY, 50.0)
    return CpwTrace(strip_width=STRIP_WIDTH, gap=gap,
                    length=LONGEST_TRACE_LENGTH,
                    metal_thickness=STRIP_THICKNESS, layer="L3",
                    resistivity=COPPER_RESISTIVITY)


def nju13_contact() -> Contact:
    return Contact(area=CONTACT_AREA, protrusion=CONTACT_PROTRUSION,
                   contact_resistance=CONTACT_RESISTANCE)


def nju13_cpw_attenuation() -> float:
    """Np/m from the strip's DC resistance per length: R'/(2*Z0)."""
    r_per_m = COPPER_RESISTIVITY / (STRIP_WIDTH * STRIP_THICKNESS)
    return r_per_m / (2.0 * 50.0)


def nju13_chain() -> list:
    """Signal path of one control line: connector, CPW, via, contact."""
    connector = TransmissionLineSegment(z0=50.0, effective_permittivity=2.1,
                                        length=8e-3)
    cpw = TransmissionLineSegment(z0=50.0,
                                  effective_permittivity=RO4350B_PERMITTIVITY,
                                  length=LONGEST_TRACE_LENGTH,
                                  attenuation=nju13_cpw_attenuation())
    via = ViaDiscontinuity(series_inductance=VIA_SERIES_INDUCTANCE,
                           shunt_capacitance=VIA_SHUNT_CAPACITANCE,
                           height=VIA_HEIGHT)
    return [connector, cpw, via, nju13_contact()]


def nju13_chip_layout() -> ChipLayout:
    return nju13_layout()
