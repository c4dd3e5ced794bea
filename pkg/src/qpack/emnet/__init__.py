"""Quasi-static/analytic microwave engine for the PCB package."""

from .cavity import CavityBox, CavityMode, cavity_modes, mode_frequency
from .cpw import (GAP_MAX, GAP_MIN, NoSolutionError, cpw_char_impedance,
                  solve_gap_for_impedance)
from .crosstalk import (BURIED_CPW, COUPLING_PRESETS, WIRE_BOND, CoupledPair,
                        crosstalk_s21, default_coupled_line)
from .elliptic import elliptic_k, elliptic_k_ratio
from .network import (C_LIGHT, DB_FLOOR, FrequencyGrid, GridMismatchError,
                      TransmissionLineSegment, TwoPortNetwork,
                      ViaDiscontinuity, abcd_to_s, as_network, cascade,
                      identity_network, line_network, s_to_abcd,
                      series_resistor_network, sweep_s21, to_db, via_network)

__all__ = [
    "BURIED_CPW", "C_LIGHT", "COUPLING_PRESETS", "CavityBox", "CavityMode",
    "CoupledPair", "DB_FLOOR", "FrequencyGrid", "GAP_MAX", "GAP_MIN",
    "GridMismatchError", "NoSolutionError", "TransmissionLineSegment",
    "TwoPortNetwork", "ViaDiscontinuity", "WIRE_BOND", "abcd_to_s",
    "as_network", "cascade", "cavity_modes", "cpw_char_impedance",
    "crosstalk_s21", "default_coupled_line", "elliptic_k", "elliptic_k_ratio",
    "identity_network", "line_network", "mode_frequency", "s_to_abcd",
    "series_resistor_network", "solve_gap_for_impedance", "sweep_s21",
    "to_db", "via_network",
]
