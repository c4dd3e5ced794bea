"""Transmon qubit dynamics: Rabi, cross-resonance, gate fidelity."""

from .cr import (CONTRAST_THRESHOLD, CalibrationError, CnotCalibration,
                 TwoQubitSystem, calibrate_cnot, cr_population, simulate_cr)
from .process import (GateFidelityReport, average_gate_fidelity, choi_matrix,
                      choi_min_eigenvalue, cnot_unitary, depolarizing_ptm,
                      not_unitary, pauli_basis, process_fidelity,
                      ptm_of_unitary, simulate_cnot_process,
                      simulate_gate_process, simulate_not_process,
                      trace_preservation_error)
from .rabi import (DriveSpec, QubitSpec, RabiFit, RabiTrace, fit_rabi,
                   rabi_envelope_time, simulate_rabi)

__all__ = [
    "CONTRAST_THRESHOLD", "CalibrationError", "CnotCalibration", "DriveSpec",
    "GateFidelityReport", "QubitSpec", "RabiFit", "RabiTrace", "TwoQubitSystem",
    "average_gate_fidelity", "calibrate_cnot", "choi_matrix",
    "choi_min_eigenvalue", "cnot_unitary", "cr_population", "depolarizing_ptm",
    "fit_rabi", "not_unitary", "pauli_basis", "process_fidelity",
    "ptm_of_unitary", "rabi_envelope_time", "simulate_cnot_process",
    "simulate_cr", "simulate_gate_process", "simulate_not_process",
    "simulate_rabi", "trace_preservation_error",
]
