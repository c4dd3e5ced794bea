"""Two-level Rabi dynamics under a resonant drive, with T1/T2 decoherence.

The qubit is truncated to two levels; the drive enters in the rotating
frame as H = pi*rabi_rate*sigma_x (+ a detuning term when the drive is off
resonance).  Relaxation and pure dephasing are the usual Lindblad
dissipators with rates 1/t1 and 1/t2 - 1/(2*t1).  Populations come from
fixed-step RK4 integration of the density matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from ..optimize import FitError, levenberg_marquardt
from .integrate import rk4_span

RECTANGULAR = "rectangular"
SHAPED = "shaped"

_SX = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
_SZ = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_SM = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)  # |0><1|

POPULATION_EPS = 1e-9

# RK4 step: spec bound min(1/(50*rabi), t2/50) tightened by this factor
_STEP_SAFETY = 6


@dataclass(frozen=True)
class QubitSpec:
    f01: float  # Hz
    t1: float  # s
    t2: float  # s

    def __post_init__(self):
        if self.f01 <= 0:
            raise ValueError("qubit frequency must be positive")
        if self.t1 <= 0 or not 0.0 < self.t2 <= 2.0 * self.t1:
            raise ValueError("coherence times must satisfy t1 > 0, 0 < t2 <= 2*t1")


@dataclass(frozen=True)
class DriveSpec:
    rabi_rate: float  # Hz, population oscillation frequency
    drive_frequency: float  # Hz
    duration: float  # s, drive is off afterwards
    envelope: str = RECTANGULAR
    rise: float = 0.0  # s, shaped envelope ramp time

    def __post_init__(self):
        if self.rabi_rate < 0 or self.duration < 0 or self.rise < 0:
            raise ValueError("rabi rate, duration, and rise must be non-negative")
        if self.envelope not in (RECTANGULAR, SHAPED):
            raise ValueError(f"unknown envelope {self.envelope!r}")


@dataclass(frozen=True)
class RabiTrace:
    times: np.ndarray  # s
    excited_population: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        p = np.asarray(self.excited_population, dtype=float)
        if t.shape != p.shape or t.ndim != 1:
            raise ValueError("times and populations must be equal-length 1D arrays")
        if np.any(p < -POPULATION_EPS) or np.any(p > 1.0 + POPULATION_EPS):
            raise ValueError("populations must lie in [0, 1] within 1e-9")
        t.setflags(write=False)
        p.setflags(write=False)
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "excited_population", p)


@dataclass(frozen=True)
class RabiFit:
    omega: float  # Hz
    tau: float  # s
    amplitude: float
    offset: float
    phase: float  # rad
    iterations: int
    converged: bool


def rabi_envelope_time(t1: float, t2: float) -> float:
    """Decay constant of the Rabi oscillation envelope: 2/(1/t1 + 1/t2)."""
    return 2.0 / (1.0 / t1 + 1.0 / t2)


def _drive_amplitude(drive: DriveSpec, t: float) -> float:
    if t < 0 or t > drive.duration:
        return 0.0
    if drive.envelope == RECTANGULAR or drive.rise == 0.0:
        return drive.rabi_rate
    rise = min(drive.rise, drive.duration / 2.0)
    if t < rise:
        return drive.rabi_rate * math.sin(0.5 * math.pi * t / rise) ** 2
    if t > drive.duration - rise:
        return drive.rabi_rate * math.sin(
            0.5 * math.pi * (drive.duration - t) / rise) ** 2
    return drive.rabi_rate


def lindblad_rhs(rho: np.ndarray, hamiltonian: np.ndarray,
                 collapse: list[tuple[float, np.ndarray]]) -> np.ndarray:
    """d(rho)/dt for H plus Lindblad dissipators (rate, operator) pairs."""
    out = -1j * (hamiltonian @ rho - rho @ hamiltonian)
    for rate, op in collapse:
        od = op.conj().T
        odo = od @ op
        out = out + rate * (op @ rho @ od - 0.5 * (odo @ rho + rho @ odo))
    return out


def qubit_collapse_ops(qubit: QubitSpec) -> list[tuple[float, np.ndarray]]:
    gamma1 = 1.0 / qubit.t1
    gamma_phi = 1.0 / qubit.t2 - 0.5 * gamma1
    ops = [(gamma1, _SM)]
    if gamma_phi > 0:
        ops.append((0.5 * gamma_phi, _SZ))
    return ops


def simulate_rabi(qubit: QubitSpec, drive: DriveSpec,
                  times: np.ndarray) -> RabiTrace:
    """Excited-state population at the requested times, starting from |0>.

    Fixed-step RK4 with step at most min(1/(50*rabi_rate), t2/50); the
    implementation tightens this by a constant safety factor.
    """
    t_req = np.asarray(times, dtype=float)
    if t_req.ndim != 1 or t_req.size == 0:
        raise ValueError("times must be a non-empty 1D array")
    if t_req[0] < 0 or np.any(np.diff(t_req) < 0):
        raise ValueError("times must be non-negative and ascending")

    detuning = qubit.f01 - drive.drive_frequency
    collapse = qubit_collapse_ops(qubit)

    rate_scale = max(drive.rabi_rate, abs(detuning), 1e-300)
    dt_max = min(1.0 / (50.0 * rate_scale), qubit.t2 / 50.0) / _STEP_SAFETY

    def deriv(t: float, rho: np.ndarray) -> np.ndarray:
        h = math.pi * _drive_amplitude(drive, t) * _SX \
            + math.pi * detuning * _SZ
        return lindblad_rhs(rho, h, collapse)

    rho = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    pops = np.empty(t_req.size)
    t_prev = 0.0
    for i, t in enumerate(t_req):
        rho = rk4_span(deriv, rho, t_prev, t, dt_max)
        pops[i] = rho[1, 1].real
        t_prev = t
    return RabiTrace(times=t_req, excited_population=pops)


def fit_rabi(trace: RabiTrace) -> RabiFit:
    """Fit P(t) = A*exp(-t/tau)*cos(2*pi*omega*t + phi) + B.

    The oscillation frequency is seeded from the dominant bin of the
    discrete Fourier magnitude spectrum of the mean-subtracted trace, the
    envelope from a log-linear fit of the oscillation peak magnitudes.
    """
    t = trace.times
    p = trace.excited_population
    if t.size < 8:
        raise ValueError("need at least 8 samples to fit a Rabi trace")
    dt = np.diff(t)
    if np.max(dt) - np.min(dt) > 1e-6 * np.mean(dt):
        raise ValueError("fit_rabi expects uniformly sampled times")

    offset0 = float(np.mean(p))
    detrended = p - offset0
    swing = float(np.max(p) - np.min(p))
    if swing < 1e-12:
        raise FitError("no dominant spectral peak: trace is constant")

    spectrum = np.abs(np.fft.rfft(detrended))
    if spectrum.size < 3:
        raise FitError("trace too short for a spectral peak")
    bins = spectrum[1:]
    k = int(np.argmax(bins)) + 1
    others = np.delete(spectrum[1:], k - 1)
    if spectrum[k] <= 3.0 * float(np.median(others)) + 1e-12:
        raise FitError("no dominant spectral peak in the trace")
    omega0 = k / (t.size * float(np.mean(dt)))

    tau0 = _envelope_guess(t, detrended)
    amp0 = detrended[0] if abs(detrended[0]) > 0.3 * np.max(np.abs(detrended)) \
        else float(np.max(np.abs(detrended)))

    scales = np.array([omega0, tau0, max(abs(amp0), 1e-3),
                       max(abs(offset0), 0.1), 1.0])

    def residuals(p_scaled: np.ndarray) -> np.ndarray:
        omega, tau, amp, off, phase = p_scaled * scales
        model = amp * np.exp(-t / tau) * np.cos(2.0 * np.pi * omega * t + phase) + off
        return model - p

    p0 = np.array([1.0, 1.0, amp0 / scales[2], offset0 / scales[3], 0.0])
    result = levenberg_marquardt(residuals, p0)
    omega, tau, amp, off, phase = result.params * scales
    if amp < 0:  # canonical sign: positive amplitude, phase shifted by pi
        amp = -amp
        phase += math.pi
    phase = math.remainder(phase, 2.0 * math.pi)
    return RabiFit(omega=abs(omega), tau=abs(tau), amplitude=amp, offset=off,
                   phase=phase, iterations=result.iterations,
                   converged=result.converged)


def _envelope_guess(t: np.ndarray, detrended: np.ndarray) -> float:
    mags = np.abs(detrended)
    span = float(t[-1] - t[0])
    peaks = [i for i in range(1, t.size - 1)
             if mags[i] >= mags[i - 1] and mags[i] >= mags[i + 1]
             and mags[i] > 0.05 * np.max(mags)]
    if len(peaks) >= 3:
        slope = np.polyfit(t[peaks], np.log(mags[peaks]), 1)[0]
        if slope < 0:
            return float(-1.0 / slope)
    return span
