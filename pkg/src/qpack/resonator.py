"""Notch-resonator S21 model and internal-quality-factor extraction.

The transmission past a side-coupled (notch) resonator is modeled with the
diameter-corrected form

    S21(f) = a * exp(-2*pi*i*f*tau)
               * [1 - (Ql/|Qc|) * exp(i*phi) / (1 + 2i*Ql*(f/f0 - 1))]

where phi rotates the resonance circle to absorb impedance mismatch and
tau is the cable delay.  The internal quality factor follows from

    1/Qi = 1/Ql - cos(phi)/|Qc|

All six model parameters are fitted by damped least squares on the real
and imaginary parts jointly.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from .emnet.network import FrequencyGrid
from .optimize import FitError, levenberg_marquardt


@dataclass(frozen=True)
class NotchResonanceModel:
    f0: float  # Hz
    q_loaded: float
    q_coupling_mag: float
    phi: float = 0.0  # rad
    amplitude: float = 1.0
    cable_delay: float = 0.0  # s

    def __post_init__(self):
        if self.f0 <= 0:
            raise ValueError("resonance frequency must be positive")
        if self.q_loaded <= 0 or self.q_coupling_mag <= 0:
            raise ValueError("quality factors must be positive")


@dataclass(frozen=True)
class ResonanceFit:
    model: NotchResonanceModel
    q_internal: float
    residual_rms: float
    covariance_diag: tuple[float, ...]  # order: f0, Ql, |Qc|, phi, a, tau
    iterations: int
    converged: bool


def model_s21(model: NotchResonanceModel, grid: FrequencyGrid) -> np.ndarray:
    """Complex S21 of the notch model at each grid point."""
    f = grid.points
    return _eval_s21(f, model.f0, model.q_loaded, model.q_coupling_mag,
                     model.phi, model.amplitude, model.cable_delay)


def _eval_s21(f, f0, ql, qc, phi, amp, tau):
    dip = (ql / qc) * np.exp(1j * phi) / (1.0 + 2j * ql * (f / f0 - 1.0))
    return amp * np.exp(-2j * np.pi * f * tau) * (1.0 - dip)


def qi_from_fit(model: NotchResonanceModel) -> float:
    """Internal quality factor from the diameter-corrected relation."""
    inv = 1.0 / model.q_loaded - math.cos(model.phi) / model.q_coupling_mag
    if inv <= 0:
        raise ValueError(
            "inconsistent over-coupled model: 1/Ql <= cos(phi)/|Qc| gives Qi <= 0"
        )
    return 1.0 / inv


def _wing_indices(n: int) -> np.ndarray:
    quarter = max(n // 4, 2)
    idx = np.zeros(n, dtype=bool)
    idx[:quarter] = True
    idx[-quarter:] = True
    return idx


def fit_resonance(trace: np.ndarray, grid: FrequencyGrid) -> ResonanceFit:
    """Fit the six notch parameters to a complex S21 trace.

    The cable-delay term exp(-2*pi*i*f*tau) oscillates on a sub-ns tau
    scale at gigahertz carrier frequencies, so the fit works on a
    calibrated copy of the data: the linear phase of the off-resonant
    wings is removed, the remaining trace is fitted with the delay
    anchored to the window (plus a nuisance phase), and both are folded
    back into the reported cable delay.  Because the calibration removes
    any constant rotation exactly, Qi is invariant under global phase
    rotation of the input.  Raises FitError when no resonance dip stands
    above the noise floor.
    """
    data = np.asarray(trace, dtype=complex)
    f = grid.points
    if data.shape != f.shape:
        raise ValueError("trace and grid must have the same length")
    if data.size < 7:
        raise ValueError("need at least 7 samples spanning the dip")

    mag = np.abs(data)
    wings = _wing_indices(data.size)
    baseline = float(np.median(mag[wings]))
    if baseline <= 0:
        raise FitError("trace magnitude is zero on the wings")

    i_min = int(np.argmin(mag))
    depth = baseline - mag[i_min]
    noise = 1.4826 * float(np.median(np.abs(mag[wings] - baseline)))
    noise_floor = max(noise, 1e-6 * baseline)
    if depth < 3.0 * noise_floor:
        raise FitError("no resonance dip found (dynamic range below 3x noise floor)")

    f0_0 = float(f[i_min])
    f_ref = f0_0
    span = float(f[-1] - f[0])

    # linear wing phase, anchored inside the window for conditioning
    phase = np.unwrap(np.angle(data))
    slope, intercept = np.polyfit(f[wings] - f_ref, phase[wings], 1)
    data_cal = data * np.exp(-1j * (intercept + slope * (f - f_ref)))

    ql_0 = _loaded_q_guess(f, mag / baseline, i_min, f0_0)
    m_min = mag[i_min] / baseline
    qc_0 = ql_0 / max(1.0 - m_min, 1e-3)

    # internal parameters: f0, Ql, |Qc|, phi, a, theta (residual constant
    # phase), tau_w (window-anchored delay remnant)
    scales = np.array([f0_0, ql_0, qc_0, 1.0, baseline, 1.0, 1.0 / span])

    def residuals(p_scaled: np.ndarray) -> np.ndarray:
        f0, ql, qc, phi, amp, theta, tau_w = p_scaled * scales
        dip = (ql / qc) * np.exp(1j * phi) / (1.0 + 2j * ql * (f / f0 - 1.0))
        model = amp * np.exp(1j * (theta - 2.0 * np.pi * (f - f_ref) * tau_w)) \
            * (1.0 - dip)
        diff = model - data_cal
        return np.concatenate([diff.real, diff.imag])

    p0 = np.array([1.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0])
    result = levenberg_marquardt(residuals, p0)

    f0, ql, qc, phi, amp, theta, tau_w = result.params * scales
    # fold the removed wing line and the nuisance phase back into the
    # f-anchored delay of the reported model: the total constant phase at
    # f_ref is absorbed by a sub-period delay shift
    tau_total = tau_w - slope / (2.0 * math.pi)
    residual_phase = math.remainder(theta + intercept
                                    + 2.0 * math.pi * f_ref * tau_total,
                                    2.0 * math.pi)
    cable_delay = tau_total - residual_phase / (2.0 * math.pi * f_ref)

    phi = math.remainder(phi, 2.0 * math.pi)
    model = NotchResonanceModel(f0=abs(f0), q_loaded=abs(ql),
                                q_coupling_mag=abs(qc), phi=phi,
                                amplitude=abs(amp), cable_delay=cable_delay)
    qi = qi_from_fit(model)
    rms = math.sqrt(result.cost / data.size)
    cov = tuple(result.covariance_diag[:5] * scales[:5] ** 2) \
        + (float(result.covariance_diag[6] * scales[6] ** 2),)
    return ResonanceFit(model=model, q_internal=qi, residual_rms=rms,
                        covariance_diag=cov, iterations=result.iterations,
                        converged=result.converged)


def _loaded_q_guess(f: np.ndarray, mag_norm: np.ndarray, i_min: int,
                    f0: float) -> float:
    """Ql from the half-prominence width of the normalized |S21| dip."""
    level = math.sqrt((1.0 + mag_norm[i_min] ** 2) / 2.0)

    def crossing(side: int) -> float | None:
        i = i_min
        while 0 < i < len(f) - 1:
            j = i + side
            if mag_norm[j] >= level:
                # linear interpolation between samples j-side and j
                m0, m1 = mag_norm[i], mag_norm[j]
                if m1 == m0:
                    return float(f[j])
                t = (level - m0) / (m1 - m0)
                return float(f[i] + t * (f[j] - f[i]))
            i = j
        return None

    left = crossing(-1)
    right = crossing(+1)
    if left is not None and right is not None and right > left:
        return f0 / (right - left)
    return 4.0 * f0 / (f[-1] - f[0])
