"""Damped least-squares (Levenberg-Marquardt) with a numerical Jacobian.

Small and self-contained so the fit contracts (iteration count, relative
parameter-step stopping rule, per-parameter variance estimates) are under
our control.  Callers are expected to pre-scale parameters to order one;
the fit wrappers in `resonator` and `cqed.rabi` do this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


class FitError(RuntimeError):
    """The data does not support the requested fit."""


@dataclass
class LMResult:
    params: np.ndarray
    iterations: int
    converged: bool
    residual: np.ndarray
    cost: float  # sum of squared residuals
    covariance_diag: np.ndarray


def _numeric_jacobian(fn: Callable[[np.ndarray], np.ndarray], p: np.ndarray,
                      r0: np.ndarray) -> np.ndarray:
    jac = np.empty((r0.size, p.size))
    for i in range(p.size):
        h = 1e-7 * max(abs(p[i]), 1e-3)
        pp = p.copy()
        pp[i] += h
        jac[:, i] = (fn(pp) - r0) / h
    return jac


def levenberg_marquardt(residual_fn: Callable[[np.ndarray], np.ndarray],
                        p0: np.ndarray, *, max_iter: int = 200,
                        step_tol: float = 1e-9,
                        lambda0: float = 1e-3) -> LMResult:
    """Minimize sum(residual_fn(p)**2) starting from p0.

    Converged when the largest relative parameter step of an accepted
    iteration drops below `step_tol`; otherwise stops at `max_iter` and
    reports converged=False with the best point found.
    """
    p = np.asarray(p0, dtype=float).copy()
    r = np.asarray(residual_fn(p), dtype=float)
    cost = float(r @ r)
    lam = lambda0
    converged = False
    iterations = 0
    jac = _numeric_jacobian(residual_fn, p, r)

    for iterations in range(1, max_iter + 1):
        jtj = jac.T @ jac
        jtr = jac.T @ r
        accepted = False
        for _ in range(50):
            damped = jtj + lam * np.diag(np.maximum(np.diag(jtj), 1e-300))
            try:
                step = np.linalg.solve(damped, -jtr)
            except np.linalg.LinAlgError:
                lam *= 10.0
                continue
            p_new = p + step
            r_new = np.asarray(residual_fn(p_new), dtype=float)
            cost_new = float(r_new @ r_new)
            if np.isfinite(cost_new) and cost_new <= cost:
                accepted = True
                break
            lam *= 10.0
            if lam > 1e12:
                break
        if not accepted:
            break
        rel_step = float(np.max(np.abs(step) / (np.abs(p) + 1e-12)))
        p, r, cost = p_new, r_new, cost_new
        lam = max(lam / 3.0, 1e-12)
        jac = _numeric_jacobian(residual_fn, p, r)
        if rel_step < step_tol:
            converged = True
            break

    return LMResult(params=p, iterations=iterations, converged=converged,
                    residual=r, cost=cost,
                    covariance_diag=_covariance_diag(jac, cost, p.size))


def _covariance_diag(jac: np.ndarray, cost: float, n_params: int) -> np.ndarray:
    dof = max(jac.shape[0] - n_params, 1)
    s2 = cost / dof
    try:
        cov = s2 * np.linalg.inv(jac.T @ jac)
        return np.abs(np.diag(cov))
    except np.linalg.LinAlgError:
        return np.full(n_params, np.nan)
