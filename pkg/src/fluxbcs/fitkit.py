"""Least-squares extraction of spectrum parameters from resonance data.

The fitter is a damped Gauss-Newton loop (Levenberg-style multiplicative
damping, factor 10 up and down) over the three parameters (E_L/h, E_J/h,
delta), with the analytic Jacobian of the two-level model.  Parameters are
kept in their physical domain by halving, then clamping, any step that
leaves it.  Since no tabulated measurement set ships with the package,
seeded synthetic data stands in for self-validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .physcore import CODATA2018, Energy, Frequency
from .fluxqubit import QubitParams

MAX_ITERATIONS = 200
STEP_TOLERANCE = 1e-10      # relative accepted-step size
COST_TOLERANCE = 1e-12      # relative cost decrease
_DAMPING_START = 1e-3
_DAMPING_LIMIT = 1e15
_DELTA_LIMIT = 0.5 - 1e-12


@dataclass(frozen=True)
class ResonancePoint:
    """One measured resonance: bias, frequency, optional 1-sigma weight."""

    mu_ext: float
    f: Frequency
    sigma: Optional[Frequency] = None

    def __post_init__(self):
        if not math.isfinite(self.mu_ext):
            raise ValueError("mu_ext must be finite")
        if self.f.hertz <= 0.0:
            raise ValueError("resonance frequency must be positive")
        if self.sigma is not None and self.sigma.hertz <= 0.0:
            raise ValueError("sigma must be positive when present")


@dataclass(frozen=True)
class FitResult:
    """Fit output; covariance is the Gauss-Newton approximation in
    (E_L/h [Hz], E_J/h [Hz], delta) coordinates.  cost_trace records the
    weighted cost after each accepted step (non-increasing)."""

    params: QubitParams
    residual_rms: Frequency
    iterations: int
    converged: bool
    covariance: np.ndarray
    cost_trace: tuple[float, ...]


def spectrum_model_hz(mu: np.ndarray, el_hz: float, ej_hz: float, delta: float) -> np.ndarray:
    """Model frequency in Hz at each bias."""
    u = 1.0 - 2.0 * (np.asarray(mu, dtype=float) + delta)
    return np.hypot(el_hz * u, ej_hz)


def spectrum_jacobian_hz(mu: np.ndarray, el_hz: float, ej_hz: float, delta: float) -> np.ndarray:
    """Analytic partials of the model w.r.t. (el_hz, ej_hz, delta), shape (n, 3)."""
    u = 1.0 - 2.0 * (np.asarray(mu, dtype=float) + delta)
    a = el_hz * u
    f = np.hypot(a, ej_hz)
    safe = np.maximum(f, 1e-300)
    d_el = u * a / safe
    d_ej = np.where(f > 0.0, ej_hz / safe, 1.0)
    d_delta = -2.0 * el_hz * a / safe
    return np.column_stack([d_el, d_ej, d_delta])


def _clamp(x: np.ndarray) -> np.ndarray:
    el, ej, delta = x
    return np.array([
        max(el, 1e-300),
        max(ej, 0.0),
        min(max(delta, -_DELTA_LIMIT), _DELTA_LIMIT),
    ])


def _in_bounds(x: np.ndarray) -> bool:
    el, ej, delta = x
    return el > 0.0 and ej >= 0.0 and abs(delta) < 0.5


def _initial_guess(mu: np.ndarray, f_hz: np.ndarray) -> np.ndarray:
    """Heuristic start: the model geometry makes these near-exact.

    E_J/h is the smallest observed frequency, delta places the minimum at
    half flux, and E_L/h comes from the summed wing frequencies of the two
    extreme bias points (the V opens with slope 2 E_L/h on each side).
    """
    order = np.argsort(mu)
    mu_s, f_s = mu[order], f_hz[order]
    ej = float(f_s.min())
    delta = 0.5 - float(mu_s[int(np.argmin(f_s))])
    el = float((f_s[0] + f_s[-1]) / (2.0 * (mu_s[-1] - mu_s[0])))
    return _clamp(np.array([el, ej, delta]))


def fit_spectrum(
    data: Sequence[ResonancePoint], initial: Optional[QubitParams] = None
) -> FitResult:
    """Fit (E_L, E_J, delta) to resonance points by damped Gauss-Newton.

    Minimizes sum w_i (f_model(mu_i) - f_i)^2 with w_i = 1/sigma_i^2
    (uniform weights when sigma is absent).  Convergence is declared when
    the relative accepted step falls below 1e-10 or the relative cost
    decrease below 1e-12; hitting the iteration cap returns the best
    parameters found with converged=False.
    """
    if len(data) < 4:
        raise ValueError("insufficient data: need at least 4 resonance points")
    mu = np.array([p.mu_ext for p in data], dtype=float)
    f_hz = np.array([p.f.hertz for p in data], dtype=float)
    if np.all(mu == mu[0]):
        raise ValueError("degenerate data: all points at a single bias")
    order = np.argsort(mu)
    arg_min = int(np.argmin(f_hz[order]))
    if arg_min == 0 or arg_min == len(data) - 1:
        raise ValueError(
            "data must bracket the apparent frequency minimum on both sides"
        )
    weights = np.array(
        [1.0 / p.sigma.hertz**2 if p.sigma is not None else 1.0 for p in data]
    )

    if initial is None:
        x = _initial_guess(mu, f_hz)
    else:
        x = _clamp(np.array([
            initial.EL.joules / CODATA2018.h,
            initial.EJ.joules / CODATA2018.h,
            initial.delta,
        ]))

    def cost_of(p: np.ndarray) -> float:
        r = spectrum_model_hz(mu, *p) - f_hz
        return float(np.dot(weights * r, r))

    cost = cost_of(x)
    trace = [cost]
    damping = _DAMPING_START
    converged = False
    iterations = 0

    while iterations < MAX_ITERATIONS and not converged:
        iterations += 1
        residual = spectrum_model_hz(mu, *x) - f_hz
        jac = spectrum_jacobian_hz(mu, *x)
        jtw = jac.T * weights
        normal = jtw @ jac
        gradient = jtw @ residual
        diag = np.diag(np.maximum(np.diag(normal), 1e-30))
        try:
            step = np.linalg.solve(normal + damping * diag, -gradient)
        except np.linalg.LinAlgError:
            damping *= 10.0
            if damping > _DAMPING_LIMIT:
                break
            continue

        candidate = x + step
        halvings = 0
        while not _in_bounds(candidate) and halvings < 30:
            step = 0.5 * step
            candidate = x + step
            halvings += 1
        candidate = _clamp(candidate)

        new_cost = cost_of(candidate)
        if new_cost <= cost:
            actual_step = candidate - x
            rel_step = float(np.linalg.norm(actual_step)) / (
                float(np.linalg.norm(x)) + 1e-300
            )
            rel_drop = (cost - new_cost) / max(cost, 1e-300)
            x, cost = candidate, new_cost
            trace.append(cost)
            damping = max(damping / 10.0, 1e-15)
            if rel_step < STEP_TOLERANCE or rel_drop < COST_TOLERANCE:
                converged = True
        else:
            damping *= 10.0
            if damping > _DAMPING_LIMIT:
                break

    jac = spectrum_jacobian_hz(mu, *x)
    jtw = jac.T * weights
    normal = jtw @ jac
    dof = max(len(data) - 3, 1)
    scale = cost / dof
    try:
        covariance = scale * np.linalg.inv(normal)
    except np.linalg.LinAlgError:
        covariance = scale * np.linalg.pinv(normal)
    covariance = 0.5 * (covariance + covariance.T)

    residual = spectrum_model_hz(mu, *x) - f_hz
    rms = float(np.sqrt(np.mean(residual**2)))
    el_hz, ej_hz, delta = x
    params = QubitParams(
        EL=Energy(el_hz * CODATA2018.h),
        EJ=Energy(ej_hz * CODATA2018.h),
        delta=float(delta),
    )
    return FitResult(
        params=params,
        residual_rms=Frequency(rms),
        iterations=iterations,
        converged=converged,
        covariance=covariance,
        cost_trace=tuple(trace),
    )


def synthesize_data(
    params: QubitParams,
    mu_lo: float,
    mu_hi: float,
    n_points: int,
    noise_sigma: Frequency = Frequency(0.0),
    seed: int = 0,
) -> list[ResonancePoint]:
    """Evenly spaced model samples with seeded Gaussian noise.

    noise_sigma = 0 returns exact model values; a fixed seed returns
    bit-identical data on every call.
    """
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    if not (math.isfinite(mu_lo) and math.isfinite(mu_hi) and mu_lo < mu_hi):
        raise ValueError(f"invalid bias range [{mu_lo}, {mu_hi}]")
    if noise_sigma.hertz < 0.0:
        raise ValueError("noise_sigma must be non-negative")
    mu = np.linspace(mu_lo, mu_hi, n_points)
    el_hz = params.EL.joules / CODATA2018.h
    ej_hz = params.EJ.joules / CODATA2018.h
    f = spectrum_model_hz(mu, el_hz, ej_hz, params.delta)
    sigma = None
    if noise_sigma.hertz > 0.0:
        rng = np.random.default_rng(seed)
        f = f + rng.normal(0.0, noise_sigma.hertz, size=n_points)
        sigma = noise_sigma
    return [
        ResonancePoint(float(m), Frequency(float(fi)), sigma) for m, fi in zip(mu, f)
    ]


def residuals(data: Sequence[ResonancePoint], params: QubitParams) -> list[Frequency]:
    """Per-point differences measured - model, order preserving."""
    el_hz = params.EL.joules / CODATA2018.h
    ej_hz = params.EJ.joules / CODATA2018.h
    return [
        Frequency(
            p.f.hertz - float(spectrum_model_hz(np.array([p.mu_ext]), el_hz, ej_hz, params.delta)[0])
        )
        for p in data
    ]
