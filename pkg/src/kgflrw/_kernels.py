"""Elementwise hot kernels, numba-jitted with a pure-numpy fallback.

The pseudospectral stepper spends most of its non-FFT time in pointwise
work: evaluating the power nonlinearity and fusing Runge-Kutta stage
updates. Those loops are compiled with numba unless the environment
variable ``KGFLRW_DISABLE_NUMBA=1`` selects the numpy fallback (useful on
platforms without a working JIT, and for benchmarking; see
``benchmarks/bench_kernels.py``).

FFT-bound work stays in numpy; numba cannot compile it.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLE = os.environ.get("KGFLRW_DISABLE_NUMBA", "0") not in ("0", "", "false", "False")


# -- numpy reference implementations ----------------------------------------

def power_term_numpy(u: np.ndarray, alpha: float, coef: float) -> np.ndarray:
    """coef * |u|**alpha * u, with 0 mapped to 0 for alpha > 0."""
    if alpha == 0.0:
        return coef * u
    return coef * np.abs(u) ** alpha * u


def scaled_power_term_numpy(u: np.ndarray, scale: np.ndarray, alpha: float, coef: float) -> np.ndarray:
    """coef * scale(x) * |u|**alpha * u for a spatially modulated coefficient."""
    if alpha == 0.0:
        return coef * scale * u
    return coef * scale * np.abs(u) ** alpha * u


def rk4_combine_numpy(y0: np.ndarray, k1, k2, k3, k4, dt: float) -> np.ndarray:
    """y0 + dt/6 * (k1 + 2 k2 + 2 k3 + k4)."""
    return y0 + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def stage_numpy(y0: np.ndarray, k: np.ndarray, c: float) -> np.ndarray:
    """y0 + c * k."""
    return y0 + c * k


def linf_numpy(u: np.ndarray) -> float:
    return float(np.max(np.abs(u)))


# -- numba versions ----------------------------------------------------------

if not _DISABLE:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        njit = None
        _DISABLE = True

if not _DISABLE:

    @njit(cache=True)
    def _power_term(u, alpha, coef):
        out = np.empty_like(u)
        flat_u = u.ravel()
        flat_o = out.ravel()
        if alpha == 0.0:
            for i in range(flat_u.size):
                flat_o[i] = coef * flat_u[i]
        else:
            for i in range(flat_u.size):
                v = flat_u[i]
                flat_o[i] = coef * abs(v) ** alpha * v
        return out

    @njit(cache=True)
    def _scaled_power_term(u, scale, alpha, coef):
        out = np.empty_like(u)
        flat_u = u.ravel()
        flat_s = scale.ravel()
        flat_o = out.ravel()
        if alpha == 0.0:
            for i in range(flat_u.size):
                flat_o[i] = coef * flat_s[i] * flat_u[i]
        else:
            for i in range(flat_u.size):
                v = flat_u[i]
                flat_o[i] = coef * flat_s[i] * abs(v) ** alpha * v
        return out

    @njit(cache=True)
    def _rk4_combine(y0, k1, k2, k3, k4, dt):
        out = np.empty_like(y0)
        f0 = y0.ravel()
        f1 = k1.ravel()
        f2 = k2.ravel()
        f3 = k3.ravel()
        f4 = k4.ravel()
        fo = out.ravel()
        c = dt / 6.0
        for i in range(f0.size):
            fo[i] = f0[i] + c * (f1[i] + 2.0 * f2[i] + 2.0 * f3[i] + f4[i])
        return out

    @njit(cache=True)
    def _stage(y0, k, c):
        out = np.empty_like(y0)
        f0 = y0.ravel()
        fk = k.ravel()
        fo = out.ravel()
        for i in range(f0.size):
            fo[i] = f0[i] + c * fk[i]
        return out

    @njit(cache=True)
    def _linf(u):
        m = 0.0
        flat = u.ravel()
        for i in range(flat.size):
            v = abs(flat[i])
            if v > m:
                m = v
        return m

    def power_term_numba(u, alpha, coef):
        return _power_term(np.ascontiguousarray(u), float(alpha), float(coef))

    def scaled_power_term_numba(u, scale, alpha, coef):
        return _scaled_power_term(
            np.ascontiguousarray(u), np.ascontiguousarray(scale), float(alpha), float(coef)
        )

    def rk4_combine_numba(y0, k1, k2, k3, k4, dt):
        return _rk4_combine(*(np.ascontiguousarray(a) for a in (y0, k1, k2, k3, k4)), float(dt))

    def stage_numba(y0, k, c):
        return _stage(np.ascontiguousarray(y0), np.ascontiguousarray(k), float(c))

    def linf_numba(u):
        return float(_linf(np.ascontiguousarray(u)))


USING_NUMBA = not _DISABLE

if USING_NUMBA:
    power_term = power_term_numba
    scaled_power_term = scaled_power_term_numba
    rk4_combine = rk4_combine_numba
    stage = stage_numba
    linf = linf_numba
else:
    power_term = power_term_numpy
    scaled_power_term = scaled_power_term_numpy
    rk4_combine = rk4_combine_numpy
    stage = stage_numpy
    linf = linf_numpy
