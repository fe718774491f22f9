"""Hot numeric kernels with a pure-numpy fallback.

The boundary-distance oracle evaluates a truncated power series (10^5
coefficients by default) at every point of a circle grid, which is the one
genuinely hot loop in the package.  When numba is importable the jitted
kernel is used; setting the environment variable ``BOHR_PURE_NUMPY`` to a
truthy value (``1``, ``true``, ``yes``, ``on``) forces the numpy path.  Both
paths compute the same Horner recurrence; ``benchmarks/bench_kernels.py``
times them against each other.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False

_TRUTHY = {"1", "true", "yes", "on"}


def use_numba() -> bool:
    """True when the jitted kernels are active for this call."""
    if not HAS_NUMBA:
        return False
    return os.environ.get("BOHR_PURE_NUMPY", "").strip().lower() not in _TRUTHY


def _abs_on_circle_numpy(coeffs: np.ndarray, rho: float, thetas: np.ndarray) -> np.ndarray:
    z = rho * np.exp(1j * thetas)
    acc = np.zeros_like(z)
    # Horner over the coefficient index, vectorised across the grid.
    for a in coeffs[::-1]:
        acc = acc * z + a
    return np.abs(acc * z)


if HAS_NUMBA:

    @njit(cache=True)
    def _abs_on_circle_numba(coeffs, rho, thetas):  # pragma: no cover - jitted
        # Horner over the coefficients with the grid as the inner loop: the
        # inner iterations are independent, so the compiler can vectorise
        # them, unlike the loop-carried recurrence of a per-point Horner.
        n_grid = thetas.shape[0]
        n_coef = coeffs.shape[0]
        zr = np.empty(n_grid)
        zi = np.empty(n_grid)
        for i in range(n_grid):
            zr[i] = rho * np.cos(thetas[i])
            zi[i] = rho * np.sin(thetas[i])
        ar = np.zeros(n_grid)
        ai = np.zeros(n_grid)
        for j in range(n_coef - 1, -1, -1):
            c = coeffs[j]
            for i in range(n_grid):
                tmp = ar[i] * zr[i] - ai[i] * zi[i] + c
                ai[i] = ar[i] * zi[i] + ai[i] * zr[i]
                ar[i] = tmp
        out = np.empty(n_grid)
        for i in range(n_grid):
            re = ar[i] * zr[i] - ai[i] * zi[i]
            im = ar[i] * zi[i] + ai[i] * zr[i]
            out[i] = np.sqrt(re * re + im * im)
        return out


def abs_on_circle(coeffs: np.ndarray, rho: float, thetas: np.ndarray) -> np.ndarray:
    """|sum_{j>=1} coeffs[j-1] * z^j| on z = rho * exp(i*thetas).

    ``coeffs[j]`` is the coefficient of ``z^(j+1)``; the constant term is
    implicitly zero.
    """
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    thetas = np.ascontiguousarray(thetas, dtype=np.float64)
    if coeffs.size == 0:
        return np.zeros_like(thetas)
    if use_numba():
        return _abs_on_circle_numba(coeffs, float(rho), thetas)
    return _abs_on_circle_numpy(coeffs, float(rho), thetas)


def eval_point(coeffs: np.ndarray, z: complex) -> complex:
    """sum_{j>=1} coeffs[j-1] * z^j at a single complex point."""
    acc = 0.0 + 0.0j
    z = complex(z)
    for a in np.asarray(coeffs, dtype=np.float64)[::-1]:
        acc = acc * z + a
    return acc * z
