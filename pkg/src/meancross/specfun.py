"""Real-argument log-gamma, digamma, and trigamma.

Evaluation strategy: arguments below 10 are shifted upward with the
standard recurrences

    ln G(x) = ln G(x+1) - ln x
    psi(x)  = psi(x+1) - 1/x
    psi'(x) = psi'(x+1) + 1/x**2

and the shifted argument is fed to a Stirling-type tail expansion in
1/z**2, truncated where the next term falls below ~1e-16 at z = 10.
The classical series definitions (harmonic-type sums over n) converge
far too slowly for production use; they appear in the test suite as
independent oracles instead.

All functions accept a positive scalar or an array of positive values,
are pure, and are safe to call concurrently.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

__all__ = ["EULER_GAMMA", "ln_gamma", "digamma", "trigamma", "euler_gamma"]

# Sum over n >= 1 of 1/n - ln(1 + 1/n), to full double precision.
EULER_GAMMA = 0.5772156649015329

_SHIFT_THRESHOLD = 10.0
_HALF_LN_TWO_PI = 0.9189385332046727  # ln(2*pi)/2

# Bernoulli-number tail coefficients.  Term k of each expansion is
# coeff[k] * z**-(2k+1), z**-(2k+2), z**-(2k+3) respectively; truncation
# error at z >= 10 is below the last retained term, ~1e-16.
_LNGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
)
_DIGAMMA_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)
_TRIGAMMA_TAIL = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def _as_positive_array(x, name: str) -> tuple[np.ndarray, bool]:
    """Validate x > 0 elementwise; return (1-d float array, was_scalar)."""
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        raise DomainError(f"{name} is defined for finite real arguments > 0")
    return arr, scalar


def _horner(w: np.ndarray, coeffs: tuple[float, ...]) -> np.ndarray:
    acc = np.full_like(w, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * w + c
    return acc


def _shift_up(arr: np.ndarray, step) -> tuple[np.ndarray, np.ndarray]:
    """Apply `step(z)` to the recurrence accumulator until all z >= 10."""
    z = arr.copy()
    acc = np.zeros_like(z)
    while True:
        small = z < _SHIFT_THRESHOLD
        if not small.any():
            return z, acc
        acc[small] += step(z[small])
        z[small] += 1.0


def ln_gamma(x):
    """Natural log of the Gamma function for x > 0.

    Exactly 0 at x = 1 and x = 2.  Accepts scalars or arrays.
    """
    arr, scalar = _as_positive_array(x, "ln_gamma")
    z, acc = _shift_up(arr, lambda zz: -np.log(zz))
    w = 1.0 / (z * z)
    out = (z - 0.5) * np.log(z) - z + _HALF_LN_TWO_PI + _horner(w, _LNGAMMA_TAIL) / z + acc
    out[(arr == 1.0) | (arr == 2.0)] = 0.0
    return float(out[0]) if scalar else out


def digamma(x):
    """Digamma psi(x), the log-derivative of Gamma, for x > 0.

    psi(1) = -EULER_GAMMA.  Accepts scalars or arrays.
    """
    arr, scalar = _as_positive_array(x, "digamma")
    z, acc = _shift_up(arr, lambda zz: -1.0 / zz)
    w = 1.0 / (z * z)
    out = np.log(z) - 0.5 / z - w * _horner(w, _DIGAMMA_TAIL) + acc
    return float(out[0]) if scalar else out


def trigamma(x):
    """Trigamma psi'(x), strictly positive for x > 0.

    Accepts scalars or arrays.
    """
    arr, scalar = _as_positive_array(x, "trigamma")
    z, acc = _shift_up(arr, lambda zz: 1.0 / (zz * zz))
    w = 1.0 / (z * z)
    out = 1.0 / z + 0.5 * w + (w / z) * _horner(w, _TRIGAMMA_TAIL) + acc
    return float(out[0]) if scalar else out


def euler_gamma() -> float:
    """Euler's constant, accurate to the last bit of a double."""
    return EULER_GAMMA
