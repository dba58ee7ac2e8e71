"""Weibull, Pareto, and binomial families.

Densities, CDFs, means, closed-form mean-crossing probabilities
P(X <= kappa * EX), and inverse-transform samplers.  The mean-crossing
closed forms depend only on the shape parameter, so they take no scale
argument at all.  Powers like (kappa*Gamma(1/alpha+1))**alpha are
evaluated as exp of log expressions; the direct form overflows for
shapes beyond a few hundred.

Samplers take the uniform variate explicitly so this module stays pure;
random-stream generation lives in `verify`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MeanUndefinedError
from .specfun import ln_gamma

__all__ = [
    "WeibullParams", "ParetoParams", "BinomialParams",
    "validate_kappa",
    "weibull_mean", "weibull_cdf", "weibull_prob_below_kappa_mean", "weibull_sample",
    "pareto_mean", "pareto_cdf", "pareto_prob_below_kappa_mean", "pareto_sample",
    "binomial_cdf",
]


def _require_positive(name: str, value: float) -> None:
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
        raise DomainError(f"{name} must be a finite positive real, got {value!r}")


def validate_kappa(kappa: float) -> float:
    """Check the mean multiplier: finite and strictly positive."""
    _require_positive("kappa", kappa)
    return float(kappa)


@dataclass(frozen=True)
class WeibullParams:
    """Shape alpha > 0 and scale theta > 0."""

    alpha: float
    theta: float

    def __post_init__(self):
        _require_positive("alpha", self.alpha)
        _require_positive("theta", self.theta)


@dataclass(frozen=True)
class ParetoParams:
    """Scale a > 0 and shape theta > 0.  The mean exists only for theta > 1."""

    a: float
    theta: float

    def __post_init__(self):
        _require_positive("a", self.a)
        _require_positive("theta", self.theta)


@dataclass(frozen=True)
class BinomialParams:
    """Trial count n >= 1 and success probability p in [0, 1]."""

    n: int
    p: float

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise DomainError(f"n must be an integer >= 1, got {self.n!r}")
        if not (isinstance(self.p, (int, float)) and math.isfinite(self.p)
                and 0.0 <= self.p <= 1.0):
            raise DomainError(f"p must lie in [0, 1], got {self.p!r}")


def _shape_array(x, name: str) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if arr.size and (not np.all(np.isfinite(arr)) or np.any(arr <= 0.0)):
        raise DomainError(f"{name} must be finite and > 0")
    return arr, scalar


def _unit_open_array(u) -> tuple[np.ndarray, bool]:
    arr = np.asarray(u, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if arr.size and (np.any(arr <= 0.0) or np.any(arr >= 1.0) or not np.all(np.isfinite(arr))):
        raise DomainError("uniform variate must lie strictly inside (0, 1)")
    return arr, scalar


# --------------------------------------------------------------------------
# Weibull

def weibull_mean(p: WeibullParams) -> float:
    """E X = theta**(1/alpha) * Gamma(1/alpha + 1)."""
    return p.theta ** (1.0 / p.alpha) * math.exp(ln_gamma(1.0 / p.alpha + 1.0))


def weibull_cdf(p: WeibullParams, t: float) -> float:
    """P(X <= t) = 1 - exp(-t**alpha / theta); 0 for t <= 0."""
    if t <= 0.0:
        return 0.0
    v = p.alpha * math.log(t) - math.log(p.theta)  # log of t**alpha/theta
    if v > 50.0:
        return 1.0  # survival below exp(-5e21)
    return -math.expm1(-math.exp(v))


def weibull_prob_below_kappa_mean(alpha, kappa: float):
    """P(X <= kappa * EX) for the Weibull family, as a function of shape only.

    Equals 1 - exp(-exp(alpha*(ln kappa + ln Gamma(1/alpha + 1)))); the
    scale parameter cancels.  `alpha` may be a scalar or an array.
    """
    a, scalar = _shape_array(alpha, "alpha")
    k = validate_kappa(kappa)
    v = a * (math.log(k) + ln_gamma(1.0 / a + 1.0))
    with np.errstate(over="ignore"):
        inner = np.exp(v)  # inf is fine: expm1(-inf) = -1
    out = -np.expm1(-inner)
    return float(out[0]) if scalar else out


def weibull_sample(p: WeibullParams, u):
    """Inverse-transform sample (theta * (-ln(1-u)))**(1/alpha), u in (0,1)."""
    uu, scalar = _unit_open_array(u)
    x = (p.theta * -np.log1p(-uu)) ** (1.0 / p.alpha)
    return float(x[0]) if scalar else x


# --------------------------------------------------------------------------
# Pareto

def pareto_mean(p: ParetoParams) -> float:
    """E X = theta * a / (theta - 1), defined only for theta > 1."""
    if p.theta <= 1.0:
        raise MeanUndefinedError(
            f"Pareto mean requires theta > 1, got theta={p.theta}")
    return p.theta * p.a / (p.theta - 1.0)


def pareto_cdf(p: ParetoParams, t: float) -> float:
    """P(X <= t) = 1 - (a/t)**theta; 0 for t <= a."""
    if t <= p.a:
        return 0.0
    return -math.expm1(p.theta * (math.log(p.a) - math.log(t)))


def pareto_prob_below_kappa_mean(theta, kappa: float):
    """P(X <= kappa * EX) for the Pareto family, as a function of shape only.

    Equals 1 - ((theta-1)/(kappa*theta))**theta, evaluated in the log
    domain; the scale parameter cancels.  For kappa < 1 the shape must
    satisfy 1 < theta <= 1/(1-kappa), and the probability is exactly 0
    at the right endpoint; for kappa >= 1 any theta > 1 is valid.
    `theta` may be a scalar or an array.
    """
    k = validate_kappa(kappa)
    th = np.atleast_1d(np.asarray(theta, dtype=float))
    scalar = np.asarray(theta).ndim == 0
    if th.size and (not np.all(np.isfinite(th)) or np.any(th <= 1.0)):
        raise DomainError("theta must be finite and > 1 for the mean to exist")
    if k < 1.0:
        theta_max = 1.0 / (1.0 - k)
        if np.any(th > theta_max):
            raise DomainError(
                f"kappa={k} < 1 requires theta <= 1/(1-kappa) = {theta_max}")
    w = th * (np.log(th - 1.0) - math.log(k) - np.log(th))
    out = np.maximum(-np.expm1(w), 0.0)  # clamp -1ulp rounding near the zero
    if k < 1.0:
        out = np.where(th == theta_max, 0.0, out)
    return float(out[0]) if scalar else out


def pareto_sample(p: ParetoParams, u):
    """Inverse-transform sample a * (1-u)**(-1/theta), u in (0,1)."""
    uu, scalar = _unit_open_array(u)
    x = p.a * (1.0 - uu) ** (-1.0 / p.theta)
    return float(x[0]) if scalar else x


# --------------------------------------------------------------------------
# Binomial

def binomial_cdf(p: BinomialParams, m: int) -> float:
    """P(B(n, p) <= m), an exact sum evaluated stably in the log domain.

    Log-binomial coefficients come from ln_gamma.  m outside [0, n]
    clamps: 0 below, 1 at or above n.
    """
    m = int(m)
    if m < 0:
        return 0.0
    if m >= p.n:
        return 1.0
    if p.p == 0.0:
        return 1.0
    if p.p == 1.0:
        return 0.0  # m < n here
    n = p.n
    ln_fact_n = ln_gamma(n + 1.0)
    log_p = math.log(p.p)
    log_q = math.log1p(-p.p)
    terms = []
    for kk in range(m + 1):
        ln_coef = ln_fact_n - ln_gamma(kk + 1.0) - ln_gamma(n - kk + 1.0)
        terms.append(math.exp(ln_coef + kk * log_p + (n - kk) * log_q))
    return min(1.0, math.fsum(terms))
