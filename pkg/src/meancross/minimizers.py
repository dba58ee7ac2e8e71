"""Shape-parameter minimization of the mean-crossing probability.

The minimum of P(X <= kappa * EX) over the shape parameter splits into
cases on kappa.  For kappa > 1 the interior minimizer is located through
a substituted variable x: the characteristic function phi is strictly
increasing with a single zero x0(kappa), and the optimal shape is a
fixed transform of that root (alpha0 = 1/(x0-1) for Weibull,
theta0 = 1/(1-x0) for Pareto).  For kappa <= 1 the probability is
monotone in the shape: Weibull has an infimum in the large-shape limit
(0 for kappa < 1, 1 - exp(-exp(-EULER_GAMMA)) at kappa = 1), while
Pareto attains 0 at theta = 1/(1-kappa) for kappa < 1 and approaches
1 - 1/e in the large-shape limit at kappa = 1.

`chvatal_argmin` covers the binomial family: for B(n, m/n) it locates
the m in {0..n} minimizing P(B <= m) by exact enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import (
    pareto_prob_below_kappa_mean,
    validate_kappa,
    weibull_prob_below_kappa_mean,
)
from .errors import BracketError, DomainError
from .rootfind import (
    DEFAULT_FTOL,
    DEFAULT_MAX_ITER,
    DEFAULT_XTOL,
    Bracket,
    RootResult,
    bisect,
    expand_bracket,
)
from .specfun import EULER_GAMMA, digamma, ln_gamma

__all__ = [
    "KIND_ATTAINED", "KIND_INFIMUM",
    "MinimizationResult", "ChvatalResult",
    "phi_weibull", "h_weibull", "minimize_weibull",
    "phi_pareto", "h_pareto", "minimize_pareto",
    "chvatal_argmin", "nearest_to_two_thirds",
]

KIND_ATTAINED = "attained"
KIND_INFIMUM = "infimum"

# kappa within one part in 1e15 of 1 is classified as the kappa = 1 case;
# closer values would degenerate the root bracket toward its boundary.
_KAPPA_ONE_TOL = 1e-15

_WEIBULL_SEED_LO = 1.0 + 1e-9  # phi is -ln(kappa) + O(1e-18) here
_PARETO_SEED_HI = 1.0 - 1e-9   # phi is +ln(kappa) - O(1e-18) here


@dataclass(frozen=True)
class MinimizationResult:
    """Outcome of a shape minimization: either an attained minimum with
    its argmin (and root diagnostics when a root equation was solved),
    or an infimum approached in the stated limit, never both."""

    kind: str
    kappa: float
    value: float
    argmin: float | None = None
    limit: str | None = None
    root: RootResult | None = None

    def __post_init__(self):
        if self.kind not in (KIND_ATTAINED, KIND_INFIMUM):
            raise ValueError(f"unknown result kind {self.kind!r}")
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"value must be a probability, got {self.value}")
        if (self.kind == KIND_ATTAINED) != (self.argmin is not None):
            raise ValueError("argmin is present exactly for attained minima")
        if (self.kind == KIND_INFIMUM) != (self.limit is not None):
            raise ValueError("limit direction is present exactly for infima")


# --------------------------------------------------------------------------
# Weibull

def phi_weibull(x, kappa: float):
    """(x-1)*psi(x) - ln(kappa) - ln Gamma(x) on x > 1.

    Strictly increasing; its zero locates the Weibull shape minimizer
    for kappa > 1.  Accepts scalars or arrays.
    """
    k = validate_kappa(kappa)
    xx = np.atleast_1d(np.asarray(x, dtype=float))
    scalar = np.asarray(x).ndim == 0
    if xx.size and (not np.all(np.isfinite(xx)) or np.any(xx <= 1.0)):
        raise DomainError("phi_weibull is defined for x > 1")
    out = (xx - 1.0) * digamma(xx) - math.log(k) - ln_gamma(xx)
    return float(out[0]) if scalar else out


def h_weibull(x, kappa: float):
    """(ln(kappa) + ln Gamma(x)) / (x - 1) on x > 1.

    The transformed objective under x = 1/alpha + 1: the mean-crossing
    probability equals 1 - exp(-exp(h)).  Accepts scalars or arrays.
    """
    k = validate_kappa(kappa)
    xx = np.atleast_1d(np.asarray(x, dtype=float))
    scalar = np.asarray(x).ndim == 0
    if xx.size and (not np.all(np.isfinite(xx)) or np.any(xx <= 1.0)):
        raise DomainError("h_weibull is defined for x > 1")
    out = (math.log(k) + ln_gamma(xx)) / (xx - 1.0)
    return float(out[0]) if scalar else out


def minimize_weibull(
    kappa: float,
    xtol: float = DEFAULT_XTOL,
    ftol: float = DEFAULT_FTOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> MinimizationResult:
    """Minimize the Weibull mean-crossing probability over the shape.

    kappa < 1: infimum 0 as the shape grows without bound.
    kappa = 1: infimum 1 - exp(-exp(-EULER_GAMMA)) in the same limit.
    kappa > 1: attained at alpha0 = 1/(x0 - 1) where x0 is the unique
    zero of phi_weibull, bracketed from (1, 2] and refined by bisection.
    """
    k = validate_kappa(kappa)
    if abs(k - 1.0) <= _KAPPA_ONE_TOL:
        value = -math.expm1(-math.exp(-EULER_GAMMA))
        return MinimizationResult(KIND_INFIMUM, kappa=k, value=value,
                                  limit="alpha -> infinity")
    if k < 1.0:
        return MinimizationResult(KIND_INFIMUM, kappa=k, value=0.0,
                                  limit="alpha -> infinity")

    def phi(x: float) -> float:
        return phi_weibull(x, k)

    bracket = expand_bracket(phi, _WEIBULL_SEED_LO, 2.0,
                             direction="expand_hi", growth=2.0)
    root = bisect(phi, bracket, xtol=xtol, ftol=ftol, max_iter=max_iter)
    alpha0 = 1.0 / (root.root - 1.0)
    value = weibull_prob_below_kappa_mean(alpha0, k)
    return MinimizationResult(KIND_ATTAINED, kappa=k, value=value,
                              argmin=alpha0, root=root)


# --------------------------------------------------------------------------
# Pareto

def _pareto_x_upper(k: float) -> float:
    # Valid substituted domain: x <= kappa when kappa < 1, else x <= 1.
    return k if k < 1.0 else 1.0


def phi_pareto(x, kappa: float):
    """1 - 1/x - ln(x) + ln(kappa) on 0 < x <= min(kappa, 1).

    Strictly increasing; its zero in (0, 1) locates the Pareto shape
    minimizer for kappa > 1.  Accepts scalars or arrays.
    """
    k = validate_kappa(kappa)
    xx = np.atleast_1d(np.asarray(x, dtype=float))
    scalar = np.asarray(x).ndim == 0
    upper = _pareto_x_upper(k)
    if xx.size and (not np.all(np.isfinite(xx)) or np.any(xx <= 0.0) or np.any(xx > upper)):
        raise DomainError(f"phi_pareto is defined for 0 < x <= {upper}")
    out = 1.0 - 1.0 / xx - np.log(xx) + math.log(k)
    return float(out[0]) if scalar else out


def h_pareto(x, kappa: float):
    """(ln(x) - ln(kappa)) / (x - 1) on 0 < x <= kappa (kappa < 1) or
    0 < x < 1 (kappa >= 1).

    The transformed objective under x = 1 - 1/theta: the mean-crossing
    probability equals 1 - exp(-h).  Accepts scalars or arrays.
    """
    k = validate_kappa(kappa)
    xx = np.atleast_1d(np.asarray(x, dtype=float))
    scalar = np.asarray(x).ndim == 0
    bad = (not np.all(np.isfinite(xx))) or np.any(xx <= 0.0)
    if k < 1.0:
        bad = bad or np.any(xx > k)
    else:
        bad = bad or np.any(xx >= 1.0)
    if xx.size and bad:
        raise DomainError("h_pareto argument outside its domain (x = 1 excluded)")
    out = (np.log(xx) - math.log(k)) / (xx - 1.0)
    return float(out[0]) if scalar else out


def minimize_pareto(
    kappa: float,
    xtol: float = DEFAULT_XTOL,
    ftol: float = DEFAULT_FTOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> MinimizationResult:
    """Minimize the Pareto mean-crossing probability over the shape.

    kappa < 1: attained, exactly 0 at theta = 1/(1-kappa).
    kappa = 1: infimum 1 - 1/e as the shape grows without bound.
    kappa > 1: attained at theta0 = 1/(1 - x0) where x0 in (0, 1) is the
    unique zero of phi_pareto; the lower bracket end halves from 0.5
    until phi turns negative, the upper end sits just below 1.
    """
    k = validate_kappa(kappa)
    if abs(k - 1.0) <= _KAPPA_ONE_TOL:
        return MinimizationResult(KIND_INFIMUM, kappa=k, value=-math.expm1(-1.0),
                                  limit="theta -> infinity")
    if k < 1.0:
        theta0 = 1.0 / (1.0 - k)
        return MinimizationResult(KIND_ATTAINED, kappa=k, value=0.0, argmin=theta0)

    def phi(x: float) -> float:
        return phi_pareto(x, k)

    hi = _PARETO_SEED_HI
    f_hi = phi(hi)
    lo = 0.5
    f_lo = phi(lo)
    halvings = 0
    while f_lo > 0.0:
        hi, f_hi = lo, f_lo
        lo *= 0.5
        f_lo = phi(lo)
        halvings += 1
        if halvings > 200:
            raise BracketError("no negative phi_pareto value above x = 0")
    root = bisect(phi, Bracket(lo, hi, f_lo, f_hi),
                  xtol=xtol, ftol=ftol, max_iter=max_iter)
    theta0 = 1.0 / (1.0 - root.root)
    value = pareto_prob_below_kappa_mean(theta0, k)
    return MinimizationResult(KIND_ATTAINED, kappa=k, value=value,
                              argmin=theta0, root=root)


# --------------------------------------------------------------------------
# Binomial (Chvatal enumeration)

@dataclass(frozen=True)
class ChvatalResult:
    """Argmin over m of q_m = P(B(n, m/n) <= m), with the full q vector.

    `ties` lists every m attaining the minimum (smallest first); the
    reported m_star is the smallest.  A tie is surfaced, never broken
    silently.
    """

    n: int
    m_star: int
    q_values: np.ndarray
    ties: tuple[int, ...]


def nearest_to_two_thirds(n: int) -> int:
    """The integer nearest 2n/3, exact in integer arithmetic.

    2n/3 is never a half-integer, so the nearest integer is unique.
    """
    return (2 * n + 1) // 3


def chvatal_argmin(n: int) -> ChvatalResult:
    """Enumerate q_m = P(B(n, m/n) <= m) for m in {0..n} and locate the min.

    The whole q vector is evaluated in one vectorized log-domain pass
    (log-binomial coefficients via ln_gamma), matching binomial_cdf
    elementwise; q_0 = q_n = 1 exactly.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
        raise DomainError(f"n must be an integer >= 2, got {n!r}")
    n = int(n)
    q = np.ones(n + 1)
    k = np.arange(n + 1, dtype=float)
    ln_coef = ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0)
    p = np.arange(1, n, dtype=float) / n
    log_terms = (ln_coef[None, :]
                 + k[None, :] * np.log(p)[:, None]
                 + (n - k[None, :]) * np.log1p(-p)[:, None])
    keep = k[None, :] <= np.arange(1, n)[:, None]
    q[1:n] = np.minimum(np.where(keep, np.exp(log_terms), 0.0).sum(axis=1), 1.0)
    m_star = int(np.argmin(q))
    ties = tuple(int(i) for i in np.flatnonzero(q == q[m_star]))
    return ChvatalResult(n=n, m_star=m_star, q_values=q, ties=ties)
