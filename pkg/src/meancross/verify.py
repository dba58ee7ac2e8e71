"""Independent oracles for the closed forms and minimizers.

Three routes that share nothing with the closed-form code paths:

  * adaptive Simpson quadrature of the raw densities,
  * seeded Monte Carlo through the inverse-transform samplers,
  * dense grid scans of the shape objective,

assembled by `run_verification` into a pass/fail report.

Randomness comes from splitmix64 (Steele, Lea, Flood 2014) implemented
here rather than any platform RNG, so sample streams are reproducible
bit-for-bit everywhere.  Variate i is a pure function of (seed, i):
disjoint index ranges partition the stream deterministically, and the
hit-count estimator makes the merged result independent of how the
sample count is split across workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .distributions import (
    ParetoParams,
    WeibullParams,
    pareto_mean,
    pareto_prob_below_kappa_mean,
    pareto_sample,
    validate_kappa,
    weibull_mean,
    weibull_prob_below_kappa_mean,
    weibull_sample,
)
from .errors import DomainError, QuadratureError
from .minimizers import (
    KIND_ATTAINED,
    MinimizationResult,
    minimize_pareto,
    minimize_weibull,
)

__all__ = [
    "uniform_stream",
    "integrate_density", "mc_prob_below_kappa_mean", "grid_scan_min",
    "VerifyConfig", "VerificationReport", "run_verification",
]

_U64 = np.uint64
_GOLDEN = _U64(0x9E3779B97F4A7C15)
_MIX_1 = _U64(0xBF58476D1CE4E5B9)
_MIX_2 = _U64(0x94D049BB133111EB)
_INV_2_53 = 1.0 / 9007199254740992.0  # 2**-53


def uniform_stream(seed: int, start: int, count: int) -> np.ndarray:
    """Variates `start`..`start+count-1` of the seeded splitmix64 stream,
    mapped into the open interval (0, 1).

    Output i equals the i-th sequential splitmix64 draw for this seed;
    computing it directly from the index is what makes partitioned
    generation order-independent.
    """
    if not 0 <= int(seed) < 1 << 64:
        raise ValueError("seed must fit an unsigned 64-bit integer")
    if count < 0 or start < 0:
        raise ValueError("stream indices must be nonnegative")
    idx = np.arange(start + 1, start + count + 1, dtype=_U64)
    z = _U64(seed) + idx * _GOLDEN  # wraps mod 2**64
    z = (z ^ (z >> _U64(30))) * _MIX_1
    z = (z ^ (z >> _U64(27))) * _MIX_2
    z = z ^ (z >> _U64(31))
    # top 53 bits, offset half a step: strictly inside (0, 1)
    return ((z >> _U64(11)).astype(np.float64) + 0.5) * _INV_2_53


# --------------------------------------------------------------------------
# Quadrature

_MAX_DEPTH = 48


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, b, fa, fm, fb, whole, tol, depth):
    mid = 0.5 * (a + b)
    lm = 0.5 * (a + mid)
    rm = 0.5 * (mid + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, mid - a)
    right = _simpson(fm, frm, fb, b - mid)
    delta = (left + right - whole) / 15.0
    if abs(delta) <= tol:
        return left + right + delta, abs(delta)
    if depth >= _MAX_DEPTH:
        raise QuadratureError(
            f"subdivision cap reached on [{a}, {b}]",
            partial=left + right + delta, err_est=abs(delta))
    lv, le = _adaptive(f, a, mid, fa, flm, fm, left, 0.5 * tol, depth + 1)
    rv, re = _adaptive(f, mid, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
    return lv + rv, le + re


def _adaptive_simpson(f, a: float, b: float, tol: float) -> tuple[float, float]:
    if b <= a:
        return 0.0, 0.0
    fa, fb = f(a), f(b)
    mid = 0.5 * (a + b)
    fm = f(mid)
    whole = _simpson(fa, fm, fb, b - a)
    return _adaptive(f, a, b, fa, fm, fb, whole, tol, 0)


def _weibull_density(p: WeibullParams, t: float) -> float:
    # right-continuous at 0 so the integrand has no artificial jump
    if t < 0.0:
        return 0.0
    if t == 0.0:
        if p.alpha > 1.0:
            return 0.0
        return 1.0 / p.theta if p.alpha == 1.0 else math.inf
    log_t = math.log(t)
    v = p.alpha * log_t - math.log(p.theta)  # log of t**alpha/theta
    if v > 700.0:
        return 0.0
    log_density = math.log(p.alpha / p.theta) + (p.alpha - 1.0) * log_t - math.exp(v)
    return math.exp(log_density) if log_density > -745.0 else 0.0


def _pareto_density(p: ParetoParams, t: float) -> float:
    if t < p.a:
        return 0.0
    if t == p.a:
        return p.theta / p.a  # limit from the right; support is open at a
    return p.theta * math.exp(p.theta * math.log(p.a) - (p.theta + 1.0) * math.log(t))


def integrate_density(params, upper: float, abs_tol: float = 1e-10) -> tuple[float, float]:
    """Adaptive quadrature of the density from the support's lower end to
    `upper`.  Returns (value, error_estimate).

    For Weibull shapes below 1 the density blows up at 0; the first
    panel substitutes u = t**alpha, which turns it into the bounded
    integrand exp(-u/theta)/theta.
    """
    if not abs_tol > 0.0:
        raise ValueError("abs_tol must be positive")
    if not math.isfinite(upper):
        raise DomainError("upper integration limit must be finite")

    if isinstance(params, WeibullParams):
        if upper < 0.0:
            raise DomainError("upper limit below the Weibull support")
        if upper == 0.0:
            return 0.0, 0.0
        if params.alpha < 1.0:
            # cut at the scale point t = theta**(1/alpha) without overflowing
            log_scale = math.log(params.theta) / params.alpha
            cut = upper if log_scale >= math.log(upper) else math.exp(log_scale)
            u_lim = math.exp(params.alpha * math.log(cut))
            theta = params.theta
            head, head_err = _adaptive_simpson(
                lambda u: math.exp(-u / theta) / theta, 0.0, u_lim, 0.5 * abs_tol)
            tail, tail_err = (0.0, 0.0) if cut >= upper else _adaptive_simpson(
                lambda t: _weibull_density(params, t), cut, upper, 0.5 * abs_tol)
            return head + tail, head_err + tail_err
        return _adaptive_simpson(
            lambda t: _weibull_density(params, t), 0.0, upper, abs_tol)

    if isinstance(params, ParetoParams):
        if upper < params.a:
            raise DomainError("upper limit below the Pareto support")
        return _adaptive_simpson(
            lambda t: _pareto_density(params, t), params.a, upper, abs_tol)

    raise TypeError(f"unsupported family parameters: {type(params).__name__}")


# --------------------------------------------------------------------------
# Monte Carlo

def _family_mean(params) -> float:
    if isinstance(params, WeibullParams):
        return weibull_mean(params)
    if isinstance(params, ParetoParams):
        return pareto_mean(params)
    raise TypeError(f"unsupported family parameters: {type(params).__name__}")


def _family_sample(params, u: np.ndarray) -> np.ndarray:
    if isinstance(params, WeibullParams):
        return weibull_sample(params, u)
    return pareto_sample(params, u)


def mc_prob_below_kappa_mean(params, kappa: float, n_samples: int,
                             seed: int = 0) -> tuple[float, float]:
    """Seeded inverse-transform estimate of P(X <= kappa * EX).

    Returns (estimate, half_width) with half_width the 4-sigma binomial
    bound 4*sqrt(p*(1-p)/n).  Deterministic for a fixed seed.
    """
    k = validate_kappa(kappa)
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    threshold = k * _family_mean(params)
    u = uniform_stream(seed, 0, n_samples)
    hits = int(np.count_nonzero(_family_sample(params, u) <= threshold))
    estimate = hits / n_samples
    half_width = 4.0 * math.sqrt(estimate * (1.0 - estimate) / n_samples)
    return estimate, half_width


# --------------------------------------------------------------------------
# Grid scan

def grid_scan_min(family: str, kappa: float, lo: float, hi: float,
                  steps: int) -> tuple[float, float]:
    """Brute-force minimum of the closed-form shape objective on a uniform
    grid of steps+1 points over [lo, hi].  Ties go to the smallest
    parameter.  Returns (argmin, value).
    """
    if steps < 10:
        raise ValueError("steps must be at least 10")
    if not lo < hi:
        raise ValueError(f"grid interval out of order: [{lo}, {hi}]")
    grid = np.linspace(lo, hi, steps + 1)
    if family == "weibull":
        values = weibull_prob_below_kappa_mean(grid, kappa)
    elif family == "pareto":
        values = pareto_prob_below_kappa_mean(grid, kappa)
    else:
        raise ValueError(f"unknown family {family!r}")
    i = int(np.argmin(values))  # argmin returns the first, i.e. smallest, index
    return float(grid[i]), float(values[i])


# --------------------------------------------------------------------------
# Report assembly

@dataclass(frozen=True)
class VerifyConfig:
    """Tolerances and budgets for one verification run."""

    n_samples: int = 1_000_000
    seed: int = 0
    quad_abs_tol: float = 1e-10
    quad_agree_tol: float = 1e-9
    # ~1e-4 shape resolution over (0, 50]; coarser grids cannot resolve
    # the minimum value to value_agree_tol on the flat quadratic bottom
    grid_steps: int = 500_000
    grid_hi: float = 50.0
    value_agree_tol: float = 1e-8


@dataclass(frozen=True)
class VerificationReport:
    """Closed form against its three independent oracles.

    `passed` maps check names to outcomes; a check that does not apply
    (no attained minimum, so no grid comparison) is simply absent.
    Sub-operation failures are carried in `error` instead of aborting.
    """

    family: str
    kappa: float
    closed_form: float | None = None
    quadrature: float | None = None
    quadrature_err_est: float | None = None
    mc_estimate: float | None = None
    mc_half_width: float | None = None
    grid_argmin: float | None = None
    grid_value: float | None = None
    minimizer_argmin: float | None = None
    minimizer_value: float | None = None
    grid_step: float | None = None
    passed: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def all_passed(self) -> bool:
        return self.error is None and bool(self.passed) and all(self.passed.values())

    def failing_checks(self) -> list[str]:
        return [name for name, ok in self.passed.items() if not ok]


def _grid_window(family: str, kappa: float, result: MinimizationResult,
                 config: VerifyConfig) -> tuple[float, float]:
    argmin = result.argmin
    if family == "weibull":
        lo = min(0.01, 0.5 * argmin)
        hi = max(config.grid_hi, 2.0 * argmin)
    else:
        lo = 1.0 + min(1e-4, 0.5 * (argmin - 1.0))
        if kappa < 1.0:
            return lo, argmin  # right endpoint is the attained argmin
        hi = max(config.grid_hi, 2.0 * argmin)
    return lo, hi


def run_verification(params, kappa: float,
                     config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """Compare the closed-form P(X <= kappa * EX) against quadrature and
    Monte Carlo, and (when the family attains its minimum at this kappa)
    the root-based minimizer against a dense grid scan.
    """
    if isinstance(params, WeibullParams):
        family, shape = "weibull", params.alpha
    elif isinstance(params, ParetoParams):
        family, shape = "pareto", params.theta
    else:
        raise TypeError(f"unsupported family parameters: {type(params).__name__}")

    k = validate_kappa(kappa)
    try:
        mean = _family_mean(params)
        if family == "weibull":
            closed = weibull_prob_below_kappa_mean(shape, k)
        else:
            closed = pareto_prob_below_kappa_mean(shape, k)
    except DomainError as exc:
        return VerificationReport(family=family, kappa=k, error=str(exc))

    checks: dict[str, bool] = {}
    try:
        quad, quad_err = integrate_density(params, k * mean, config.quad_abs_tol)
        checks["quadrature"] = abs(closed - quad) <= config.quad_agree_tol
    except QuadratureError as exc:
        # non-convergence becomes a failed check carrying the partial value
        quad, quad_err = exc.partial, exc.err_est
        checks["quadrature"] = False

    mc_est, mc_half = mc_prob_below_kappa_mean(params, k, config.n_samples,
                                               config.seed)
    checks["monte_carlo"] = abs(closed - mc_est) <= mc_half

    grid_argmin = grid_value = min_argmin = min_value = step = None
    minimum = minimize_weibull(k) if family == "weibull" else minimize_pareto(k)
    if minimum.kind == KIND_ATTAINED:
        lo, hi = _grid_window(family, k, minimum, config)
        grid_argmin, grid_value = grid_scan_min(family, k, lo, hi,
                                                config.grid_steps)
        step = (hi - lo) / config.grid_steps
        min_argmin, min_value = minimum.argmin, minimum.value
        checks["grid"] = (abs(grid_argmin - min_argmin) <= step
                          and abs(grid_value - min_value) <= config.value_agree_tol
                          and grid_value >= min_value - config.value_agree_tol)

    return VerificationReport(
        family=family, kappa=k,
        closed_form=closed,
        quadrature=quad, quadrature_err_est=quad_err,
        mc_estimate=mc_est, mc_half_width=mc_half,
        grid_argmin=grid_argmin, grid_value=grid_value,
        minimizer_argmin=min_argmin, minimizer_value=min_value,
        grid_step=step,
        passed=checks)
