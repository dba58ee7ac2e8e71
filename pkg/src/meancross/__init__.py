"""Minimum mean-crossing probabilities over shape parameters.

For a Weibull or Pareto random variable X the probability
P(X <= kappa * EX) depends only on the family's shape parameter.  This
package computes its minimum (or infimum) over that shape, locates the
minimizer through the characteristic root equation when one is
attained, enumerates the analogous binomial argmin over m in {0..n},
and cross-checks every closed form with independent quadrature, Monte
Carlo, and grid-scan oracles.
"""

from .distributions import (
    BinomialParams,
    ParetoParams,
    WeibullParams,
    binomial_cdf,
    pareto_cdf,
    pareto_mean,
    pareto_prob_below_kappa_mean,
    pareto_sample,
    weibull_cdf,
    weibull_mean,
    weibull_prob_below_kappa_mean,
    weibull_sample,
)
from .errors import (
    BracketError,
    DomainError,
    MaxIterationsError,
    MeanUndefinedError,
    QuadratureError,
)
from .minimizers import (
    KIND_ATTAINED,
    KIND_INFIMUM,
    ChvatalResult,
    MinimizationResult,
    chvatal_argmin,
    h_pareto,
    h_weibull,
    minimize_pareto,
    minimize_weibull,
    nearest_to_two_thirds,
    phi_pareto,
    phi_weibull,
)
from .rootfind import Bracket, RootResult, bisect, expand_bracket
from .specfun import EULER_GAMMA, digamma, euler_gamma, ln_gamma, trigamma
from .verify import (
    VerificationReport,
    VerifyConfig,
    grid_scan_min,
    integrate_density,
    mc_prob_below_kappa_mean,
    run_verification,
    uniform_stream,
)

__version__ = "0.1.0"

__all__ = [
    "EULER_GAMMA", "ln_gamma", "digamma", "trigamma", "euler_gamma",
    "Bracket", "RootResult", "expand_bracket", "bisect",
    "WeibullParams", "ParetoParams", "BinomialParams",
    "weibull_mean", "weibull_cdf", "weibull_prob_below_kappa_mean", "weibull_sample",
    "pareto_mean", "pareto_cdf", "pareto_prob_below_kappa_mean", "pareto_sample",
    "binomial_cdf",
    "KIND_ATTAINED", "KIND_INFIMUM", "MinimizationResult", "ChvatalResult",
    "phi_weibull", "h_weibull", "minimize_weibull",
    "phi_pareto", "h_pareto", "minimize_pareto",
    "chvatal_argmin", "nearest_to_two_thirds",
    "uniform_stream", "integrate_density", "mc_prob_below_kappa_mean",
    "grid_scan_min", "VerifyConfig", "VerificationReport", "run_verification",
    "DomainError", "MeanUndefinedError", "BracketError",
    "MaxIterationsError", "QuadratureError",
]
