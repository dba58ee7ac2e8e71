"""Exception types shared across the package.

Domain violations raise typed errors instead of propagating NaN.
"""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class MeanUndefinedError(DomainError):
    """The requested distribution has no finite mean."""


class BracketError(RuntimeError):
    """A sign-change bracket could not be established or was malformed."""


class MaxIterationsError(RuntimeError):
    """Root refinement hit its iteration cap.

    The best bracket reached so far is attached as ``bracket``.
    """

    def __init__(self, message: str, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class QuadratureError(RuntimeError):
    """Adaptive integration exceeded its subdivision cap.

    ``partial`` and ``err_est`` hold the estimate of the offending panel.
    """

    def __init__(self, message: str, partial: float | None = None,
                 err_est: float | None = None):
        super().__init__(message)
        self.partial = partial
        self.err_est = err_est
