"""Bracketing and bisection for strictly monotone scalar functions.

Deterministic: identical inputs produce bit-identical results.  The
function being solved must be safe to evaluate at every probed point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import BracketError, MaxIterationsError

__all__ = [
    "DEFAULT_XTOL", "DEFAULT_FTOL", "DEFAULT_MAX_ITER",
    "Bracket", "RootResult", "expand_bracket", "bisect",
]

# Bisection needs ~60 iterations to reach 1e-12 from a unit bracket, so
# a cap of 200 leaves ample slack.
DEFAULT_XTOL = 1e-12
DEFAULT_FTOL = 1e-12
DEFAULT_MAX_ITER = 200


def _sign(v: float) -> int:
    if v > 0.0:
        return 1
    if v < 0.0:
        return -1
    return 0


@dataclass(frozen=True)
class Bracket:
    """An interval [lo, hi] whose endpoint values straddle a sign change."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise BracketError(f"bracket endpoints out of order: [{self.lo}, {self.hi}]")
        if not (math.isfinite(self.f_lo) and math.isfinite(self.f_hi)):
            raise BracketError("bracket endpoint values must be finite")
        if _sign(self.f_lo) == _sign(self.f_hi):
            raise BracketError(
                f"no sign change across [{self.lo}, {self.hi}]: "
                f"f(lo)={self.f_lo}, f(hi)={self.f_hi}")

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class RootResult:
    """Located root with its residual, enclosing bracket, and work count."""

    root: float
    residual: float
    bracket_final: Bracket
    iterations: int


def expand_bracket(
    f: Callable[[float], float],
    seed_lo: float,
    seed_hi: float,
    direction: str = "expand_hi",
    growth: float = 2.0,
    cap: int = 60,
) -> Bracket:
    """Grow [seed_lo, seed_hi] geometrically until f changes sign.

    Each step multiplies the interval length by `growth`, moving only the
    endpoint named by `direction`.  Returns the tightest probed
    sub-interval straddling the sign change.  Raises BracketError when no
    sign change appears within `cap` steps, which signals either an
    argument outside the valid case or a caller bug.
    """
    if direction not in ("expand_hi", "expand_lo"):
        raise ValueError(f"direction must be 'expand_hi' or 'expand_lo', got {direction!r}")
    if not growth > 1.0:
        raise ValueError(f"growth must exceed 1, got {growth}")
    if not seed_lo < seed_hi:
        raise ValueError(f"seed interval out of order: [{seed_lo}, {seed_hi}]")

    lo, hi = float(seed_lo), float(seed_hi)
    f_lo, f_hi = float(f(lo)), float(f(hi))
    if not (math.isfinite(f_lo) and math.isfinite(f_hi)):
        raise BracketError("f is not finite on the seed interval")
    if _sign(f_lo) != _sign(f_hi):
        return Bracket(lo, hi, f_lo, f_hi)

    length = hi - lo
    for _ in range(cap):
        length *= growth
        if direction == "expand_hi":
            prev, f_prev = hi, f_hi
            hi = lo + length
            f_hi = float(f(hi))
            if not math.isfinite(f_hi):
                raise BracketError(f"f({hi}) is not finite during expansion")
            if _sign(f_hi) != _sign(f_prev):
                return Bracket(prev, hi, f_prev, f_hi)
        else:
            prev, f_prev = lo, f_lo
            lo = hi - length
            f_lo = float(f(lo))
            if not math.isfinite(f_lo):
                raise BracketError(f"f({lo}) is not finite during expansion")
            if _sign(f_lo) != _sign(f_prev):
                return Bracket(lo, prev, f_lo, f_prev)
    raise BracketError(f"no sign change within {cap} expansion steps")


def bisect(
    f: Callable[[float], float],
    bracket: Bracket,
    xtol: float = DEFAULT_XTOL,
    ftol: float = DEFAULT_FTOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """Shrink a bracket by bisection until it is narrower than `xtol` or
    the midpoint residual falls below `ftol`.

    The bracket invariant (endpoints straddle the sign change) holds
    after every iteration.  A probe that evaluates exactly to zero
    returns immediately.  Exceeding `max_iter` raises MaxIterationsError
    with the best bracket attached.
    """
    if not xtol > 0.0:
        raise ValueError(f"xtol must be positive, got {xtol}")
    if bracket.f_lo == 0.0:
        return RootResult(bracket.lo, 0.0, bracket, 0)
    if bracket.f_hi == 0.0:
        return RootResult(bracket.hi, 0.0, bracket, 0)

    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    lo_negative = f_lo < 0.0
    for iteration in range(1, max_iter + 1):
        mid = 0.5 * (lo + hi)
        f_mid = float(f(mid))
        if f_mid == 0.0:
            return RootResult(mid, 0.0, Bracket(lo, hi, f_lo, f_hi), iteration)
        if (f_mid < 0.0) == lo_negative:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if (hi - lo) <= xtol or abs(f_mid) <= ftol:
            return RootResult(mid, f_mid, Bracket(lo, hi, f_lo, f_hi), iteration)
    raise MaxIterationsError(
        f"no convergence within {max_iter} iterations",
        bracket=Bracket(lo, hi, f_lo, f_hi))
