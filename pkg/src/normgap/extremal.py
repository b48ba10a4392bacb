"""The tail-gap function, its stationarity structure, and the extremal constants.

For a zero-mean unit-variance random variable, the one-sided tail above x > 0
is capped by 1/(1+x^2) while the normal tail there is Phi(-x); the pointwise
room between the two is

    tail_gap(x) = 1/(1+x^2) - Phi(-|x|),

an even, positive function.  Its maximum over x >= 0 sits where

    critical_ratio(x) := x * exp(x^2/2) / (1+x^2)^2

crosses 1/sqrt(8*pi) (the derivative of the gap factors through this ratio,
which is strictly increasing on (0, inf)).  ``solve_constants`` locates that
crossing and packages the resulting pair (x_phi, c_phi): c_phi is the sharp
uniform bound on sup_x |F(x) - Phi(x)| over all zero-mean unit-variance F,
attained by the two-point law built in :mod:`normgap.distributions`.

Solved values (double precision):

    x_phi = 0.21310577151771587...,  c_phi = 0.5409365415486735...

Note: the previously published tabulation of the crossing reports
0.21310518, whose trailing two digits are inconsistent with the defining
equation (the ratio there is 4.8e-7 below the threshold); the published
maximum 0.5409365 is unaffected because the gap is flat at its peak.  The
published digits are kept below as documentation constants.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from . import specfun
from .errors import ArgumentError, DomainError, InternalError, RangeError

CRITICAL_TARGET = 1.0 / math.sqrt(8.0 * math.pi)

# published digits, kept for regression comparison (see module docstring)
REPORTED_ROOT_DIGITS = 0.21310518
REPORTED_MAX_DIGITS = 0.5409365

_LOG_DBL_MAX = 709.782712893384
_BRACKET = (1e-6, 1.0)


@dataclass(frozen=True)
class ExtremalConstants:
    """The solved location/value of the gap maximum.

    x_phi      -- positive maximizer of the tail gap (root of the crossing)
    c_phi      -- tail_gap(x_phi), the sharp uniform-distance bound
    target     -- 1/sqrt(8*pi), the crossing threshold
    solve_tol  -- width of the root bracket at termination
    """

    x_phi: float
    c_phi: float
    target: float
    solve_tol: float


def tail_gap(x):
    """1/(1+x^2) - Phi(-|x|); even and strictly positive."""
    x = float(x)
    if math.isnan(x):
        raise DomainError("NaN input")
    return 1.0 / (1.0 + x * x) - specfun.normal_sf(abs(x))


def tail_gap_derivative(x):
    """Derivative of the tail gap: -2x/(1+x^2)^2 + pdf(x) for x >= 0.

    Extended to x < 0 as the odd reflection; at 0 the one-sided (x -> 0+)
    value pdf(0) is returned, matching the evenness of the gap itself.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("NaN input")
    if x < 0.0:
        return -tail_gap_derivative(-x)
    s = 1.0 + x * x
    return -2.0 * x / (s * s) + specfun.normal_pdf(x)


def critical_ratio(x):
    """x * exp(x^2/2) / (1+x^2)^2, strictly increasing on (0, inf)."""
    x = float(x)
    if math.isnan(x) or x <= 0.0:
        raise DomainError("requires x > 0")
    e = 0.5 * x * x
    if e > _LOG_DBL_MAX:
        raise RangeError(f"exp({e:g}) overflows double precision")
    s = 1.0 + x * x
    return x * math.exp(e) / (s * s)


def critical_ratio_log_derivative(x, form="simplified"):
    """Logarithmic derivative of the critical ratio.

    Two algebraically equal forms are available:
      "expanded"   -- 1/x + x - 4x/(1+x^2)
      "simplified" -- (1-x^2)^2 / (x*(1+x^2))
    The simplified form is exactly zero at x = 1 and makes the sign pattern
    (negative for x < 0, positive for x > 0) explicit.
    """
    x = float(x)
    if math.isnan(x):
        raise DomainError("NaN input")
    if x == 0.0:
        raise DomainError("pole at x = 0")
    s = 1.0 + x * x
    if form == "simplified":
        d = 1.0 - x * x
        return d * d / (x * s)
    if form == "expanded":
        return 1.0 / x + x - 4.0 * x / s
    raise ArgumentError(f"form must be 'simplified' or 'expanded', got {form!r}")


def solve_constants(tol=1e-12):
    """Locate the gap maximum by solving critical_ratio(x) = 1/sqrt(8*pi).

    Bracketed search on [1e-6, 1] (valid since the ratio is increasing and
    the threshold lies between the endpoint values): bisection down to 1e-4,
    then Newton steps kept inside the shrinking bracket with bisection
    fallback, until the bracket is narrower than ``tol``; a final unbracketed
    Newton polish pins the residual to rounding level regardless of ``tol``.
    Deterministic: identical ``tol`` gives a bitwise-identical result.
    """
    tol = float(tol)
    if not (0.0 < tol <= 1e-6):
        raise ArgumentError(f"tol must lie in (0, 1e-6], got {tol:g}")

    def f(x):
        return critical_ratio(x) - CRITICAL_TARGET

    def fprime(x):
        return critical_ratio(x) * critical_ratio_log_derivative(x)

    a, b = _BRACKET
    fa, fb = f(a), f(b)
    if not (fa < 0.0 < fb):
        raise InternalError("initial bracket does not straddle the threshold")

    while b - a > 1e-4:
        m = 0.5 * (a + b)
        if f(m) < 0.0:
            a = m
        else:
            b = m

    x = 0.5 * (a + b)
    fx = f(x)
    while b - a > tol:
        step = fx / fprime(x)
        cand = x - step
        if not (a < cand < b):
            cand = 0.5 * (a + b)
        if cand == a or cand == b:
            break  # bracket at adjacent doubles; cannot shrink further
        fc = f(cand)
        if fc < 0.0:
            a = cand
        else:
            b = cand
        x, fx = cand, fc

    for _ in range(20):
        step = fx / fprime(x)
        nxt = x - step
        if nxt <= 0.0 or nxt == x:
            break
        x = nxt
        fx = f(x)
        if abs(step) < 4.0 * math.ulp(x):
            break

    constants = ExtremalConstants(
        x_phi=x,
        c_phi=tail_gap(x),
        target=CRITICAL_TARGET,
        solve_tol=b - a,
    )
    _validate(constants)
    return constants


def _validate(c):
    if not 0.2 < c.x_phi < 0.23:
        raise InternalError(f"solved maximizer {c.x_phi!r} out of expected range")
    if abs(critical_ratio(c.x_phi) - c.target) > 1e-12:
        raise InternalError("solved point does not satisfy the crossing equation")


@lru_cache(maxsize=None)
def constants(tol=1e-12):
    """Cached :func:`solve_constants`; one immutable value shared package-wide."""
    return solve_constants(tol)
