"""Uniform distance to the standard normal, tail-bound checks, comparisons.

Exact distance rule: for a step function F with atoms x_1 < ... < x_n, the
supremum of |F(x) - Phi(x)| over all real x is attained among the 2n
candidates {|F(x_i) - Phi(x_i)|, |F(x_i-) - Phi(x_i)|}.  On every interval
where F is constant the gap |c - Phi(x)| is monotone in x (Phi is strictly
increasing), so each interval's supremum is a limit at one of its atom
endpoints, where it equals either the right value or the left limit of F
against Phi at the atom.  This makes the distance a finite exact computation;
``grid_distance`` is the deliberately redundant brute-force scan used to
cross-check it.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import _cody, _kernels, extremal, specfun
from .distributions import cdf_at, cdf_left_limit, is_standardized, moments
from .errors import ArgumentError, InconsistencyError, PreconditionError

# one-summand normal-approximation constant (literature value, stored to the
# digits in which it is quoted; not recomputed here)
C1_ONE_SUMMAND = 0.37035

# earlier published bound for the same problem, kept for regression tests:
# the sharp constant computed by this package is strictly smaller
EARLIER_BOUND_ARGMAX = 0.2135
EARLIER_BOUND_VALUE = 0.5416

SIDE_LEFT_LIMIT = "left_limit"
SIDE_RIGHT_VALUE = "right_value"
SIGN_F_ABOVE = "F_above"
SIGN_F_BELOW = "F_below"
WINNER_BERRY_ESSEEN = "berry_esseen"
WINNER_UNIFORM = "uniform"


@dataclass(frozen=True)
class DistanceReport:
    """sup_x |F(x) - Phi(x)| with the attaining atom and side."""

    delta: float
    argmax_x: float
    side: str       # SIDE_LEFT_LIMIT or SIDE_RIGHT_VALUE
    gap_sign: str   # SIGN_F_ABOVE or SIGN_F_BELOW


@dataclass(frozen=True)
class GridDistance:
    """Brute-force dense-grid maximum of |F - Phi| (independent cross-check)."""

    delta: float
    argmax_x: float
    n_points: int
    quadrature_drift: float  # |accumulated Phi(hi) - libm Phi(hi)|, integrity check


@dataclass(frozen=True)
class CantelliReport:
    """Both one-sided tails of a standardized law against the 1/(1+x^2) cap."""

    x_probe: float
    lower_tail: float   # P(X <= -x)
    upper_tail: float   # P(X >= x)
    bound: float        # 1/(1+x^2)
    satisfied: bool
    slack: float        # bound - max(tails)


@dataclass(frozen=True)
class ComparisonReport:
    """Which of the two uniform-distance bounds is tighter for this law."""

    beta: float           # E|X|^3
    c1: float             # one-summand constant
    be_bound: float       # c1 * beta
    uniform_bound: float  # the sharp constant c_phi
    winner: str           # WINNER_UNIFORM iff uniform_bound < be_bound
    crossover: float      # c_phi / c1


def kolmogorov_distance(d):
    """Exact uniform distance of a finite discrete distribution to Phi.

    Evaluates the 2n candidate gaps (left limit and right value at every
    atom); ties resolve to the smallest atom, left limit first.
    """
    phi = specfun.normal_cdf(d.xs)
    signed = np.empty(2 * d.xs.size)
    signed[0::2] = d.cum[:-1] - phi  # left limits
    signed[1::2] = d.cum[1:] - phi   # right values
    k = int(np.argmax(np.abs(signed)))
    i, is_right = divmod(k, 2)
    return DistanceReport(
        delta=float(abs(signed[k])),
        argmax_x=float(d.xs[i]),
        side=SIDE_RIGHT_VALUE if is_right else SIDE_LEFT_LIMIT,
        gap_sign=SIGN_F_ABOVE if signed[k] > 0.0 else SIGN_F_BELOW,
    )


def grid_distance(d, step=1e-6, margin=8.0):
    """Dense-grid maximization of |F - Phi| over [min_atom - margin, max_atom + margin].

    Keeps no shortcuts: every grid point is visited.  Phi along the grid is
    accumulated by trapezoid quadrature of the density seeded with the C
    library's erfc, so this path is independent of both the candidate rule
    and the package's own CDF implementation.
    """
    if not (step > 0.0 and math.isfinite(step)):
        raise ArgumentError("step must be a positive real")
    if not (margin > 0.0 and math.isfinite(margin)):
        raise ArgumentError("margin must be a positive real")
    lo = float(d.xs[0]) - margin
    hi = float(d.xs[-1]) + margin
    n_pts = int(math.floor((hi - lo) / step)) + 1
    phi_lo = 0.5 * math.erfc(-lo * _cody.INV_SQRT2)
    best, kbest, acc = _kernels.max_gap_scan(d.xs, d.cum, lo, step, n_pts, phi_lo)
    t_end = lo + (n_pts - 1) * step
    drift = abs(acc - 0.5 * math.erfc(-t_end * _cody.INV_SQRT2))
    return GridDistance(
        delta=float(best),
        argmax_x=lo + kbest * step,
        n_points=n_pts,
        quadrature_drift=float(drift),
    )


def cantelli_check(d, x):
    """Check both one-sided tail bounds P(X <= -x), P(X >= x) <= 1/(1+x^2).

    Only claimed for zero-mean unit-variance laws, hence the precondition.
    The upper tail counts mass sitting exactly at x (1 minus the left limit),
    which is the convention under which the extremal law meets the bound with
    equality.
    """
    x = float(x)
    if not (x > 0.0 and math.isfinite(x)):
        raise ArgumentError("probe must be a positive finite real")
    if not is_standardized(d, 1e-9):
        raise PreconditionError("tail bound requires zero mean and unit variance")
    lower = cdf_at(d, -x)
    upper = 1.0 - cdf_left_limit(d, x)
    bound = 1.0 / (1.0 + x * x)
    worst = max(lower, upper)
    return CantelliReport(
        x_probe=x,
        lower_tail=lower,
        upper_tail=upper,
        bound=bound,
        satisfied=worst <= bound + 1e-12,
        slack=bound - worst,
    )


def compare_berry_esseen(d, constants=None):
    """Pick the tighter bound: c1 * E|X|^3 versus the sharp uniform constant."""
    if constants is None:
        constants = extremal.constants()
    if not is_standardized(d, 1e-9):
        raise PreconditionError("comparison requires zero mean and unit variance")
    beta = moments(d).beta
    if beta < 1.0 - 1e-9:
        raise InconsistencyError(
            f"third absolute moment {beta!r} below 1 contradicts unit variance")
    be_bound = C1_ONE_SUMMAND * beta
    uniform_bound = constants.c_phi
    return ComparisonReport(
        beta=beta,
        c1=C1_ONE_SUMMAND,
        be_bound=be_bound,
        uniform_bound=uniform_bound,
        winner=WINNER_UNIFORM if uniform_bound < be_bound else WINNER_BERRY_ESSEEN,
        crossover=constants.c_phi / C1_ONE_SUMMAND,
    )
