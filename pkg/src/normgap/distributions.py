"""Finite discrete distributions and the extremal two-point family.

A :class:`DiscreteDistribution` is an immutable list of atoms (strictly
increasing locations, positive masses summing to one) with right-continuous
CDF semantics.  The one-parameter family ``make_two_point(a)`` places mass
a^2/(1+a^2) at -1/a and 1/(1+a^2) at a, which has mean 0 and variance 1 for
every a > 0; at a = x_phi it is the distribution attaining the sharp uniform
distance to the normal CDF, and its mirror (the law of the negated variable)
attains it as well.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, DomainError

FORMAT_TAG = "vclass-dist/1"

MERGE_EPS = 1e-14       # atoms closer than this are merged (mass summed)
NORMALIZE_TOL = 1e-9    # acceptable drift of sum(p) from 1 before rejection
EXTREME_PARAM_LO = 1e-3
EXTREME_PARAM_HI = 1e3


@dataclass(frozen=True)
class MomentSummary:
    """First moments of a finite distribution (beta = E|X|^3)."""

    mean: float
    variance: float
    beta: float


class DiscreteDistribution:
    """Immutable finite distribution with sorted atoms and exact CDF jumps.

    The constructor sorts, strips zero-mass atoms, merges near-duplicate
    locations, and renormalizes masses whose sum drifted from 1 by at most
    1e-9 (larger drift is rejected as malformed input).  Masses are then
    re-derived from the cumulative sums so that CDF jumps equal the stored
    probabilities bitwise.
    """

    __slots__ = ("_xs", "_ps", "_cum")

    def __init__(self, xs, ps):
        xs = np.atleast_1d(np.asarray(xs, dtype=np.float64))
        ps = np.atleast_1d(np.asarray(ps, dtype=np.float64))
        if xs.ndim != 1 or ps.ndim != 1 or xs.shape != ps.shape:
            raise ArgumentError("atom locations and masses must be equal-length 1-D")
        if xs.size == 0:
            raise ArgumentError("a distribution needs at least one atom")
        if not np.isfinite(xs).all():
            raise ArgumentError("atom locations must be finite")
        if np.isnan(ps).any() or (ps < 0.0).any() or np.isinf(ps).any():
            raise ArgumentError("atom masses must be finite and nonnegative")

        keep = ps > 0.0
        xs, ps = xs[keep], ps[keep]
        if xs.size == 0:
            raise ArgumentError("all atoms have zero mass")

        order = np.argsort(xs, kind="stable")
        xs, ps = xs[order], ps[order]

        mx, mp = [xs[0]], [ps[0]]
        for x, p in zip(xs[1:], ps[1:]):
            if x - mx[-1] < MERGE_EPS:
                mp[-1] += p
            else:
                mx.append(x)
                mp.append(p)
        xs = np.array(mx)
        ps = np.array(mp)

        total = float(ps.sum())
        if abs(total - 1.0) > NORMALIZE_TOL:
            raise ArgumentError(f"masses sum to {total!r}, not 1 within {NORMALIZE_TOL:g}")
        ps = ps / total

        cum = np.empty(xs.size + 1)
        cum[0] = 0.0
        np.cumsum(ps, out=cum[1:])
        cum[-1] = 1.0
        ps = np.diff(cum)

        for arr in (xs, ps, cum):
            arr.setflags(write=False)
        self._xs = xs
        self._ps = ps
        self._cum = cum

    @classmethod
    def from_pairs(cls, pairs):
        """Build from an iterable of (location, mass) pairs."""
        pairs = list(pairs)
        if not pairs:
            raise ArgumentError("a distribution needs at least one atom")
        xs = [float(x) for x, _ in pairs]
        ps = [float(p) for _, p in pairs]
        return cls(xs, ps)

    @property
    def xs(self):
        """Atom locations, strictly increasing."""
        return self._xs

    @property
    def ps(self):
        """Atom masses; jumps of the CDF, exactly."""
        return self._ps

    @property
    def cum(self):
        """Cumulative masses with leading 0 and trailing exact 1."""
        return self._cum

    def __len__(self):
        return self._xs.size

    def __eq__(self, other):
        if not isinstance(other, DiscreteDistribution):
            return NotImplemented
        return np.array_equal(self._xs, other._xs) and np.array_equal(self._ps, other._ps)

    __hash__ = None

    def __repr__(self):
        if len(self) <= 4:
            inner = ", ".join(f"({x!r}, {p!r})" for x, p in zip(self._xs, self._ps))
            return f"DiscreteDistribution([{inner}])"
        return f"DiscreteDistribution(<{len(self)} atoms on [{self._xs[0]!r}, {self._xs[-1]!r}]>)"


def moments(d):
    """Mean, variance (second moment minus squared mean) and E|X|^3."""
    mean = float(np.dot(d.ps, d.xs))
    variance = float(np.dot(d.ps, d.xs * d.xs) - mean * mean)
    beta = float(np.dot(d.ps, np.abs(d.xs) ** 3))
    return MomentSummary(mean=mean, variance=max(variance, 0.0), beta=beta)


def is_standardized(d, tol=1e-9):
    """True iff the distribution has zero mean and unit variance within tol."""
    if not tol > 0.0:
        raise ArgumentError("tol must be positive")
    m = moments(d)
    return abs(m.mean) <= tol and abs(m.variance - 1.0) <= tol


def make_two_point(a):
    """The mean-0 variance-1 two-point law with atoms -1/a and a (a > 0)."""
    a = float(a)
    if not (math.isfinite(a) and a > 0.0 and math.isfinite(1.0 / a)):
        raise ArgumentError(f"parameter must be a positive finite real, got {a!r}")
    s = 1.0 + a * a
    return DiscreteDistribution([-1.0 / a, a], [a * a / s, 1.0 / s])


def is_extreme_parameter(a):
    """Parameters far from 1 push an atom out to +-1/a; reports flag these."""
    return not (EXTREME_PARAM_LO <= a <= EXTREME_PARAM_HI)


def mirror(d):
    """The law of the negated variable: atoms reflected and reordered."""
    return DiscreteDistribution(-d.xs[::-1], d.ps[::-1])


def extremal_distribution(constants, mirrored=False):
    """The two-point law at the solved extremal parameter (or its mirror)."""
    base = make_two_point(constants.x_phi)
    return mirror(base) if mirrored else base


def standardize(d):
    """Affine map onto zero mean and unit variance."""
    m = moments(d)
    if m.variance <= 1e-12:
        raise ArgumentError("variance too small to standardize")
    sigma = math.sqrt(m.variance)
    return DiscreteDistribution((d.xs - m.mean) / sigma, d.ps)


def cdf_at(d, x):
    """Right-continuous CDF: total mass at or below x (+-inf accepted)."""
    x = float(x)
    if math.isnan(x):
        raise DomainError("NaN input")
    return float(d.cum[np.searchsorted(d.xs, x, side="right")])


def cdf_left_limit(d, x):
    """Left limit of the CDF at x: total mass strictly below x."""
    x = float(x)
    if math.isnan(x):
        raise DomainError("NaN input")
    return float(d.cum[np.searchsorted(d.xs, x, side="left")])


# ---------------------------------------------------------------------------
# JSON wire format: {"format": "vclass-dist/1", "atoms": [{"x": .., "p": ..}]}
# ---------------------------------------------------------------------------

def to_json_dict(d):
    return {
        "format": FORMAT_TAG,
        "atoms": [{"x": float(x), "p": float(p)} for x, p in zip(d.xs, d.ps)],
    }


def from_json_dict(obj):
    if not isinstance(obj, dict):
        raise ArgumentError("distribution JSON must be an object")
    tag = obj.get("format", FORMAT_TAG)
    if tag != FORMAT_TAG:
        raise ArgumentError(f"unsupported format tag {tag!r} (expected {FORMAT_TAG!r})")
    atoms = obj.get("atoms")
    if not isinstance(atoms, list) or not atoms:
        raise ArgumentError("'atoms' must be a non-empty list")
    xs, ps = [], []
    for i, entry in enumerate(atoms):
        if not isinstance(entry, dict) or "x" not in entry or "p" not in entry:
            raise ArgumentError(f"atom #{i} must be an object with keys 'x' and 'p'")
        try:
            xs.append(float(entry["x"]))
            ps.append(float(entry["p"]))
        except (TypeError, ValueError) as exc:
            raise ArgumentError(f"atom #{i} has non-numeric fields") from exc
    return DiscreteDistribution(xs, ps)


def dumps(d, indent=None):
    return json.dumps(to_json_dict(d), indent=indent)


def loads(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArgumentError(f"invalid JSON: {exc}") from exc
    return from_json_dict(obj)
