"""Verification campaigns: family sweeps, randomized stress tests, curve data.

The two-point sweep and the constants solver reach the same number through
disjoint computations -- CDF-distance maximization here, stationarity root
finding there -- so their agreement is a meaningful consistency check rather
than a tautology.

One structural fact shapes the sweep: the distance is invariant under
mirroring (negating the variable), and within the two-point family the
mirror of parameter a is parameter 1/a.  Whenever a sweep range contains both
a maximizer and its reciprocal, the two peaks tie exactly; the sweep then
reports the smaller-a representative so results are deterministic instead of
hinging on rounding noise between the tied peaks.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import extremal
from .distributions import (
    DiscreteDistribution,
    cdf_at,
    is_extreme_parameter,
    make_two_point,
    mirror,
    standardize,
    to_json_dict,
)
from .errors import ArgumentError, InternalError
from .metrics import cantelli_check, kolmogorov_distance
from .specfun import normal_cdf

CANTELLI_PROBES = (0.1, 0.5, 1.0, 2.0, 5.0)
SAMPLER_UNIFORM = "uniform"
SAMPLER_NEAR_EXTREMAL = "near_extremal"

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_REFINE_TOL = 1e-9
_TIE_TOL = 1e-9


@dataclass(frozen=True)
class SweepResult:
    """Grid of (a, delta) over the two-point family plus the refined maximum."""

    a_grid: np.ndarray
    delta_grid: np.ndarray
    best_a: float
    best_delta: float
    refine_iterations: int
    mirrored: bool
    extreme_params: bool  # grid reaches a < 1e-3 or a > 1e3 (delicate region)


@dataclass(frozen=True)
class CampaignResult:
    """Outcome of a randomized standardized-distribution campaign."""

    n_trials: int
    max_atoms: int
    seed: int
    sampler: str
    cantelli_probes: tuple
    violations: list = field(repr=False)
    max_delta: float = 0.0
    max_delta_trial: int = -1
    max_delta_distribution: DiscreteDistribution | None = None

    @property
    def n_violations(self):
        return len(self.violations)

    @property
    def passed(self):
        return not self.violations


@dataclass(frozen=True)
class CurveDump:
    """Sampled series behind the published pictures; data only, no rendering."""

    x: np.ndarray
    series: dict  # name -> ndarray aligned with x


def _golden_max(g, lo, hi, tol=_REFINE_TOL):
    """Golden-section maximization; returns (argmax, max, iterations)."""
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    gc, gd = g(c), g(d)
    iters = 0
    while hi - lo > tol:
        iters += 1
        if gc >= gd:
            hi, d, gd = d, c, gc
            c = hi - _INV_PHI * (hi - lo)
            gc = g(c)
        else:
            lo, c, gc = c, d, gd
            d = lo + _INV_PHI * (hi - lo)
            gd = g(d)
        if not c < d:
            break  # bracket exhausted at double resolution
    x = 0.5 * (lo + hi)
    return x, g(x), iters


def sweep_two_point(a_min, a_max, n_grid, mirrored=False):
    """Maximize the distance over the two-point family on a log grid.

    Evaluates the exact distance on ``n_grid`` log-spaced parameters, then
    refines around the grid argmax by golden section to bracket width 1e-9.
    If the reciprocal of the found maximizer lies in range and ties within
    1e-9 (it always ties exactly when in range, by mirror invariance), the
    smaller parameter is reported.
    """
    a_min, a_max = float(a_min), float(a_max)
    if not (0.0 < a_min < a_max and math.isfinite(a_max)):
        raise ArgumentError("need 0 < a_min < a_max, both finite")
    n_grid = int(n_grid)
    if n_grid < 100:
        raise ArgumentError("n_grid must be at least 100")

    def delta_of(a):
        d = make_two_point(a)
        if mirrored:
            d = mirror(d)
        return kolmogorov_distance(d).delta

    a_grid = np.logspace(math.log10(a_min), math.log10(a_max), n_grid)
    delta_grid = np.array([delta_of(a) for a in a_grid])

    i = int(np.argmax(delta_grid))
    lo = a_grid[max(i - 1, 0)]
    hi = a_grid[min(i + 1, n_grid - 1)]
    best_a, best_delta, iters = _golden_max(delta_of, float(lo), float(hi))
    if delta_grid[i] > best_delta:
        best_a, best_delta = float(a_grid[i]), float(delta_grid[i])

    ratio = a_grid[1] / a_grid[0]
    am = 1.0 / best_a
    if a_min <= am < best_a:
        mlo = max(a_min, am / ratio)
        mhi = min(a_max, am * ratio)
        cand_a, cand_delta, more = _golden_max(delta_of, float(mlo), float(mhi))
        iters += more
        if cand_delta >= best_delta - _TIE_TOL:
            best_a, best_delta = cand_a, cand_delta

    return SweepResult(
        a_grid=a_grid,
        delta_grid=delta_grid,
        best_a=best_a,
        best_delta=best_delta,
        refine_iterations=iters,
        mirrored=mirrored,
        extreme_params=is_extreme_parameter(a_min) or is_extreme_parameter(a_max),
    )


def _sample_uniform(rng, max_atoms):
    # flat atom locations with flat-simplex weights, then standardized;
    # degenerate draws (merged to one atom / tiny variance) are redrawn
    for _ in range(100):
        n = int(rng.integers(2, max_atoms + 1))
        xs = rng.uniform(-5.0, 5.0, n)
        ws = rng.dirichlet(np.ones(n))
        try:
            return standardize(DiscreteDistribution(xs, ws))
        except ArgumentError:
            continue
    raise InternalError("sampler failed to produce a usable distribution")


def _sample_near_extremal(rng, constants):
    a = constants.x_phi * math.exp(rng.uniform(-0.05, 0.05))
    d = make_two_point(a)
    if rng.random() < 0.5:
        d = mirror(d)
    return d


def random_campaign(n_trials, max_atoms=12, seed=42, sampler=SAMPLER_UNIFORM):
    """Certify the uniform bound and the tail bounds on random standardized laws.

    Every trial draws a distribution, checks delta <= c_phi + 1e-12 and the
    tail caps at the fixed probes with slack >= -1e-12, and records any
    violation together with the offending distribution in wire format.
    Reproducible: a fixed seed gives a bitwise-identical summary.
    """
    n_trials = int(n_trials)
    if n_trials < 1:
        raise ArgumentError("n_trials must be at least 1")
    max_atoms = int(max_atoms)
    if not 2 <= max_atoms <= 64:
        raise ArgumentError("max_atoms must lie in [2, 64]")
    if sampler not in (SAMPLER_UNIFORM, SAMPLER_NEAR_EXTREMAL):
        raise ArgumentError(f"unknown sampler {sampler!r}")

    consts = extremal.constants()
    rng = np.random.default_rng(seed)
    violations = []
    max_delta = -1.0
    max_trial = -1
    max_dist = None

    for trial in range(n_trials):
        if sampler == SAMPLER_UNIFORM:
            d = _sample_uniform(rng, max_atoms)
        else:
            d = _sample_near_extremal(rng, consts)

        report = kolmogorov_distance(d)
        if report.delta > consts.c_phi + 1e-12:
            violations.append({
                "trial": trial,
                "kind": "distance",
                "value": report.delta,
                "limit": consts.c_phi,
                "distribution": to_json_dict(d),
            })
        for probe in CANTELLI_PROBES:
            cr = cantelli_check(d, probe)
            if cr.slack < -1e-12:
                violations.append({
                    "trial": trial,
                    "kind": "tail_bound",
                    "probe": probe,
                    "value": max(cr.lower_tail, cr.upper_tail),
                    "limit": cr.bound,
                    "distribution": to_json_dict(d),
                })
        if report.delta > max_delta:
            max_delta = report.delta
            max_trial = trial
            max_dist = d

    return CampaignResult(
        n_trials=n_trials,
        max_atoms=max_atoms,
        seed=seed,
        sampler=sampler,
        cantelli_probes=CANTELLI_PROBES,
        violations=violations,
        max_delta=max_delta,
        max_delta_trial=max_trial,
        max_delta_distribution=max_dist,
    )


def dump_curves(range_min, range_max, step):
    """Sample the bound/tail/gap functions and the two CDFs on a uniform grid.

    Series values delegate to the owning modules point by point, so each
    dumped number is bitwise the module function's value at that x.
    """
    range_min, range_max = float(range_min), float(range_max)
    step = float(step)
    if not (math.isfinite(range_min) and math.isfinite(range_max)
            and range_min < range_max):
        raise ArgumentError("need finite range_min < range_max")
    if not (0.0 < step <= (range_max - range_min) / 2.0):
        raise ArgumentError("step must be positive and give at least 3 points")

    n = int(math.floor((range_max - range_min) / step + 1e-9)) + 1
    x = range_min + step * np.arange(n)
    fphi = extremal_reference()
    series = {
        "cantelli_bound": np.array([1.0 / (1.0 + v * v) for v in x]),
        "normal_tail": np.array([float(normal_cdf(-abs(float(v)))) for v in x]),
        "gap": np.array([extremal.tail_gap(float(v)) for v in x]),
        "normal_cdf": np.array([float(normal_cdf(float(v))) for v in x]),
        "extremal_cdf": np.array([cdf_at(fphi, float(v)) for v in x]),
    }
    x.setflags(write=False)
    for arr in series.values():
        arr.setflags(write=False)
    return CurveDump(x=x, series=series)


def extremal_reference():
    """The extremal two-point law at the cached constants."""
    return make_two_point(extremal.constants().x_phi)


# ---------------------------------------------------------------------------
# CSV output (17 significant digits, round-trips to the same double)
# ---------------------------------------------------------------------------

def _fmt(v):
    return format(float(v), ".17g")


def write_sweep_csv(result, fh):
    fh.write("a,delta\n")
    for a, delta in zip(result.a_grid, result.delta_grid):
        fh.write(f"{_fmt(a)},{_fmt(delta)}\n")


def write_curves_csv(dump, fh):
    names = list(dump.series)
    fh.write("x," + ",".join(names) + "\n")
    cols = [dump.series[name] for name in names]
    for i, xv in enumerate(dump.x):
        row = [_fmt(xv)] + [_fmt(col[i]) for col in cols]
        fh.write(",".join(row) + "\n")
