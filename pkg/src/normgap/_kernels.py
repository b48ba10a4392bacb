"""Hot numeric kernels with a numba backend and a pure-numpy fallback.

Backend selection (read once at import):

* ``NORMGAP_BACKEND=numba``  -- require numba, fail loudly if missing;
* ``NORMGAP_BACKEND=numpy``  -- skip numba entirely, use the vector twins;
* unset / ``auto``           -- numba when importable, numpy otherwise.

Every kernel exists in both flavors (``*_numba`` is ``None`` when numba is
unavailable); the module-level names without suffix are the selected ones.
``benchmarks/compare_backends.py`` times the two flavors against each other.
"""

import math
import os

import numpy as np

from . import _cody

_ENV_VAR = "NORMGAP_BACKEND"
# Refresh the exp recurrence every this many grid points.  The recurrence's
# rounding compounds quadratically in the anchor distance (the error of r
# feeds into every later e), so the window must stay short: at 1024 points
# the bound is ~6e-11 relative while the two fresh exp calls per window cost
# ~0.01 ns/point amortized.
_ANCHOR = 1024

_choice = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
if _choice not in ("auto", "numba", "numpy"):
    raise ImportError(
        f"{_ENV_VAR} must be 'numba', 'numpy' or 'auto', got {_choice!r}")

if _choice == "numpy":
    numba = None
else:
    try:
        import numba
    except ImportError:
        if _choice == "numba":
            raise
        numba = None

NUMBA_AVAILABLE = numba is not None
BACKEND = "numba" if NUMBA_AVAILABLE else "numpy"

_INV_SQRT2 = _cody.INV_SQRT2
_INV_SQRT_2PI = _cody.INV_SQRT_2PI


# ---------------------------------------------------------------------------
# elementwise normal CDF / SF over 1-D float64 arrays
# ---------------------------------------------------------------------------

def cdf_array_numpy(x):
    return _cody.normal_cdf_numpy(x)


def sf_array_numpy(x):
    return _cody.normal_sf_numpy(x)


# ---------------------------------------------------------------------------
# dense-grid maximization of |F(t) - Phi(t)| for a step function F
# ---------------------------------------------------------------------------
#
# The scan walks t_k = lo + k*step for k = 0..n_pts-1 and tracks the largest
# |F(t_k) - Phi(t_k)|.  Phi is accumulated by trapezoid quadrature of the
# density, with exp(-t^2/2) advanced by the two-multiply recurrence
#   e_{k+1} = e_k * r_k,   r_{k+1} = r_k * exp(-step^2),
# re-anchored by fresh exp calls every _ANCHOR points so rounding drift stays
# ~1e-10.  The seed phi_lo = Phi(lo) is supplied by the caller.  This path
# shares nothing with the Cody CDF elsewhere in the package, which is what
# makes it usable as an independent cross-check of the exact distance rule.

def segment_bounds(atoms, lo, step, n_pts):
    """First grid index at or beyond each atom (int64, one slot per atom + end)."""
    na = atoms.shape[0]
    ends = np.empty(na + 1, dtype=np.int64)
    for i in range(na):
        ki = int((atoms[i] - lo) / step) + 1
        if ki < 0:
            ki = 0
        while ki > 0 and lo + (ki - 1) * step >= atoms[i]:
            ki -= 1
        while lo + ki * step < atoms[i]:
            ki += 1
        if ki > n_pts:
            ki = n_pts
        ends[i] = ki
    ends[na] = n_pts
    return ends


def _scan_core(ends, cum, lo, step, n_pts, phi_lo):
    ch = 0.5 * step * _INV_SQRT_2PI
    c = math.exp(-step * step)
    acc = phi_lo
    e = math.exp(-0.5 * lo * lo)
    r = math.exp(-lo * step - 0.5 * step * step)
    nseg = ends.shape[0]
    seg = 0
    while seg < nseg - 1 and ends[seg] <= 0:
        seg += 1
    f = cum[seg]
    best = abs(f - acc)
    kbest = 0
    since = 0
    for k in range(1, n_pts):
        since += 1
        if since == _ANCHOR:
            t = lo + k * step
            en = math.exp(-0.5 * t * t)
            r = math.exp(-t * step - 0.5 * step * step)
            since = 0
        else:
            en = e * r
            r = r * c
        acc += ch * (e + en)
        e = en
        while seg < nseg - 1 and k >= ends[seg]:
            seg += 1
            f = cum[seg]
        g = abs(f - acc)
        if g > best:
            best = g
            kbest = k
    return best, kbest, acc


def max_gap_scan_numpy(atoms, cum, lo, step, n_pts, phi_lo, chunk=1 << 20):
    ch = 0.5 * step * _INV_SQRT_2PI
    acc = phi_lo
    e_prev = math.exp(-0.5 * lo * lo)
    f0 = cum[np.searchsorted(atoms, lo, side="right")]
    best = abs(f0 - acc)
    kbest = 0
    k0 = 1
    while k0 < n_pts:
        k1 = min(k0 + chunk, n_pts)
        t = lo + np.arange(k0, k1, dtype=np.float64) * step
        e = np.exp(-0.5 * t * t)
        incr = np.empty_like(e)
        incr[0] = ch * (e_prev + e[0])
        incr[1:] = ch * (e[:-1] + e[1:])
        phi = acc + np.cumsum(incr)
        f = cum[np.searchsorted(atoms, t, side="right")]
        gaps = np.abs(f - phi)
        i = int(np.argmax(gaps))
        if gaps[i] > best:
            best = float(gaps[i])
            kbest = k0 + i
        acc = float(phi[-1])
        e_prev = float(e[-1])
        k0 = k1
    return best, kbest, acc


if NUMBA_AVAILABLE:
    _erfc_nb = numba.njit(cache=True)(_cody.erfc_scalar)

    @numba.njit(cache=True)
    def _cdf_core_nb(x, out):
        for i in range(x.shape[0]):
            v = x[i]
            if v > 40.0:
                out[i] = 1.0
            elif v < -40.0:
                out[i] = 0.0
            else:
                out[i] = 0.5 * _erfc_nb(-v * _INV_SQRT2)

    @numba.njit(cache=True)
    def _sf_core_nb(x, out):
        for i in range(x.shape[0]):
            v = x[i]
            if v > 40.0:
                out[i] = 0.0
            elif v < -40.0:
                out[i] = 1.0
            else:
                out[i] = 0.5 * _erfc_nb(v * _INV_SQRT2)

    _scan_core_nb = numba.njit(cache=True)(_scan_core)

    def cdf_array_numba(x):
        out = np.empty_like(x)
        _cdf_core_nb(x, out)
        return out

    def sf_array_numba(x):
        out = np.empty_like(x)
        _sf_core_nb(x, out)
        return out

    def max_gap_scan_numba(atoms, cum, lo, step, n_pts, phi_lo):
        ends = segment_bounds(atoms, lo, step, n_pts)
        return _scan_core_nb(ends, cum, lo, step, n_pts, phi_lo)
else:
    cdf_array_numba = None
    sf_array_numba = None
    max_gap_scan_numba = None

if BACKEND == "numba":
    cdf_array = cdf_array_numba
    sf_array = sf_array_numba
    max_gap_scan = max_gap_scan_numba
else:
    cdf_array = cdf_array_numpy
    sf_array = sf_array_numpy
    max_gap_scan = max_gap_scan_numpy


def warm_up():
    """Force JIT compilation of the hot kernels (no-op on the numpy backend)."""
    x = np.array([-1.0, 0.0, 1.0])
    cdf_array(x)
    sf_array(x)
    atoms = np.array([0.0])
    cum = np.array([0.0, 1.0])
    max_gap_scan(atoms, cum, -1.0, 0.5, 5, 0.15865525393145707)
