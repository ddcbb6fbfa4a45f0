"""Insertion-scan kernels behind graph construction and validation.

For every vertex ``i`` the scan looks at all earlier vertices ``j < i`` and
records, per cone of ``i``, the earlier vertex with the smallest bisector
projection.  It also flags the first earlier vertex that sits on a cone
boundary ray of ``i`` and the first earlier vertex whose projection ties the
per-cone minimum.

Two implementations share one contract:

* ``scan_loops``: explicit double loop, compiled with ``numba.njit`` when
  numba is importable;
* ``scan_numpy``: row-vectorised numpy.

Set ``ORDERED_THETA_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import math
import os

import numpy as np

_TRUTHY = {"1", "true", "yes", "on"}

NUMBA_DISABLED = os.environ.get("ORDERED_THETA_DISABLE_NUMBA", "").strip().lower() in _TRUTHY

try:
    if NUMBA_DISABLED:
        raise ImportError("disabled by ORDERED_THETA_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


BACKEND = "numba" if HAVE_NUMBA else "numpy"


def _scan_loops_py(xs, ys, k, bx, by, tol):
    n = xs.shape[0]
    two_pi = 2.0 * math.pi
    theta = two_pi / k
    half = 0.5 * theta
    nearest = np.full((n, k), -1, dtype=np.int64)
    boundary = np.full(n, -1, dtype=np.int64)
    tie = np.full(n, -1, dtype=np.int64)
    best = np.empty(k, dtype=np.float64)
    cone = np.empty(n, dtype=np.int64)
    proj = np.empty(n, dtype=np.float64)
    for i in range(n):
        for c in range(k):
            best[c] = np.inf
        for j in range(i):
            dx = xs[j] - xs[i]
            dy = ys[j] - ys[i]
            phi = math.atan2(dx, dy)
            if phi < 0.0:
                phi += two_pi
            s = phi + half
            idx = math.floor(s / theta)
            rem = s - idx * theta
            if boundary[i] < 0 and min(rem, theta - rem) <= tol:
                boundary[i] = j
            c = int(idx) % k
            d = dx * bx[c] + dy * by[c]
            cone[j] = c
            proj[j] = d
            if d < best[c]:
                best[c] = d
                nearest[i, c] = j
        for j in range(i):
            c = cone[j]
            if j != nearest[i, c]:
                b = best[c]
                if abs(proj[j] - b) <= tol * max(1.0, abs(b)):
                    tie[i] = j
                    break
    return nearest, boundary, tie


scan_loops = njit(cache=True, nogil=True)(_scan_loops_py) if HAVE_NUMBA else _scan_loops_py


def scan_numpy(xs, ys, k, bx, by, tol):
    n = xs.shape[0]
    theta = 2.0 * math.pi / k
    half = 0.5 * theta
    nearest = np.full((n, k), -1, dtype=np.int64)
    boundary = np.full(n, -1, dtype=np.int64)
    tie = np.full(n, -1, dtype=np.int64)
    for i in range(1, n):
        dx = xs[:i] - xs[i]
        dy = ys[:i] - ys[i]
        phi = np.arctan2(dx, dy)
        phi = np.where(phi < 0.0, phi + 2.0 * math.pi, phi)
        s = phi + half
        idx = np.floor(s / theta)
        rem = s - idx * theta
        on_ray = np.minimum(rem, theta - rem) <= tol
        if on_ray.any():
            boundary[i] = int(np.argmax(on_ray))
        c = idx.astype(np.int64) % k
        d = dx * bx[c] + dy * by[c]
        best = np.full(k, np.inf)
        np.minimum.at(best, c, d)
        hits = np.flatnonzero(d == best[c])
        cones, first = np.unique(c[hits], return_index=True)
        nearest[i, cones] = hits[first]
        b = best[c]
        close = np.abs(d - b) <= tol * np.maximum(1.0, np.abs(b))
        close &= np.arange(i) != nearest[i, c]
        if close.any():
            tie[i] = int(np.argmax(close))
    return nearest, boundary, tie


def insertion_scan(xs, ys, k, bx, by, tol, backend=None):
    """Dispatch to the selected backend.

    ``bx``/``by`` hold the unit bisector of every cone; passing them in keeps
    both paths on the same trigonometric values.
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    bx = np.ascontiguousarray(bx, dtype=np.float64)
    by = np.ascontiguousarray(by, dtype=np.float64)
    backend = backend or BACKEND
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        return scan_loops(xs, ys, int(k), bx, by, float(tol))
    if backend == "numpy":
        return scan_numpy(xs, ys, int(k), bx, by, float(tol))
    if backend == "python":
        return _scan_loops_py(xs, ys, int(k), bx, by, float(tol))
    raise ValueError(f"unknown backend {backend!r}")
