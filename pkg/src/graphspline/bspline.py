"""Uniform-knot cubic spline baseline."""

from __future__ import annotations

import numpy as np
from scipy.interpolate import CubicSpline

from .exceptions import GraphSplineError
from .reconstruct import DEFAULT_GRID_SIZE

MAX_KNOTS = 10**5


class KnotSearchError(GraphSplineError):
    pass


def _domain(f):
    return (f.a, f.b) if hasattr(f, "a") else (0.0, 1.0)


def _values(f, x):
    if hasattr(f, "evaluate_many"):
        return f.evaluate_many(x)
    return np.array([f(xi) for xi in x], dtype=float)


def fit_interpolating_cubic(f, n_knots, domain=None) -> CubicSpline:
    """Cubic spline through ``f`` at ``n_knots`` uniform points, not-a-knot ends.

    The returned :class:`scipy.interpolate.CubicSpline` holds the knots in
    ``.x`` and the piecewise-cubic coefficients in ``.c``.
    """
    if int(n_knots) != n_knots or n_knots < 4:
        raise ValueError(f"n_knots must be an integer >= 4, got {n_knots}")
    a, b = domain if domain is not None else _domain(f)
    x = np.linspace(a, b, int(n_knots))
    return CubicSpline(x, _values(f, x), bc_type="not-a-knot")


def spline_rms_error(f, n_knots, grid_size=DEFAULT_GRID_SIZE, domain=None) -> float:
    a, b = domain if domain is not None else _domain(f)
    grid = np.linspace(a, b, grid_size)
    s = fit_interpolating_cubic(f, n_knots, (a, b))
    return float(np.sqrt(np.mean((s(grid) - _values(f, grid)) ** 2)))


def min_knots_for_error(f, target_err, grid_size=DEFAULT_GRID_SIZE, domain=None, cap=MAX_KNOTS):
    """Fewest uniform knots whose spline RMS error is below ``target_err``.

    Doubles the knot count from 4 until the target is met, then bisects
    between the last failing and first passing counts. The result ``n``
    passes and ``n - 1`` fails (or ``n == 4``).

    Returns
    -------
    (int, float)
        Knot count and the RMS error it achieves.

    Raises
    ------
    KnotSearchError
        If more than ``cap`` knots would be needed.
    """
    if not target_err > 0:
        raise ValueError("target_err must be positive")

    def err(n):
        return spline_rms_error(f, n, grid_size, domain)

    n = 4
    e = err(n)
    if e < target_err:
        return n, e
    lo = n
    while True:
        n *= 2
        if n > cap:
            n, e = cap, err(cap)
            if e < target_err:
                break
            raise KnotSearchError(f"more than {cap} knots needed for RMS < {target_err}")
        e = err(n)
        if e < target_err:
            break
        lo = n
    hi, e_hi = n, e
    # invariant: err(lo) >= target, err(hi) < target
    while hi - lo > 1:
        mid = (lo + hi) // 2
        e_mid = err(mid)
        if e_mid < target_err:
            hi, e_hi = mid, e_mid
        else:
            lo = mid
    return hi, e_hi
