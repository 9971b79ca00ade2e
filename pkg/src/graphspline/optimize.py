"""Local minima of a reconstruction and Brent refinement of the best one."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .exceptions import InvalidBracketError
from .reconstruct import DEFAULT_GRID_SIZE, Reconstruction, reconstruct

GOLDEN = 0.3819660112501051  # (3 - sqrt(5)) / 2
_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class BrentResult:
    position: float
    value: float
    evals_used: int
    converged: bool


@dataclass(frozen=True)
class MinimaReport:
    """Strict interior local minima of a reconstruction.

    ``global_candidate`` is the lowest local minimum, or the lower endpoint
    when there are none (``monotone`` is then set). ``brent_refined`` is
    filled in by :func:`optimize`; ``extra_evals`` counts every call to the
    true function made after discretization.
    """

    local_minima: list = field(default_factory=list)
    global_candidate: tuple = None
    candidate_index: int = -1
    monotone: bool = False
    brent_refined: BrentResult = None
    extra_evals: int = 0

    @property
    def count(self):
        return len(self.local_minima)

    def nearest(self, x):
        """Local minimum position closest to ``x`` (None if there are none)."""
        if not self.local_minima:
            return None
        pos = np.array([p for p, _ in self.local_minima])
        return float(pos[np.argmin(np.abs(pos - x))])


def local_minimum_indices(values):
    """Indices ``i`` with ``v[i-1] > v[i] < v[i+1]``; endpoints are never included."""
    v = np.asarray(values, dtype=float)
    if v.size < 3:
        return np.array([], dtype=int)
    mid = v[1:-1]
    return np.flatnonzero((mid < v[:-2]) & (mid < v[2:])) + 1


def find_local_minima(recon: Reconstruction) -> MinimaReport:
    if recon.grid.size < 3:
        raise ValueError("need at least 3 grid points")
    idx = local_minimum_indices(recon.values)
    minima = [(float(recon.grid[i]), float(recon.values[i])) for i in idx]
    if idx.size:
        best = int(idx[np.argmin(recon.values[idx])])
        return MinimaReport(minima, (float(recon.grid[best]), float(recon.values[best])), best)
    end = 0 if recon.values[0] <= recon.values[-1] else recon.grid.size - 1
    return MinimaReport(
        [], (float(recon.grid[end]), float(recon.values[end])), end, monotone=True
    )


def brent_refine(f, bracket, x_tol=1e-6, max_evals=10, fvals=None) -> BrentResult:
    """Minimise ``f`` inside a bracket by Brent's method.

    Golden-section steps are mixed with successive parabolic interpolation
    through the three best points seen so far.

    Parameters
    ----------
    f : callable
    bracket : (lo, mid, hi)
        Must satisfy ``lo < mid < hi`` and ``f(mid) <= min(f(lo), f(hi))``.
    x_tol : float
        Absolute tolerance on the returned position.
    max_evals : int
        Cap on calls to ``f`` made here. On exhaustion the best point so far
        is returned with ``converged=False``.
    fvals : (f_lo, f_mid, f_hi), optional
        Already computed bracket values; when given they are not re-evaluated
        and not counted.

    Returns
    -------
    BrentResult
        ``value`` is always ``f(position)`` as evaluated, never interpolated.
    """
    lo, mid, hi = map(float, bracket)
    if not lo < mid < hi:
        raise InvalidBracketError(f"need lo < mid < hi, got {bracket}")
    if x_tol <= 0:
        raise ValueError("x_tol must be positive")
    evals = 0
    if fvals is None:
        if max_evals < 3:
            raise ValueError("max_evals must cover the three bracket evaluations")
        f_lo, f_mid, f_hi = f(lo), f(mid), f(hi)
        evals = 3
    else:
        f_lo, f_mid, f_hi = map(float, fvals)
    if not f_mid <= min(f_lo, f_hi):
        raise InvalidBracketError(
            f"f(mid)={f_mid!r} exceeds an endpoint value ({f_lo!r}, {f_hi!r})"
        )

    a, b = lo, hi
    x = w = v = mid
    fx = fw = fv = f_mid
    d = e = 0.0
    while True:
        xm = 0.5 * (a + b)
        tol1 = 0.5 * x_tol + _EPS * abs(x)
        tol2 = 2.0 * tol1
        if abs(x - xm) <= tol2 - 0.5 * (b - a):
            return BrentResult(x, fx, evals, True)
        if evals >= max_evals:
            return BrentResult(x, fx, evals, False)

        golden = True
        if abs(e) > tol1:
            r = (x - w) * (fx - fv)
            q = (x - v) * (fx - fw)
            p = (x - v) * q - (x - w) * r
            q = 2.0 * (q - r)
            if q > 0.0:
                p = -p
            q = abs(q)
            e_prev, e = e, d
            # accept the parabola only if it falls inside and shrinks the step
            if abs(p) < abs(0.5 * q * e_prev) and q * (a - x) < p < q * (b - x):
                d = p / q
                u = x + d
                if u - a < tol2 or b - u < tol2:
                    d = math.copysign(tol1, xm - x)
                golden = False
        if golden:
            e = (a - x) if x >= xm else (b - x)
            d = GOLDEN * e

        u = x + d if abs(d) >= tol1 else x + math.copysign(tol1, d)
        fu = f(u)
        evals += 1

        if fu <= fx:
            if u >= x:
                a = x
            else:
                b = x
            v, fv, w, fw = w, fw, x, fx
            x, fx = u, fu
        else:
            if u < x:
                a = u
            else:
                b = u
            if fu <= fw or w == x:
                v, fv, w, fw = w, fw, u, fu
            elif fu <= fv or v == x or v == w:
                v, fv = u, fu


def _downhill_bracket(f, grid, i, budget):
    """Three-point bracket around grid index ``i`` using true values.

    Walks along the grid while an endpoint is lower than the middle point.
    Returns ``(indices, values, evals)``, or ``None`` for the bracket when the
    walk hits the domain boundary or the budget.
    """
    cache = {}

    def fv(k):
        if k not in cache:
            cache[k] = f(grid[k])
        return cache[k]

    n = grid.size
    lo, hi = i - 1, i + 1
    while True:
        f_lo, f_mid, f_hi = fv(lo), fv(lo + 1), fv(hi)
        if f_mid <= min(f_lo, f_hi):
            return (lo, lo + 1, hi), (f_lo, f_mid, f_hi), len(cache)
        step = -1 if f_lo < f_hi else 1
        if (step < 0 and lo == 0) or (step > 0 and hi == n - 1) or len(cache) >= budget:
            return None, None, len(cache)
        lo += step
        hi += step


def optimize(
    f,
    result,
    grid_size=DEFAULT_GRID_SIZE,
    x_tol=1e-6,
    max_evals=10,
    bracket_budget=50,
) -> MinimaReport:
    """Locate local minima of the reconstruction and refine the lowest one.

    The candidate is bracketed by its two grid neighbours. If the true
    function does not confirm that bracket, the three-point window slides
    downhill along the grid until it does. Brent's method then runs with at
    most ``max_evals`` further evaluations.

    Parameters
    ----------
    f : TargetFunction
    result : DiscretizationResult
    """
    recon = reconstruct(result.positions, result.values, f.domain, grid_size)
    report = find_local_minima(recon)
    if report.monotone:
        return report

    idx, fvals, bracket_evals = _downhill_bracket(f, recon.grid, report.candidate_index, bracket_budget)
    if idx is None:
        return replace(report, extra_evals=bracket_evals)
    br = brent_refine(f, recon.grid[list(idx)], x_tol=x_tol, max_evals=max_evals, fvals=fvals)
    return replace(report, brent_refined=br, extra_evals=bracket_evals + br.evals_used)
