"""Adaptive discretization of an expensive 1D function.

The function is sampled on a coarse uniform grid, then checked at the
midpoints of consecutive samples: each check value is predicted by graph
spline interpolation from the current samples and compared with the true
value. Checks that miss by more than ``tol`` are refined by checking the
midpoints of the two subintervals they create. Every evaluated point is kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import ConfigError, EvaluationError
from .graph_spline import InterpolationProblem, interpolate
from .path_graph import MERGE_TOL, build_path_graph

MIN_DOMAIN_WIDTH = 1e-12


@dataclass(frozen=True)
class TargetFunction:
    """A scalar function on a closed interval ``[a, b]``.

    Calling the instance evaluates ``evaluator`` and raises
    :class:`EvaluationError` on non-finite output.
    """

    evaluator: object
    a: float
    b: float
    name: str = ""

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ConfigError(f"domain endpoints must be finite, got [{a}, {b}]")
        if b - a < MIN_DOMAIN_WIDTH:
            raise ConfigError(f"degenerate domain [{a}, {b}]")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def domain(self):
        return (self.a, self.b)

    def __call__(self, x):
        y = float(self.evaluator(float(x)))
        if not math.isfinite(y):
            raise EvaluationError(x, y)
        return y

    def evaluate_many(self, xs):
        """Evaluate on an array of points, checking every value."""
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(self.evaluator(xs), dtype=float)
        if ys.shape != xs.shape:
            ys = np.array([self.evaluator(float(x)) for x in xs.ravel()], dtype=float).reshape(xs.shape)
        bad = ~np.isfinite(ys)
        if bad.any():
            i = np.flatnonzero(bad.ravel())[0]
            raise EvaluationError(xs.ravel()[i], ys.ravel()[i])
        return ys


@dataclass(frozen=True)
class DiscretizationConfig:
    """Inputs of :func:`discretize`.

    ``ref_max`` counts check rounds, including the first pass over the
    initial grid.
    """

    initial_grid_size: int = 9
    ref_max: int = 3
    tol: float = 1e-2

    def __post_init__(self):
        if int(self.initial_grid_size) != self.initial_grid_size or self.initial_grid_size < 2:
            raise ConfigError(f"initial_grid_size must be an integer >= 2, got {self.initial_grid_size}")
        if int(self.ref_max) != self.ref_max or self.ref_max < 0:
            raise ConfigError(f"ref_max must be a nonnegative integer, got {self.ref_max}")
        if not self.tol > 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")


@dataclass(frozen=True)
class DiscretizationResult:
    positions: np.ndarray
    values: np.ndarray
    nfev: int
    rounds_used: int
    failure_log: tuple = field(default_factory=tuple)

    @property
    def samples(self):
        """Sorted ``(position, value)`` pairs."""
        return list(zip(self.positions.tolist(), self.values.tolist()))


def _interpolate_single(positions, values, c):
    # Insert c as the only unknown vertex.
    j = int(np.searchsorted(positions, c))
    x = np.insert(positions, j, c)
    mask = np.ones(x.size, dtype=bool)
    mask[j] = False
    g = build_path_graph(x, merge_tol=0.0)
    return interpolate(InterpolationProblem(g, mask, values))[j]


def check_round(positions, values, check_positions, f, tol):
    """Evaluate ``f`` at check positions and flag interpolation failures.

    Each check point is interpolated on its own, as the single unknown vertex
    inserted into the path through ``positions``.

    Returns
    -------
    failures : list of float
        Check positions where ``|interpolated - f(x)| > tol``, ascending.
    evaluations : list of (float, float)
        ``(x, f(x))`` for every check position, ascending.
    """
    positions = np.asarray(positions, dtype=float)
    values = np.asarray(values, dtype=float)
    checks = np.sort(np.asarray(check_positions, dtype=float))
    if positions.size < 2:
        raise ValueError("need at least two samples")
    if checks.size and (checks[0] <= positions[0] or checks[-1] >= positions[-1]):
        raise ValueError("check positions must lie strictly inside the sample range")
    j = np.searchsorted(positions, checks)
    gap = np.minimum(checks - positions[j - 1], positions[np.minimum(j, positions.size - 1)] - checks)
    if np.any(gap < MERGE_TOL):
        raise ValueError("check position collides with an existing sample")

    failures = []
    evaluations = []
    for c in checks:
        c = float(c)
        fc = f(c)
        evaluations.append((c, fc))
        if abs(_interpolate_single(positions, values, c) - fc) > tol:
            failures.append(c)
    return failures, evaluations


def discretize(f: TargetFunction, cfg: DiscretizationConfig = DiscretizationConfig()) -> DiscretizationResult:
    """Adaptively sample ``f`` on its domain.

    Parameters
    ----------
    f : TargetFunction
    cfg : DiscretizationConfig
        Defaults are a 9 point initial grid, 3 check rounds and an absolute
        pointwise tolerance of 1e-2.

    Returns
    -------
    DiscretizationResult
        All evaluated points sorted by position. ``nfev`` counts every
        evaluation, check points included.
    """
    x = np.linspace(f.a, f.b, cfg.initial_grid_size)
    y = np.array([f(xi) for xi in x])
    nfev = x.size
    checks = 0.5 * (x[:-1] + x[1:])
    log = []
    rounds = 0

    while rounds < cfg.ref_max and checks.size:
        failures, evals = check_round(x, y, checks, f, cfg.tol)
        nfev += len(evals)
        rounds += 1
        log.append(tuple(failures))

        ex, ey = np.array(evals).T
        x = np.concatenate([x, ex])
        y = np.concatenate([y, ey])
        order = np.argsort(x, kind="stable")
        x, y = x[order], y[order]
        if not failures:
            break

        # children: midpoints of the two subintervals each failure created
        j = np.searchsorted(x, failures)
        fx = x[j]
        children = np.concatenate([0.5 * (x[j - 1] + fx), 0.5 * (fx + x[j + 1])])
        checks = np.unique(children)

    return DiscretizationResult(
        positions=x, values=y, nfev=nfev, rounds_used=rounds, failure_log=tuple(log)
    )
