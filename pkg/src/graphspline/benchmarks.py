"""Benchmark functions and experiment runners.

The registry keeps the original benchmark numbering (2-15, 18, 20-22), so
the gaps are intentional. Every evaluator accepts scalars or numpy arrays.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bspline import min_knots_for_error
from .discretize import DiscretizationConfig, TargetFunction, discretize
from .exceptions import GraphSplineError, UnknownFunctionError
from .optimize import optimize
from .reconstruct import DEFAULT_GRID_SIZE, average_l2_error, max_abs_error, reconstruct


@dataclass(frozen=True)
class BenchmarkEntry:
    index: int
    domain: tuple
    evaluator: object
    description: str

    def target(self) -> TargetFunction:
        return TargetFunction(self.evaluator, *self.domain, name=f"f{self.index}")


def _f2(x):
    return np.sin(x) + np.sin(10.0 * x / 3.0)


def _f3(x):
    return -sum(k * np.sin((k + 1) * x + k) for k in range(1, 6))


def _f4(x):
    return -(16.0 * x**2 - 24.0 * x + 5.0) * np.exp(-x)


def _f5(x):
    return -(1.4 - 3.0 * x) * np.sin(18.0 * x)


def _f6(x):
    return -(x + np.sin(x)) * np.exp(-(x**2))


def _f7(x):
    return np.sin(x) + np.sin(10.0 * x / 3.0) + np.log(x) - 0.84 * x + 3.0


def _f8(x):
    return -sum(k * np.cos((k + 1) * x + k) for k in range(1, 6))


def _f9(x):
    return np.sin(x) + np.sin(2.0 * x / 3.0)


def _f10(x):
    return -x * np.sin(x)


def _f11(x):
    return 2.0 * np.cos(x) + np.cos(2.0 * x)


def _f12(x):
    return np.sin(x) ** 3 + np.cos(x) ** 3


def _f13(x):
    return -(x ** (2.0 / 3.0)) - (1.0 - x**2) ** (1.0 / 3.0)


def _f14(x):
    return -np.exp(-x) * np.sin(2.0 * np.pi * x)


def _f15(x):
    return (x**2 - 5.0 * x + 6.0) / (x**2 + 1.0)


def _f18(x):
    x = np.asarray(x, dtype=float)
    # the log branch is only used for x > 3, where x - 2 > 1
    right = 2.0 * np.log(np.maximum(x - 2.0, 1.0)) + 1.0
    out = np.where(x <= 3.0, (x - 2.0) ** 2, right)
    return out if out.ndim else float(out)


def _f20(x):
    return -(x - np.sin(x)) * np.exp(-(x**2))


def _f21(x):
    return x * np.sin(x) + x * np.cos(2.0 * x)


def _f22(x):
    return np.exp(-3.0 * x) - np.sin(x) ** 3


REGISTRY = {
    e.index: e
    for e in [
        BenchmarkEntry(2, (2.7, 7.5), _f2, "sin(x) + sin(10x/3)"),
        BenchmarkEntry(3, (-10.0, 10.0), _f3, "-sum_{k=1..5} k sin((k+1)x + k)"),
        BenchmarkEntry(4, (1.9, 3.9), _f4, "-(16x^2 - 24x + 5) exp(-x)"),
        BenchmarkEntry(5, (0.0, 1.2), _f5, "-(1.4 - 3x) sin(18x)"),
        BenchmarkEntry(6, (-10.0, 10.0), _f6, "-(x + sin(x)) exp(-x^2)"),
        BenchmarkEntry(7, (2.7, 7.5), _f7, "sin(x) + sin(10x/3) + log(x) - 0.84x + 3"),
        BenchmarkEntry(8, (-10.0, 10.0), _f8, "-sum_{k=1..5} k cos((k+1)x + k)"),
        BenchmarkEntry(9, (3.1, 20.4), _f9, "sin(x) + sin(2x/3)"),
        BenchmarkEntry(10, (0.0, 10.0), _f10, "-x sin(x)"),
        BenchmarkEntry(11, (-np.pi / 2, 2 * np.pi), _f11, "2cos(x) + cos(2x)"),
        BenchmarkEntry(12, (0.0, 2 * np.pi), _f12, "sin^3(x) + cos^3(x)"),
        BenchmarkEntry(13, (0.001, 0.99), _f13, "-x^(2/3) - (1 - x^2)^(1/3)"),
        BenchmarkEntry(14, (0.0, 4.0), _f14, "-exp(-x) sin(2 pi x)"),
        BenchmarkEntry(15, (-5.0, 5.0), _f15, "(x^2 - 5x + 6) / (x^2 + 1)"),
        BenchmarkEntry(18, (0.0, 6.0), _f18, "(x-2)^2 if x <= 3 else 2 log(x-2) + 1"),
        BenchmarkEntry(20, (-10.0, 10.0), _f20, "-(x - sin(x)) exp(-x^2)"),
        BenchmarkEntry(21, (0.0, 10.0), _f21, "x sin(x) + x cos(2x)"),
        BenchmarkEntry(22, (0.0, 20.0), _f22, "exp(-3x) - sin^3(x)"),
    ]
}

INDICES = tuple(sorted(REGISTRY))

# Published results: index -> (nfev, average L2 error)
PUBLISHED_TABLE2 = {
    2: (35, 1.400e-03), 3: (65, 2.434e-02), 4: (23, 6.290e-04), 5: (39, 6.660e-03),
    6: (29, 9.393e-05), 7: (35, 1.395e-03), 8: (65, 2.394e-02), 9: (33, 4.471e-04),
    10: (25, 2.668e-03), 11: (23, 7.849e-04), 12: (33, 2.968e-04), 13: (31, 1.424e-03),
    14: (41, 8.279e-04), 15: (31, 4.590e-04), 18: (27, 7.649e-04), 20: (37, 6.548e-06),
    21: (35, 4.211e-03), 22: (63, 5.757e-04),
}

# index -> (number of local minima, true global minimiser, nearest local minimum)
PUBLISHED_TABLE4 = {
    2: (3, 5.146, 5.156), 3: (20, -6.775, -6.787), 4: (1, 2.868, 2.854),
    5: (6, 0.966, 0.964), 6: (14, 0.680, 0.703), 7: (3, 5.200, 5.189),
    8: (20, -7.084, -7.090), 9: (3, 17.039, 16.987), 10: (2, 7.979, 7.930),
    11: (2, 4.159, 4.159), 12: (3, 3.142, 3.160), 13: (1, 0.707, 0.708),
    14: (6, 0.225, 0.223), 15: (2, 2.414, 2.368), 18: (1, 2.000, 2.013),
    20: (16, 1.195, 1.182), 21: (6, 4.795, 4.814), 22: (10, 14.137, 14.160),
}

# delta -> (num_init, nfev, refs, graph L2, B-spline knots, B-spline L2)
PUBLISHED_TABLE3 = {
    0.2: (19, 89, 8, 1.396e-4, 60, 8.890e-4),
    0.1: (19, 137, 8, 2.651e-4, 60, 9.539e-4),
    0.05: (19, 211, 8, 2.924e-4, 490, 9.746e-4),
    0.01: (29, 489, 8, 9.669e-4, 5910, 9.917e-4),
}


def get_function(index) -> BenchmarkEntry:
    try:
        return REGISTRY[int(index)]
    except (KeyError, ValueError, TypeError):
        raise UnknownFunctionError(index, INDICES) from None


@dataclass(frozen=True)
class DeltaFamily:
    """``1 / (x + delta)`` on ``[0, 1]``; steep near the origin for small delta."""

    delta: float

    def __post_init__(self):
        if not self.delta > 0:
            raise ValueError(f"delta must be positive, got {self.delta}")

    def __call__(self, x):
        return 1.0 / (x + self.delta)

    def target(self) -> TargetFunction:
        return TargetFunction(self, 0.0, 1.0, name=f"f_delta={self.delta:g}")


def delta_initial_grid(delta):
    """Initial grid size used for the delta-family comparison."""
    return 29 if delta < 0.05 else 19


def _workers(threads):
    if threads is None:
        threads = int(os.environ.get("GRAPHSPLINE_THREADS", "1") or 0)
    if threads <= 0:
        threads = os.cpu_count() or 1
    return threads


def _fan_out(fn, items, threads):
    workers = min(_workers(threads), len(items)) or 1
    if workers == 1:
        return [fn(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class Table2Row:
    index: int
    nfev: int = None
    avg_l2: float = None
    max_abs: float = None
    rounds_used: int = None
    error: str = None

    @property
    def published_nfev(self):
        return PUBLISHED_TABLE2[self.index][0]

    @property
    def published_l2(self):
        return PUBLISHED_TABLE2[self.index][1]


def run_table2(cfg=DiscretizationConfig(), grid_size=DEFAULT_GRID_SIZE, indices=INDICES, threads=None):
    """Discretize and reconstruct every benchmark with a shared config."""

    def one(index):
        f = get_function(index).target()
        try:
            res = discretize(f, cfg)
            recon = reconstruct(res.positions, res.values, f.domain, grid_size)
            return Table2Row(
                index, res.nfev, average_l2_error(recon, f), max_abs_error(recon, f), res.rounds_used
            )
        except GraphSplineError as exc:
            return Table2Row(index, error=str(exc))

    return _fan_out(one, sorted(indices), threads)


@dataclass(frozen=True)
class Table4Row:
    index: int
    n_local: int = None
    nearest_local: float = None
    global_candidate: float = None
    brent_position: float = None
    brent_value: float = None
    extra_evals: int = None
    brent_converged: bool = None
    nfev: int = None
    error: str = None

    @property
    def published_n_local(self):
        return PUBLISHED_TABLE4[self.index][0]

    @property
    def published_true_global(self):
        return PUBLISHED_TABLE4[self.index][1]

    @property
    def published_nearest_local(self):
        return PUBLISHED_TABLE4[self.index][2]


def run_table4(cfg=DiscretizationConfig(), grid_size=DEFAULT_GRID_SIZE, indices=INDICES, threads=None):
    """Local minima and Brent refinement for every benchmark."""

    def one(index):
        f = get_function(index).target()
        try:
            res = discretize(f, cfg)
            rep = optimize(f, res, grid_size=grid_size)
        except GraphSplineError as exc:
            return Table4Row(index, error=str(exc))
        br = rep.brent_refined
        return Table4Row(
            index,
            n_local=rep.count,
            nearest_local=rep.nearest(PUBLISHED_TABLE4[index][1]),
            global_candidate=rep.global_candidate[0],
            brent_position=None if br is None else br.position,
            brent_value=None if br is None else br.value,
            extra_evals=rep.extra_evals,
            brent_converged=None if br is None else br.converged,
            nfev=res.nfev,
        )

    return _fan_out(one, sorted(indices), threads)


@dataclass(frozen=True)
class Table3Row:
    delta: float
    num_init: int
    nfev: int
    refs: int
    graph_l2: float
    bspline_knots: int
    bspline_l2: float


def run_table3(deltas=(0.2, 0.1, 0.05, 0.01), target_err=1e-3, ref_max=8, grid_size=DEFAULT_GRID_SIZE, threads=None):
    """Graph spline vs. uniform cubic spline on the delta family.

    The graph spline uses ``target_err`` as its pointwise tolerance with
    ``ref_max`` check rounds; the cubic spline gets the fewest uniform knots
    whose RMS error is below ``target_err``.
    """
    if not target_err > 0:
        raise ValueError("target_err must be positive")

    def one(delta):
        fam = DeltaFamily(delta)
        f = fam.target()
        n0 = delta_initial_grid(delta)
        res = discretize(f, DiscretizationConfig(n0, ref_max, target_err))
        recon = reconstruct(res.positions, res.values, f.domain, grid_size)
        knots, err = min_knots_for_error(f, target_err, grid_size=grid_size)
        return Table3Row(delta, n0, res.nfev, res.rounds_used, average_l2_error(recon, f), knots, err)

    return _fan_out(one, list(deltas), threads)
