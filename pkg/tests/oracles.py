"""Reference computations kept independent of the package code paths."""

import math

import numpy as np

INVPHI = (math.sqrt(5) - 1) / 2


def laplacian_by_loops(points):
    """Path-graph Laplacian assembled entry by entry from sorted points."""
    n = len(points)
    L = [[0.0] * n for _ in range(n)]
    for i in range(n - 1):
        w = 1.0 / (points[i + 1] - points[i])
        L[i][i] += w
        L[i + 1][i + 1] += w
        L[i][i + 1] -= w
        L[i + 1][i] -= w
    return L


def objective(L, F):
    """Squared norm of L F, by explicit loops."""
    total = 0.0
    for row in L:
        s = 0.0
        for lij, fj in zip(row, F):
            s += lij * fj
        total += s * s
    return total


def brute_force_lsq(points, known_mask, known_values, sweeps=50000, tol=1e-13, omega=1.8):
    """Minimise ||L F||^2 over the unknown entries by cyclic coordinate descent.

    Each coordinate step evaluates the objective at three points and moves
    toward the vertex of the parabola through them (exact for a quadratic),
    over-relaxed by ``omega`` to speed up ill-conditioned cases.
    """
    L = laplacian_by_loops(list(points))
    F = np.zeros(len(points))
    F[np.asarray(known_mask)] = known_values
    F[~np.asarray(known_mask)] = np.mean(known_values)
    unknown = [i for i, k in enumerate(known_mask) if not k]
    for _ in range(sweeps):
        moved = 0.0
        for i in unknown:
            x0 = F[i]
            vals = []
            for t in (x0 - 1.0, x0, x0 + 1.0):
                F[i] = t
                vals.append(objective(L, F))
            curv = vals[0] - 2 * vals[1] + vals[2]
            step = 0.0 if curv <= 0 else 0.5 * (vals[0] - vals[2]) / curv
            F[i] = x0 + omega * step
            moved = max(moved, abs(step))
        if moved < tol:
            break
    return F


def golden_section(f, lo, hi, tol=1e-12):
    c = hi - INVPHI * (hi - lo)
    d = lo + INVPHI * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - INVPHI * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + INVPHI * (hi - lo)
            fd = f(d)
    return 0.5 * (lo + hi)


def dense_scan_minimizers(f, a, b, n=10**7, chunk=10**6, window=1e-6, tie_rtol=1e-12):
    """Global minimisers of ``f`` on ``[a, b]`` by exhaustive scan.

    Scans ``n`` uniform points and takes every local minimum of the scan
    whose value is within ``window * max(1, |min|)`` of the lowest. Each is
    polished by golden section between its two scan neighbours, and those
    whose polished value ties the best (to ``tie_rtol``) are returned.
    Returns ``(positions, min_value)``.
    """
    h = (b - a) / (n - 1)
    vals = np.empty(n)
    for s in range(0, n, chunk):
        idx = np.arange(s, min(s + chunk, n))
        vals[idx] = f(a + idx * h)
    fmin = vals.min()
    scale = max(1.0, abs(fmin))
    cand = np.flatnonzero(vals <= fmin + window * scale)
    groups = np.split(cand, np.flatnonzero(np.diff(cand) > 1) + 1)
    polished = []
    for g in groups:
        i = int(g[np.argmin(vals[g])])
        lo = a + max(i - 1, 0) * h
        hi = a + min(i + 1, n - 1) * h
        x = golden_section(lambda t: float(f(t)), lo, hi)
        polished.append((float(f(x)), x))
    best = min(v for v, _ in polished)
    xs = sorted(x for v, x in polished if v <= best + tie_rtol * scale)
    return xs, best


def local_minima_by_loop(values):
    out = []
    for i in range(1, len(values) - 1):
        if values[i] < values[i - 1] and values[i] < values[i + 1]:
            out.append(i)
    return out


# Scalar transcriptions of the benchmark formulas, written with math only.
SPOT_FORMULAS = {
    2: lambda x: math.sin(x) + math.sin(10 * x / 3),
    3: lambda x: -sum(k * math.sin((k + 1) * x + k) for k in range(1, 6)),
    4: lambda x: -(16 * x * x - 24 * x + 5) * math.exp(-x),
    5: lambda x: -(1.4 - 3 * x) * math.sin(18 * x),
    6: lambda x: -(x + math.sin(x)) * math.exp(-x * x),
    7: lambda x: math.sin(x) + math.sin(10 * x / 3) + math.log(x) - 0.84 * x + 3,
    8: lambda x: -sum(k * math.cos((k + 1) * x + k) for k in range(1, 6)),
    9: lambda x: math.sin(x) + math.sin(2 * x / 3),
    10: lambda x: -x * math.sin(x),
    11: lambda x: 2 * math.cos(x) + math.cos(2 * x),
    12: lambda x: math.sin(x) ** 3 + math.cos(x) ** 3,
    13: lambda x: -(x ** (2 / 3)) - (1 - x * x) ** (1 / 3),
    14: lambda x: -math.exp(-x) * math.sin(2 * math.pi * x),
    15: lambda x: (x * x - 5 * x + 6) / (x * x + 1),
    18: lambda x: (x - 2) ** 2 if x <= 3 else 2 * math.log(x - 2) + 1,
    20: lambda x: -(x - math.sin(x)) * math.exp(-x * x),
    21: lambda x: x * math.sin(x) + x * math.cos(2 * x),
    22: lambda x: math.exp(-3 * x) - math.sin(x) ** 3,
}

SPOT_DOMAINS = {
    2: (2.7, 7.5), 3: (-10, 10), 4: (1.9, 3.9), 5: (0, 1.2), 6: (-10, 10), 7: (2.7, 7.5),
    8: (-10, 10), 9: (3.1, 20.4), 10: (0, 10), 11: (-math.pi / 2, 2 * math.pi),
    12: (0, 2 * math.pi), 13: (0.001, 0.99), 14: (0, 4), 15: (-5, 5), 18: (0, 6),
    20: (-10, 10), 21: (0, 10), 22: (0, 20),
}
