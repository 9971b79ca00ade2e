"""Weighted path graphs over sorted point sets on an interval.

Consecutive points are joined by an edge whose weight is the reciprocal of
their distance, so closely spaced points are strongly coupled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import GraphError

#: Points closer than this (absolute) are treated as the same vertex.
MERGE_TOL = 1e-12


def _frozen(a):
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PathGraph:
    """Sorted vertices and reciprocal-gap edge weights.

    Build instances with :func:`build_path_graph`; the constructor does not
    sort or validate.
    """

    positions: np.ndarray
    weights: np.ndarray

    @property
    def n_vertices(self) -> int:
        return self.positions.size

    def __len__(self):
        return self.positions.size


def merge_sorted(points, tol=MERGE_TOL):
    """Return a boolean mask selecting the first point of each near-duplicate run.

    ``points`` must already be sorted ascending.
    """
    keep = np.ones(points.size, dtype=bool)
    last = None
    for i, x in enumerate(points):
        if last is not None and x - last < tol:
            keep[i] = False
        else:
            last = x
    return keep


def build_path_graph(points, merge_tol=MERGE_TOL) -> PathGraph:
    """Build a path graph from an unordered point set.

    Parameters
    ----------
    points : array_like
        Vertex coordinates. They are sorted ascending and points within
        ``merge_tol`` of the previously kept point are dropped.
    merge_tol : float
        Absolute gap below which two points count as one vertex.

    Returns
    -------
    PathGraph

    Raises
    ------
    GraphError
        If any point is non-finite or fewer than two distinct points remain.
    """
    x = np.asarray(points, dtype=float).ravel()
    if not np.all(np.isfinite(x)):
        raise GraphError("path graph points must be finite")
    x = np.sort(x, kind="stable")
    x = x[merge_sorted(x, merge_tol)]
    if x.size < 2:
        raise GraphError(f"path graph needs at least 2 distinct points, got {x.size}")
    return PathGraph(_frozen(x), _frozen(1.0 / np.diff(x)))


def adjacency(g: PathGraph) -> np.ndarray:
    """Dense symmetric tridiagonal adjacency matrix with zero diagonal."""
    n = g.n_vertices
    A = np.zeros((n, n))
    i = np.arange(n - 1)
    A[i, i + 1] = g.weights
    A[i + 1, i] = g.weights
    return A


def degree(g: PathGraph) -> np.ndarray:
    """Diagonal matrix of adjacency row sums."""
    d = np.zeros(g.n_vertices)
    d[:-1] += g.weights
    d[1:] += g.weights
    return np.diag(d)


def laplacian(g: PathGraph) -> np.ndarray:
    """Graph Laplacian ``D - A``."""
    return degree(g) - adjacency(g)
