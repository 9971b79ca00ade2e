"""Graph spline interpolation on a path graph.

Unknown vertex values are chosen to minimise ``||L F||_2`` with the known
entries of ``F`` held fixed. Splitting the Laplacian by columns into the
unknown block ``L_u`` and known block ``L_k`` turns this into the ordinary
least-squares problem ``min ||L_u F_u + L_k F_k||_2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import NumericalError
from .path_graph import PathGraph, laplacian


@dataclass(frozen=True)
class InterpolationProblem:
    """A path graph with a subset of vertex values fixed.

    ``known_values`` lists the fixed values in vertex order, one per ``True``
    entry of ``known_mask``.
    """

    graph: PathGraph
    known_mask: np.ndarray
    known_values: np.ndarray

    def __post_init__(self):
        mask = np.asarray(self.known_mask, dtype=bool).ravel()
        vals = np.asarray(self.known_values, dtype=float).ravel()
        if mask.size != self.graph.n_vertices:
            raise ValueError(
                f"known_mask has {mask.size} entries for {self.graph.n_vertices} vertices"
            )
        n_known = int(mask.sum())
        if n_known == 0 or n_known == mask.size:
            raise ValueError("need at least one known and one unknown vertex")
        if vals.size != n_known:
            raise ValueError(f"expected {n_known} known values, got {vals.size}")
        if not np.all(np.isfinite(vals)):
            raise ValueError("known values must be finite")
        object.__setattr__(self, "known_mask", mask)
        object.__setattr__(self, "known_values", vals)

    @property
    def unknown_mask(self):
        return ~self.known_mask


def interpolate(p: InterpolationProblem) -> np.ndarray:
    """Fill in the unknown vertex values of ``p``.

    Returns the full value vector in vertex order. Known entries are copied
    verbatim; unknown entries are the minimum-norm least-squares solution,
    computed with a complete orthogonal factorisation (QR with column
    pivoting), so rank-deficient ``L_u`` is handled.

    Raises
    ------
    NumericalError
        If the solve yields non-finite values.
    """
    L = laplacian(p.graph)
    known = p.known_mask
    rhs = -L[:, known] @ p.known_values
    try:
        fu = scipy.linalg.lstsq(L[:, ~known], rhs, lapack_driver="gelsy", check_finite=False)[0]
    except (ValueError, np.linalg.LinAlgError) as exc:
        raise NumericalError(f"least-squares solve failed: {exc}") from exc
    if not np.all(np.isfinite(fu)):
        raise NumericalError("least-squares solve produced non-finite values")
    F = np.empty(p.graph.n_vertices)
    F[known] = p.known_values
    F[~known] = fu
    return F


def residual_norm(p: InterpolationProblem, F) -> float:
    """Euclidean norm of ``L F`` for a full value vector ``F``."""
    F = np.asarray(F, dtype=float)
    if F.shape != (p.graph.n_vertices,):
        raise ValueError(f"F must have shape ({p.graph.n_vertices},), got {F.shape}")
    return float(np.linalg.norm(laplacian(p.graph) @ F))
