"""Adaptive discretization of 1D functions with graph Laplacian splines."""

from .benchmarks import (
    INDICES,
    PUBLISHED_TABLE2,
    PUBLISHED_TABLE3,
    PUBLISHED_TABLE4,
    BenchmarkEntry,
    DeltaFamily,
    get_function,
    run_table2,
    run_table3,
    run_table4,
)
from .bspline import fit_interpolating_cubic, min_knots_for_error, spline_rms_error
from .discretize import (
    DiscretizationConfig,
    DiscretizationResult,
    TargetFunction,
    check_round,
    discretize,
)
from .exceptions import (
    ConfigError,
    EvaluationError,
    GraphError,
    GraphSplineError,
    InvalidBracketError,
    NumericalError,
    UnknownFunctionError,
)
from .graph_spline import InterpolationProblem, interpolate, residual_norm
from .optimize import BrentResult, MinimaReport, brent_refine, find_local_minima, optimize
from .path_graph import PathGraph, adjacency, build_path_graph, degree, laplacian
from .reconstruct import Reconstruction, average_l2_error, max_abs_error, reconstruct

__version__ = "0.1.0"
