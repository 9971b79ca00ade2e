"""Exception types raised across the package."""


class GraphSplineError(Exception):
    """Base class for all package errors."""


class GraphError(GraphSplineError, ValueError):
    """Invalid point set for a path graph."""


class ConfigError(GraphSplineError, ValueError):
    """Invalid algorithm configuration or domain."""


class EvaluationError(GraphSplineError):
    """The target function returned a non-finite value."""

    def __init__(self, position, value):
        self.position = float(position)
        self.value = value
        super().__init__(f"non-finite value {value!r} at x={self.position!r}")


class NumericalError(GraphSplineError):
    """The least-squares solve produced non-finite output."""


class InvalidBracketError(GraphSplineError, ValueError):
    """A minimization bracket does not satisfy lo < mid < hi with f(mid) lowest."""


class UnknownFunctionError(GraphSplineError, KeyError):
    """A benchmark index is not in the registry."""

    def __init__(self, index, valid):
        self.index = index
        self.valid = tuple(valid)
        super().__init__(index)

    def __str__(self):
        keys = ", ".join(str(k) for k in self.valid)
        return f"unknown function index {self.index!r}; valid indices: {keys}"
