"""Exception types shared across the package.

The command line tool maps these onto exit codes, so library code should
raise the most specific type that applies rather than a bare ValueError.
"""


class ParameterError(ValueError):
    """A parameter is outside the admissible domain of its family."""


class ValidationError(ValueError):
    """Structured input (dataset, model spec, curve) violates its contract."""


class DegenerateDataError(ValueError):
    """Data admits no answer, e.g. a correlation of a constant column."""


class FitError(RuntimeError):
    """A fitting routine produced no admissible solution."""


class NumericError(RuntimeError):
    """A numeric routine failed to converge or overshot its tolerance."""
