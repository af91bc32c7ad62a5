"""Exception hierarchy.

Two branches matter for the CLI exit codes: ValidationError (bad input or
configuration, exit 1) and NumericalError (a computation failed or left its
guaranteed regime, exit 2).
"""


class BcwaveError(Exception):
    """Base class for all bcwave errors."""


class ValidationError(BcwaveError):
    """Invalid input, configuration or precondition."""


class InvalidSpecError(ValidationError):
    """Malformed grid/time/lattice specification."""


class DimensionMismatchError(ValidationError):
    """Objects built on incompatible grids or geometries."""


class TimeGridError(ValidationError):
    """Time grid cannot support the requested operation (e.g. odd step split)."""


class ConfigError(ValidationError):
    """Out-of-range or inconsistent run configuration."""


class FrequencyError(ValidationError):
    """Unsupported frequency vector for the grid dimension."""


class ExtensionError(ValidationError):
    """An extension operator does not restrict to the identity on (0, T)."""


class ThresholdError(ValidationError):
    """Requested time does not exceed the certified threshold."""


class DomainError(ValidationError):
    """A field violates its domain constraint (e.g. non-positive wave speed)."""


class SnapshotError(ValidationError):
    """Requested snapshot time was not recorded."""


class NotStrictlyConvexError(ValidationError):
    """The supplied weight function is not strictly convex on the grid."""


class CriticalPointError(ValidationError):
    """The supplied weight function has (numerically) a critical point."""


class NumericalError(BcwaveError):
    """A numerical procedure failed or left its stability regime."""


class StabilityError(NumericalError):
    """Time step violates the CFL bound."""


class ConditioningError(NumericalError):
    """A Gram or system matrix is singular on the relevant subspace."""


class ConvergenceError(NumericalError):
    """An iterative procedure did not converge within its budget."""


class HarmonicityError(NumericalError):
    """A field failed the discrete harmonicity check."""

    def __init__(self, residual: float, tolerance: float):
        self.residual = residual
        self.tolerance = tolerance
        super().__init__(
            f"discrete Laplacian residual {residual:.3e} exceeds tolerance {tolerance:.3e}"
        )
