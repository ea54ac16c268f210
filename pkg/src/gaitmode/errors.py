"""Exception types raised across the package."""


class GaitmodeError(Exception):
    """Base class for all package errors."""


class SingularStack(GaitmodeError):
    """Stacked [A; Y] matrix is numerically singular; the contact
    hypothesis cannot be reduced this tick."""


class SingularConstraint(GaitmodeError):
    """Active constraint rows are rank deficient (A M^-1 A^T singular)."""


class SimulationDiverged(GaitmodeError):
    """Simulated state left the sane envelope (controller failure)."""

    def __init__(self, message, tick=None):
        super().__init__(message)
        self.tick = tick


class SchemaViolation(GaitmodeError):
    """Log file does not match the expected column schema."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class VersionMismatch(GaitmodeError):
    """Log file header declares an unsupported schema version."""


class LengthMismatch(GaitmodeError):
    """Series lengths passed to the scorer do not agree."""


class SimplexViolation(GaitmodeError):
    """Belief vector left the probability simplex beyond tolerance."""
