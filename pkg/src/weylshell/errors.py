"""Exception types shared across the package."""


class WeylshellError(Exception):
    """Base class for package errors."""


class DomainError(WeylshellError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class OverflowEvaluationError(WeylshellError, OverflowError):
    """Intermediate magnitude not representable; use the log-scaled variant."""


class UnreliableEvaluationError(WeylshellError, ArithmeticError):
    """Compensated series lost too many digits (condition estimate > 1e12)."""


class RegimeMismatchError(WeylshellError, ValueError):
    """Asymptotic prediction requested outside the regime's validity window."""


class OutOfRegimeError(WeylshellError, ValueError):
    """Bracket/approximation theorem does not apply at this (nu, k)."""


class MissedZeroError(WeylshellError, RuntimeError):
    """Verification scan found a sign change outside every bracket."""


class SimplicityAlarm(WeylshellError, RuntimeError):
    """Newton slope at a root is suspiciously small (possible double zero)."""


class ResolutionError(WeylshellError, RuntimeError):
    """Adaptive contour sampling could not meet the phase-step bound."""


class CapExceededError(WeylshellError, ValueError):
    """Requested evaluation exceeds a documented practical cap."""


class ConfigError(WeylshellError, ValueError):
    """Experiment configuration failed validation."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")
