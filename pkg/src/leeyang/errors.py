"""Exception hierarchy for the leeyang package.

All package errors derive from LeeYangError so callers (and the CLI) can
catch one base class and still distinguish argument problems from resource
limits and numerical failures.
"""


class LeeYangError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LeeYangError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class ResourceCapError(LeeYangError):
    """A computation would exceed a configured size cap."""


class PrecisionCapError(ResourceCapError):
    """Required fixed-point precision exceeds the configured ceiling."""


class NonUnitaryError(LeeYangError):
    """A matrix expected to be unitary failed the unitarity check."""


class PairingError(LeeYangError):
    """Doubled-spectrum eigenphases could not be paired within tolerance."""


class ConvergenceError(LeeYangError):
    """An iterative method did not reach the requested tolerance."""
