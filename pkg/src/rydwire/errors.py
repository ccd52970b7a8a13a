"""Exception hierarchy shared across the package.

The CLI maps these onto stable exit codes: configuration problems exit 1,
numerical failures exit 2, resource-guard rejections exit 3.
"""


class RydwireError(Exception):
    """Base class for all package errors."""


class ConfigError(RydwireError):
    """Invalid configuration, geometry, or argument combination."""


class NumericalError(RydwireError):
    """A solver failed to converge or produced an unusable result."""


class ResourceGuardError(RydwireError):
    """A desk-scale guard (basis size, matrix size) was exceeded."""


class DegenerateGroundStateError(NumericalError):
    """Ground space is degenerate where a unique state is required."""
