"""Exception hierarchy shared across the library and the CLI.

Each class maps to a distinct process exit code so shell callers can
tell a misuse apart from a violated formula hypothesis or a blown cap.
"""


class RootsigError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class UsageError(RootsigError):
    """Bad arguments or an operation that makes no sense as requested."""

    exit_code = 2


class HypothesisError(RootsigError):
    """A closed formula was asked for outside its hypotheses."""

    exit_code = 3


class CapExceededError(RootsigError):
    """An enumeration would exceed its configured cap."""

    exit_code = 4

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class OracleMismatchError(RootsigError):
    """Two independent computations of the same quantity disagree."""

    exit_code = 5


class FitError(RootsigError):
    """Quasi-polynomial interpolation produced a non-integer or
    non-monic fit, or was given too few sample points."""
