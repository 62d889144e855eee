"""Exception hierarchy shared across the package."""


class TscError(Exception):
    """Base class for all package-specific errors."""


class FormatError(TscError):
    """Input bytes or file do not conform to the expected format."""


class TruncationError(FormatError):
    """Payload ends before the declared content is complete."""


class CorruptionError(FormatError):
    """Payload is structurally well-formed but semantically invalid."""


class UnsupportedChannelError(FormatError):
    """Audio input has more than one channel."""


class BudgetInfeasibleError(TscError):
    """Requested budget is below the minimal feasible compression."""


class NothingToCancelError(TscError):
    """No non-global persistence pair remains to cancel."""


class DegenerateSignalError(ValueError):
    """Signal has no variance (or is otherwise unusable for the operation)."""
