"""
Error hierarchy shared by every laboratory package.

The CLI maps these to exit codes: parameter-type errors exit 2, any other
LabError exits 1 after logging.
"""


class LabError(Exception):
    """Base class for all laboratory errors."""


class ParameterError(LabError, ValueError):
    """A precondition on an operation's arguments does not hold."""


class SeparationError(ParameterError):
    """A point system violates its spacing or width constraints."""


class SizingError(LabError):
    """A request exceeds a configured memory budget or size cap."""


class TableUnderflowError(LabError):
    """The divisor table is too small for the requested argument."""

    def __init__(self, required_limit: int, table_limit: int, what: str = ""):
        self.required_limit = required_limit
        self.table_limit = table_limit
        detail = f" for {what}" if what else ""
        super().__init__(
            f"table underflow{detail}: need limit >= {required_limit}, "
            f"table has limit {table_limit}"
        )


class CoverageError(LabError):
    """A sample grid does not cover the requested range."""


class DataError(LabError):
    """Computed data is inconsistent (failed identity, nonpositive moment, ...)."""


class CacheCorruptError(LabError):
    """A cache file failed its magic, length or validation check."""
