"""Exception types shared across the package.

Each error class carries the process exit code the CLI maps it to and a
short machine-readable code used in failure payloads.
"""


class DpcoverError(Exception):
    exit_code = 1
    code = "error"


class InvalidInputError(DpcoverError, ValueError):
    """Malformed or out-of-range input."""

    exit_code = 2
    code = "invalid-input"


class CountOverflowError(DpcoverError, OverflowError):
    """An exact count or partial sum left the supported integer range."""

    exit_code = 3
    code = "overflow"


class ResourceLimitError(DpcoverError):
    """A configured enumeration budget or subset-size guard was exceeded."""

    exit_code = 4
    code = "resource-limit"
