"""Exception types shared across the package."""


class LhallError(Exception):
    """Base class for all package errors."""


class InvalidInputError(LhallError):
    """Raised when arguments violate a documented precondition."""


class ResourceLimitError(LhallError):
    """Raised before starting a computation whose size exceeds a configured cap."""


class NotPolynomialError(LhallError):
    """Raised when a count sequence fails to be polynomial of the expected degree."""


class InternalCheckError(LhallError):
    """Raised when a redundant internal consistency check fails.

    These guard invariants that should be unreachable; seeing one means a bug,
    not bad input.
    """
