"""Shared exception types.

DomainError      -- a precondition on the inputs was violated (CLI exit 2).
PrecisionError   -- a result could not be certified at the requested
                    precision; retry with more digits (CLI exit 3).
ResourceError    -- a configured growth bound was exceeded (CLI exit 3).
ContractError    -- an internal mathematical contract failed;  never caught
                    silently, so test suites surface it as a failure.
"""


class DomainError(ValueError):
    pass


class PrecisionError(ArithmeticError):
    pass


class ResourceError(RuntimeError):
    pass


class ContractError(RuntimeError):
    pass
