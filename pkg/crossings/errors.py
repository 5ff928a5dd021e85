"""Exceptions raised by the services; the CLI maps them to exit codes."""

from typing import Optional


class CrossingsError(Exception):
    """Base class for every error raised on purpose by this package."""


class ParseError(CrossingsError, ValueError):
    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class CapacityError(CrossingsError, RuntimeError):
    def __init__(self, cap_name: str, cap: int, required: Optional[int] = None):
        self.cap_name = cap_name
        self.cap = cap
        self.required = required
        detail = f" (needs {required})" if required is not None else ""
        super().__init__(f"{cap_name} exceeded: cap is {cap}{detail}")


class DomainError(CrossingsError, ValueError):
    pass


class ContractViolation(CrossingsError, ValueError):
    pass


class UsageError(CrossingsError):
    """Bad command-line arguments."""
