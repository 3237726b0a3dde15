"""
Lab Exceptions.

This file contains the exceptions raised by the library and translated into exit codes by the command line.

Author : Coke
Date   : 2025-06-02
"""

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERICAL = 2


class BaseLabException(Exception):
    """Base exception class for general errors."""

    exit_code = EXIT_NUMERICAL

    def __init__(self, *, exit_code: int | None = None, detail: str = "Lab error."):
        """
        Initializes a custom lab exception.

        Args:
            exit_code (int | None): The process exit code the command line reports (default from the class).
            detail (str): The detail message for the exception.
        """
        self.exit_code = self.exit_code if exit_code is None else exit_code
        self.detail = detail
        super().__init__(detail)


class ArgumentError(BaseLabException):
    """Exception for an argument outside the domain of an operation (exit 1)."""

    exit_code = EXIT_INVALID

    def __init__(self, *, detail: str = "invalid argument.", param: str = ""):
        """
        Initializes the ArgumentError.

        Args:
            detail (str): The error message (default "invalid argument.").
            param (str): Name of the offending parameter, prefixed to the message when given.
        """
        if param:
            detail = f"`{param}`: {detail}"
        super().__init__(detail=detail)


class ConfigError(BaseLabException):
    """Exception for an unparsable or inconsistent experiment configuration (exit 1)."""

    exit_code = EXIT_INVALID


class PreconditionError(BaseLabException):
    """Exception for inputs violating the hypotheses of a verified statement (exit 1)."""

    exit_code = EXIT_INVALID


class DegenerateSupportError(BaseLabException):
    """Exception for a restricted measure without any positive cell (exit 1)."""

    exit_code = EXIT_INVALID

    def __init__(self, *, detail: str = "restricted measure has empty support."):
        super().__init__(detail=detail)


class ResolutionError(BaseLabException):
    """Exception for a grid resolution outside the supported range (exit 2)."""

    exit_code = EXIT_NUMERICAL


class BudgetError(BaseLabException):
    """Exception for a transport problem too large for exact integer scaling (exit 2)."""

    exit_code = EXIT_NUMERICAL


class SolverError(BaseLabException):
    """Exception for a flow solver that did not reach an optimal status (exit 2)."""

    exit_code = EXIT_NUMERICAL
