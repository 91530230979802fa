"""
Exception hierarchy for the kernel.
Library code raises these; only the CLI turns them into exit codes.
"""

from typing import Optional


class KernelError(ValueError):
    """Base class for all kernel errors."""


class ParameterError(KernelError):
    """Invalid prime, precision, modulus, strand count or index."""


class PrecisionError(ParameterError):
    """A level or precision outside the available range."""


class IncompatibleError(ParameterError):
    """Operands live at incompatible levels (prime, modulus, size or params mismatch)."""


class ParseError(KernelError):
    """Malformed text input. `column` is 1-based."""

    def __init__(self, message: str, column: Optional[int] = None, text: str = ""):
        self.column = column
        self.text = text
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)
