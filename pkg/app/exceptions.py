# app/exceptions.py
"""
Error hierarchy shared by the multiplet services and the CLI.
"""


class MultipletError(Exception):
    """Base class for every error raised by this package."""


class ArityMismatchError(MultipletError, ValueError):
    """Linear forms or weights of different arity were combined."""


class UnsupportedRankError(MultipletError, ValueError):
    """The requested rank is outside the supported so*(4r) family."""


class OracleUnavailableError(MultipletError):
    """The brute-force Weyl group oracle was asked for a rank it cannot hold."""


class InvariantViolation(MultipletError, RuntimeError):
    """An internal invariant failed; signals a bug, never bad user input."""


class NonDominantError(InvariantViolation):
    """A signature label is not generically positive."""


class GoldenTableError(MultipletError, ValueError):
    """The transcribed signature table could not be read or parsed."""
