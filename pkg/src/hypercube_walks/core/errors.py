from __future__ import annotations


class HypercubeWalksError(Exception):
    """Base class for errors raised by this package."""


class CapExceededError(HypercubeWalksError, ValueError):
    def __init__(self, message: str, *, flag: str) -> None:
        super().__init__(message)
        self.flag = flag


class DimensionMismatchError(HypercubeWalksError, ValueError):
    pass


class InexactDivisionError(HypercubeWalksError, ArithmeticError):
    pass


class VerificationError(HypercubeWalksError, AssertionError):
    pass
