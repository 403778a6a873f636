"""Exception types shared across the package."""

from __future__ import annotations


class GleasonError(Exception):
    """Base class for all package errors."""


class InputError(GleasonError):
    """Invalid user-supplied data: bad point, bad domain, bad flag combination."""


class PolySyntaxError(InputError):
    """Malformed polynomial text, annotated with the byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ExponentOverflowError(PolySyntaxError):
    """Exponent magnitude above the 10^6 cap."""


class EvaluationDomainError(GleasonError):
    """Evaluation at a point outside the function's domain (zero to a negative power)."""


class NotDivisibleError(GleasonError):
    """Linear division left a remainder beyond tolerance; carries the residual value."""

    def __init__(self, message: str, residual):
        super().__init__(message)
        self.residual = residual


class NonvanishingError(GleasonError):
    """The function does not vanish where the construction requires it; carries the value."""

    def __init__(self, message: str, value):
        super().__init__(message)
        self.value = value


class UnboundedError(GleasonError):
    """Input fails the recession-cone boundedness test; carries the certificate."""

    def __init__(self, message: str, certificate):
        super().__init__(message)
        self.certificate = certificate


class ConeError(GleasonError):
    """A monomial falls outside the ratio-polynomial cone (negative ratio exponent)."""


class InfeasibleSplitError(GleasonError):
    """No separating line with small rational slope fits the boundary data."""


class InternalContractError(GleasonError):
    """An internal invariant failed, e.g. a division that should be exact left a remainder."""
