"""Exception types shared by all modules.

Every error carries a ``details`` dict so the CLI can emit it as a
machine-readable object without knowing the concrete type.
"""

from __future__ import annotations

from typing import Any


class BetapathError(Exception):
    """Base class for all errors raised by operations in this package."""

    def __init__(self, message: str, **details: Any) -> None:
        super().__init__(message)
        self.details = details

    def to_json(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self), **self.details}


class InvalidHypergraph(BetapathError):
    pass


class IsolatedVertex(BetapathError):
    pass


class DuplicateStar(BetapathError):
    pass


class NotInvolutive(BetapathError):
    pass


class MalformedSequence(BetapathError):
    pass


class PreconditionViolated(BetapathError):
    pass


class InvalidPair(BetapathError):
    pass


class DegreeTooLow(BetapathError):
    pass


class NotAnEdge(BetapathError):
    pass


class BadLength(BetapathError):
    pass


class RepeatedVertex(BetapathError):
    pass


class MissingLabel(BetapathError):
    pass


class InvalidLabeling(BetapathError):
    pass


class TooLarge(BetapathError):
    pass


class InfeasibleParameters(BetapathError):
    pass
