"""Exception hierarchy.

Two families matter to the CLI: :class:`InputError` (malformed text,
unknown names; exit code 2) and :class:`PreconditionError` (well-formed
input that violates an operation's precondition; exit code 3).
"""

from __future__ import annotations


class DomlabError(Exception):
    """Base class for every error raised by this package."""


class InputError(DomlabError, ValueError):
    pass


class PreconditionError(DomlabError, ValueError):
    pass


class InvalidVertex(PreconditionError):
    pass


class NotAnEdge(PreconditionError):
    pass


class CapacityExceeded(PreconditionError):
    pass


class EmptySet(PreconditionError):
    pass


class VertexNotInSet(PreconditionError):
    pass


class Disconnected(PreconditionError):
    pass


class TooSmall(PreconditionError):
    pass


class NotATree(PreconditionError):
    pass


class NotSRTree(PreconditionError):
    pass


class PreconditionGammaNotOne(PreconditionError):
    pass


class InvalidSize(PreconditionError):
    pass


class DisconnectedResult(PreconditionError):
    pass


class SpecInvalid(InputError):
    """A family spec violates one of its invariants; ``invariant`` names it."""

    def __init__(self, invariant: str, detail: str = "") -> None:
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


class UnknownFamily(InputError):
    pass


class UnknownTheoremId(InputError):
    pass


class MalformedGraph6(InputError):
    def __init__(self, message: str, position: int) -> None:
        self.position = position
        super().__init__(f"{message} (byte {position})")


class MalformedInput(InputError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
