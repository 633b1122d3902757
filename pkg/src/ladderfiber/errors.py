"""Exception types raised across the package."""

from __future__ import annotations


class LadderError(ValueError):
    """Base class for invalid ladder or tableau input."""


class ShapeError(LadderError):
    """A ladder shape fails one of its structural constraints."""


class StrictnessViolation(ShapeError):
    pass


class GapViolation(ShapeError):
    pass


class EmptyInterval(ShapeError):
    pass


class BoundViolation(ShapeError):
    pass


class Degenerate(ShapeError):
    """Normalization emptied some row interval."""


class NotAChain(LadderError):
    pass


class InvalidStep(NotAChain):
    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class WrongMultiset(NotAChain):
    pass


class CellOutside(LadderError):
    pass


class NotStandard(LadderError):
    pass


class CapExceeded(RuntimeError):
    """An enumeration hit its size cap; ``count`` is what was seen so far."""

    def __init__(self, cap: int, count: int, what: str = "items"):
        super().__init__(f"more than {cap} {what} (stopped after {count})")
        self.cap = cap
        self.count = count
        self.what = what
