"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class OrderedThetaError(Exception):
    """Base class for all package errors."""


class IdenticalPoints(OrderedThetaError):
    pass


class DegeneratePosition(OrderedThetaError):
    """A point lies (within tolerance) on a cone boundary ray."""


class DuplicatePoint(OrderedThetaError):
    def __init__(self, first: int, second: int):
        super().__init__(f"vertices {first} and {second} share the same coordinates")
        self.ids = (first, second)


class DegenerateInput(OrderedThetaError):
    """Raised by ``build`` when the general-position check reports violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        head = "; ".join(str(v) for v in self.violations[:3])
        more = f" (+{len(self.violations) - 3} more)" if len(self.violations) > 3 else ""
        super().__init__(f"input is not in general position: {head}{more}")


class IllegalMove(OrderedThetaError):
    """A router tried to forward the message to a vertex outside its 1-neighbourhood."""


class MemoryOverflow(OrderedThetaError):
    pass


class InternalStuck(OrderedThetaError):
    """Backtracking found no ordered-theta successor; the graph or router is broken."""


class EpsilonSearchFailed(OrderedThetaError):
    pass


class RetryLimitExceeded(OrderedThetaError):
    pass
