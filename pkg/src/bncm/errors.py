"""Exception hierarchy.

``InputError`` subclasses describe bad input (CLI exit code 2);
``InvariantViolation`` subclasses signal an internal bug (exit code 3).
"""


class BNCMError(Exception):
    pass


class InputError(BNCMError, ValueError):
    pass


class InvariantViolation(BNCMError, AssertionError):
    pass


class ParseError(InputError):
    pass


class OddCardinality(InputError):
    pass


class DuplicatePoints(InputError):
    pass


class EmptyMatching(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class NotConvexPosition(InputError):
    pass


class NotCocircular(InputError):
    pass


class BudgetExceeded(InputError):
    pass


class DegenerateDelta(InputError):
    pass


class OddCount(InputError):
    pass


class EmptyCell(InputError):
    pass


class NotEnoughPoints(InputError):
    pass


class NonAdjacentCells(InvariantViolation):
    """An edge joins two grid cells that are neither equal nor adjacent."""


class PropertyViolation(InvariantViolation):
    """A structural property of the reduced matching failed to hold."""

    def __init__(self, prop: int, detail: str = ""):
        self.prop = prop
        super().__init__(f"property {prop} violated" + (f": {detail}" if detail else ""))


class ClaimViolation(InvariantViolation):
    """A precondition of a reduction rule firing did not hold."""

    def __init__(self, statement: int, detail: str = ""):
        self.statement = statement
        super().__init__(f"rule III statement ({statement}) violated"
                         + (f": {detail}" if detail else ""))


class IOFailure(InputError):
    pass
