"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CodeError(Exception):
    """Base class for all errors raised by cartesian_ghw."""


class NotAPrimePower(CodeError, ValueError):
    pass


class Unsupported(CodeError, ValueError):
    pass


class SpecMismatch(CodeError, ValueError):
    pass


class DivisionByZero(CodeError, ZeroDivisionError):
    pass


class DimensionMismatch(CodeError, ValueError):
    pass


class BadDegree(CodeError, ValueError):
    pass


class BadArgs(CodeError, ValueError):
    pass


class BadRange(CodeError, ValueError):
    pass


class BadPreset(CodeError, ValueError):
    pass


class RankDeficient(CodeError, RuntimeError):
    """A generator matrix has lower rank than its monomial count (a bug)."""


class TooManyMonomials(CodeError, ValueError):
    pass


class ConditionFails(CodeError, ValueError):
    """The size condition of the closed formula does not hold.

    ``value`` still carries the evaluated expression; it is not an
    established GHW value for these sizes.
    """

    def __init__(self, message: str, value: int):
        super().__init__(message)
        self.value = value


class BudgetError(CodeError, RuntimeError):
    """Base class for searches that stop before finishing."""


class CapExceeded(BudgetError):
    """Too many subspaces to enumerate; ``count`` is the exact number."""

    def __init__(self, message: str, count: int):
        super().__init__(message)
        self.count = count


class BudgetExceeded(BudgetError):
    """An enumeration budget ran out.

    ``upper_bound`` is the best value found so far (None when nothing was
    found) and ``lower_bound`` a value the true answer cannot go below.
    """

    def __init__(self, message: str, upper_bound=None, lower_bound=None):
        super().__init__(message)
        self.upper_bound = upper_bound
        self.lower_bound = lower_bound


class SearchBudgetExceeded(BudgetError):
    """Footprint search ran out of budget; ``partial`` holds the best-so-far."""

    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial
