"""Exception hierarchy shared by every module of the package."""


class LSAlgebraError(Exception):
    """Base class for all errors raised by :mod:`lsalg`."""


class InvalidAlgebra(LSAlgebraError, ValueError):
    pass


class DimensionMismatch(LSAlgebraError, ValueError):
    pass


class ParseError(LSAlgebraError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(LSAlgebraError):
    """Monoid closure or enumeration needs more elements than the budget allows."""

    def __init__(self, cap, what="monoid closure"):
        self.cap = cap
        super().__init__(f"{what} exceeds the element budget of {cap}; raise the cap")


class BoundExceeded(LSAlgebraError):
    def __init__(self, n, bound, what="brute-force search"):
        self.n = n
        self.bound = bound
        super().__init__(f"{what} refused: {n} states exceeds the oracle bound {bound}")


class StrategyUnavailable(LSAlgebraError):
    pass


class NotMinimal(LSAlgebraError):
    def __init__(self, unreached):
        self.unreached = unreached
        super().__init__(f"algebra is not minimal: state {unreached} is unreachable from the base point")


class IncompatibleOp(LSAlgebraError):
    pass


class InconsistentAllowable(LSAlgebraError):
    pass


class CriterionMismatch(LSAlgebraError, AssertionError):
    """Two independent computations of the same property disagreed (an internal bug)."""


class UnknownSymbol(LSAlgebraError, KeyError):
    def __init__(self, symbol):
        self.symbol = symbol
        super().__init__(symbol)

    def __str__(self):
        return f"unknown symbol {self.symbol!r}"


class InvalidBoundarySet(LSAlgebraError, ValueError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__(f"invalid boundary set: {self.violations[:3]}")


class InvalidPartition(LSAlgebraError, ValueError):
    pass
