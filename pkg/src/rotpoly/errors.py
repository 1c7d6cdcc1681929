"""Exception types shared across the package."""


class RotpolyError(Exception):
    """Base class for numeric-domain failures."""


class DivisionByZeroRotation(RotpolyError, ZeroDivisionError):
    pass


class RealAxisPoint(RotpolyError, ValueError):
    """The point lies on the real axis, so the companion similarity T is singular."""


class DegreeZero(RotpolyError, ValueError):
    pass


class EvaluationAtRoot(RotpolyError, ZeroDivisionError):
    pass


class PoleOnGrid(RotpolyError, ZeroDivisionError):
    pass


class PoleAtPoint(RotpolyError, ZeroDivisionError):
    pass


class DimensionMismatch(RotpolyError, ValueError):
    pass


class NonPositive(RotpolyError, ValueError):
    pass


class ZeroMatrix(RotpolyError, ValueError):
    pass
