"""Exception hierarchy.

Every error a user can trigger through bad mathematics (as opposed to bad
syntax) derives from :class:`GeometryError`; the CLI maps those to exit 1.
"""


class GeometryError(Exception):
    """Base class for mathematical errors raised by the engine."""


class DivisionByZero(GeometryError, ZeroDivisionError):
    pass


class FieldMismatch(GeometryError, TypeError):
    pass


class DegenerateInput(GeometryError, ValueError):
    pass


class SameLine(GeometryError):
    pass


class HypothesisViolated(GeometryError):
    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


class NotOnSource(GeometryError):
    pass


class BadDirection(GeometryError):
    pass


class AuxOnLine(GeometryError):
    pass


class DegenerateAux(GeometryError):
    pass


class UndefinedRatio(GeometryError):
    pass


class InfiniteInput(GeometryError):
    pass


class UnknownVertex(GeometryError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BasisMismatch(GeometryError):
    pass


class LiteralError(ValueError):
    """Malformed field spec or scalar literal (a usage error, not a math error)."""
