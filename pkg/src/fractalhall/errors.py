"""Exception types raised by fractalhall.

Every domain error derives from :class:`FractalHallError`, which the CLI maps
to exit code 1.
"""


class FractalHallError(ValueError):
    """Base class for domain errors."""


class ZeroDenominator(FractalHallError, ZeroDivisionError):
    pass


class ParseError(FractalHallError):
    pass


class InvalidOrder(FractalHallError):
    pass


class NotAdjacent(FractalHallError):
    pass


class NegativeFilling(FractalHallError):
    pass


class InvalidLabel(FractalHallError):
    pass


class InvalidParameter(FractalHallError):
    """A physical parameter (temperature, flux, spin, ...) is out of range."""


class CondensationRegion(FractalHallError):
    """h = 2 with xi <= 1: no solution Y > 2 exists (Bose condensation)."""


class NoClosedForm(FractalHallError):
    pass


class Unbounded(FractalHallError):
    pass


class InvalidOccupation(FractalHallError):
    pass


class ExclusionViolation(FractalHallError):
    pass


class TooManyPoints(FractalHallError):
    pass


class ResolutionTooCoarse(FractalHallError):
    pass


class DegenerateResolutions(FractalHallError):
    pass
