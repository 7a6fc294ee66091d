"""Exception hierarchy shared by every module of the package."""


class CremonaError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(CremonaError, ValueError):
    pass


class BothZero(CremonaError, ValueError):
    pass


class NotExactDivision(CremonaError, ArithmeticError):
    pass


class ModulusMismatch(CremonaError, ValueError):
    pass


class DivisionByZero(CremonaError, ZeroDivisionError):
    pass


class AllZero(CremonaError, ValueError):
    pass


class ZeroDenominator(CremonaError, ZeroDivisionError):
    pass


class DegreeCapExceeded(CremonaError, ArithmeticError):
    """Raised when a normalized composite is above the configured degree cap.

    ``prefix`` is filled in by word evaluation with the letters already
    composed when the cap was hit.
    """

    def __init__(self, degree, cap, prefix=None):
        self.degree = degree
        self.cap = cap
        self.prefix = prefix
        msg = f"degree {degree} exceeds cap {cap}"
        if prefix is not None:
            msg += f" (after prefix of {len(prefix)} letters)"
        super().__init__(msg)


class TooShort(CremonaError, ValueError):
    pass


class NotUnimodular(CremonaError, ValueError):
    pass


class NotHyperbolic(CremonaError, ValueError):
    pass


class BadInverse(CremonaError, ValueError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"inverse witness for generator {name!r} is wrong")


class BadMobius(CremonaError, ValueError):
    pass


class MapSyntaxError(CremonaError, ValueError):
    """Parse failure; ``position`` is the 0-based offset into the source."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")
