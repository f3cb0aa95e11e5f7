"""Exception hierarchy shared by every engine."""


class HankelCFError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HankelCFError, ValueError):
    """An argument lies outside the domain of an operation."""


class ExactDivisionError(HankelCFError, ArithmeticError):
    """A polynomial division that was required to be exact left a remainder."""


class SeriesDivisionError(HankelCFError, ArithmeticError):
    pass


class FormalCancellationError(HankelCFError, ArithmeticError):
    """A symbolic log term survived where it must cancel, or two log terms met in a product."""


class DegenerateMomentsError(HankelCFError, ArithmeticError):
    """A Hankel determinant needed as a divisor vanishes."""


class ArityError(HankelCFError, ValueError):
    """Not enough recurrence parameters for the requested depth."""


class EquivalenceError(HankelCFError, ValueError):
    pass


class ContractionError(HankelCFError, ArithmeticError):
    pass
