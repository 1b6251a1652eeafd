"""Exception hierarchy shared by all ncsphere modules."""


class NCSphereError(Exception):
    """Base class for every error raised by the engine."""


class AlphabetError(NCSphereError, ValueError):
    """A word mentions a generator that the presentation does not know."""


class UnsupportedKindError(NCSphereError, TypeError):
    """Operation not available for this presentation kind or coefficient ring."""


class PresentationMismatchError(NCSphereError, ValueError):
    """Operands live over different presentations."""


class NotAHomomorphismError(NCSphereError, ValueError):
    """Generator images violate a relation of the source presentation."""


class PolynomialityError(NCSphereError, ArithmeticError):
    """A trigonometric denominator survived where a polynomial was required."""


class PreconditionError(NCSphereError, ValueError):
    """An input violates an operation's documented precondition."""


class ShapeError(NCSphereError, ValueError):
    """Matrix operand has the wrong shape."""


class DegreeOverflowError(NCSphereError, ValueError):
    """Polynomial degree exceeds the degree bound of a spanning basis."""


class ParseError(NCSphereError, ValueError):
    """Text does not follow the dump grammar."""
