"""Exception types shared across the package."""


class QalgError(Exception):
    """Base class for all library errors."""


class DivisionByZero(QalgError):
    """Scalar division or inversion with a zero divisor."""


class PoleAtPoint(QalgError):
    """Numeric evaluation hit a vanishing denominator."""


class UnboundSymbol(QalgError):
    """Numeric evaluation is missing a binding for a symbol."""


class NotInS(QalgError):
    """Element is not in the multiplicative set S = C[x,x^-1] \\ {0}."""


class DivisionByZeroElement(QalgError):
    """Left division by the zero element of B."""


class WidthTooLarge(QalgError):
    """Operation only defined for y-width <= 1."""


class ZeroVector(QalgError):
    """Operation requires a nonzero module vector."""


class ExcludedParameter(QalgError):
    """Degree reduction hit the excluded parameter family x1 = +-q^(1-s)."""


class NotFree(QalgError):
    """Action pair matches none of the rank-one family closed forms."""


class NotInvertible(QalgError):
    """Negative power of a non-invertible ring element."""


class ExprSyntaxError(QalgError):
    """Expression parse failure; carries the byte offset of the failure."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class IllegalSymbolForRing(QalgError):
    """Expression uses a symbol the target ring does not define."""


class NonScalarDenominator(QalgError):
    """Division by a subexpression that is not scalar-valued in this ring."""
