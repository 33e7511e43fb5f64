"""Exception hierarchy shared across the package."""


class QWeylError(Exception):
    """Base class for mathematical domain errors."""


class FieldMismatch(QWeylError):
    """Operands belong to different coefficient fields."""


class ContextMismatch(QWeylError):
    """Operands belong to different algebras (field or q differ)."""


class InvalidModulus(QWeylError):
    """Prime-field modulus is not an odd prime."""


class CharacteristicTwo(InvalidModulus):
    """Fields of characteristic 2 are not supported."""


class QIsZero(QWeylError):
    """The deformation parameter q must be nonzero."""


class QIsOne(QWeylError):
    """The operation is undefined at q = 1."""


class QNotMinusOne(QWeylError):
    """The operation requires q = -1."""


class ZeroInput(QWeylError):
    """The operation requires a nonzero input."""


class ZeroDivisor(ZeroInput):
    """Divisibility queries require a nonzero divisor."""


class UnitInput(QWeylError):
    """The operation rejects zero and units (nonzero scalars)."""


class WrongShape(QWeylError):
    """The polynomial does not have the shape the operation expects."""


class DegreeTooLow(QWeylError):
    """A quadratic form needs a nonzero coefficient on x^2, xy or y^2."""


class ZeroLeadingCoefficient(QWeylError):
    """The leading coefficient must be nonzero."""


class SpaceTooLarge(QWeylError):
    """An enumeration exceeds the configured cardinality cap."""


class ParseError(QWeylError):
    """Syntax error in a polynomial or scalar literal."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position
