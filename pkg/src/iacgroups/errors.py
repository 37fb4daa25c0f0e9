"""Exception types raised across the package."""


class IacError(Exception):
    """Base class for every error raised by iacgroups."""


# fields
class NotPrime(IacError, ValueError):
    pass


class EvenCharacteristic(IacError, ValueError):
    pass


class ReducibleModulus(IacError, ValueError):
    pass


class FieldMismatch(IacError, TypeError):
    pass


class DivisionByZero(IacError, ZeroDivisionError):
    pass


class OrderDoesNotDivide(IacError, ValueError):
    pass


# linear algebra
class DimensionMismatch(IacError, ValueError):
    pass


class NotSquare(IacError, ValueError):
    pass


class NotInvertible(IacError, ValueError):
    pass


class TooLargeForExhaustive(IacError, RuntimeError):
    pass


class GeneratorCountMismatch(IacError, ValueError):
    pass


# algebras
class IndexOutOfRange(IacError, IndexError):
    pass


class PairNotStrictlyOrdered(IacError, ValueError):
    pass


class HasCenter(IacError, ValueError):
    pass


class AbelianAlgebra(IacError, ValueError):
    """Raised by semisimple_decompose; ``lines`` holds the r coordinate lines."""

    def __init__(self, message, lines=()):
        super().__init__(message)
        self.lines = list(lines)


class NotSemisimple(IacError, ValueError):
    pass


class NoSmallGeneratingSet(IacError, ValueError):
    pass


class SearchSpaceTooLarge(IacError, RuntimeError):
    pass


class NotDim3(IacError, ValueError):
    pass


class ProductNotFull(IacError, ValueError):
    pass


# groups
class NotPrimeField(IacError, ValueError):
    pass


class EvenPrime(IacError, ValueError):
    pass


class NotCentral(IacError, ValueError):
    pass


class RootUndefined(IacError, ValueError):
    pass


class InconsistentPresentation(IacError, RuntimeError):
    pass


# constructions
class ReducibleModule(IacError, ValueError):
    pass


class CharacteristicDividesT(IacError, ValueError):
    pass


class UnsupportedT(IacError, ValueError):
    pass


class UnsupportedQ(IacError, ValueError):
    pass


class BadHypothesis(IacError, ValueError):
    pass


class DegreeTooLargeForChar(IacError, ValueError):
    pass


class CharTooSmall(IacError, ValueError):
    pass


class BadCongruence(IacError, ValueError):
    pass


class FormatError(IacError, ValueError):
    """A document does not have the expected shape."""
