"""Exceptions and warnings raised across the package."""


class DivisionByZero(ZeroDivisionError):
    pass


class DomainMismatch(ValueError):
    pass


class ParseError(ValueError):
    """Scalar or file text that does not match the expected grammar."""

    def __init__(self, message: str, *, position: int | None = None) -> None:
        super().__init__(message)
        self.position = position


class CharTwoUnsupported(ValueError):
    pass


class ShapeError(ValueError):
    pass


class NonCommutingOps(ValueError):
    """The left and right multiplication operators of an element do not commute."""


class TypeParamInvalid(ValueError):
    """An axis type parameter was 0 or 1."""


class NotAnAxis(ValueError):
    pass


class NotJordanAxis(NotAnAxis):
    pass


class EnumerationTooLarge(RuntimeError):
    """The requested exhaustive scan exceeds the configured enumeration cap."""


class InfiniteField(ValueError):
    pass


class NotTwoDim(ValueError):
    pass


class NotGeneratedByGivenAxes(ValueError):
    pass


class DimExceedsThree(RuntimeError):
    """A 2-generated algebra of Jordan type cannot exceed dimension 3; the input is inconsistent."""


class NotCommutativeCase(ValueError):
    pass


class ParamOutOfRange(ValueError):
    pass


class Char3Warning(UserWarning):
    """In characteristic 3 the values -1 and 1/2 coincide, which merges cases of the classification."""
