from typing import Any

from ejakit.exceptions.base import EjaException


class StructuralException(EjaException):
    ...


class EmptyAlgebraException(StructuralException):

    def __init__(self) -> None:
        super().__init__("An algebra needs at least one factor")


class InvalidFactorException(StructuralException):

    def __init__(self, kind: Any, reason: str) -> None:
        super().__init__(f"Invalid factor \"{kind}\": {reason}")


class ScalarTagMismatchException(StructuralException):

    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"Cannot combine scalars tagged \"{left}\" and \"{right}\"")


class AlgebraMismatchException(StructuralException):

    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(f"Operands live in different algebras: {left} vs {right}")


class DimensionMismatchException(StructuralException):

    def __init__(self, expected: Any, actual: Any) -> None:
        super().__init__(f"Expected dimension {expected} but got {actual} instead")
