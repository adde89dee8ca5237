from typing import Any

from ejakit.exceptions.base import EjaException


class DomainException(EjaException):
    ...


class NotIdempotentException(DomainException):

    def __init__(self, residual: float) -> None:
        self.residual = residual
        super().__init__(f"Element is not idempotent: |p*p - p| = {residual:.3e}")


class NotPositiveException(DomainException):

    def __init__(self, min_eigenvalue: float) -> None:
        self.min_eigenvalue = min_eigenvalue
        super().__init__(f"Element is not positive: smallest spectral value {min_eigenvalue:.3e}")


class NotEffectException(DomainException):

    def __init__(self, low: float, high: float) -> None:
        self.low = low
        self.high = high
        super().__init__(f"Element is not an effect: spectrum spans [{low:.3e}, {high:.3e}]")


class PreconditionViolatedException(DomainException):

    def __init__(self, inequality: str, residual: Any = None) -> None:
        self.inequality = inequality
        self.residual = residual
        detail = "" if residual is None else f" (residual {residual:.3e})"
        super().__init__(f"Precondition \"{inequality}\" does not hold{detail}")
