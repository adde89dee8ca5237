from ejakit.exceptions.base import EjaException
from ejakit.exceptions.descriptor import DescriptorException
from ejakit.exceptions.domain import (
    DomainException,
    NotEffectException,
    NotIdempotentException,
    NotPositiveException,
    PreconditionViolatedException,
)
from ejakit.exceptions.numerical import ConvergenceException, NumericalException
from ejakit.exceptions.structural import (
    AlgebraMismatchException,
    DimensionMismatchException,
    EmptyAlgebraException,
    InvalidFactorException,
    ScalarTagMismatchException,
    StructuralException,
)

__all__ = [
    "EjaException",
    "StructuralException",
    "EmptyAlgebraException",
    "InvalidFactorException",
    "ScalarTagMismatchException",
    "AlgebraMismatchException",
    "DimensionMismatchException",
    "DomainException",
    "NotIdempotentException",
    "NotPositiveException",
    "NotEffectException",
    "PreconditionViolatedException",
    "NumericalException",
    "ConvergenceException",
    "DescriptorException",
]
