"""
Coordinate scalars R, C, H and O built by Cayley-Dickson doubling.

Products follow (a, b)(c, d) = (ac - conj(d) b, da + b conj(c)); with this
convention e1 e2 = e3 in H and the octonions are alternative but not
associative.
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from ejakit.exceptions import DimensionMismatchException, ScalarTagMismatchException


class DivisionAlgebra(str, Enum):
    R = "R"
    C = "C"
    H = "H"
    O = "O"

    @property
    def size(self) -> int:
        return {"R": 1, "C": 2, "H": 4, "O": 8}[self.value]

    @property
    def associative(self) -> bool:
        return self is not DivisionAlgebra.O


def _conj(x: np.ndarray) -> np.ndarray:
    out = -x
    out[..., 0] = x[..., 0]
    return out


def _double(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    n = x.shape[-1]
    if n == 1:
        return x * y
    h = n // 2
    a, b = x[..., :h], x[..., h:]
    c, d = y[..., :h], y[..., h:]
    return np.concatenate(
        [_double(a, c) - _double(_conj(d), b), _double(d, a) + _double(b, _conj(c))],
        axis=-1,
    )


@lru_cache(maxsize=None)
def structure_tensor(tag: DivisionAlgebra) -> np.ndarray:
    """
    T with (xy)_c = sum_ab x_a y_b T[a, b, c].
    Cached per tag; callers must not mutate it.
    """
    k = tag.size
    eye = np.eye(k)
    table = np.zeros((k, k, k))
    for a in range(k):
        for b in range(k):
            table[a, b] = _double(eye[a], eye[b])
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def conjugation_signs(tag: DivisionAlgebra) -> np.ndarray:
    signs = -np.ones(tag.size)
    signs[0] = 1.0
    signs.setflags(write=False)
    return signs


@dataclass(frozen=True, eq=False)
class Scalar:
    tag: DivisionAlgebra
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        coefficients = np.asarray(self.coefficients, dtype=float).reshape(-1)
        if coefficients.shape[0] != self.tag.size:
            raise DimensionMismatchException(self.tag.size, coefficients.shape[0])
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def real(cls, tag: DivisionAlgebra, value: float) -> Scalar:
        coefficients = np.zeros(tag.size)
        coefficients[0] = value
        return cls(tag, coefficients)

    @classmethod
    def unit(cls, tag: DivisionAlgebra, index: int) -> Scalar:
        """The basis unit e_index (e_0 = 1)."""
        return cls(tag, np.eye(tag.size)[index])

    def _check(self, other: Scalar) -> None:
        if self.tag is not other.tag:
            raise ScalarTagMismatchException(self.tag.value, other.tag.value)

    def __add__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.tag, self.coefficients + other.coefficients)

    def __sub__(self, other: Scalar) -> Scalar:
        self._check(other)
        return Scalar(self.tag, self.coefficients - other.coefficients)

    def __neg__(self) -> Scalar:
        return Scalar(self.tag, -self.coefficients)

    def __mul__(self, other) -> Scalar:
        if isinstance(other, Scalar):
            return cayley_dickson_multiply(self, other)
        if isinstance(other, numbers.Real):
            return Scalar(self.tag, float(other) * self.coefficients)
        return NotImplemented

    def __rmul__(self, other) -> Scalar:
        if isinstance(other, numbers.Real):
            return Scalar(self.tag, float(other) * self.coefficients)
        return NotImplemented

    def conj(self) -> Scalar:
        return conj(self)

    def re(self) -> float:
        return re(self)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coefficients))

    def isclose(self, other: Scalar, rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        self._check(other)
        return bool(np.allclose(self.coefficients, other.coefficients, rtol=rtol, atol=atol))

    def __repr__(self) -> str:
        terms = " + ".join(f"{c:g}e{i}" for i, c in enumerate(self.coefficients))
        return f"Scalar[{self.tag.value}]({terms})"


def cayley_dickson_multiply(x: Scalar, y: Scalar) -> Scalar:
    x._check(y)
    return Scalar(x.tag, _double(x.coefficients, y.coefficients))


def conj(x: Scalar) -> Scalar:
    return Scalar(x.tag, _conj(x.coefficients))


def re(x: Scalar) -> float:
    return float(x.coefficients[0])


def associator(x: Scalar, y: Scalar, z: Scalar) -> Scalar:
    """(xy)z - x(yz); zero exactly when the triple associates."""
    return (x * y) * z - x * (y * z)
