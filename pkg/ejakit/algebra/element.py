from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from ejakit.exceptions import AlgebraMismatchException, DimensionMismatchException

if TYPE_CHECKING:
    from ejakit.algebra.jordan import JordanAlgebra


@dataclass(frozen=True, eq=False)
class Element:
    """Coordinate vector in the orthonormal basis of its algebra."""

    # numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    algebra: "JordanAlgebra"
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float).reshape(-1)
        if coords.shape[0] != self.algebra.dim:
            raise DimensionMismatchException(self.algebra.dim, coords.shape[0])
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    def _check(self, other: Element) -> None:
        if not self.algebra.is_same(other.algebra):
            raise AlgebraMismatchException(self.algebra.label, other.algebra.label)

    def _new(self, coords: np.ndarray) -> Element:
        return Element(self.algebra, coords)

    def __add__(self, other: Element) -> Element:
        self._check(other)
        return self._new(self.coords + other.coords)

    def __sub__(self, other: Element) -> Element:
        self._check(other)
        return self._new(self.coords - other.coords)

    def __neg__(self) -> Element:
        return self._new(-self.coords)

    def __mul__(self, other) -> Element:
        if isinstance(other, Element):
            self._check(other)
            return self._new(self.algebra.product_coords(self.coords, other.coords))
        if isinstance(other, numbers.Real):
            return self._new(float(other) * self.coords)
        return NotImplemented

    def __rmul__(self, other) -> Element:
        if isinstance(other, numbers.Real):
            return self._new(float(other) * self.coords)
        return NotImplemented

    def __truediv__(self, other) -> Element:
        if isinstance(other, numbers.Real):
            return self._new(self.coords / float(other))
        return NotImplemented

    def square(self) -> Element:
        return self * self

    def power(self, n: int) -> Element:
        if n < 0:
            raise ValueError("negative powers need the spectral calculus")
        result = self.algebra.unit
        for _ in range(n):
            result = self * result
        return result

    def inner(self, other: Element) -> float:
        self._check(other)
        return float(self.coords @ other.coords)

    def trace(self) -> float:
        return self.algebra.trace_coords(self.coords)

    def norm(self) -> float:
        """Hilbert norm; the order-unit norm lives in the spectral package."""
        return float(np.linalg.norm(self.coords))

    def distance(self, other: Element) -> float:
        return (self - other).norm()

    def isclose(self, other: Element, tol: float = 1e-10) -> bool:
        return self.distance(other) <= tol

    def transfer(self, target: "JordanAlgebra") -> Element:
        """Re-express this element in another basis of the same subspace."""
        from ejakit.algebra.jordan import transition

        matrix = transition(self.algebra, target)
        if matrix is None:
            return Element(target, self.coords)
        return Element(target, matrix @ self.coords)

    def __repr__(self) -> str:
        return f"Element({self.algebra.label}, {np.array2string(self.coords, precision=4)})"
