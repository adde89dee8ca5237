from __future__ import annotations

import numbers
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from ejakit.algebra.element import Element
from ejakit.exceptions import DimensionMismatchException

if TYPE_CHECKING:
    from ejakit.algebra.jordan import JordanAlgebra


def operator_norm(matrix: np.ndarray) -> float:
    if matrix.size == 0:
        return 0.0
    return float(np.linalg.norm(matrix, 2))


@dataclass(frozen=True, eq=False)
class LinOp:
    """Dense matrix between two algebras in their orthonormal bases."""

    __array_ufunc__ = None

    domain: "JordanAlgebra"
    codomain: "JordanAlgebra"
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        shape = (self.codomain.dim, self.domain.dim)
        matrix = np.array(self.matrix, dtype=float)
        if matrix.size == 0:
            matrix = matrix.reshape(shape)
        if matrix.shape != shape:
            raise DimensionMismatchException(shape, matrix.shape)
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, algebra: "JordanAlgebra") -> LinOp:
        return cls(algebra, algebra, np.eye(algebra.dim))

    @classmethod
    def zero(cls, domain: "JordanAlgebra", codomain: "JordanAlgebra") -> LinOp:
        return cls(domain, codomain, np.zeros((codomain.dim, domain.dim)))

    def __call__(self, x: Element) -> Element:
        x = x.transfer(self.domain)
        return Element(self.codomain, self.matrix @ x.coords)

    def compose(self, inner: LinOp) -> LinOp:
        """self after inner."""
        from ejakit.algebra.jordan import transition

        bridge = transition(inner.codomain, self.domain)
        middle = inner.matrix if bridge is None else bridge @ inner.matrix
        return LinOp(inner.domain, self.codomain, self.matrix @ middle)

    def __matmul__(self, inner: LinOp) -> LinOp:
        return self.compose(inner)

    def adjoint(self) -> LinOp:
        return LinOp(self.codomain, self.domain, self.matrix.T)

    @property
    def T(self) -> LinOp:
        return self.adjoint()

    def expressed_in(self, domain: "JordanAlgebra", codomain: "JordanAlgebra") -> LinOp:
        """The same map written in the bases of compatible algebras."""
        from ejakit.algebra.jordan import transition

        matrix = self.matrix
        into = transition(self.codomain, codomain)
        if into is not None:
            matrix = into @ matrix
        outof = transition(domain, self.domain)
        if outof is not None:
            matrix = matrix @ outof
        return LinOp(domain, codomain, matrix)

    def _aligned(self, other) -> np.ndarray:
        other = getattr(other, "op", other)
        return other.expressed_in(self.domain, self.codomain).matrix

    def __add__(self, other: LinOp) -> LinOp:
        return LinOp(self.domain, self.codomain, self.matrix + self._aligned(other))

    def __sub__(self, other: LinOp) -> LinOp:
        return LinOp(self.domain, self.codomain, self.matrix - self._aligned(other))

    def __neg__(self) -> LinOp:
        return LinOp(self.domain, self.codomain, -self.matrix)

    def __mul__(self, other) -> LinOp:
        if isinstance(other, numbers.Real):
            return LinOp(self.domain, self.codomain, float(other) * self.matrix)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> float:
        return operator_norm(self.matrix)

    def distance(self, other: LinOp) -> float:
        return operator_norm(self.matrix - self._aligned(other))

    def is_square(self) -> bool:
        return self.domain.dim == self.codomain.dim

    def __repr__(self) -> str:
        return f"LinOp({self.domain.label} -> {self.codomain.label})"
