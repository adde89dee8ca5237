"""Common interface of direct-sum algebras and their Peirce corners."""
from __future__ import annotations

from abc import ABC, abstractmethod
from functools import cached_property
from typing import List, Optional, Tuple

import numpy as np

from ejakit.algebra.element import Element
from ejakit.algebra.factors import EigenPairs
from ejakit.exceptions import AlgebraMismatchException

# two bases describe the same subspace when their projectors agree this closely
SUBSPACE_TOL = 1e-6


class JordanAlgebra(ABC):
    dim: int
    rank: int

    @abstractmethod
    def product_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        ...

    @abstractmethod
    def unit_coords(self) -> np.ndarray:
        ...

    @abstractmethod
    def trace_coords(self, x: np.ndarray) -> float:
        ...

    @abstractmethod
    def root(self) -> JordanAlgebra:
        """The direct-sum algebra this one ultimately sits in."""

    @abstractmethod
    def root_embedding(self) -> np.ndarray:
        """Isometric (root.dim x dim) embedding into the root algebra."""

    @property
    @abstractmethod
    def label(self) -> str:
        ...

    def blocks(self) -> List[Tuple[JordanAlgebra, slice]]:
        return [(self, slice(0, self.dim))]

    def closed_form_pairs(self, x: np.ndarray, cluster_tol: float) -> Optional[EigenPairs]:
        return None

    def is_same(self, other: JordanAlgebra) -> bool:
        """Same coordinates: equal algebras, or identical bases of the same root subspace."""
        if self is other or self == other:
            return True
        return (self.dim == other.dim
                and self.root() == other.root()
                and np.array_equal(self.root_embedding(), other.root_embedding()))

    def element(self, coords) -> Element:
        return Element(self, coords)

    @cached_property
    def unit(self) -> Element:
        return Element(self, self.unit_coords())

    def zero(self) -> Element:
        return Element(self, np.zeros(self.dim))

    def basis_element(self, index: int) -> Element:
        return Element(self, np.eye(self.dim)[index])

    def basis(self) -> List[Element]:
        eye = np.eye(self.dim)
        return [Element(self, row) for row in eye]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label})"


def transition(source: JordanAlgebra, target: JordanAlgebra) -> Optional[np.ndarray]:
    """
    Change-of-basis matrix taking coordinates in source to coordinates in target,
    or None when both are the same algebra.
    :raise AlgebraMismatchException: when the two do not describe the same subspace
    """
    if source.is_same(target):
        return None
    if source.dim != target.dim or not source.root().is_same(target.root()):
        raise AlgebraMismatchException(source.label, target.label)
    s, t = source.root_embedding(), target.root_embedding()
    if source.dim and not np.allclose(s @ s.T, t @ t.T, atol=SUBSPACE_TOL):
        raise AlgebraMismatchException(source.label, target.label)
    return t.T @ s
