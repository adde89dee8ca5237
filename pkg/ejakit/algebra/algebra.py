from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ejakit.algebra.element import Element
from ejakit.algebra.factors import EigenPairs, Factor, FactorSpec, make_factor
from ejakit.algebra.jordan import JordanAlgebra
from ejakit.exceptions import EmptyAlgebraException


class Algebra(JordanAlgebra):
    """Direct sum of simple factors; coordinates are concatenated blockwise."""

    def __init__(self, factors: Sequence[FactorSpec]):
        if not factors:
            raise EmptyAlgebraException()
        self.factors: Tuple[FactorSpec, ...] = tuple(factors)
        self._factors: List[Factor] = [make_factor(spec) for spec in self.factors]
        offsets = np.cumsum([0] + [f.dim for f in self._factors])
        self._slices = [slice(int(a), int(b)) for a, b in zip(offsets[:-1], offsets[1:])]
        self.dim = int(offsets[-1])
        self.rank = sum(f.rank for f in self._factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, Algebra) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    @property
    def label(self) -> str:
        return " (+) ".join(spec.label for spec in self.factors)

    def factor(self, index: int) -> Factor:
        return self._factors[index]

    def factor_slice(self, index: int) -> slice:
        return self._slices[index]

    def product_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        out = np.empty(np.broadcast_shapes(x.shape, y.shape))
        for factor, sl in zip(self._factors, self._slices):
            out[..., sl] = factor.product(x[..., sl], y[..., sl])
        return out

    def unit_coords(self) -> np.ndarray:
        return np.concatenate([f.unit() for f in self._factors])

    def trace_coords(self, x: np.ndarray) -> float:
        return float(sum(f.trace(x[sl]) for f, sl in zip(self._factors, self._slices)))

    def root(self) -> Algebra:
        return self

    def root_embedding(self) -> np.ndarray:
        return self._eye

    @cached_property
    def _eye(self) -> np.ndarray:
        eye = np.eye(self.dim)
        eye.setflags(write=False)
        return eye

    def blocks(self) -> List[Tuple[JordanAlgebra, slice]]:
        if len(self.factors) == 1:
            return [(self, self._slices[0])]
        return [(make_algebra([spec]), sl) for spec, sl in zip(self.factors, self._slices)]

    def closed_form_pairs(self, x: np.ndarray, cluster_tol: float) -> Optional[EigenPairs]:
        if len(self._factors) != 1:
            return None
        return self._factors[0].eigen_pairs(np.asarray(x, dtype=float), cluster_tol)

    def descriptor(self) -> dict:
        return {"factors": [spec.descriptor() for spec in self.factors]}


@lru_cache(maxsize=None)
def _cached_algebra(factors: Tuple[FactorSpec, ...]) -> Algebra:
    return Algebra(factors)


def make_algebra(specs: Iterable[FactorSpec]) -> Algebra:
    """
    Build the direct sum of the given factors.
    Equal factor lists return the same immutable handle.
    """
    return _cached_algebra(tuple(specs))


def jordan_product(a: Element, b: Element) -> Element:
    return a * b


def inner(a: Element, b: Element) -> float:
    return a.inner(b)


def trace(a: Element) -> float:
    return a.trace()


def benchmark_algebras() -> List[Algebra]:
    return [
        make_algebra([FactorSpec.real_sym(3)]),
        make_algebra([FactorSpec.complex_herm(2)]),
        make_algebra([FactorSpec.quat_herm(2)]),
        make_algebra([FactorSpec.spin(4)]),
        make_algebra([FactorSpec.albert()]),
        make_algebra([FactorSpec.real_sym(2), FactorSpec.spin(3), FactorSpec.complex_herm(2)]),
    ]


def diagonal_algebra(n: int) -> Algebra:
    """R^n as the direct sum of n one-dimensional factors."""
    return make_algebra([FactorSpec.real_sym(1)] * n)
