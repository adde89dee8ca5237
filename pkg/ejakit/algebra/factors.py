"""
Simple factors: Hermitian matrices over R, C, H (any n), O (n = 3), and spin
factors R^d (+) R.

Matrix factors use the orthonormal basis
    E_ii,  (E_ij u + E_ji conj(u)) / sqrt(2)   for i < j and each unit u,
under <A, B> = Re tr(A o B). Coordinates are laid out diagonal first, then
pairs (i, j) row-major with the units of the scalar algebra innermost.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from functools import lru_cache
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ejakit.algebra.scalars import DivisionAlgebra, conjugation_signs, structure_tensor
from ejakit.exceptions import InvalidFactorException

FactorKind = Literal["real_sym", "complex_herm", "quat_herm", "spin", "albert"]

_MATRIX_TAGS = {
    "real_sym": DivisionAlgebra.R,
    "complex_herm": DivisionAlgebra.C,
    "quat_herm": DivisionAlgebra.H,
    "albert": DivisionAlgebra.O,
}

_LABELS = {
    "real_sym": "RealSym",
    "complex_herm": "ComplexHerm",
    "quat_herm": "QuatHerm",
    "spin": "Spin",
}

EigenPairs = List[Tuple[float, np.ndarray]]


class FactorSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FactorKind
    n: Optional[int] = None
    d: Optional[int] = None

    @model_validator(mode="after")
    def _check_size(self) -> FactorSpec:
        if self.kind == "spin":
            if self.d is None or self.d < 1:
                raise InvalidFactorException(self.kind, "spin dimension d >= 1 is required")
            if self.n is not None:
                raise InvalidFactorException(self.kind, "spin factors take d, not n")
        elif self.kind == "albert":
            if self.n not in (None, 3) or self.d is not None:
                raise InvalidFactorException(self.kind, "the Albert algebra is fixed at 3x3 octonion matrices")
        else:
            if self.n is None or self.n < 1:
                raise InvalidFactorException(self.kind, "matrix size n >= 1 is required")
            if self.d is not None:
                raise InvalidFactorException(self.kind, "matrix factors take n, not d")
        return self

    @classmethod
    def real_sym(cls, n: int) -> FactorSpec:
        return cls(kind="real_sym", n=n)

    @classmethod
    def complex_herm(cls, n: int) -> FactorSpec:
        return cls(kind="complex_herm", n=n)

    @classmethod
    def quat_herm(cls, n: int) -> FactorSpec:
        return cls(kind="quat_herm", n=n)

    @classmethod
    def spin(cls, d: int) -> FactorSpec:
        return cls(kind="spin", d=d)

    @classmethod
    def albert(cls) -> FactorSpec:
        return cls(kind="albert")

    @property
    def tag(self) -> Optional[DivisionAlgebra]:
        return _MATRIX_TAGS.get(self.kind)

    @property
    def size(self) -> int:
        return 3 if self.kind == "albert" else (self.n or 0)

    @property
    def dim(self) -> int:
        if self.kind == "spin":
            return self.d + 1
        n = self.size
        return n + n * (n - 1) // 2 * self.tag.size

    @property
    def rank(self) -> int:
        return 2 if self.kind == "spin" else self.size

    @property
    def label(self) -> str:
        if self.kind == "albert":
            return "Albert"
        if self.kind == "spin":
            return f"Spin({self.d})"
        return f"{_LABELS[self.kind]}({self.n})"

    def descriptor(self) -> dict:
        return self.model_dump(exclude_none=True)


def cluster_spectrum(values: np.ndarray, cluster_tol: float) -> List[List[int]]:
    """Group indices of sorted-close eigenvalues; gaps <= cluster_tol merge."""
    order = np.argsort(values)
    groups: List[List[int]] = []
    for idx in order:
        if groups and values[idx] - values[groups[-1][-1]] <= cluster_tol:
            groups[-1].append(int(idx))
        else:
            groups.append([int(idx)])
    return groups


class Factor(ABC):

    def __init__(self, spec: FactorSpec):
        self.spec = spec
        self.dim = spec.dim
        self.rank = spec.rank

    @abstractmethod
    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Jordan product on coordinate arrays, broadcasting over leading axes."""

    @abstractmethod
    def unit(self) -> np.ndarray:
        ...

    @abstractmethod
    def trace(self, x: np.ndarray) -> float:
        ...

    def eigen_pairs(self, x: np.ndarray, cluster_tol: float) -> Optional[EigenPairs]:
        """Closed-form spectral pairs, or None when the generic path must be used."""
        return None

    def basis_labels(self) -> List[str]:
        return [f"{self.spec.label}[{i}]" for i in range(self.dim)]


class HermitianMatrixFactor(Factor):

    def __init__(self, spec: FactorSpec):
        super().__init__(spec)
        self.n = spec.size
        self.tag = spec.tag
        self.k = self.tag.size
        self._table = structure_tensor(self.tag)
        self._signs = conjugation_signs(self.tag)
        self._iu, self._ju = np.triu_indices(self.n, 1)
        self._diag = np.arange(self.n)

    def to_matrix(self, x: np.ndarray) -> np.ndarray:
        """Coordinates (..., dim) -> scalar-valued matrices (..., n, n, k)."""
        x = np.asarray(x, dtype=float)
        lead = x.shape[:-1]
        n, k = self.n, self.k
        matrix = np.zeros(lead + (n, n, k))
        matrix[..., self._diag, self._diag, 0] = x[..., :n]
        off = x[..., n:].reshape(lead + (len(self._iu), k)) / np.sqrt(2.0)
        matrix[..., self._iu, self._ju, :] = off
        matrix[..., self._ju, self._iu, :] = off * self._signs
        return matrix

    def from_matrix(self, matrix: np.ndarray) -> np.ndarray:
        lead = matrix.shape[:-3]
        diag = matrix[..., self._diag, self._diag, 0]
        off = matrix[..., self._iu, self._ju, :] * np.sqrt(2.0)
        return np.concatenate([diag, off.reshape(lead + (len(self._iu) * self.k,))], axis=-1)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.einsum("...ila,...ljb,abc->...ijc", a, b, self._table)

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        a, b = self.to_matrix(x), self.to_matrix(y)
        return self.from_matrix(0.5 * (self.matmul(a, b) + self.matmul(b, a)))

    def unit(self) -> np.ndarray:
        out = np.zeros(self.dim)
        out[: self.n] = 1.0
        return out

    def trace(self, x: np.ndarray) -> float:
        return float(np.sum(np.asarray(x)[..., : self.n], axis=-1))

    def to_numpy(self, x: np.ndarray) -> np.ndarray:
        """Real or complex ndarray for R and C factors."""
        matrix = self.to_matrix(x)
        if self.tag is DivisionAlgebra.R:
            return matrix[..., 0]
        if self.tag is DivisionAlgebra.C:
            return matrix[..., 0] + 1j * matrix[..., 1]
        raise InvalidFactorException(self.spec.kind, "no numpy matrix form for this scalar algebra")

    def from_numpy(self, matrix: np.ndarray) -> np.ndarray:
        if self.tag is DivisionAlgebra.R:
            return self.from_matrix(np.real(matrix)[..., None])
        return self.from_matrix(np.stack([np.real(matrix), np.imag(matrix)], axis=-1))

    def eigen_pairs(self, x: np.ndarray, cluster_tol: float) -> Optional[EigenPairs]:
        if self.tag not in (DivisionAlgebra.R, DivisionAlgebra.C):
            return None
        values, vectors = np.linalg.eigh(self.to_numpy(x))
        pairs = []
        for group in cluster_spectrum(values, cluster_tol):
            v = vectors[:, group]
            projector = v @ v.conj().T
            pairs.append((float(np.mean(values[group])), self.from_numpy(projector)))
        return pairs

    def basis_labels(self) -> List[str]:
        labels = [f"E{i}{i}" for i in range(self.n)]
        for i, j in zip(self._iu, self._ju):
            labels.extend(f"E{i}{j}.e{u}" for u in range(self.k))
        return labels


class SpinFactor(Factor):
    """(a, t) * (b, s) = (s a + t b, <a, b> + t s) on R^d (+) R."""

    def __init__(self, spec: FactorSpec):
        super().__init__(spec)
        self.d = spec.d

    def product(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        a, t = x[..., :-1], x[..., -1:]
        b, s = y[..., :-1], y[..., -1:]
        vector = s * a + t * b
        scalar = np.sum(a * b, axis=-1, keepdims=True) + t * s
        return np.concatenate([vector, scalar], axis=-1)

    def unit(self) -> np.ndarray:
        out = np.zeros(self.dim)
        out[-1] = 1.0
        return out

    def trace(self, x: np.ndarray) -> float:
        return float(2.0 * np.asarray(x)[..., -1])

    def eigen_pairs(self, x: np.ndarray, cluster_tol: float) -> Optional[EigenPairs]:
        a, t = x[:-1], float(x[-1])
        r = float(np.linalg.norm(a))
        if 2.0 * r <= cluster_tol:
            return [(t, self.unit())]
        u = a / r
        plus = 0.5 * np.concatenate([u, [1.0]])
        minus = 0.5 * np.concatenate([-u, [1.0]])
        return [(t - r, minus), (t + r, plus)]

    def basis_labels(self) -> List[str]:
        return [f"e{i}" for i in range(self.d)] + ["1"]


@lru_cache(maxsize=None)
def make_factor(spec: FactorSpec) -> Factor:
    if spec.kind == "spin":
        return SpinFactor(spec)
    return HermitianMatrixFactor(spec)
