"""
Spectral decompositions a = sum_i lambda_i p_i into orthogonal idempotents.

Simple factors over R and C and spin factors use closed forms. Everything
else (quaternionic and octonionic factors, Peirce corners) goes through the
associative subalgebra C(a) spanned by the powers of a: the restriction of L_a
to C(a) is diagonalized and the idempotents are recovered by Lagrange
interpolation inside C(a).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger

from ejakit.algebra import Element, JordanAlgebra, cluster_spectrum, quadratic_rep, random_element
from ejakit.env import default_tolerance, get_settings
from ejakit.exceptions import ConvergenceException

Pairs = List[Tuple[float, np.ndarray]]


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    algebra: JordanAlgebra
    pairs: Tuple[Tuple[float, Element], ...]
    atomic: bool = False

    @property
    def eigenvalues(self) -> np.ndarray:
        return np.array([value for value, _ in self.pairs])

    @property
    def idempotents(self) -> List[Element]:
        return [p for _, p in self.pairs]

    def apply(self, fn: Callable[[float], float]) -> Element:
        coords = np.zeros(self.algebra.dim)
        for value, p in self.pairs:
            coords = coords + fn(value) * p.coords
        return Element(self.algebra, coords)

    def reconstruct(self) -> Element:
        return self.apply(lambda value: value)

    def residuals(self, a: Element) -> Dict[str, float]:
        """Reconstruction, idempotency and orthogonality defects, in the Hilbert norm."""
        idempotency = max((p.distance(p * p) for p in self.idempotents), default=0.0)
        orthogonality = 0.0
        for i, p in enumerate(self.idempotents):
            for q in self.idempotents[i + 1:]:
                orthogonality = max(orthogonality, (p * q).norm())
        return {
            "reconstruction": self.reconstruct().distance(a),
            "idempotency": idempotency,
            "orthogonality": orthogonality,
        }

    def __len__(self) -> int:
        return len(self.pairs)


def default_cluster_tol(a: Element) -> float:
    return default_tolerance("cluster") * (1.0 + a.norm())


def _eigvalsh(matrix: np.ndarray, operation: str) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(matrix)
    except np.linalg.LinAlgError as e:
        raise ConvergenceException(operation, {"shape": matrix.shape, "error": str(e)}) from e


_KRYLOV_BREAKDOWN = 1e4 * np.finfo(float).eps


def _krylov_pairs(algebra: JordanAlgebra, x: np.ndarray, cluster_tol: float) -> Pairs:
    unit = algebra.unit_coords()
    # only rounding noise ends the orbit early; close eigenvalues are merged by cluster_spectrum
    breakdown = _KRYLOV_BREAKDOWN * max(float(np.linalg.norm(x)), 1.0)
    vectors = [unit / np.linalg.norm(unit)]
    while len(vectors) < algebra.rank:
        basis = np.array(vectors)
        w = algebra.product_coords(x, vectors[-1])
        for _ in range(2):
            w = w - basis.T @ (basis @ w)
        size = float(np.linalg.norm(w))
        if size <= breakdown:
            break
        vectors.append(w / size)
    basis = np.array(vectors)
    restricted = basis @ algebra.product_coords(x, basis).T
    values = _eigvalsh(0.5 * (restricted + restricted.T), "spectral_decompose")
    groups = cluster_spectrum(values, cluster_tol)
    centers = [float(np.mean(values[group])) for group in groups]
    logger.debug("Krylov dimension {} of rank {}, clustered spectrum {}", len(vectors), algebra.rank, centers)

    pairs = []
    for i, center in enumerate(centers):
        p = unit
        for j, other in enumerate(centers):
            if i != j:
                p = algebra.product_coords(x - other * unit, p) / (center - other)
        pairs.append((center, p))
    return pairs


def _simple_pairs(algebra: JordanAlgebra, x: np.ndarray, cluster_tol: float) -> Pairs:
    try:
        pairs = algebra.closed_form_pairs(x, cluster_tol)
    except np.linalg.LinAlgError as e:
        raise ConvergenceException("spectral_decompose", {"algebra": algebra.label, "error": str(e)}) from e
    if pairs is None:
        pairs = _krylov_pairs(algebra, x, cluster_tol)
    return pairs


def _merge(pairs: Pairs, cluster_tol: float) -> Pairs:
    values = np.array([value for value, _ in pairs])
    merged = []
    for group in cluster_spectrum(values, cluster_tol):
        merged.append((float(np.mean(values[group])), sum(pairs[i][1] for i in group)))
    return merged


def spectral_decompose(a: Element, cluster_tol: Optional[float] = None) -> SpectralDecomposition:
    """
    Decompose a into distinct eigenvalues and their spectral idempotents.
    :param a: element of any algebra or corner
    :param cluster_tol: eigenvalues closer than this merge; defaults to cluster * (1 + |a|_2)
    :raise ConvergenceException: when the eigen solver fails
    """
    algebra = a.algebra
    if algebra.dim == 0:
        return SpectralDecomposition(algebra, ())
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(a)

    blocks = algebra.blocks()
    if len(blocks) == 1:
        pairs = _simple_pairs(algebra, a.coords, cluster_tol)
    else:
        pairs = []
        for block, sl in blocks:
            for value, p in _simple_pairs(block, a.coords[sl], cluster_tol):
                coords = np.zeros(algebra.dim)
                coords[sl] = p
                pairs.append((value, coords))
        pairs = _merge(pairs, cluster_tol)

    pairs.sort(key=lambda pair: pair[0])
    return SpectralDecomposition(algebra, tuple((value, Element(algebra, p)) for value, p in pairs))


def is_rank_one(p: Element) -> bool:
    """Q_p is an orthogonal projection for idempotent p; its eigenvalues are 0 or 1."""
    if p.algebra.dim == 0:
        return False
    return int(np.linalg.matrix_rank(quadratic_rep(p).matrix, tol=0.5)) == 1


def _split(p: Element, rng: np.random.Generator, max_retries: int) -> List[Element]:
    """Atoms summing to the idempotent p."""
    if p.norm() < 0.5:
        return []
    if is_rank_one(p):
        return [p]
    algebra = p.algebra
    complement = algebra.unit - p
    qp = quadratic_rep(p)
    for attempt in range(max_retries):
        inside = qp(random_element(algebra, rng))
        shift = 4.0 * inside.norm() + 2.0
        shifted = inside + shift * complement
        parts = [q for value, q in spectral_decompose(shifted).pairs if value < shift - 1.0]
        if len(parts) > 1:
            return [atom for part in parts for atom in _split(part, rng, max_retries)]
        logger.debug("Atomic refinement retry {} for idempotent of trace {:.3f}", attempt + 1, p.trace())
    raise ConvergenceException("refine_atomic", {"trace": p.trace(), "retries": max_retries})


def refine_atomic(d: SpectralDecomposition, rng_seed: int, max_retries: Optional[int] = None) -> SpectralDecomposition:
    """
    Split every idempotent of d into orthogonal atomic idempotents sharing its eigenvalue.
    :raise ConvergenceException: when random samples keep producing a single eigenvalue
    """
    if d.atomic:
        return d
    if max_retries is None:
        max_retries = get_settings().sampling.refine_max_retries
    rng = np.random.default_rng(rng_seed)
    pairs = []
    for value, p in d.pairs:
        pairs.extend((value, atom) for atom in _split(p, rng, max_retries))
    return SpectralDecomposition(d.algebra, tuple(pairs), atomic=True)


def atomic_frame(algebra: JordanAlgebra, rng: np.random.Generator) -> List[Element]:
    """Orthogonal atomic idempotents summing to the unit."""
    pairs = ((1.0, algebra.unit),) if algebra.dim else ()
    unit = SpectralDecomposition(algebra, pairs)
    return refine_atomic(unit, int(rng.integers(2 ** 32))).idempotents
