"""Gaussian samplers in the canonical basis."""
import numpy as np

from ejakit.algebra.element import Element
from ejakit.algebra.jordan import JordanAlgebra


def random_element(algebra: JordanAlgebra, rng: np.random.Generator, scale: float = 1.0) -> Element:
    return Element(algebra, scale * rng.standard_normal(algebra.dim))


def random_positive(algebra: JordanAlgebra, rng: np.random.Generator, min_eigenvalue: float = 0.0) -> Element:
    """b * b for Gaussian b, shifted by min_eigenvalue * 1."""
    b = random_element(algebra, rng)
    return b * b + min_eigenvalue * algebra.unit


def random_invertible(algebra: JordanAlgebra, rng: np.random.Generator, margin: float = 0.25) -> Element:
    """Gaussian element pushed away from singularity: b * b + margin * 1, with a random sign flip."""
    a = random_positive(algebra, rng, min_eigenvalue=margin)
    return a if rng.random() < 0.5 else -a
