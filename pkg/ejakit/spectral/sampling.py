"""Samplers for effects, idempotents and singular positive elements."""
from typing import List

import numpy as np

from ejakit.algebra import Element, JordanAlgebra, random_element
from ejakit.spectral.calculus import apply_function
from ejakit.spectral.decomposition import atomic_frame


def _logistic(value: float) -> float:
    return 1.0 / (1.0 + np.exp(-value))


def random_effect(algebra: JordanAlgebra, rng: np.random.Generator) -> Element:
    """An effect with spectrum strictly inside (0, 1)."""
    return apply_function(random_element(algebra, rng, scale=2.0), _logistic)


def random_idempotent(algebra: JordanAlgebra, rng: np.random.Generator, proper: bool = True) -> Element:
    """Sum of a random subset of an atomic frame; proper idempotents avoid 0 and 1 when the rank allows."""
    frame = atomic_frame(algebra, rng)
    if proper and len(frame) > 1:
        size = int(rng.integers(1, len(frame)))
    else:
        size = int(rng.integers(0, len(frame) + 1))
    chosen = rng.permutation(len(frame))[:size]
    return sum((frame[i] for i in chosen), algebra.zero())


def random_rank_deficient_positive(algebra: JordanAlgebra, rng: np.random.Generator, drop: int = 1) -> Element:
    """A positive element with exactly `drop` zero spectral values, counted with multiplicity."""
    frame: List[Element] = atomic_frame(algebra, rng)
    kept = rng.permutation(len(frame))[: max(len(frame) - drop, 0)]
    return sum((frame[i] * float(rng.uniform(0.5, 2.0)) for i in kept), algebra.zero())
