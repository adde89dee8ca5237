"""Samplers and residual helpers shared by the law suites."""
from typing import Tuple

import numpy as np

from ejakit.algebra import Element, JordanAlgebra, LinOp, quadratic_rep, random_element
from ejakit.laws.registry import Trial
from ejakit.spectral import random_effect, random_idempotent, spectral_bounds


def relative(residual: float, *scales: float) -> float:
    """residual / max(1, scales...)."""
    return float(residual) / max([1.0, *(float(s) for s in scales)])


def deficit(a: Element) -> float:
    """How far a falls below the cone: max(0, -lowest spectral value)."""
    return max(0.0, -spectral_bounds(a)[0])


def flag(failed: bool) -> float:
    return 1.0 if failed else 0.0


def unit_sphere(algebra: JordanAlgebra, rng: np.random.Generator) -> Element:
    a = random_element(algebra, rng)
    return a / max(a.norm(), 1e-300)


def effect_with_floor(algebra: JordanAlgebra, rng: np.random.Generator) -> Tuple[Element, Element]:
    """An effect q = e + Q_{1-e}(r) whose floor is the random idempotent e."""
    e = random_idempotent(algebra, rng)
    r = random_effect(algebra, rng)
    return e + quadratic_rep(algebra.unit - e)(r), e


def random_positive_op(algebra: JordanAlgebra, rng: np.random.Generator) -> LinOp:
    """Q_a or a sum of two such maps, for Gaussian a."""
    op = quadratic_rep(random_element(algebra, rng))
    if rng.random() < 0.5:
        op = op + quadratic_rep(random_element(algebra, rng))
    return op


def passed() -> Trial:
    return Trial(0.0)
