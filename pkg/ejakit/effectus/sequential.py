"""Sequential product a & b = Q_sqrt(a)(b) and the dagger-effectus conditions."""
from typing import Optional

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ejakit.algebra import Element, mult_operator, quadratic_rep
from ejakit.effectus.corners import standard_filter
from ejakit.exceptions import ConvergenceException
from ejakit.spectral import apply_function, idempotency_residual, require_effect, require_idempotent, spectral_decompose


def sequential_product(a: Element, b: Element, tol: Optional[float] = None) -> Element:
    b = b.transfer(a.algebra)
    require_effect(a, tol)
    require_effect(b, tol)
    return quadratic_rep(apply_function(a, "sqrt", scale=1.0))(b)


_NEWTON_STEPS = 100


def sequential_square_root(p: Element, tol: Optional[float] = None) -> Element:
    """
    The unique effect s with s & s = p, found by Newton's method on s -> s & s started at s = 1.
    Each step solves 2 L_s d = p - s & s; the iterates decrease towards the root and stay effects.
    Iteration ends at rounding level, or once the residual stops shrinking below 1e-10 |p|.
    :raise ConvergenceException: when neither happens within the step budget
    """
    require_effect(p, tol)
    algebra = p.algebra
    scale = max(1.0, p.norm())
    floor, accept = 64.0 * np.finfo(float).eps * scale, 1e-10 * scale
    s, best, best_size, previous = algebra.unit, algebra.unit, np.inf, np.inf
    for step in range(_NEWTON_STEPS):
        residual = p - sequential_product(s, s, tol)
        size = residual.norm()
        if size < best_size:
            best, best_size = s, size
        if size <= floor or (best_size <= accept and size > 0.5 * previous):
            logger.debug("sequential square root after {} Newton steps, residual {:.3e}", step, best_size)
            return best
        previous = size
        update = np.linalg.lstsq(2.0 * mult_operator(s).matrix, residual.coords, rcond=None)[0]
        s = s + Element(algebra, update)
    if best_size <= accept:
        return best
    raise ConvergenceException("sequential_square_root", {"residual": best_size, "steps": _NEWTON_STEPS})


class EffectusConditions(BaseModel):
    model_config = ConfigDict(frozen=True)

    square_root: float
    square_root_agreement: float
    fundamental: float
    idempotent_filter: float

    @property
    def max_residual(self) -> float:
        return max(self.model_dump().values())


def effectus_conditions(p: Element, q: Element, e: Element) -> EffectusConditions:
    """
    Residuals of the three dagger-effectus conditions for effects p, q and an idempotent e.
    square_root: |s & s - p| for s the sequential square root of p.
    square_root_agreement: |s - sqrt(p)| against the spectral square root.
    fundamental: |Q_sqrt(p&q)^2 - Q_sqrt(p) Q_sqrt(q)^2 Q_sqrt(p)|.
    idempotent_filter: largest idempotency defect of xi_e applied to the spectral idempotents of a corner element.
    """
    q = q.transfer(p.algebra)
    require_idempotent(e)
    root = sequential_square_root(p)
    square_root = sequential_product(root, root).distance(p)
    square_root_agreement = root.distance(apply_function(p, "sqrt", scale=1.0))

    sqrt_p = quadratic_rep(apply_function(p, "sqrt", scale=1.0))
    sqrt_q = quadratic_rep(apply_function(q, "sqrt", scale=1.0))
    sqrt_pq = quadratic_rep(apply_function(sequential_product(p, q), "sqrt", scale=1.0))
    fundamental = (sqrt_pq @ sqrt_pq).distance(sqrt_p @ sqrt_q @ sqrt_q @ sqrt_p)

    xi = standard_filter(p.algebra, e)
    restricted = xi.domain.projection(q)
    defects = [idempotency_residual(xi(s)) for s in spectral_decompose(restricted).idempotents]
    return EffectusConditions(
        square_root=square_root,
        square_root_agreement=square_root_agreement,
        fundamental=fundamental,
        idempotent_filter=max(defects, default=0.0),
    )

