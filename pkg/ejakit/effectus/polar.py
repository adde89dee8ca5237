"""
Polar decomposition of Q_q Q_p for positive p and q.

Phi = Q_q Q_p Q_{(Q_p q^2)^{-1/2}} is a partial isometry with
Q_q Q_p = Phi Q_{sqrt(Q_p q^2)}, and its source and range projections are the
quadratic representations of ceil(Q_p q) and ceil(Q_q p).
"""
import math
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ejakit.algebra import Element, LinOp, quadratic_rep
from ejakit.env import default_tolerance
from ejakit.spectral import SpectralDecomposition, order_unit_norm, require_positive, spectral_decompose


class PolarClaims(BaseModel):
    model_config = ConfigDict(frozen=True)

    factorization: float
    unit_image: float
    adjoint_unit_image: float
    source_projection: float
    range_projection: float

    @property
    def max_residual(self) -> float:
        return max(self.model_dump().values())


# spectral values of Q_p q^2 below this multiple of eps * |p|^2 |q|^2 are rounding noise
_ROUNDING_FLOOR = 64.0 * np.finfo(float).eps


def _zero_threshold(middle: SpectralDecomposition, reference: float, eig_tol: Optional[float]) -> float:
    norm = max((abs(value) for value, _ in middle.pairs), default=0.0)
    return max(default_tolerance("eig", eig_tol) * norm, _ROUNDING_FLOOR * reference)


def polar_decompose(p: Element, q: Element, eig_tol: Optional[float] = None) -> Tuple[LinOp, PolarClaims]:
    """
    :param p: positive element
    :param q: positive element of the same algebra
    :param eig_tol: relative zero threshold for the spectrum of Q_p q^2
    :return: Phi and the residual of every claim about it
    """
    q = q.transfer(p.algebra)
    require_positive(p)
    require_positive(q)
    qp, qq = quadratic_rep(p), quadratic_rep(q)

    # ceil(Q_p q) = ceil(Q_p q^2), and Q_q p^2 has the same nonzero spectrum
    middle = spectral_decompose(qp(q * q))
    mirror = spectral_decompose(qq(p * p))
    threshold = _zero_threshold(middle, order_unit_norm(p) ** 2 * order_unit_norm(q) ** 2, eig_tol)

    def support(d: SpectralDecomposition) -> Element:
        return d.apply(lambda value: 1.0 if value > threshold else 0.0)

    inverse_sqrt = middle.apply(lambda value: 1.0 / math.sqrt(value) if value > threshold else 0.0)
    root = middle.apply(lambda value: math.sqrt(max(value, 0.0)))
    phi = qq @ qp @ quadratic_rep(inverse_sqrt)

    unit = p.algebra.unit
    source, target = support(middle), support(mirror)
    claims = PolarClaims(
        factorization=(qq @ qp).distance(phi @ quadratic_rep(root)),
        unit_image=phi(unit).distance(target),
        adjoint_unit_image=phi.adjoint()(unit).distance(source),
        source_projection=(phi.adjoint() @ phi).distance(quadratic_rep(source)),
        range_projection=(phi @ phi.adjoint()).distance(quadratic_rep(target)),
    )
    return phi, claims
