"""
Pure maps in normal form xi_q o Theta o pi_p.

Witnesses are always built constructively: from the standard pieces, from the
exchange rewrite of pi_p o xi_q, or from a map by reading off q = f(1) and
p = im f and verifying the middle map afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from loguru import logger

from ejakit.algebra import Element, JordanAlgebra, LinOp, quadratic_rep, transition
from ejakit.effectus.corners import mediate_corner, mediate_filter, standard_corner, standard_filter
from ejakit.env import default_tolerance
from ejakit.exceptions import PreconditionViolatedException
from ejakit.maps import (
    PositiveMap,
    adjoint,
    compose,
    constructed,
    identity_map,
    image,
    is_unital_order_iso,
    range_support,
)
from ejakit.spectral import apply_function, ceiling, require_effect, require_idempotent


@dataclass(frozen=True, eq=False)
class PurityWitness:
    filter_effect: Element
    middle_iso: PositiveMap
    corner_idempotent: Element
    composed: PositiveMap
    filter: Optional[PositiveMap] = field(default=None, repr=False)
    corner: Optional[PositiveMap] = field(default=None, repr=False)

    def __post_init__(self):
        if self.filter is None:
            object.__setattr__(self, "filter", standard_filter(self.filter_effect.algebra, self.filter_effect))
        if self.corner is None:
            object.__setattr__(self, "corner", standard_corner(self.corner_idempotent.algebra, self.corner_idempotent))

    @property
    def domain(self) -> JordanAlgebra:
        return self.composed.domain

    @property
    def codomain(self) -> JordanAlgebra:
        return self.composed.codomain

    def recomposed(self) -> LinOp:
        return self.filter.op @ self.middle_iso.op @ self.corner.op

    def residual(self) -> float:
        """|composed - xi_q Theta pi_p|."""
        return self.composed.op.distance(self.recomposed())

    def is_valid(self, tol: Optional[float] = None, trials: Optional[int] = None) -> bool:
        tol = default_tolerance("law", tol)
        return self.residual() <= tol * max(self.composed.op.norm(), 1.0) and is_unital_order_iso(
            self.middle_iso, trials)


def _between(op: LinOp, domain: JordanAlgebra, codomain: JordanAlgebra) -> LinOp:
    return op.expressed_in(domain, codomain)


def iso_witness(theta: PositiveMap) -> PurityWitness:
    """Theta = xi_1 o Theta o pi_1."""
    domain, codomain = theta.domain, theta.codomain
    corner = standard_corner(domain, domain.unit)
    filter_ = standard_filter(codomain, codomain.unit)
    middle = constructed(_between(theta.op, corner.codomain, filter_.domain), "iso")
    return PurityWitness(codomain.unit, middle, domain.unit, theta, filter_, corner)


def identity_witness(E: JordanAlgebra) -> PurityWitness:
    return iso_witness(identity_map(E))


def corner_witness(E: JordanAlgebra, q: Element) -> PurityWitness:
    """pi_q = xi_1 o id o pi_floor(q)."""
    corner = standard_corner(E, q)
    C = corner.codomain
    filter_ = standard_filter(C, C.unit)
    middle = constructed(_between(LinOp.identity(C), C, filter_.domain), "id")
    return PurityWitness(C.unit, middle, corner.codomain.idempotent, corner, filter_, corner)


def filter_witness(E: JordanAlgebra, q: Element) -> PurityWitness:
    """xi_q = xi_q o id o pi_1."""
    filter_ = standard_filter(E, q)
    D = filter_.domain
    corner = standard_corner(D, D.unit)
    middle = constructed(_between(LinOp.identity(D), corner.codomain, D), "id")
    return PurityWitness(q.transfer(E), middle, D.unit, filter_, filter_, corner)


def quadratic_witness(a: Element) -> PurityWitness:
    """Q_a = xi_{a^2} o id o pi_ceil(a) for an effect a."""
    require_effect(a)
    E = a.algebra
    square = a * a
    support = ceiling(a, scale=1.0)
    corner = standard_corner(E, support)
    filter_ = standard_filter(E, square, support=support)
    middle = constructed(_between(LinOp.identity(corner.codomain), corner.codomain, filter_.domain), "id")
    return PurityWitness(square, middle, corner.codomain.idempotent, constructed(quadratic_rep(a), "Q"),
                         filter_, corner)


def exchange(p: Element, q: Element) -> PurityWitness:
    """
    Rewrite pi_p o xi_q as xi_{p&q} o Theta o pi_ceil(q&p).
    p&q = Q_p(q) lives in the corner of p and q&p = Q_sqrt(q)(p) in the corner of ceil(q);
    Theta = Q_{(p&q)^{-1/2}} Q_p Q_sqrt(q) restricted to the corners.
    """
    E = p.algebra
    q = q.transfer(E)
    require_idempotent(p)
    require_effect(q)

    corner_p = standard_corner(E, p)
    filter_q = standard_filter(E, q)
    Ep, Eq = corner_p.codomain, filter_q.domain
    composed = compose(corner_p, filter_q)

    sqrt_q = apply_function(q, "sqrt", scale=1.0)
    p_and_q = quadratic_rep(p)(q)
    q_and_p = quadratic_rep(sqrt_q)(p)
    a = Ep.projection(p_and_q)
    b = Eq.projection(q_and_p)

    filter_a = standard_filter(Ep, a)
    corner_b = standard_corner(Eq, ceiling(b, scale=1.0))
    A, B = filter_a.domain, corner_b.codomain

    rescale = quadratic_rep(apply_function(p_and_q, "pseudo_inverse_sqrt", scale=1.0))
    middle = rescale @ quadratic_rep(p) @ quadratic_rep(sqrt_q)
    theta = A.projection @ Ep.projection @ middle @ Eq.embedding @ B.embedding
    witness = PurityWitness(a, constructed(theta, "exchange"), B.idempotent, composed, filter_a, corner_b)
    logger.debug("exchange residual {:.3e} on corners of dims {} and {}", witness.residual(), B.dim, A.dim)
    return witness


def compose_pure(w1: PurityWitness, w2: PurityWitness) -> PurityWitness:
    """
    Witness for w1.composed o w2.composed.
    The middle pi_1 o xi_2 is exchanged, the filters on the left merge into one
    filter and the corners on the right into one corner.
    :raise AlgebraMismatchException: when w2 does not land where w1 starts
    """
    transition(w2.codomain, w1.domain)
    middle = exchange(w1.corner_idempotent, w2.filter_effect.transfer(w1.corner_idempotent.algebra))

    left = compose(compose(w1.filter, w1.middle_iso), middle.filter)
    q_new = left(left.domain.unit)
    # left is injective; its range fixes ceil(q_new) even where q_new is below the zero threshold
    support = range_support(left)
    theta_left = mediate_filter(left, q_new, support=support)
    filter_new = standard_filter(left.codomain, q_new, support=support)

    right = compose(compose(middle.corner, w2.middle_iso), w2.corner)
    p_new = image(right, scale=1.0)
    theta_right = mediate_corner(right, p_new)
    corner_new = standard_corner(right.domain, p_new)

    theta = constructed(theta_left.op @ middle.middle_iso.op @ theta_right.op, "compose")
    witness = PurityWitness(q_new, theta, p_new, compose(w1.composed, w2.composed), filter_new, corner_new)
    logger.debug("compose_pure residual {:.3e}", witness.residual())
    return witness


def witness_from_map(f: PositiveMap, tol: Optional[float] = None, trials: Optional[int] = None) -> PurityWitness:
    """
    Candidate normal form xi_{f(1)} o Theta o pi_{im f} with Theta = r Q_sqrt(f(1)^-1) f iota.
    :raise PreconditionViolatedException: when Theta is not a unital order isomorphism or the
        normal form does not recompose to f
    """
    tol = default_tolerance("law", tol)
    q = f(f.domain.unit)
    require_effect(q)
    p = image(f, scale=1.0)
    corner = standard_corner(f.domain, p)
    filter_ = standard_filter(f.codomain, q)
    rescale = quadratic_rep(apply_function(q, "pseudo_inverse_sqrt", scale=1.0))
    theta = filter_.domain.projection @ rescale @ f.op @ corner.codomain.embedding
    witness = PurityWitness(q, constructed(theta, "normal_form"), p, f, filter_, corner)
    residual = witness.residual()
    if residual > tol * max(f.op.norm(), 1.0):
        raise PreconditionViolatedException("f = xi_f(1) o Theta o pi_im(f)", residual)
    if not is_unital_order_iso(witness.middle_iso, trials):
        raise PreconditionViolatedException("Theta is a unital order isomorphism")
    return witness


def adjoint_witness(w: PurityWitness, tol: Optional[float] = None) -> PurityWitness:
    """Witness for the adjoint of a pure map, read off the transposed matrix."""
    return witness_from_map(adjoint(w.composed), tol)


def middle_isometry_residual(w: PurityWitness) -> float:
    """|Theta* Theta - id| + |Theta Theta* - id|, zero for the orthogonal middles built here."""
    matrix = w.middle_iso.matrix
    if matrix.size == 0:
        return 0.0
    eye_domain, eye_codomain = np.eye(matrix.shape[1]), np.eye(matrix.shape[0])
    return float(np.linalg.norm(matrix.T @ matrix - eye_domain, 2) + np.linalg.norm(matrix @ matrix.T - eye_codomain, 2))
