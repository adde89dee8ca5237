"""
Peirce corners E_1(p) = Q_p(E), standard corners and standard filters.

A corner is a sub-algebra with its own orthonormal basis: the columns of iota
span the range of Q_p inside the parent, r = iota^T projects back.
"""
from __future__ import annotations

from functools import cached_property
from typing import Optional

import numpy as np

from ejakit.algebra import Element, JordanAlgebra, LinOp, quadratic_rep
from ejakit.env import default_tolerance
from ejakit.exceptions import PreconditionViolatedException
from ejakit.maps import Constructed, PositiveMap, constructed
from ejakit.spectral import apply_function, ceiling, floor_of_effect, leq, require_effect, require_idempotent

# Q_p is an orthogonal projection for idempotent p, its eigenvalues sit at 0 and 1
_RANGE_CUT = 0.5


class CornerAlgebra(JordanAlgebra):

    def __init__(self, parent: JordanAlgebra, idempotent: Element):
        self.parent = parent
        self.idempotent = idempotent.transfer(parent)
        if self.idempotent.distance(parent.unit) <= 1e-12:
            embedding = np.eye(parent.dim)
        else:
            qp = quadratic_rep(self.idempotent).matrix
            values, vectors = np.linalg.eigh(0.5 * (qp + qp.T))
            embedding = vectors[:, values > _RANGE_CUT]
        embedding.setflags(write=False)
        self._embedding = embedding
        self.dim = embedding.shape[1]
        self.rank = int(round(self.idempotent.trace())) if self.dim else 0

    @property
    def label(self) -> str:
        return f"E1[{self.dim}]({self.parent.label})"

    @property
    def embedding(self) -> LinOp:
        """iota, the inclusion into the parent."""
        return LinOp(self, self.parent, self._embedding)

    @property
    def projection(self) -> LinOp:
        """r, the left inverse of iota."""
        return LinOp(self.parent, self, self._embedding.T)

    def product_coords(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        up = self._embedding
        return self.parent.product_coords(np.asarray(x) @ up.T, np.asarray(y) @ up.T) @ up

    def unit_coords(self) -> np.ndarray:
        return self._embedding.T @ self.idempotent.coords

    def trace_coords(self, x: np.ndarray) -> float:
        return self.parent.trace_coords(self._embedding @ x)

    def root(self) -> JordanAlgebra:
        return self.parent.root()

    def root_embedding(self) -> np.ndarray:
        return self._root_embedding

    @cached_property
    def _root_embedding(self) -> np.ndarray:
        return self.parent.root_embedding() @ self._embedding


def peirce_corner(E: JordanAlgebra, p: Element, tol: Optional[float] = None) -> CornerAlgebra:
    """
    The corner E_1(p) with unit p.
    :raise NotIdempotentException: when p is not idempotent
    """
    p = p.transfer(E)
    require_idempotent(p, tol)
    return CornerAlgebra(E, p)


def standard_corner(E: JordanAlgebra, q: Element, tol: Optional[float] = None) -> PositiveMap:
    """pi_q = r o Q_floor(q), a unital map onto {E|q}."""
    q = q.transfer(E)
    require_effect(q, tol)
    floor = floor_of_effect(q)
    corner = CornerAlgebra(E, floor)
    return constructed(corner.projection @ quadratic_rep(floor), "corner")


def standard_filter(E: JordanAlgebra, q: Element, tol: Optional[float] = None,
                    support: Optional[Element] = None) -> PositiveMap:
    """
    xi_q = Q_sqrt(q) o iota on E_q = E_1(ceil q); xi_q(1) = q.
    :param support: ceil(q) when the caller already knows it; otherwise computed with the default zero threshold
    """
    q = q.transfer(E)
    require_effect(q, tol)
    corner = CornerAlgebra(E, ceiling(q, scale=1.0) if support is None else support)
    root = apply_function(q, "sqrt", scale=1.0)
    return constructed(quadratic_rep(root) @ corner.embedding, "filter")


def _extend(certificate, step: str):
    if isinstance(certificate, Constructed):
        return Constructed(provenance=certificate.provenance + (step,))
    return certificate


def mediate_corner(g: PositiveMap, q: Element, tol: Optional[float] = None) -> PositiveMap:
    """
    The unique g' with g' o pi_q = g, for g with g(q) = g(1).
    :raise PreconditionViolatedException: naming "g(q) = g(1)" when it fails
    """
    E = g.domain
    q = q.transfer(E)
    require_effect(q)
    tol = default_tolerance("law", tol) * max(g.op.norm(), 1.0)
    residual = g(q).distance(g(E.unit))
    if residual > tol:
        raise PreconditionViolatedException("g(q) = g(1)", residual)
    corner = CornerAlgebra(E, floor_of_effect(q))
    return PositiveMap(g.op @ corner.embedding, _extend(g.certificate, "mediate_corner"))


def mediate_filter(f: PositiveMap, q: Element, tol: Optional[float] = None,
                   support: Optional[Element] = None) -> PositiveMap:
    """
    The unique f' with xi_q o f' = f, for f with f(1) <= q.
    f' solves r Q_sqrt(q) iota f' = r f, Q_sqrt(q) being invertible on the corner of ceil q.
    :param support: ceil(q), as passed to standard_filter
    :raise PreconditionViolatedException: naming "f(1) <= q" when it fails
    """
    F = f.codomain
    q = q.transfer(F)
    require_effect(q)
    tol = default_tolerance("law", tol) * max(f.op.norm(), 1.0)
    if not leq(f(f.domain.unit), q, tol):
        raise PreconditionViolatedException("f(1) <= q")
    corner = CornerAlgebra(F, ceiling(q, scale=1.0) if support is None else support)
    if corner.dim == 0:
        return PositiveMap(LinOp.zero(f.domain, corner), _extend(f.certificate, "mediate_filter"))
    root = quadratic_rep(apply_function(q, "sqrt", scale=1.0))
    restricted = (corner.projection @ root @ corner.embedding).matrix
    matrix = np.linalg.solve(restricted, (corner.projection @ f.op).matrix)
    return PositiveMap(LinOp(f.domain, corner, matrix), _extend(f.certificate, "mediate_filter"))
