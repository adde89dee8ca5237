from typing import Optional, Union

import numpy as np

from ejakit.algebra import Element, LinOp, quadratic_rep, random_element
from ejakit.env import default_tolerance, get_settings
from ejakit.maps.positive_map import (
    Constructed,
    PositiveMap,
    is_positive_on,
    positivity_samples,
)
from ejakit.spectral import ceiling, floor_of_effect

MapLike = Union[PositiveMap, LinOp]


def _op(f: MapLike) -> LinOp:
    return f.op if isinstance(f, PositiveMap) else f


def adjoint(f: PositiveMap) -> PositiveMap:
    """
    Transpose in the orthonormal bases. Positivity survives by self-duality of the cones;
    subunitality is recomputed, not inherited.
    """
    certificate = f.certificate
    if isinstance(certificate, Constructed):
        certificate = Constructed(provenance=certificate.provenance + ("adjoint",))
    return PositiveMap(f.op.adjoint(), certificate)


def image(f: MapLike, eig_tol: Optional[float] = None, scale: Optional[float] = None) -> Element:
    """
    im f, the least idempotent p with f(p) = f(1), computed as the ceiling of f*(1).
    For positive f, f(a) = 0 iff <a, f*(1)> = 0 on the cone.
    """
    op = _op(f)
    return ceiling(op.adjoint()(op.codomain.unit), eig_tol, scale)


def is_faithful(f: MapLike, tol: Optional[float] = None, scale: Optional[float] = None) -> bool:
    unit = _op(f).domain.unit
    return image(f, scale=scale).distance(unit) <= default_tolerance("idempotent", tol) * max(unit.norm(), 1.0)


def _inverse(op: LinOp, tol: float) -> Optional[LinOp]:
    if not op.is_square():
        return None
    if op.domain.dim == 0:
        return LinOp(op.codomain, op.domain, op.matrix.T)
    singular = np.linalg.svd(op.matrix, compute_uv=False)
    if singular[-1] <= tol * singular[0]:
        return None
    return LinOp(op.codomain, op.domain, np.linalg.inv(op.matrix))


def is_unital_order_iso(f: MapLike, trials: Optional[int] = None, rng: np.random.Generator = None,
                        tol: Optional[float] = None) -> bool:
    """
    Invertible, unital, and both f and its inverse keep sampled positives and atomic frames positive.
    :param trials: number of random positive samples per direction
    :param rng: sample generator, seeded with 0 when omitted
    """
    op = _op(f)
    tol = default_tolerance("law", tol)
    if trials is None:
        trials = get_settings().sampling.iso_trials
    rng = rng if rng is not None else np.random.default_rng(0)

    inverse = _inverse(op, tol)
    if inverse is None:
        return False
    if op(op.domain.unit).distance(op.codomain.unit) > tol * max(op.codomain.unit.norm(), 1.0):
        return False
    scale = max(op.norm(), inverse.norm(), 1.0)
    return (is_positive_on(op, positivity_samples(op.domain, rng, trials), tol * scale)
            and is_positive_on(inverse, positivity_samples(op.codomain, rng, trials), tol * scale))


def check_jordan_homomorphism(f: MapLike, trials: Optional[int] = None, rng: np.random.Generator = None) -> float:
    """max over random pairs of |f(a * b) - f(a) * f(b)|_2."""
    op = _op(f)
    if trials is None:
        trials = get_settings().sampling.iso_trials
    rng = rng if rng is not None else np.random.default_rng(0)
    residual = 0.0
    for _ in range(trials):
        a, b = random_element(op.domain, rng), random_element(op.domain, rng)
        residual = max(residual, op(a * b).distance(op(a) * op(b)))
    return residual


def intertwining_residual(theta: MapLike, a: Element) -> float:
    """|Theta Q_a - Q_{Theta(a)} Theta|, zero for Jordan isomorphisms."""
    op = _op(theta)
    return (op @ quadratic_rep(a.transfer(op.domain))).distance(quadratic_rep(op(a)) @ op)


def floor_residual(f: MapLike, q: Element) -> float:
    """|f(floor q) - f(1)|_2, small whenever f(q) = f(1) for positive f and effect q."""
    op = _op(f)
    return op(floor_of_effect(q)).distance(op(op.domain.unit))


def factor_through_image_residual(g: MapLike, p: Element) -> float:
    """|g Q_p - g| for an idempotent p with g(p) = g(1)."""
    op = _op(g)
    return (op @ quadratic_rep(p.transfer(op.domain))).distance(op)


def range_support(f: MapLike, rank: Optional[int] = None) -> Element:
    """
    The idempotent e whose Q_e is the orthogonal projection onto the range of f, for maps whose
    range is a Peirce corner. e = Q_e(1) is read off the leading left singular vectors, so no
    spectral value of f(1) is ever compared with a zero threshold.
    :param rank: dimension of the range; the domain dimension (injective f) when omitted
    """
    op = _op(f)
    rank = op.domain.dim if rank is None else rank
    if rank == 0:
        return Element(op.codomain, np.zeros(op.codomain.dim))
    basis = np.linalg.svd(op.matrix, full_matrices=False)[0][:, :rank]
    return Element(op.codomain, basis @ (basis.T @ op.codomain.unit.coords))
