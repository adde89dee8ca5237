"""
Diamond adjoints on idempotent lattices.

For an endomap f, f^(p) = ceil(f(p)) and f_(q) = ceil(f*(q)); the pair forms a
Galois connection since both sides of f^(p) <= 1 - q say <f(p), q> = 0.
"""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ejakit.algebra import Element, JordanAlgebra, LinOp, quadratic_rep, random_element
from ejakit.env import default_tolerance, get_settings
from ejakit.maps import PositiveMap, constructed
from ejakit.spectral import (
    apply_function,
    atomic_frame,
    ceiling,
    idempotent_leq,
    positive_part,
    require_idempotent,
    require_positive,
    spectral_decompose,
)

MapLike = Union[PositiveMap, LinOp]


def _op(f: MapLike) -> LinOp:
    return f.op if isinstance(f, PositiveMap) else f


def diamond(f: MapLike, p: Element, tol: Optional[float] = None) -> Element:
    """f^(p) = ceil(f(p)) for an idempotent p."""
    op = _op(f)
    p = p.transfer(op.domain)
    require_idempotent(p, tol)
    return ceiling(op(p), scale=1.0)


def diamond_lower(f: MapLike, q: Element, tol: Optional[float] = None) -> Element:
    """f_(q) = ceil(f*(q)) = im(Q_q o f) for an idempotent q."""
    op = _op(f)
    q = q.transfer(op.codomain)
    require_idempotent(q, tol)
    return ceiling(op.adjoint()(q), scale=1.0)


def default_idempotent_samples(algebra: JordanAlgebra, rng: np.random.Generator,
                               random_ceilings: Optional[int] = None) -> List[Element]:
    """Atoms of a frame, their pairwise and total sums, and ceilings of positive parts of random elements."""
    if random_ceilings is None:
        random_ceilings = get_settings().sampling.diamond_random_ceilings
    frame = atomic_frame(algebra, rng)
    samples = list(frame)
    samples.extend(frame[i] + frame[j] for i in range(len(frame)) for j in range(i + 1, len(frame)))
    if len(frame) > 2:
        samples.append(sum(frame[1:], frame[0]))
    for _ in range(random_ceilings):
        samples.append(ceiling(positive_part(random_element(algebra, rng)), scale=1.0))
    return samples


def _same_idempotent(s: Element, t: Element, tol: float) -> bool:
    return s.distance(t) <= tol


def is_diamond_self_adjoint(f: MapLike, idempotent_samples: Sequence[Element] = None,
                            rng: np.random.Generator = None, tol: Optional[float] = None) -> bool:
    """ceil(f(p)) = ceil(f*(p)) on every sampled idempotent."""
    op = _op(f)
    tol = default_tolerance("law", tol)
    if idempotent_samples is None:
        idempotent_samples = default_idempotent_samples(op.domain, rng if rng is not None else np.random.default_rng(0))
    return all(_same_idempotent(diamond(op, p), diamond_lower(op, p), tol * max(p.norm(), 1.0))
               for p in idempotent_samples)


def is_diamond_positive_witnessed(g: MapLike, f: MapLike, idempotent_samples: Sequence[Element] = None,
                                  rng: np.random.Generator = None, tol: Optional[float] = None) -> bool:
    """g is diamond-positive as witnessed by f: f is diamond-self-adjoint and g = f o f."""
    tol = default_tolerance("law", tol)
    g_op, f_op = _op(g), _op(f)
    if not is_diamond_self_adjoint(f_op, idempotent_samples, rng, tol):
        return False
    return g_op.distance(f_op @ f_op) <= tol * max(g_op.norm(), 1.0)


@dataclass(frozen=True)
class DiamondRow:
    idempotent: Element
    upper: Element
    lower: Element


def diamond_table(f: MapLike, idempotent_samples: Sequence[Element]) -> List[DiamondRow]:
    op = _op(f)
    return [DiamondRow(p, diamond(op, p), diamond_lower(op, p)) for p in idempotent_samples]


def galois_mismatches(f: MapLike, idempotent_samples: Sequence[Element],
                      tol: Optional[float] = None) -> List[Tuple[Element, Element]]:
    """Pairs (p, q) where f^(p) <= 1 - q and f_(q) <= 1 - p disagree."""
    op = _op(f)
    tol = default_tolerance("law", tol)
    unit = op.domain.unit
    upper = [diamond(op, p) for p in idempotent_samples]
    lower = [diamond_lower(op, q) for q in idempotent_samples]
    mismatches = []
    for p, up in zip(idempotent_samples, upper):
        for q, low in zip(idempotent_samples, lower):
            if idempotent_leq(up, unit - q, tol) != idempotent_leq(low, unit - p, tol):
                mismatches.append((p, q))
    return mismatches


def check_pure_diamond_positive_normal_form(b: Element) -> float:
    """g = Q_sqrt(b) o Q_sqrt(b) is determined by p = g(1): returns |g - Q_sqrt(p)|."""
    # square roots of rounding-level spectral values contribute about sqrt(eps) to the residual
    require_positive(b)
    root = quadratic_rep(apply_function(b, "sqrt"))
    g = root @ root
    p = g(b.algebra.unit)
    return g.distance(quadratic_rep(apply_function(p, "sqrt")))


def peirce_reflection(e: Element) -> PositiveMap:
    """Q_{1-2e}: an involutive unital Jordan automorphism for idempotent e."""
    require_idempotent(e)
    return constructed(quadratic_rep(e.algebra.unit - 2.0 * e), "reflection")


def structured_diamond_map(q: Element, e: Optional[Element] = None) -> Tuple[PositiveMap, PositiveMap]:
    """
    A faithful pure diamond-self-adjoint map f = Q_sqrt(q) o Theta for invertible positive q,
    with Theta the reflection in a spectral idempotent e of q, so Theta(q) = q and Theta = Theta^-1.
    :return: (f, Theta)
    """
    require_positive(q)
    if e is None:
        e = spectral_decompose(q).idempotents[0]
    theta = peirce_reflection(e)
    f = constructed(quadratic_rep(apply_function(q, "sqrt")) @ theta.op, "Q", "reflection")
    return f, theta


def diamond_structure_residual(f: MapLike, theta: MapLike) -> float:
    """
    max of |f - Q_s Theta|, |Theta^2 - id| and |Theta(s) - s| where s = sqrt(f(1)),
    the structure of a faithful pure diamond-self-adjoint map.
    """
    f_op, theta_op = _op(f), _op(theta)
    s = apply_function(f_op(f_op.domain.unit), "sqrt")
    return max(
        f_op.distance(quadratic_rep(s) @ theta_op),
        (theta_op @ theta_op).distance(LinOp.identity(theta_op.domain)),
        theta_op(s).distance(s),
    )
