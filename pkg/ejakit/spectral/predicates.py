from typing import Optional, Tuple

import numpy as np

from ejakit.algebra import Element, quadratic_rep
from ejakit.env import default_tolerance
from ejakit.exceptions import NotEffectException, NotIdempotentException, NotPositiveException
from ejakit.spectral.decomposition import is_rank_one, spectral_decompose


def spectral_bounds(a: Element) -> Tuple[float, float]:
    values = spectral_decompose(a).eigenvalues
    if values.size == 0:
        return 0.0, 0.0
    return float(values.min()), float(values.max())


def order_unit_norm(a: Element) -> float:
    """inf{r : -r 1 <= a <= r 1}, the largest absolute spectral value."""
    low, high = spectral_bounds(a)
    return max(abs(low), abs(high))


def is_positive(a: Element, tol: Optional[float] = None) -> bool:
    return spectral_bounds(a)[0] >= -default_tolerance("positivity", tol)


def is_effect(a: Element, tol: Optional[float] = None) -> bool:
    tol = default_tolerance("positivity", tol)
    low, high = spectral_bounds(a)
    return low >= -tol and high <= 1.0 + tol


def idempotency_residual(a: Element) -> float:
    return (a * a).distance(a)


def is_idempotent(a: Element, tol: Optional[float] = None) -> bool:
    return idempotency_residual(a) <= default_tolerance("idempotent", tol)


def is_atomic(p: Element, tol: Optional[float] = None) -> bool:
    """Atomic idempotents are exactly those whose Peirce corner Q_p(E) is a line."""
    return is_idempotent(p, tol) and is_rank_one(p)


def leq(a: Element, b: Element, tol: Optional[float] = None) -> bool:
    return is_positive(b - a, tol)


def idempotent_leq(s: Element, t: Element, tol: Optional[float] = None) -> bool:
    """s <= t for idempotents, tested as Q_t(s) = s."""
    return quadratic_rep(t)(s).distance(s) <= default_tolerance("idempotent", tol)


def is_orthogonal(p: Element, q: Element, tol: Optional[float] = None) -> bool:
    return (p * q).norm() <= default_tolerance("idempotent", tol)


def require_positive(a: Element, tol: Optional[float] = None) -> None:
    low, _ = spectral_bounds(a)
    if low < -default_tolerance("positivity", tol):
        raise NotPositiveException(low)


def require_effect(a: Element, tol: Optional[float] = None) -> None:
    tol = default_tolerance("positivity", tol)
    low, high = spectral_bounds(a)
    if low < -tol or high > 1.0 + tol:
        raise NotEffectException(low, high)


def require_idempotent(p: Element, tol: Optional[float] = None) -> None:
    residual = idempotency_residual(p)
    if residual > default_tolerance("idempotent", tol):
        raise NotIdempotentException(residual)


def order_sharpness_witness(a: Element, tol: Optional[float] = None) -> Optional[Element]:
    """
    For an effect a that is not idempotent, a nonzero effect below both a and 1 - a.
    Picks the spectral value lambda farthest from {0, 1} and returns min(lambda, 1 - lambda) p_lambda.
    Returns None for idempotents, which admit no such witness.
    """
    require_effect(a, tol)
    pairs = spectral_decompose(a).pairs
    weights = [min(value, 1.0 - value) for value, _ in pairs]
    if not weights:
        return None
    best = int(np.argmax(weights))
    if weights[best] <= default_tolerance("idempotent", tol):
        return None
    return weights[best] * pairs[best][1]
