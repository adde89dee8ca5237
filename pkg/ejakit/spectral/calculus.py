"""Functional calculus: f(a) = sum_i f(lambda_i) p_i over the spectral decomposition of a."""
import math
from typing import Callable, Optional, Union

from ejakit.algebra import Element
from ejakit.env import default_tolerance
from ejakit.exceptions import NotPositiveException, PreconditionViolatedException
from ejakit.spectral.decomposition import SpectralDecomposition, spectral_decompose
from ejakit.spectral.predicates import require_effect

SpectralFunction = Union[str, Callable[[float], float]]

FUNCTION_TAGS = (
    "sqrt",
    "pseudo_inverse",
    "pseudo_inverse_sqrt",
    "power",
    "abs",
    "positive_part",
    "negative_part",
)


def _norm(d: SpectralDecomposition) -> float:
    return max((abs(value) for value, _ in d.pairs), default=0.0)


def zero_threshold(d: SpectralDecomposition, eig_tol: Optional[float] = None, scale: Optional[float] = None) -> float:
    """
    Spectral values at or below this magnitude count as zero.
    Relative to the order-unit norm, or to a caller-supplied reference scale when that is larger.
    """
    return default_tolerance("eig", eig_tol) * max(_norm(d), scale or 0.0)


def _require_nonnegative(d: SpectralDecomposition, threshold: float) -> None:
    low = min((value for value, _ in d.pairs), default=0.0)
    if low < -threshold:
        raise NotPositiveException(low)


def _scalar_function(d: SpectralDecomposition, f: SpectralFunction, exponent: Optional[float],
                     threshold: float) -> Callable[[float], float]:
    if callable(f):
        return f
    if f == "sqrt":
        _require_nonnegative(d, threshold)
        return lambda value: math.sqrt(max(value, 0.0))
    if f == "pseudo_inverse":
        return lambda value: 0.0 if abs(value) <= threshold else 1.0 / value
    if f == "pseudo_inverse_sqrt":
        _require_nonnegative(d, threshold)
        return lambda value: 0.0 if value <= threshold else 1.0 / math.sqrt(value)
    if f == "power":
        if exponent is None:
            raise ValueError("power needs an exponent")
        if float(exponent).is_integer() and exponent >= 0:
            return lambda value: value ** int(exponent)
        if not float(exponent).is_integer():
            _require_nonnegative(d, threshold)
            return lambda value: 0.0 if value <= threshold else value ** exponent
        return lambda value: 0.0 if abs(value) <= threshold else value ** exponent
    if f == "abs":
        return abs
    if f == "positive_part":
        return lambda value: max(value, 0.0)
    if f == "negative_part":
        return lambda value: max(-value, 0.0)
    raise ValueError(f"Unknown spectral function \"{f}\", expected one of {FUNCTION_TAGS}")


def apply_function(a: Element, f: SpectralFunction, *, exponent: Optional[float] = None,
                   eig_tol: Optional[float] = None, cluster_tol: Optional[float] = None,
                   scale: Optional[float] = None) -> Element:
    """
    Apply a real function eigenvalue-wise.
    :param a: the element
    :param f: one of FUNCTION_TAGS or a callable on spectral values
    :param exponent: exponent for "power"; negative powers send zero spectral values to zero
    :param eig_tol: relative zero threshold for pseudo-inverses and positivity
    :param scale: optional reference scale for the zero threshold
    :raise NotPositiveException: square roots of elements with a negative spectral value
    """
    d = spectral_decompose(a, cluster_tol)
    fn = _scalar_function(d, f, exponent, zero_threshold(d, eig_tol, scale))
    return d.apply(fn)


def sqrt(a: Element, eig_tol: Optional[float] = None) -> Element:
    return apply_function(a, "sqrt", eig_tol=eig_tol)


def pseudo_inverse(a: Element, eig_tol: Optional[float] = None, scale: Optional[float] = None) -> Element:
    return apply_function(a, "pseudo_inverse", eig_tol=eig_tol, scale=scale)


def pseudo_inverse_sqrt(a: Element, eig_tol: Optional[float] = None, scale: Optional[float] = None) -> Element:
    return apply_function(a, "pseudo_inverse_sqrt", eig_tol=eig_tol, scale=scale)


def power(a: Element, exponent: float, eig_tol: Optional[float] = None) -> Element:
    return apply_function(a, "power", exponent=exponent, eig_tol=eig_tol)


def absolute(a: Element) -> Element:
    return apply_function(a, "abs")


def positive_part(a: Element) -> Element:
    return apply_function(a, "positive_part")


def negative_part(a: Element) -> Element:
    return apply_function(a, "negative_part")


def inverse(a: Element, eig_tol: Optional[float] = None) -> Element:
    d = spectral_decompose(a)
    threshold = zero_threshold(d, eig_tol)
    smallest = min((abs(value) for value, _ in d.pairs), default=0.0)
    if smallest <= threshold:
        raise PreconditionViolatedException("a invertible", smallest)
    return d.apply(lambda value: 1.0 / value)


def ceiling(a: Element, eig_tol: Optional[float] = None, scale: Optional[float] = None) -> Element:
    """Least idempotent above the positive element a: the sum of its spectral idempotents with nonzero value."""
    d = spectral_decompose(a)
    threshold = zero_threshold(d, eig_tol, scale)
    _require_nonnegative(d, threshold)
    return d.apply(lambda value: 1.0 if value > threshold else 0.0)


def floor_of_effect(q: Element, eig_tol: Optional[float] = None, tol: Optional[float] = None) -> Element:
    """Greatest idempotent below the effect q, 1 - ceiling(1 - q)."""
    require_effect(q, tol)
    unit = q.algebra.unit
    return unit - ceiling(unit - q, eig_tol, scale=1.0)
