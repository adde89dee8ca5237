"""
Positive maps between algebras.

Positivity of an arbitrary matrix is not decided exactly. Every map carries a
certificate: Constructed maps record the chain of positivity-preserving steps
that produced them, Sampled maps record the heuristic sampling run that admitted
them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict

from ejakit.algebra import Element, JordanAlgebra, LinOp, quadratic_rep, random_positive
from ejakit.env import default_tolerance, get_settings
from ejakit.exceptions import NotPositiveException, PreconditionViolatedException
from ejakit.spectral import atomic_frame, is_positive, leq, spectral_bounds


class Constructed(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["constructed"] = "constructed"
    provenance: Tuple[str, ...] = ()


class Sampled(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["sampled"] = "sampled"
    trials: int
    tol: float
    min_value: Optional[float] = None


PositivityCertificate = Union[Constructed, Sampled]


@dataclass(frozen=True, eq=False)
class PositiveMap:
    op: LinOp
    certificate: PositivityCertificate = Constructed()
    subunital: bool = field(init=False)
    unital: bool = field(init=False)

    def __post_init__(self):
        image_of_unit = self.op(self.op.domain.unit)
        unit = self.op.codomain.unit
        object.__setattr__(self, "subunital", bool(leq(image_of_unit, unit)))
        object.__setattr__(self, "unital", bool(image_of_unit.distance(unit) <= default_tolerance("law")))

    @property
    def domain(self) -> JordanAlgebra:
        return self.op.domain

    @property
    def codomain(self) -> JordanAlgebra:
        return self.op.codomain

    @property
    def matrix(self) -> np.ndarray:
        return self.op.matrix

    def __call__(self, x: Element) -> Element:
        return self.op(x)

    def __matmul__(self, inner: PositiveMap) -> PositiveMap:
        return compose(self, inner)

    def distance(self, other: Union[PositiveMap, LinOp]) -> float:
        return self.op.distance(other.op if isinstance(other, PositiveMap) else other)

    def __repr__(self) -> str:
        return f"PositiveMap({self.domain.label} -> {self.codomain.label}, {self.certificate.kind})"


def constructed(op: LinOp, *provenance: str) -> PositiveMap:
    return PositiveMap(op, Constructed(provenance=tuple(provenance)))


def identity_map(algebra: JordanAlgebra) -> PositiveMap:
    return constructed(LinOp.identity(algebra), "id")


def quadratic_map(a: Element) -> PositiveMap:
    return constructed(quadratic_rep(a), "Q")


def _chain(outer: PositivityCertificate, inner: PositivityCertificate) -> PositivityCertificate:
    if isinstance(outer, Constructed) and isinstance(inner, Constructed):
        return Constructed(provenance=outer.provenance + inner.provenance)
    sampled = [c for c in (outer, inner) if isinstance(c, Sampled)]
    return Sampled(trials=min(c.trials for c in sampled), tol=max(c.tol for c in sampled))


def compose(outer: PositiveMap, inner: PositiveMap) -> PositiveMap:
    """outer after inner."""
    return PositiveMap(outer.op @ inner.op, _chain(outer.certificate, inner.certificate))


def scale(f: PositiveMap, weight: float) -> PositiveMap:
    if weight < 0:
        raise PreconditionViolatedException("weight >= 0", weight)
    certificate = f.certificate
    if isinstance(certificate, Constructed):
        certificate = Constructed(provenance=certificate.provenance + ("scale",))
    return PositiveMap(float(weight) * f.op, certificate)


def nonnegative_sum(maps: Sequence[PositiveMap], weights: Sequence[float] = None) -> PositiveMap:
    weights = [1.0] * len(maps) if weights is None else list(weights)
    terms = [scale(f, w) for f, w in zip(maps, weights)]
    op = terms[0].op
    certificate = terms[0].certificate
    for term in terms[1:]:
        op = op + term.op
        certificate = _chain(certificate, term.certificate)
    if isinstance(certificate, Constructed):
        certificate = Constructed(provenance=certificate.provenance + ("sum",))
    return PositiveMap(op, certificate)


def positivity_samples(algebra: JordanAlgebra, rng: np.random.Generator, trials: int) -> list:
    """Random positive elements of unit Hilbert norm followed by an atomic frame."""
    samples = []
    for _ in range(trials):
        b = random_positive(algebra, rng)
        samples.append(b / max(b.norm(), 1e-300))
    return samples + atomic_frame(algebra, rng)


def sample_positivity(op: LinOp, rng: np.random.Generator, trials: Optional[int] = None) -> float:
    """Smallest spectral value of op(x) over the samples; negative values refute positivity."""
    if trials is None:
        trials = get_settings().sampling.positivity_samples
    if op.codomain.dim == 0 or op.domain.dim == 0:
        return 0.0
    return min(spectral_bounds(op(x))[0] for x in positivity_samples(op.domain, rng, trials))


def from_matrix(domain: JordanAlgebra, codomain: JordanAlgebra, matrix, rng: np.random.Generator,
                trials: Optional[int] = None, tol: Optional[float] = None) -> PositiveMap:
    """
    Admit a user-supplied matrix after a heuristic positivity check.
    :raise NotPositiveException: when some sample is mapped outside the cone
    """
    op = LinOp(domain, codomain, matrix)
    if trials is None:
        trials = get_settings().sampling.positivity_samples
    tol = default_tolerance("positivity", tol) * max(op.norm(), 1.0)
    lowest = sample_positivity(op, rng, trials)
    if lowest < -tol:
        raise NotPositiveException(lowest)
    return PositiveMap(op, Sampled(trials=trials, tol=tol, min_value=lowest))


def is_positive_on(op: LinOp, samples: Sequence[Element], tol: Optional[float] = None) -> bool:
    return all(is_positive(op(x), tol) for x in samples)
