"""
External documents for algebras, elements, maps and witnesses.

Elements and maps that live in Peirce corners are written in the coordinates of
the root algebra, so every document refers to a plain direct sum.
"""
from typing import Any, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError

from ejakit.algebra import Algebra, Element, FactorSpec, JordanAlgebra, LinOp, make_algebra
from ejakit.exceptions import DescriptorException, StructuralException
from ejakit.serialization.json_serializer import loads


class AlgebraDescriptor(BaseModel):
    model_config = ConfigDict(frozen=True)

    factors: List[FactorSpec]

    def to_algebra(self) -> Algebra:
        return make_algebra(self.factors)

    @classmethod
    def of(cls, algebra: JordanAlgebra) -> "AlgebraDescriptor":
        return cls(factors=list(algebra.root().factors))


class ElementDescriptor(BaseModel):
    algebra: Optional[AlgebraDescriptor] = None
    coords: List[float]

    @classmethod
    def of(cls, x: Element) -> "ElementDescriptor":
        return cls(algebra=AlgebraDescriptor.of(x.algebra), coords=(x.algebra.root_embedding() @ x.coords).tolist())


class MapDescriptor(BaseModel):
    domain: AlgebraDescriptor
    codomain: AlgebraDescriptor
    matrix: List[List[float]]
    certificate: Literal["constructed", "sampled"] = "sampled"

    @classmethod
    def of(cls, op: LinOp, certificate: str = "constructed") -> "MapDescriptor":
        matrix = op.codomain.root_embedding() @ op.matrix @ op.domain.root_embedding().T
        return cls(domain=AlgebraDescriptor.of(op.domain), codomain=AlgebraDescriptor.of(op.codomain),
                   matrix=matrix.tolist(), certificate=certificate)


class WitnessDescriptor(BaseModel):
    filter_effect: ElementDescriptor
    iso: MapDescriptor
    corner_idempotent: ElementDescriptor
    composed: MapDescriptor

    @classmethod
    def of(cls, witness: Any) -> "WitnessDescriptor":
        return cls(
            filter_effect=ElementDescriptor.of(witness.filter_effect),
            iso=MapDescriptor.of(witness.middle_iso.op),
            corner_idempotent=ElementDescriptor.of(witness.corner_idempotent),
            composed=MapDescriptor.of(witness.composed.op, witness.composed.certificate.kind),
        )


def _validate(model, data: Any, what: str):
    try:
        return model.model_validate(data)
    except (ValidationError, StructuralException) as e:
        raise DescriptorException(what, str(e)) from e


def _algebra(descriptor: AlgebraDescriptor, what: str) -> Algebra:
    try:
        return descriptor.to_algebra()
    except StructuralException as e:
        raise DescriptorException(what, str(e)) from e


def parse_algebra(text: str) -> Algebra:
    """
    :param text: {"factors": [{"kind": "real_sym", "n": 3}, ...]}
    :raise DescriptorException: on malformed JSON or invalid factors
    """
    return _algebra(_validate(AlgebraDescriptor, loads(text, "algebra"), "algebra"), "algebra")


def parse_element(text: str, algebra: Optional[Algebra] = None) -> Element:
    """
    :param text: {"algebra": <descriptor>, "coords": [...]}; the algebra may be omitted when given separately
    """
    descriptor = _validate(ElementDescriptor, loads(text, "element"), "element")
    if descriptor.algebra is not None:
        algebra = _algebra(descriptor.algebra, "element")
    if algebra is None:
        raise DescriptorException("element", "no algebra given")
    if len(descriptor.coords) != algebra.dim:
        raise DescriptorException("element", f"expected {algebra.dim} coordinates, got {len(descriptor.coords)}")
    return Element(algebra, np.array(descriptor.coords))


def parse_map(text: str) -> MapDescriptor:
    """The matrix is checked for shape here; positivity is left to the caller."""
    descriptor = _validate(MapDescriptor, loads(text, "map"), "map")
    rows, cols = _algebra(descriptor.codomain, "map").dim, _algebra(descriptor.domain, "map").dim
    try:
        matrix = np.array(descriptor.matrix, dtype=float)
    except ValueError as e:
        raise DescriptorException("map", str(e)) from e
    if matrix.shape != (rows, cols):
        raise DescriptorException("map", f"expected a {rows}x{cols} matrix, got {matrix.shape}")
    return descriptor
