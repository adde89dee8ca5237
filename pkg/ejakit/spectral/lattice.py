"""
Brute-force idempotent lattices for small algebras.

These oracles never use the spectral calculus: they enumerate idempotents (the
full 2^n lattice of the diagonal algebra R^n, or the circle of atoms of
RealSym(2)) and search them directly.
"""
import itertools
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from ejakit.algebra import Element, FactorSpec, JordanAlgebra, LinOp, make_algebra, operator_norm
from ejakit.algebra.algebra import Algebra
from ejakit.env import default_tolerance
from ejakit.exceptions import PreconditionViolatedException
from ejakit.spectral.predicates import idempotent_leq, leq, order_unit_norm

# RealSym(2) atoms are b0 + cos(2t) bx + sin(2t) by
_B0 = np.array([0.5, 0.5, 0.0])
_BX = np.array([0.5, -0.5, 0.0])
_BY = np.array([0.0, 0.0, 1.0 / np.sqrt(2.0)])

CIRCLE_TOL = 1e-6


def is_diagonal(algebra: JordanAlgebra) -> bool:
    return isinstance(algebra, Algebra) and all(spec == FactorSpec.real_sym(1) for spec in algebra.factors)


def is_real_sym2(algebra: JordanAlgebra) -> bool:
    return algebra.is_same(make_algebra([FactorSpec.real_sym(2)]))


def idempotent_lattice(algebra: JordanAlgebra) -> List[Element]:
    """All 2^n idempotents of the diagonal algebra R^n."""
    if not is_diagonal(algebra):
        raise PreconditionViolatedException("algebra is a direct sum of RealSym(1) factors")
    return [Element(algebra, bits) for bits in itertools.product((0.0, 1.0), repeat=algebra.dim)]


def _infimum(matches: Sequence[Element], tol: Optional[float]) -> Element:
    for p in matches:
        if all(idempotent_leq(p, other, tol) for other in matches):
            return p
    raise PreconditionViolatedException("a least matching idempotent exists among the candidates")


def _supremum(matches: Sequence[Element], tol: Optional[float]) -> Element:
    for p in matches:
        if all(idempotent_leq(other, p, tol) for other in matches):
            return p
    raise PreconditionViolatedException("a greatest matching idempotent exists among the candidates")


def _candidates(algebra: JordanAlgebra, candidates: Optional[Sequence[Element]]) -> Sequence[Element]:
    return idempotent_lattice(algebra) if candidates is None else candidates


def least_idempotent_above(a: Element, candidates: Sequence[Element] = None, tol: Optional[float] = None) -> Element:
    """Least p with a <= |a| p."""
    norm = order_unit_norm(a)
    matches = [p for p in _candidates(a.algebra, candidates) if leq(a, norm * p, tol)]
    return _infimum(matches, tol)


def greatest_idempotent_below(q: Element, candidates: Sequence[Element] = None, tol: Optional[float] = None) -> Element:
    matches = [p for p in _candidates(q.algebra, candidates) if leq(p, q, tol)]
    return _supremum(matches, tol)


def least_idempotent_preserving(f: Callable[[Element], Element], algebra: JordanAlgebra,
                                candidates: Sequence[Element] = None, tol: Optional[float] = None) -> Element:
    """Least idempotent p with f(p) = f(1), the lattice definition of the image."""
    tol = default_tolerance("idempotent", tol)
    target = f(algebra.unit)
    matches = [p for p in _candidates(algebra, candidates) if f(p).distance(target) <= tol]
    return _infimum(matches, tol)


@dataclass(frozen=True)
class KilledAtoms:
    every_atom: bool
    atoms: Tuple[Element, ...] = ()


def _atom(algebra: JordanAlgebra, direction: np.ndarray) -> Element:
    c, s = direction / np.linalg.norm(direction)
    return Element(algebra, _B0 + c * _BX + s * _BY)


def atoms_killed_real_sym2(f: LinOp, tol: Optional[float] = None) -> KilledAtoms:
    """
    Every atom p of RealSym(2) with f(p) = 0, found by intersecting the affine
    solution set of f(b0) + c f(bx) + s f(by) = 0 with the circle c^2 + s^2 = 1.
    """
    algebra = f.domain
    if not is_real_sym2(algebra):
        raise PreconditionViolatedException("domain is RealSym(2)")
    tol = default_tolerance("idempotent", tol) * max(operator_norm(f.matrix), 1.0)
    system = f.matrix @ np.stack([_BX, _BY], axis=1)
    rhs = -f.matrix @ _B0
    u, s, vt = np.linalg.svd(system)
    rank = int(np.sum(s > tol))

    if rank == 0:
        return KilledAtoms(every_atom=bool(np.linalg.norm(rhs) <= tol))
    if rank == 2:
        x = np.linalg.lstsq(system, rhs, rcond=None)[0]
        if np.linalg.norm(system @ x - rhs) > tol or abs(np.linalg.norm(x) - 1.0) > CIRCLE_TOL:
            return KilledAtoms(every_atom=False)
        return KilledAtoms(every_atom=False, atoms=(_atom(algebra, x),))

    alpha = float(u[:, 0] @ rhs) / s[0]
    if np.linalg.norm(rhs - u[:, 0] * (u[:, 0] @ rhs)) > tol or abs(alpha) > 1.0 + CIRCLE_TOL:
        return KilledAtoms(every_atom=False)
    along, across = vt[0], vt[1]
    if abs(alpha) >= 1.0 - CIRCLE_TOL:
        return KilledAtoms(every_atom=False, atoms=(_atom(algebra, alpha * along),))
    t = np.sqrt(1.0 - alpha * alpha)
    return KilledAtoms(every_atom=False, atoms=(_atom(algebra, alpha * along + t * across),
                                                _atom(algebra, alpha * along - t * across)))


def image_oracle(f: LinOp, tol: Optional[float] = None) -> Element:
    """Least idempotent p with f(p) = f(1), by exhaustive search over the idempotent lattice."""
    algebra = f.domain
    if is_diagonal(algebra):
        return least_idempotent_preserving(f, algebra, tol=tol)
    if not is_real_sym2(algebra):
        raise PreconditionViolatedException("domain is diagonal or RealSym(2)")

    # f(p) = f(1) iff f kills 1 - p
    killed = atoms_killed_real_sym2(f, tol)
    if killed.every_atom or len(killed.atoms) > 1:
        return algebra.zero()
    if killed.atoms:
        return algebra.unit - killed.atoms[0]
    return algebra.unit
