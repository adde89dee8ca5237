"""Spectral decompositions, atomic frames, order sharpness and the cone of a spin factor."""
import numpy as np

from ejakit.algebra import Algebra, Element, quadratic_rep, random_element, random_positive
from ejakit.laws.registry import Trial, law_registry
from ejakit.laws.suites.common import deficit, flag, relative
from ejakit.spectral import (
    atomic_frame,
    ceiling,
    floor_of_effect,
    greatest_idempotent_below,
    idempotent_lattice,
    is_atomic,
    is_diagonal,
    is_positive,
    least_idempotent_above,
    order_sharpness_witness,
    order_unit_norm,
    random_effect,
    random_idempotent,
    refine_atomic,
    spectral_bounds,
    spectral_decompose,
)

# samples this close to the boundary of the spin cone are skipped
SPIN_MARGIN = 1e-6


@law_registry.on("spectral", law_id="decomposition", priority=10)
def decomposition(algebra, rng, trials, settings):
    for _ in range(trials):
        a = random_element(algebra, rng)
        residuals = spectral_decompose(a).residuals(a)
        yield Trial(relative(max(residuals.values()), a.norm()), {"a": a, **residuals})


@law_registry.on("spectral", law_id="atomic_refinement", priority=9, trial_share=0.2)
def atomic_refinement(algebra, rng, trials, settings):
    """Every refined idempotent is atomic and there are exactly rank of them."""
    for _ in range(trials):
        a = random_element(algebra, rng)
        d = refine_atomic(spectral_decompose(a), int(rng.integers(2 ** 32)))
        residuals = d.residuals(a)
        atomic = all(is_atomic(p) for p in d.idempotents) and len(d) == algebra.rank
        yield Trial(max(relative(max(residuals.values()), a.norm()), flag(not atomic)), {"a": a})


@law_registry.on("spectral", law_id="order_sharpness", priority=8, trial_share=0.5)
def order_sharpness(algebra, rng, trials, settings):
    """Idempotents have no witness below both p and 1 - p; other effects get min(l, 1-l) p_l."""
    unit = algebra.unit
    for _ in range(trials):
        p = random_idempotent(algebra, rng)
        w = order_sharpness_witness(p)
        yield Trial(0.0 if w is None else w.norm(), {"p": p})

        a = random_effect(algebra, rng)
        w = order_sharpness_witness(a)
        if w is None:
            yield Trial(1.0, {"a": a})
            continue
        yield Trial(max(deficit(a - w), deficit(unit - a - w), flag(w.norm() <= 0.0)), {"a": a, "witness": w})


@law_registry.on("spectral", law_id="peirce_projection", priority=7)
def peirce_projection(algebra, rng, trials, settings):
    """For an effect a: Q_p a = 0 when <a, p> = 0, and Q_p a = a, p * a = a, a <= p when a sits under p."""
    for _ in range(trials):
        p = random_idempotent(algebra, rng)
        a = random_effect(algebra, rng)
        qp = quadratic_rep(p)
        outside = quadratic_rep(algebra.unit - p)(a)
        inside = qp(a)
        residual = max(
            qp(outside).norm(),
            abs(outside.inner(p)),
            qp(inside).distance(inside),
            (p * inside).distance(inside),
            deficit(p - inside),
        )
        yield Trial(residual, {"p": p, "a": a})


@law_registry.on("spectral", law_id="norm_sandwich", priority=6, trial_share=0.5)
def norm_sandwich(algebra, rng, trials, settings):
    """R |a| <= |a|_2 <= |a| |1|_2 with R the smallest Hilbert norm of a frame atom."""
    unit_norm = algebra.unit.norm()
    for _ in range(trials):
        frame = atomic_frame(algebra, rng)
        smallest = min(p.norm() for p in frame)
        a = random_element(algebra, rng)
        norm, hilbert = order_unit_norm(a), a.norm()
        residual = max(0.0, hilbert - norm * unit_norm, norm * smallest - hilbert)
        yield Trial(relative(residual, hilbert), {"a": a})


@law_registry.on("spectral", law_id="archimedean", priority=6)
def archimedean(algebra, rng, trials, settings):
    for _ in range(trials):
        a = random_element(algebra, rng)
        _, high = spectral_bounds(a)
        yield Trial(relative(deficit(high * algebra.unit - a), abs(high)), {"a": a})


@law_registry.on("spectral", law_id="ceiling_floor", priority=5)
def ceiling_floor(algebra, rng, trials, settings):
    """Ceilings sit above and floors below; on diagonal algebras both match the lattice search."""
    lattice = idempotent_lattice(algebra) if is_diagonal(algebra) else None
    for _ in range(trials):
        a = random_positive(algebra, rng) if lattice is None else _sparse_diagonal(algebra, rng)
        top = ceiling(a)
        q = random_effect(algebra, rng) if lattice is None else _sparse_effect(algebra, rng)
        bottom = floor_of_effect(q)
        residual = max(relative(deficit(order_unit_norm(a) * top - a), order_unit_norm(a)), deficit(q - bottom))
        if lattice is not None:
            residual = max(residual, top.distance(least_idempotent_above(a, lattice)),
                           bottom.distance(greatest_idempotent_below(q, lattice)))
        yield Trial(residual, {"a": a, "q": q, "ceiling": top, "floor": bottom})


def _sparse_diagonal(algebra: Algebra, rng: np.random.Generator) -> Element:
    values = rng.uniform(0.5, 2.0, algebra.dim) * (rng.random(algebra.dim) < 0.5)
    return Element(algebra, values)


def _sparse_effect(algebra: Algebra, rng: np.random.Generator) -> Element:
    values = rng.choice([0.0, 1.0, 0.5], size=algebra.dim)
    values = np.where(values == 0.5, rng.uniform(0.1, 0.9, algebra.dim), values)
    return Element(algebra, values)


@law_registry.on("spectral", law_id="spin_cone", priority=4)
def spin_cone(algebra, rng, trials, settings):
    """(v, t) in a spin factor is positive exactly when t >= |v|."""
    root = algebra.root()
    if not isinstance(root, Algebra) or not root.is_same(algebra):
        return
    blocks = [i for i, spec in enumerate(root.factors) if spec.kind == "spin"]
    if not blocks:
        return
    for _ in range(trials):
        index = blocks[int(rng.integers(len(blocks)))]
        block = root.factor_slice(index)
        coords = np.zeros(root.dim)
        coords[block] = rng.standard_normal(block.stop - block.start)
        v, t = coords[block][:-1], coords[block][-1]
        gap = t - np.linalg.norm(v)
        if abs(gap) < SPIN_MARGIN:
            continue
        x = Element(root, coords)
        yield Trial(flag(is_positive(x) != (gap > 0)), {"x": x})
