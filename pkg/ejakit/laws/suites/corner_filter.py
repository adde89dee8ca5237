"""Universal properties of corners and filters, and the maps that factor through them."""
from ejakit.algebra import LinOp, quadratic_rep, random_element
from ejakit.effectus import (
    mediate_corner,
    mediate_filter,
    peirce_reflection,
    standard_corner,
    standard_filter,
)
from ejakit.laws.registry import Trial, law_registry
from ejakit.laws.suites.common import effect_with_floor, random_positive_op, relative
from ejakit.maps import (
    adjoint,
    check_jordan_homomorphism,
    compose,
    constructed,
    factor_through_image_residual,
    floor_residual,
    intertwining_residual,
)
from ejakit.spectral import apply_function, random_effect, random_idempotent


def _through_floor(algebra, rng):
    """(g, q) with g = h Q_floor(q), so g(q) = g(1)."""
    q, e = effect_with_floor(algebra, rng)
    g = constructed(random_positive_op(algebra, rng) @ quadratic_rep(e), "h", "Q")
    return g, q, e


@law_registry.on("corner_filter", law_id="corner_mediator", priority=10)
def corner_mediator(algebra, rng, trials, settings):
    """g' o pi_q = g; pi_q o iota = id makes g' = g o iota the only such map."""
    for _ in range(trials):
        g, q, _ = _through_floor(algebra, rng)
        corner = standard_corner(algebra, q)
        mediator = mediate_corner(g, q)
        C = corner.codomain
        section = corner.op @ C.embedding
        residual = max(relative((mediator.op @ corner.op).distance(g.op), g.op.norm()),
                       section.distance(LinOp.identity(C)))
        yield Trial(residual, {"g": g, "q": q})


@law_registry.on("corner_filter", law_id="filter_mediator", priority=10)
def filter_mediator(algebra, rng, trials, settings):
    """xi_q o f' = f for f = Q_sqrt(q) Q_b, whose unit image Q_sqrt(q)(b^2) sits below q."""
    for _ in range(trials):
        q = random_effect(algebra, rng)
        b = random_effect(algebra, rng)
        f = constructed(quadratic_rep(apply_function(q, "sqrt")) @ quadratic_rep(b), "Q", "Q")
        mediator = mediate_filter(f, q)
        residual = (standard_filter(algebra, q).op @ mediator.op).distance(f.op)
        yield Trial(relative(residual, f.op.norm()), {"f": f, "q": q})


@law_registry.on("corner_filter", law_id="floor_lemma", priority=8)
def floor_lemma(algebra, rng, trials, settings):
    """g(q) = g(1) forces g(floor q) = g(1) and g Q_floor(q) = g."""
    for _ in range(trials):
        g, q, e = _through_floor(algebra, rng)
        residual = max(floor_residual(g, q), factor_through_image_residual(g, e))
        yield Trial(relative(residual, g.op.norm()), {"g": g, "q": q})


@law_registry.on("corner_filter", law_id="corner_filter_adjoint", priority=7)
def corner_filter_adjoint(algebra, rng, trials, settings):
    """For an idempotent p the adjoint of pi_p is xi_p."""
    for _ in range(trials):
        p = random_idempotent(algebra, rng)
        corner, filter_ = standard_corner(algebra, p), standard_filter(algebra, p)
        yield Trial(adjoint(corner).op.distance(filter_.op), {"p": p})


@law_registry.on("corner_filter", law_id="iso_homomorphism", priority=6, trial_share=0.5)
def iso_homomorphism(algebra, rng, trials, settings):
    """Unital order isomorphisms are Jordan isomorphisms and intertwine quadratic representations."""
    for _ in range(trials):
        e = random_idempotent(algebra, rng)
        theta = peirce_reflection(e)
        a = random_element(algebra, rng)
        residual = max(check_jordan_homomorphism(theta, trials=4, rng=rng),
                       relative(intertwining_residual(theta, a), a.norm() ** 2))
        yield Trial(residual, {"e": e, "a": a})


@law_registry.on("corner_filter", law_id="corner_then_filter", priority=5, trial_share=0.5)
def corner_then_filter(algebra, rng, trials, settings):
    """xi_p o pi_p = Q_p for an idempotent p."""
    for _ in range(trials):
        p = random_idempotent(algebra, rng)
        composed = compose(standard_filter(algebra, p), standard_corner(algebra, p))
        yield Trial(composed.op.distance(quadratic_rep(p)), {"p": p})

