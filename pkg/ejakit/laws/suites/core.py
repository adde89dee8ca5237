"""Jordan identities, the quadratic representation and self-duality."""
from ejakit.algebra import LinOp, commutator, mult_operator, quadratic_rep, random_invertible, random_positive
from ejakit.laws.registry import Trial, law_registry
from ejakit.laws.suites.common import deficit, flag, relative, unit_sphere
from ejakit.spectral import atomic_frame, inverse, order_unit_norm

ZERO_PRODUCT_TOL = 1e-6


@law_registry.on("core", law_id="commutativity", priority=10)
def commutativity(algebra, rng, trials, settings):
    for _ in range(trials):
        a, b = unit_sphere(algebra, rng), unit_sphere(algebra, rng)
        yield Trial((a * b).distance(b * a), {"a": a, "b": b})


@law_registry.on("core", law_id="unit", priority=10)
def unit(algebra, rng, trials, settings):
    for _ in range(trials):
        a = unit_sphere(algebra, rng)
        yield Trial((algebra.unit * a).distance(a), {"a": a})


@law_registry.on("core", law_id="jordan_identity", priority=9)
def jordan_identity(algebra, rng, trials, settings):
    for _ in range(trials):
        a, b = unit_sphere(algebra, rng), unit_sphere(algebra, rng)
        square = a * a
        yield Trial(relative(((a * b) * square).distance(a * (b * square))), {"a": a, "b": b})


@law_registry.on("core", law_id="inner_associativity", priority=9)
def inner_associativity(algebra, rng, trials, settings):
    for _ in range(trials):
        a, b, c = (unit_sphere(algebra, rng) for _ in range(3))
        yield Trial(abs((a * b).inner(c) - b.inner(a * c)), {"a": a, "b": b, "c": c})


@law_registry.on("core", law_id="power_associativity", priority=8)
def power_associativity(algebra, rng, trials, settings):
    for _ in range(trials):
        a = unit_sphere(algebra, rng)
        n = int(rng.integers(1, 8))
        m = int(rng.integers(1, 9 - n))
        residual = (a.power(n) * a.power(m)).distance(a.power(n + m))
        yield Trial(relative(residual, order_unit_norm(a) ** (n + m)), {"a": a, "n": n, "m": m})


@law_registry.on("core", law_id="commutator_identities", priority=8, trial_share=0.5)
def commutator_identities(algebra, rng, trials, settings):
    """[L_b, L_a2] = 2 [L_ab, L_a] and the cyclic sum of [L_a, L_bc] vanishes."""
    for _ in range(trials):
        a, b, c = (unit_sphere(algebra, rng) for _ in range(3))
        la, lb, lc = mult_operator(a), mult_operator(b), mult_operator(c)
        first = commutator(lb, mult_operator(a * a)) - 2.0 * commutator(mult_operator(a * b), la)
        cyclic = (commutator(la, mult_operator(b * c)) + commutator(lb, mult_operator(c * a))
                  + commutator(lc, mult_operator(a * b)))
        yield Trial(max(first.norm(), cyclic.norm()), {"a": a, "b": b, "c": c})


@law_registry.on("core", law_id="fundamental_equality", priority=7)
def fundamental_equality(algebra, rng, trials, settings):
    for _ in range(trials):
        a, b = unit_sphere(algebra, rng), unit_sphere(algebra, rng)
        qa, qb = quadratic_rep(a), quadratic_rep(b)
        residual = quadratic_rep(qa(b)).distance(qa @ qb @ qa)
        yield Trial(relative(residual, qa.norm() ** 2 * qb.norm()), {"a": a, "b": b})


@law_registry.on("core", law_id="quadratic_inverse", priority=6)
def quadratic_inverse(algebra, rng, trials, settings):
    for _ in range(trials):
        a = random_invertible(algebra, rng)
        qa, qinv = quadratic_rep(a), quadratic_rep(inverse(a))
        residual = (qa @ qinv).distance(LinOp.identity(algebra))
        yield Trial(relative(residual, qa.norm() * qinv.norm()), {"a": a})


@law_registry.on("core", law_id="quadratic_positivity", priority=6)
def quadratic_positivity(algebra, rng, trials, settings):
    for _ in range(trials):
        a, b = unit_sphere(algebra, rng), unit_sphere(algebra, rng)
        qa = quadratic_rep(a)
        yield Trial(relative(deficit(qa(b * b)), qa.norm()), {"a": a, "b": b})


@law_registry.on("core", law_id="self_duality", priority=6)
def self_duality(algebra, rng, trials, settings):
    for _ in range(trials):
        a, b = random_positive(algebra, rng), random_positive(algebra, rng)
        yield Trial(relative(max(0.0, -a.inner(b)), a.norm() * b.norm()), {"a": a, "b": b})


@law_registry.on("core", law_id="zero_products", priority=5, trial_share=0.5)
def zero_products(algebra, rng, trials, settings):
    """
    Q_a b = 0, Q_b a = 0 and a * b = 0 hold together: exactly on elements built
    over disjoint parts of a frame, and fail together on random positive pairs.
    """
    for _ in range(trials):
        frame = atomic_frame(algebra, rng)
        split = int(rng.integers(1, len(frame))) if len(frame) > 1 else len(frame)
        a = sum((p * float(rng.uniform(0.5, 2.0)) for p in frame[:split]), algebra.zero())
        b = sum((p * float(rng.uniform(0.5, 2.0)) for p in frame[split:]), algebra.zero())
        sizes = [quadratic_rep(a)(b).norm(), quadratic_rep(b)(a).norm(), (a * b).norm()]
        yield Trial(relative(max(sizes), a.norm() ** 2 * b.norm()), {"a": a, "b": b})

        c, d = random_positive(algebra, rng, 0.1), random_positive(algebra, rng, 0.1)
        zeros = {size <= ZERO_PRODUCT_TOL for size in
                 (quadratic_rep(c)(d).norm(), quadratic_rep(d)(c).norm(), (c * d).norm())}
        yield Trial(flag(len(zeros) > 1), {"a": c, "b": d})
