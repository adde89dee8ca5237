"""Diamond adjoints: Galois connections, self-adjointness and the structure of pure maps."""
from ejakit.algebra import quadratic_rep, random_element, random_positive
from ejakit.effectus import (
    check_pure_diamond_positive_normal_form,
    default_idempotent_samples,
    diamond_lower,
    diamond_structure_residual,
    galois_mismatches,
    is_diamond_positive_witnessed,
    is_diamond_self_adjoint,
    structured_diamond_map,
)
from ejakit.laws.registry import Trial, law_registry
from ejakit.laws.suites.common import flag, random_positive_op, relative
from ejakit.maps import constructed, image
from ejakit.spectral import (
    idempotent_lattice,
    image_oracle,
    is_diagonal,
    is_real_sym2,
    least_idempotent_preserving,
    random_rank_deficient_positive,
)


def _samples(algebra, rng, settings):
    if is_diagonal(algebra):
        return idempotent_lattice(algebra)
    return default_idempotent_samples(algebra, rng, settings.sampling.diamond_random_ceilings)


@law_registry.on("diamond", law_id="galois_connection", priority=10, trial_share=0.1)
def galois_connection(algebra, rng, trials, settings):
    """f^(p) <= 1 - q exactly when f_(q) <= 1 - p, over every sampled pair."""
    for _ in range(trials):
        f = constructed(random_positive_op(algebra, rng), "Q")
        mismatches = galois_mismatches(f, _samples(algebra, rng, settings))
        witness = {"f": f}
        if mismatches:
            witness.update(p=mismatches[0][0], q=mismatches[0][1])
        yield Trial(flag(bool(mismatches)), witness)


@law_registry.on("diamond", law_id="quadratic_self_adjoint", priority=9, trial_share=0.1)
def quadratic_self_adjoint(algebra, rng, trials, settings):
    for _ in range(trials):
        a = random_element(algebra, rng)
        ok = is_diamond_self_adjoint(quadratic_rep(a), _samples(algebra, rng, settings))
        yield Trial(flag(not ok), {"a": a})


@law_registry.on("diamond", law_id="image_formula", priority=8, trial_share=0.5)
def image_formula(algebra, rng, trials, settings):
    """im f = ceil(f*(1)) and f_(q) = im(Q_q f), checked against exhaustive search where the lattice is small."""
    if not (is_diagonal(algebra) or is_real_sym2(algebra)):
        return
    for _ in range(trials):
        op = _sparse_positive_op(algebra, rng)
        residual = image(op, scale=1.0).distance(image_oracle(op))
        if is_diagonal(algebra):
            for q in idempotent_lattice(algebra):
                restricted = quadratic_rep(q) @ op
                oracle = least_idempotent_preserving(restricted, algebra)
                residual = max(residual, diamond_lower(op, q).distance(oracle))
        yield Trial(residual, {"f": op})


def _sparse_positive_op(algebra, rng):
    """Q_a for a random a, singular half of the time so that images are proper idempotents."""
    if rng.random() < 0.5:
        return quadratic_rep(random_element(algebra, rng))
    return quadratic_rep(random_rank_deficient_positive(algebra, rng))


@law_registry.on("diamond", law_id="pure_normal_form", priority=7)
def pure_normal_form(algebra, rng, trials, settings):
    """Q_sqrt(b)^2 equals Q_sqrt(g(1)) for g = Q_sqrt(b)^2."""
    for _ in range(trials):
        b = random_positive(algebra, rng)
        yield Trial(relative(check_pure_diamond_positive_normal_form(b), b.norm() ** 2), {"b": b})


@law_registry.on("diamond", law_id="structured_maps", priority=6, trial_share=0.1)
def structured_maps(algebra, rng, trials, settings):
    """f = Q_sqrt(q) Theta with Theta a reflection fixing q is self-adjoint, and f o f is witnessed diamond-positive."""
    for _ in range(trials):
        q = random_positive(algebra, rng, min_eigenvalue=0.1)
        f, theta = structured_diamond_map(q)
        samples = _samples(algebra, rng, settings)
        ok = is_diamond_positive_witnessed(f @ f, f, samples)
        residual = relative(diamond_structure_residual(f, theta), q.norm())
        yield Trial(max(flag(not ok), residual), {"q": q})
