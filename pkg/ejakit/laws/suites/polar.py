"""Polar decomposition of Q_q Q_p."""
from ejakit.algebra import random_positive
from ejakit.effectus import polar_decompose
from ejakit.laws.registry import Trial, law_registry
from ejakit.spectral import order_unit_norm, random_rank_deficient_positive


def _normalized(a):
    return a / max(order_unit_norm(a), 1e-300)


@law_registry.on("polar", law_id="polar_claims", priority=10)
def polar_claims(algebra, rng, trials, settings):
    for _ in range(trials):
        p = _normalized(random_positive(algebra, rng))
        q = _normalized(random_positive(algebra, rng))
        _, claims = polar_decompose(p, q)
        yield Trial(claims.max_residual, {"p": p, "q": q, **claims.model_dump()})


@law_registry.on("polar", law_id="polar_rank_deficient", priority=9, trial_share=0.25)
def polar_rank_deficient(algebra, rng, trials, settings):
    """One of p and q is singular."""
    for i in range(trials):
        singular = _normalized(random_rank_deficient_positive(algebra, rng))
        regular = _normalized(random_positive(algebra, rng))
        p, q = (singular, regular) if i % 2 == 0 else (regular, singular)
        _, claims = polar_decompose(p, q)
        yield Trial(claims.max_residual, {"p": p, "q": q, **claims.model_dump()})
