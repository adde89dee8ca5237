"""Sequential products and closure of pure maps under adjoints."""
from ejakit.algebra import quadratic_rep
from ejakit.effectus import adjoint_witness, effectus_conditions, exchange, quadratic_witness
from ejakit.laws.registry import Trial, law_registry
from ejakit.laws.suites.common import relative
from ejakit.spectral import random_effect, random_idempotent


@law_registry.on("dagger_effectus", law_id="effectus_conditions", priority=10)
def effectus_conditions_law(algebra, rng, trials, settings):
    """Unique square roots, the fundamental equality for & and idempotent-preserving filters."""
    for _ in range(trials):
        p, q = random_effect(algebra, rng), random_effect(algebra, rng)
        e = random_idempotent(algebra, rng)
        conditions = effectus_conditions(p, q, e)
        yield Trial(conditions.max_residual, {"p": p, "q": q, "e": e, **conditions.model_dump()})


@law_registry.on("dagger_effectus", law_id="adjoint_closure", priority=9, trial_share=0.25)
def adjoint_closure(algebra, rng, trials, settings):
    """The adjoint of a pure map has a normal form of its own."""
    for i in range(trials):
        if i % 2 == 0:
            p = random_idempotent(algebra, rng)
            w = quadratic_witness(quadratic_rep(p)(random_effect(algebra, rng)))
        else:
            w = exchange(random_idempotent(algebra, rng), random_effect(algebra, rng))
        dual = adjoint_witness(w)
        yield Trial(relative(dual.residual(), dual.composed.op.norm()), {"map": w.composed})
