"""Rewriting a corner after a filter, and closure of pure maps under composition."""
from ejakit.algebra import quadratic_rep
from ejakit.effectus import (
    compose_pure,
    exchange,
    iso_witness,
    middle_isometry_residual,
    peirce_reflection,
    quadratic_witness,
)
from ejakit.laws.registry import Trial, law_registry
from ejakit.laws.suites.common import flag, relative
from ejakit.maps import is_unital_order_iso
from ejakit.spectral import random_effect, random_idempotent


def _random_witness(algebra, rng):
    choice = int(rng.integers(3))
    if choice == 0:
        return quadratic_witness(random_effect(algebra, rng))
    if choice == 1:
        p = random_idempotent(algebra, rng)
        return quadratic_witness(quadratic_rep(p)(random_effect(algebra, rng)))
    return iso_witness(peirce_reflection(random_idempotent(algebra, rng)))


@law_registry.on("exchange", law_id="exchange_recomposition", priority=10)
def exchange_recomposition(algebra, rng, trials, settings):
    """pi_p o xi_q = xi_{p&q} o Theta o pi_ceil(q&p)."""
    for _ in range(trials):
        p, q = random_idempotent(algebra, rng), random_effect(algebra, rng)
        w = exchange(p, q)
        yield Trial(relative(w.residual(), w.composed.op.norm()), {"p": p, "q": q})


@law_registry.on("exchange", law_id="exchange_middle_iso", priority=9, trial_share=0.25)
def exchange_middle_iso(algebra, rng, trials, settings):
    """The middle map is a unital order isomorphism and an isometry."""
    for _ in range(trials):
        p, q = random_idempotent(algebra, rng), random_effect(algebra, rng)
        w = exchange(p, q)
        iso = is_unital_order_iso(w.middle_iso, settings.sampling.iso_trials, rng)
        yield Trial(max(flag(not iso), middle_isometry_residual(w)), {"p": p, "q": q})


@law_registry.on("exchange", law_id="compose_pure", priority=8, trial_share=0.5)
def compose_pure_law(algebra, rng, trials, settings):
    for _ in range(trials):
        w1, w2 = _random_witness(algebra, rng), _random_witness(algebra, rng)
        w = compose_pure(w1, w2)
        yield Trial(relative(w.residual(), w.composed.op.norm()),
                    {"first": w1.composed, "second": w2.composed})
