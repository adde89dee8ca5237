from ejakit.effectus.corners import (
    CornerAlgebra,
    mediate_corner,
    mediate_filter,
    peirce_corner,
    standard_corner,
    standard_filter,
)
from ejakit.effectus.diamond import (
    DiamondRow,
    check_pure_diamond_positive_normal_form,
    default_idempotent_samples,
    diamond,
    diamond_lower,
    diamond_structure_residual,
    diamond_table,
    galois_mismatches,
    is_diamond_positive_witnessed,
    is_diamond_self_adjoint,
    peirce_reflection,
    structured_diamond_map,
)
from ejakit.effectus.polar import PolarClaims, polar_decompose
from ejakit.effectus.purity import (
    PurityWitness,
    adjoint_witness,
    compose_pure,
    corner_witness,
    exchange,
    filter_witness,
    identity_witness,
    iso_witness,
    middle_isometry_residual,
    quadratic_witness,
    witness_from_map,
)
from ejakit.effectus.sequential import (
    EffectusConditions,
    effectus_conditions,
    sequential_product,
    sequential_square_root,
)

__all__ = [
    "CornerAlgebra",
    "peirce_corner",
    "standard_corner",
    "standard_filter",
    "mediate_corner",
    "mediate_filter",
    "PolarClaims",
    "polar_decompose",
    "PurityWitness",
    "exchange",
    "compose_pure",
    "identity_witness",
    "iso_witness",
    "corner_witness",
    "filter_witness",
    "quadratic_witness",
    "witness_from_map",
    "adjoint_witness",
    "middle_isometry_residual",
    "sequential_product",
    "sequential_square_root",
    "EffectusConditions",
    "effectus_conditions",
    "diamond",
    "diamond_lower",
    "DiamondRow",
    "diamond_table",
    "default_idempotent_samples",
    "is_diamond_self_adjoint",
    "is_diamond_positive_witnessed",
    "galois_mismatches",
    "check_pure_diamond_positive_normal_form",
    "peirce_reflection",
    "structured_diamond_map",
    "diamond_structure_residual",
]
