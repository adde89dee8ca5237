from ejakit.spectral.calculus import (
    FUNCTION_TAGS,
    absolute,
    apply_function,
    ceiling,
    floor_of_effect,
    inverse,
    negative_part,
    positive_part,
    power,
    pseudo_inverse,
    pseudo_inverse_sqrt,
    sqrt,
    zero_threshold,
)
from ejakit.spectral.decomposition import (
    SpectralDecomposition,
    atomic_frame,
    default_cluster_tol,
    refine_atomic,
    spectral_decompose,
)
from ejakit.spectral.lattice import (
    KilledAtoms,
    atoms_killed_real_sym2,
    greatest_idempotent_below,
    idempotent_lattice,
    image_oracle,
    is_diagonal,
    is_real_sym2,
    least_idempotent_above,
    least_idempotent_preserving,
)
from ejakit.spectral.predicates import (
    idempotency_residual,
    idempotent_leq,
    is_atomic,
    is_effect,
    is_idempotent,
    is_orthogonal,
    is_positive,
    leq,
    order_sharpness_witness,
    order_unit_norm,
    require_effect,
    require_idempotent,
    require_positive,
    spectral_bounds,
)
from ejakit.spectral.sampling import random_effect, random_idempotent, random_rank_deficient_positive

__all__ = [
    "SpectralDecomposition",
    "spectral_decompose",
    "refine_atomic",
    "atomic_frame",
    "default_cluster_tol",
    "FUNCTION_TAGS",
    "apply_function",
    "sqrt",
    "pseudo_inverse",
    "pseudo_inverse_sqrt",
    "power",
    "absolute",
    "positive_part",
    "negative_part",
    "inverse",
    "ceiling",
    "floor_of_effect",
    "zero_threshold",
    "spectral_bounds",
    "order_unit_norm",
    "is_positive",
    "is_effect",
    "is_idempotent",
    "is_atomic",
    "leq",
    "idempotency_residual",
    "idempotent_leq",
    "is_orthogonal",
    "require_positive",
    "require_effect",
    "require_idempotent",
    "order_sharpness_witness",
    "idempotent_lattice",
    "is_diagonal",
    "is_real_sym2",
    "least_idempotent_above",
    "greatest_idempotent_below",
    "least_idempotent_preserving",
    "KilledAtoms",
    "atoms_killed_real_sym2",
    "image_oracle",
    "random_effect",
    "random_idempotent",
    "random_rank_deficient_positive",
]
