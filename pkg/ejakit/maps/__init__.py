from ejakit.maps.operations import (
    adjoint,
    check_jordan_homomorphism,
    factor_through_image_residual,
    floor_residual,
    image,
    intertwining_residual,
    is_faithful,
    is_unital_order_iso,
    range_support,
)
from ejakit.maps.positive_map import (
    Constructed,
    PositiveMap,
    PositivityCertificate,
    Sampled,
    compose,
    constructed,
    from_matrix,
    identity_map,
    nonnegative_sum,
    positivity_samples,
    quadratic_map,
    sample_positivity,
    scale,
)

__all__ = [
    "Constructed",
    "Sampled",
    "PositivityCertificate",
    "PositiveMap",
    "constructed",
    "identity_map",
    "quadratic_map",
    "compose",
    "scale",
    "nonnegative_sum",
    "positivity_samples",
    "sample_positivity",
    "from_matrix",
    "adjoint",
    "image",
    "range_support",
    "is_faithful",
    "is_unital_order_iso",
    "check_jordan_homomorphism",
    "intertwining_residual",
    "floor_residual",
    "factor_through_image_residual",
]
