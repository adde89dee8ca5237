from ejakit.algebra.algebra import (
    Algebra,
    benchmark_algebras,
    diagonal_algebra,
    inner,
    jordan_product,
    make_algebra,
    trace,
)
from ejakit.algebra.element import Element
from ejakit.algebra.factors import FactorSpec, cluster_spectrum, make_factor
from ejakit.algebra.jordan import JordanAlgebra, transition
from ejakit.algebra.linop import LinOp, operator_norm
from ejakit.algebra.operators import commutator, mult_operator, quadratic_rep
from ejakit.algebra.sampling import random_element, random_invertible, random_positive
from ejakit.algebra.scalars import (
    DivisionAlgebra,
    Scalar,
    associator,
    cayley_dickson_multiply,
    conj,
    re,
)

__all__ = [
    "DivisionAlgebra",
    "Scalar",
    "cayley_dickson_multiply",
    "conj",
    "re",
    "associator",
    "FactorSpec",
    "make_factor",
    "cluster_spectrum",
    "JordanAlgebra",
    "transition",
    "Algebra",
    "make_algebra",
    "diagonal_algebra",
    "benchmark_algebras",
    "jordan_product",
    "inner",
    "trace",
    "Element",
    "LinOp",
    "operator_norm",
    "mult_operator",
    "quadratic_rep",
    "commutator",
    "random_element",
    "random_positive",
    "random_invertible",
]
