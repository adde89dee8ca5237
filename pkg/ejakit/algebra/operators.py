import numpy as np

from ejakit.algebra.element import Element
from ejakit.algebra.linop import LinOp


def mult_operator(a: Element) -> LinOp:
    """L_a, the matrix of b -> a * b."""
    algebra = a.algebra
    columns = algebra.product_coords(a.coords, np.eye(algebra.dim))
    return LinOp(algebra, algebra, columns.T)


def quadratic_rep(a: Element) -> LinOp:
    """Q_a = 2 L_a^2 - L_{a^2}."""
    left = mult_operator(a).matrix
    left_square = mult_operator(a * a).matrix
    return LinOp(a.algebra, a.algebra, 2.0 * left @ left - left_square)


def commutator(f: LinOp, g: LinOp) -> LinOp:
    return f @ g - g @ f
