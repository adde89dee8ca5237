import unittest

import numpy as np
from scipy.linalg import polar

from ejakit.algebra import Element, FactorSpec, LinOp, benchmark_algebras, diagonal_algebra, make_algebra, \
    quadratic_rep, random_positive
from ejakit.effectus import polar_decompose
from ejakit.exceptions import NotPositiveException
from ejakit.spectral import ceiling, random_rank_deficient_positive


class TestPolarDecomposition(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(31)

    def test_units(self):
        for algebra in benchmark_algebras():
            phi, claims = polar_decompose(algebra.unit, algebra.unit)
            self.assertLess(phi.distance(LinOp.identity(algebra)), 1e-12)
            self.assertLess(claims.max_residual, 1e-12)

    def test_commuting_diagonal(self):
        r3 = diagonal_algebra(3)
        p, q = Element(r3, [2.0, 0.0, 1.0]), Element(r3, [0.5, 3.0, 0.0])
        phi, claims = polar_decompose(p, q)
        self.assertLess(phi.distance(quadratic_rep(ceiling(p * q))), 1e-12)
        self.assertLess(claims.max_residual, 1e-10)

    def test_quaternionic_claims(self):
        quat = make_algebra([FactorSpec.quat_herm(2)])
        for _ in range(10):
            _, claims = polar_decompose(random_positive(quat, self.rng), random_positive(quat, self.rng))
            self.assertLess(claims.max_residual, 1e-7)

    def test_rank_deficient_claims(self):
        for algebra in benchmark_algebras():
            p = random_rank_deficient_positive(algebra, self.rng)
            q = random_rank_deficient_positive(algebra, self.rng)
            _, claims = polar_decompose(p, q)
            self.assertLess(claims.max_residual, 1e-7, algebra.label)

    def test_small_spectral_values_are_kept(self):
        quat = make_algebra([FactorSpec.quat_herm(2)])
        p = Element(quat, [1.0, 1e-3, 0.0, 0.0, 0.0, 0.0])
        q = Element(quat, [3e-5, 1.0, 0.0, 0.0, 0.0, 0.0])
        phi, claims = polar_decompose(p, q)
        self.assertLess(phi.distance(LinOp.identity(quat)), 1e-8)
        self.assertLess(claims.max_residual, 1e-7)

    def test_orthogonal_idempotents(self):
        r2 = diagonal_algebra(2)
        phi, claims = polar_decompose(Element(r2, [1.0, 0.0]), Element(r2, [0.0, 1.0]))
        self.assertLess(np.abs(phi.matrix).max(), 1e-12)
        self.assertLess(claims.max_residual, 1e-12)

    def test_matches_matrix_polar_factor(self):
        sym3 = make_algebra([FactorSpec.real_sym(3)])
        p = random_positive(sym3, self.rng, min_eigenvalue=0.5)
        q = random_positive(sym3, self.rng, min_eigenvalue=0.5)
        phi, _ = polar_decompose(p, q)
        unitary, _ = polar((quadratic_rep(q) @ quadratic_rep(p)).matrix, side="right")
        self.assertTrue(np.allclose(phi.matrix, unitary, atol=1e-8))

    def test_negative_input(self):
        sym3 = make_algebra([FactorSpec.real_sym(3)])
        with self.assertRaises(NotPositiveException):
            polar_decompose(-sym3.unit, sym3.unit)
