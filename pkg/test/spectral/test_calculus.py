import unittest

import numpy as np
import scipy.linalg

from ejakit.algebra import Element, FactorSpec, benchmark_algebras, make_algebra, random_element, random_positive
from ejakit.exceptions import NotEffectException, NotPositiveException, PreconditionViolatedException
from ejakit.spectral import (
    absolute,
    apply_function,
    ceiling,
    floor_of_effect,
    inverse,
    negative_part,
    positive_part,
    power,
    pseudo_inverse,
    random_idempotent,
    random_rank_deficient_positive,
    sqrt,
)


def diag(*values) -> Element:
    n = len(values)
    algebra = make_algebra([FactorSpec.real_sym(n)])
    return Element(algebra, list(values) + [0.0] * (algebra.dim - n))


class TestFunctionalCalculus(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(33)

    def test_sqrt_of_diagonal(self):
        self.assertTrue(sqrt(diag(4.0, 9.0)).isclose(diag(2.0, 3.0)))

    def test_sqrt_squares_back(self):
        for algebra in benchmark_algebras():
            a = random_positive(algebra, self.rng)
            root = sqrt(a)
            self.assertLess((root * root).distance(a), 1e-8 * (1 + a.norm()), algebra.label)

    def test_sqrt_matches_matrix_square_root(self):
        for spec in (FactorSpec.real_sym(3), FactorSpec.complex_herm(3)):
            algebra = make_algebra([spec])
            factor = algebra.factor(0)
            a = random_positive(algebra, self.rng, min_eigenvalue=0.1)
            expected = scipy.linalg.sqrtm(factor.to_numpy(a.coords))
            np.testing.assert_allclose(factor.to_numpy(sqrt(a).coords), expected, atol=1e-8)

    def test_sqrt_of_idempotent(self):
        for algebra in benchmark_algebras():
            p = random_idempotent(algebra, self.rng)
            self.assertLess(sqrt(p).distance(p), 1e-8)

    def test_sqrt_rejects_negative(self):
        with self.assertRaises(NotPositiveException):
            sqrt(diag(1.0, -1.0))

    def test_pseudo_inverse_gives_ceiling(self):
        for algebra in benchmark_algebras():
            for q in (random_positive(algebra, self.rng), random_rank_deficient_positive(algebra, self.rng)):
                self.assertLess((pseudo_inverse(q) * q).distance(ceiling(q)), 1e-7, algebra.label)

    def test_inverse(self):
        a = diag(2.0, -4.0, 0.5)
        self.assertTrue(inverse(a).isclose(diag(0.5, -0.25, 2.0)))
        with self.assertRaises(PreconditionViolatedException):
            inverse(diag(1.0, 0.0, 2.0))

    def test_power(self):
        for algebra in benchmark_algebras():
            a = random_positive(algebra, self.rng)
            self.assertLess(power(a, 3).distance(a * (a * a)), 1e-8 * (1 + a.norm() ** 3))
            half = power(a, 0.5)
            self.assertLess(half.distance(sqrt(a)), 1e-8 * (1 + a.norm()))

    def test_parts(self):
        for algebra in benchmark_algebras():
            a = random_element(algebra, self.rng)
            plus, minus = positive_part(a), negative_part(a)
            self.assertLess((plus - minus).distance(a), 1e-8 * (1 + a.norm()))
            self.assertLess((plus * minus).norm(), 1e-8 * (1 + a.norm() ** 2))
            self.assertLess(absolute(a).distance(plus + minus), 1e-8 * (1 + a.norm()))

    def test_callable_function(self):
        a = diag(1.0, 2.0)
        self.assertTrue(apply_function(a, lambda value: value + 1.0).isclose(diag(2.0, 3.0)))

    def test_unknown_tag(self):
        with self.assertRaises(ValueError):
            apply_function(diag(1.0, 2.0), "cosh")


class TestCeilingFloor(unittest.TestCase):

    def test_trivial_ceilings(self):
        algebra = make_algebra([FactorSpec.real_sym(3)])
        self.assertTrue(ceiling(algebra.zero()).isclose(algebra.zero()))
        self.assertTrue(ceiling(algebra.unit).isclose(algebra.unit))

    def test_ceiling_of_diagonal(self):
        self.assertTrue(ceiling(diag(0.5, 0.0, 0.3)).isclose(diag(1.0, 0.0, 1.0)))

    def test_floor_of_diagonal(self):
        self.assertTrue(floor_of_effect(diag(1.0, 0.7, 0.0)).isclose(diag(1.0, 0.0, 0.0)))

    def test_floor_needs_effect(self):
        with self.assertRaises(NotEffectException):
            floor_of_effect(diag(1.5, 0.0, 0.0))

    def test_ceiling_needs_positive(self):
        with self.assertRaises(NotPositiveException):
            ceiling(diag(1.0, -0.5, 0.0))
