import unittest

import numpy as np

from ejakit.algebra import Element, benchmark_algebras, diagonal_algebra
from ejakit.effectus import effectus_conditions, sequential_product, sequential_square_root
from ejakit.exceptions import NotEffectException
from ejakit.spectral import apply_function, random_effect, random_idempotent


class TestSequentialProduct(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(5)

    def test_unit_laws(self):
        for algebra in benchmark_algebras():
            a, b = random_effect(algebra, self.rng), random_effect(algebra, self.rng)
            self.assertTrue(sequential_product(algebra.unit, b).isclose(b, 1e-10))
            self.assertTrue(sequential_product(a, algebra.unit).isclose(a, 1e-10))

    def test_commuting_product_is_pointwise(self):
        r2 = diagonal_algebra(2)
        result = sequential_product(Element(r2, [0.25, 0.5]), Element(r2, [0.5, 0.8]))
        self.assertTrue(np.allclose(result.coords, [0.125, 0.4]))

    def test_square_root(self):
        for algebra in benchmark_algebras():
            p = random_effect(algebra, self.rng)
            root = sequential_square_root(p)
            self.assertTrue(sequential_product(root, root).isclose(p, 1e-10))
            self.assertLess(root.distance(apply_function(p, "sqrt")), 1e-8, algebra.label)

    def test_square_root_of_singular_effect(self):
        r2 = diagonal_algebra(2)
        root = sequential_square_root(Element(r2, [0.25, 0.0]))
        self.assertTrue(np.allclose(root.coords, [0.5, 0.0], atol=1e-6))

    def test_square_root_of_idempotent(self):
        for algebra in benchmark_algebras():
            e = random_idempotent(algebra, self.rng)
            self.assertLess(sequential_square_root(e).distance(e), 1e-6, algebra.label)

    def test_rejects_non_effects(self):
        r2 = diagonal_algebra(2)
        with self.assertRaises(NotEffectException):
            sequential_product(Element(r2, [2.0, 0.5]), r2.unit)

    def test_effectus_conditions(self):
        for algebra in benchmark_algebras():
            conditions = effectus_conditions(random_effect(algebra, self.rng), random_effect(algebra, self.rng),
                                             random_idempotent(algebra, self.rng))
            self.assertLess(conditions.max_residual, 1e-7, algebra.label)
