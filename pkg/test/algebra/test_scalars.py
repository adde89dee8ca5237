import unittest

import numpy as np

from ejakit.algebra import DivisionAlgebra, Scalar, associator, conj
from ejakit.exceptions import DimensionMismatchException, ScalarTagMismatchException


def random_scalar(tag: DivisionAlgebra, rng: np.random.Generator) -> Scalar:
    return Scalar(tag, rng.standard_normal(tag.size))


class TestScalars(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_quaternion_units(self):
        e1, e2, e3 = (Scalar.unit(DivisionAlgebra.H, i) for i in (1, 2, 3))
        self.assertTrue((e1 * e2).isclose(e3))
        self.assertTrue((e2 * e1).isclose(-e3))
        self.assertTrue((e1 * e1).isclose(Scalar.real(DivisionAlgebra.H, -1.0)))

    def test_quaternions_associate(self):
        for _ in range(20):
            x, y, z = (random_scalar(DivisionAlgebra.H, self.rng) for _ in range(3))
            self.assertLess(associator(x, y, z).norm(), 1e-12)

    def test_octonions_do_not_associate(self):
        e1, e2, e4 = (Scalar.unit(DivisionAlgebra.O, i) for i in (1, 2, 4))
        self.assertGreater(associator(e1, e2, e4).norm(), 1.0)
        self.assertFalse(DivisionAlgebra.O.associative)

    def test_octonions_are_alternative(self):
        for _ in range(20):
            x, y = random_scalar(DivisionAlgebra.O, self.rng), random_scalar(DivisionAlgebra.O, self.rng)
            self.assertLess(associator(x, x, y).norm(), 1e-12)
            self.assertLess(associator(y, x, x).norm(), 1e-12)

    def test_octonion_moufang_identities(self):
        for _ in range(20):
            x, y, z = (random_scalar(DivisionAlgebra.O, self.rng) for _ in range(3))
            scale = x.norm() ** 2 * y.norm() * z.norm()
            self.assertLess(((x * y) * (z * x) - x * ((y * z) * x)).norm(), 1e-12 * scale)
            self.assertLess((x * (y * (x * z)) - ((x * y) * x) * z).norm(), 1e-12 * scale)
            self.assertLess((((z * x) * y) * x - z * (x * (y * x))).norm(), 1e-12 * scale)

    def test_norm_is_multiplicative(self):
        for tag in DivisionAlgebra:
            x, y = random_scalar(tag, self.rng), random_scalar(tag, self.rng)
            self.assertAlmostEqual((x * y).norm(), x.norm() * y.norm(), places=12)

    def test_conjugation_reverses_products(self):
        for tag in DivisionAlgebra:
            x, y = random_scalar(tag, self.rng), random_scalar(tag, self.rng)
            self.assertTrue(conj(x * y).isclose(conj(y) * conj(x)))
            self.assertAlmostEqual((x * conj(x)).re(), x.norm() ** 2, places=12)

    def test_mixed_tags_are_rejected(self):
        with self.assertRaises(ScalarTagMismatchException):
            Scalar.unit(DivisionAlgebra.C, 1) * Scalar.unit(DivisionAlgebra.H, 1)

    def test_wrong_length(self):
        with self.assertRaises(DimensionMismatchException):
            Scalar(DivisionAlgebra.C, [1.0, 2.0, 3.0])
