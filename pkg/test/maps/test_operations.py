import unittest

import numpy as np

from ejakit.algebra import Element, FactorSpec, LinOp, benchmark_algebras, diagonal_algebra, make_algebra, \
    random_element, random_invertible
from ejakit.effectus import standard_corner, standard_filter
from ejakit.maps import (
    adjoint,
    check_jordan_homomorphism,
    constructed,
    factor_through_image_residual,
    floor_residual,
    identity_map,
    image,
    intertwining_residual,
    is_faithful,
    is_unital_order_iso,
    quadratic_map,
    range_support,
)
from ejakit.spectral import ceiling, idempotent_lattice, image_oracle, random_effect, random_idempotent, \
    random_rank_deficient_positive


def spin_rotation(angle: float) -> LinOp:
    spin = make_algebra([FactorSpec.spin(2)])
    c, s = np.cos(angle), np.sin(angle)
    return LinOp(spin, spin, [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


class TestAdjointAndImage(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(77)

    def test_quadratic_maps_are_self_adjoint(self):
        for algebra in benchmark_algebras():
            f = quadratic_map(random_element(algebra, self.rng))
            self.assertLess(adjoint(f).distance(f), 1e-10)
            self.assertLess(adjoint(adjoint(f)).distance(f), 1e-15)

    def test_corner_adjoint_is_filter(self):
        for algebra in benchmark_algebras():
            p = random_idempotent(algebra, self.rng)
            corner, filter_ = standard_corner(algebra, p), standard_filter(algebra, p)
            self.assertLess(adjoint(corner).op.distance(filter_.op), 1e-8, algebra.label)

    def test_images(self):
        for algebra in benchmark_algebras():
            self.assertTrue(image(identity_map(algebra)).isclose(algebra.unit, 1e-10))
            p = random_idempotent(algebra, self.rng)
            self.assertLess(image(quadratic_map(p), scale=1.0).distance(p), 1e-8)
            q = random_rank_deficient_positive(algebra, self.rng)
            self.assertLess(image(quadratic_map(q)).distance(ceiling(q)), 1e-8)

    def test_range_support(self):
        for algebra in benchmark_algebras():
            p = random_idempotent(algebra, self.rng)
            q = quadratic_map(p)(random_effect(algebra, self.rng))
            filter_ = standard_filter(algebra, q)
            self.assertLess(range_support(filter_).distance(ceiling(q, scale=1.0)), 1e-8, algebra.label)
            self.assertLess(range_support(quadratic_map(random_invertible(algebra, self.rng))).distance(algebra.unit),
                            1e-10, algebra.label)
            self.assertEqual(range_support(quadratic_map(p), rank=0).norm(), 0.0)

    def test_image_is_least_preserving_idempotent_on_r3(self):
        r3 = diagonal_algebra(3)
        for _ in range(10):
            q = Element(r3, self.rng.uniform(0.5, 2.0, 3) * (self.rng.random(3) < 0.5))
            f = quadratic_map(q)
            self.assertTrue(image(f, scale=1.0).isclose(image_oracle(f.op)))
            self.assertTrue(image(f, scale=1.0).isclose(ceiling(q)))
            for p in idempotent_lattice(r3):
                if f(p).isclose(f(r3.unit)):
                    self.assertTrue(np.all(image(f, scale=1.0).coords <= p.coords + 1e-12))

    def test_faithfulness(self):
        for algebra in benchmark_algebras():
            self.assertTrue(is_faithful(identity_map(algebra)))
            self.assertFalse(is_faithful(quadratic_map(random_idempotent(algebra, self.rng)), scale=1.0))
            self.assertTrue(is_faithful(quadratic_map(random_invertible(algebra, self.rng))))


class TestIsomorphisms(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(88)

    def test_identity(self):
        for algebra in benchmark_algebras():
            f = identity_map(algebra)
            self.assertTrue(is_unital_order_iso(f, trials=10))
            self.assertLessEqual(check_jordan_homomorphism(f, trials=10), 1e-12)

    def test_spin_rotation(self):
        theta = constructed(spin_rotation(0.7), "iso")
        self.assertTrue(is_unital_order_iso(theta, trials=20))
        self.assertLessEqual(check_jordan_homomorphism(theta, trials=20), 1e-9)
        a = random_element(theta.domain, self.rng)
        self.assertLess(intertwining_residual(theta, a), 1e-9)

    def test_projections_are_not_isomorphisms(self):
        for algebra in benchmark_algebras():
            self.assertFalse(is_unital_order_iso(quadratic_map(random_idempotent(algebra, self.rng)), trials=5))

    def test_floor_lemma(self):
        for algebra in benchmark_algebras():
            e = random_idempotent(algebra, self.rng)
            q = e + quadratic_map(algebra.unit - e)(random_effect(algebra, self.rng))
            g = quadratic_map(random_element(algebra, self.rng)) @ quadratic_map(e)
            self.assertLess(g(q).distance(g(algebra.unit)), 1e-8)
            self.assertLess(floor_residual(g, q), 1e-8 * max(1.0, g.op.norm()))
            self.assertLess(factor_through_image_residual(g, e), 1e-8 * max(1.0, g.op.norm()))
