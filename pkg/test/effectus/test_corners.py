import unittest

import numpy as np

from ejakit.algebra import Element, FactorSpec, LinOp, benchmark_algebras, make_algebra, quadratic_rep
from ejakit.effectus import mediate_corner, mediate_filter, peirce_corner, standard_corner, standard_filter
from ejakit.exceptions import NotIdempotentException, PreconditionViolatedException
from ejakit.maps import identity_map, quadratic_map
from ejakit.spectral import apply_function, ceiling, random_effect, random_idempotent


class TestPeirceCorner(unittest.TestCase):

    def setUp(self):
        self.sym3 = make_algebra([FactorSpec.real_sym(3)])

    def test_corner_dimensions(self):
        self.assertEqual(peirce_corner(self.sym3, self.sym3.unit).dim, 6)
        self.assertEqual(peirce_corner(self.sym3, Element(self.sym3, [1, 1, 0, 0, 0, 0])).dim, 3)
        self.assertEqual(peirce_corner(self.sym3, Element(self.sym3, [0, 0, 1, 0, 0, 0])).dim, 1)

    def test_corner_is_a_jordan_algebra_with_unit_p(self):
        p = Element(self.sym3, [1, 1, 0, 0, 0, 0])
        corner = peirce_corner(self.sym3, p)
        self.assertTrue(corner.embedding(corner.unit).isclose(p))
        self.assertAlmostEqual(corner.unit.trace(), 2.0, places=12)
        x, y = Element(corner, [1.0, 2.0, 3.0]), Element(corner, [-1.0, 0.5, 0.25])
        self.assertTrue(corner.embedding(x * y).isclose(corner.embedding(x) * corner.embedding(y)))

    def test_non_idempotent_is_rejected(self):
        with self.assertRaises(NotIdempotentException):
            peirce_corner(self.sym3, 0.5 * self.sym3.unit)


class TestCornersAndFilters(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(2024)

    def test_unit_gives_identity(self):
        for algebra in benchmark_algebras():
            self.assertLess(standard_corner(algebra, algebra.unit).op.distance(LinOp.identity(algebra)), 1e-12)
            self.assertLess(standard_filter(algebra, algebra.unit).op.distance(LinOp.identity(algebra)), 1e-12)

    def test_corner_fixes_its_elements(self):
        for algebra in benchmark_algebras():
            p = random_idempotent(algebra, self.rng)
            corner = standard_corner(algebra, p)
            a = quadratic_rep(p)(random_effect(algebra, self.rng))
            self.assertTrue(corner.codomain.embedding(corner(a)).isclose(a, 1e-8), algebra.label)
            self.assertTrue(corner.unital)

    def test_corner_of_non_idempotent_effect(self):
        sym2 = make_algebra([FactorSpec.real_sym(2)])
        corner = standard_corner(sym2, Element(sym2, [1.0, 0.5, 0.0]))
        self.assertEqual(corner.codomain.dim, 1)
        a = Element(sym2, [3.0, 7.0, 2.0])
        self.assertAlmostEqual(abs(corner(a).coords[0]), 3.0, places=10)

    def test_filter_of_idempotent_is_inclusion(self):
        for algebra in benchmark_algebras():
            p = random_idempotent(algebra, self.rng)
            inclusion = peirce_corner(algebra, p).embedding
            self.assertLess(standard_filter(algebra, p).op.distance(inclusion), 1e-8, algebra.label)

    def test_filter_after_corner_is_quadratic_map(self):
        for algebra in benchmark_algebras():
            q = quadratic_rep(random_idempotent(algebra, self.rng))(random_effect(algebra, self.rng))
            xi = standard_filter(algebra, q)
            lhs = xi @ standard_corner(algebra, ceiling(q, scale=1.0))
            self.assertLess(lhs.distance(quadratic_rep(apply_function(q, "sqrt"))), 1e-8, algebra.label)
            self.assertTrue(xi(xi.domain.unit).isclose(q, 1e-8))


class TestMediators(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(99)

    def test_corner_mediates_itself(self):
        for algebra in benchmark_algebras():
            q = random_idempotent(algebra, self.rng)
            pi = standard_corner(algebra, q)
            mediator = mediate_corner(pi, q)
            self.assertLess(mediator.op.distance(LinOp.identity(mediator.domain)), 1e-8, algebra.label)

    def test_filter_mediates_itself(self):
        for algebra in benchmark_algebras():
            q = random_effect(algebra, self.rng)
            xi = standard_filter(algebra, q)
            mediator = mediate_filter(xi, q)
            self.assertLess(mediator.op.distance(LinOp.identity(mediator.domain)), 1e-7, algebra.label)

    def test_corner_mediator_recomposes(self):
        for algebra in benchmark_algebras():
            p = random_idempotent(algebra, self.rng)
            g = quadratic_map(random_effect(algebra, self.rng)) @ quadratic_map(p)
            mediator = mediate_corner(g, p)
            recomposed = mediator @ standard_corner(algebra, p)
            self.assertLess(recomposed.distance(g), 1e-8 * max(1.0, g.op.norm()), algebra.label)

    def test_filter_mediator_recomposes(self):
        for algebra in benchmark_algebras():
            q = random_effect(algebra, self.rng)
            f = standard_filter(algebra, q) @ quadratic_map(random_effect(algebra, self.rng))
            mediator = mediate_filter(f, q)
            self.assertLess((standard_filter(algebra, q) @ mediator).distance(f), 1e-7, algebra.label)

    def test_preconditions(self):
        algebra = make_algebra([FactorSpec.real_sym(3)])
        q = Element(algebra, [1.0, 0.5, 0.25, 0, 0, 0])
        with self.assertRaises(PreconditionViolatedException) as ctx:
            mediate_corner(identity_map(algebra), q)
        self.assertIn("g(q) = g(1)", str(ctx.exception))
        with self.assertRaises(PreconditionViolatedException):
            mediate_filter(identity_map(algebra), q)
