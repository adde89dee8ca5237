import unittest

import numpy as np

from ejakit.algebra import Element, FactorSpec, benchmark_algebras, make_algebra, quadratic_rep, random_element
from ejakit.spectral import (
    SpectralDecomposition,
    atomic_frame,
    is_atomic,
    refine_atomic,
    spectral_decompose,
)


def diag3(*values) -> Element:
    return Element(make_algebra([FactorSpec.real_sym(3)]), list(values) + [0.0, 0.0, 0.0])


class TestSpectralDecompose(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(21)

    def test_repeated_eigenvalue_merges(self):
        d = spectral_decompose(diag3(3.0, 3.0, 5.0))
        self.assertEqual(len(d), 2)
        np.testing.assert_allclose(d.eigenvalues, [3.0, 5.0])
        np.testing.assert_allclose(d.idempotents[0].coords, diag3(1.0, 1.0, 0.0).coords, atol=1e-12)
        np.testing.assert_allclose(d.idempotents[1].coords, diag3(0.0, 0.0, 1.0).coords, atol=1e-12)

    def test_spin_closed_form(self):
        spin = make_algebra([FactorSpec.spin(3)])
        x = Element(spin, [3.0, 0.0, 4.0, 1.0])
        d = spectral_decompose(x)
        np.testing.assert_allclose(d.eigenvalues, [-4.0, 6.0])
        u = np.array([0.6, 0.0, 0.8])
        np.testing.assert_allclose(d.idempotents[1].coords, 0.5 * np.append(u, 1.0), atol=1e-12)
        np.testing.assert_allclose(d.idempotents[0].coords, 0.5 * np.append(-u, 1.0), atol=1e-12)

    def test_idempotent_input(self):
        p = diag3(1.0, 0.0, 1.0)
        pairs = {round(value, 12): q for value, q in spectral_decompose(p).pairs}
        self.assertEqual(set(pairs), {0.0, 1.0})
        self.assertTrue(pairs[1.0].isclose(p))

    def test_quaternion_eigenvalues(self):
        quat = make_algebra([FactorSpec.quat_herm(2)])
        x = random_element(quat, self.rng)
        a, b = x.coords[:2]
        q = np.linalg.norm(x.coords[2:]) / np.sqrt(2.0)
        radius = np.hypot((a - b) / 2.0, q)
        np.testing.assert_allclose(spectral_decompose(x).eigenvalues, [(a + b) / 2 - radius, (a + b) / 2 + radius],
                                   atol=1e-10)

    def test_near_degenerate_eigenvalues_stay_apart(self):
        gap = 1e-6
        c, s = np.cos(0.4), np.sin(0.4)
        for spec in (FactorSpec.quat_herm(3), FactorSpec.albert()):
            algebra = make_algebra([spec])
            k = spec.tag.size
            x = np.zeros(algebra.dim)
            x[:3] = [0.0, 1.0, 1.0 + gap]
            x = Element(algebra, x)
            for offset, diagonal in ((3 + 1, [c * c, s * s, 0.0]), (3 + 2 * k + 1, [0.0, c * c, s * s])):
                atom = np.zeros(algebra.dim)
                atom[:3] = diagonal
                atom[offset] = np.sqrt(2.0) * c * s
                x = quadratic_rep(algebra.unit - 2.0 * Element(algebra, atom))(x)
            d = spectral_decompose(x)
            self.assertEqual(len(d), 3, spec.label)
            np.testing.assert_allclose(d.eigenvalues, [0.0, 1.0, 1.0 + gap], atol=1e-10)
            residuals = d.residuals(x)
            self.assertLess(max(residuals.values()), 1e-8, spec.label)

    def test_invariants_on_every_benchmark(self):
        for algebra in benchmark_algebras():
            for _ in range(5):
                a = random_element(algebra, self.rng)
                d = spectral_decompose(a)
                for name, value in d.residuals(a).items():
                    self.assertLess(value, 1e-8 * (1 + a.norm()), f"{algebra.label} {name}")
                self.assertTrue(np.all(np.diff(d.eigenvalues) > 0))

    def test_trace_is_sum_of_spectrum(self):
        for algebra in benchmark_algebras():
            a = random_element(algebra, self.rng)
            d = refine_atomic(spectral_decompose(a), 3)
            self.assertAlmostEqual(a.trace(), float(np.sum(d.eigenvalues)), places=8, msg=algebra.label)


class TestRefineAtomic(unittest.TestCase):

    def test_splits_eigenplane(self):
        d = refine_atomic(spectral_decompose(diag3(3.0, 3.0, 5.0)), rng_seed=1)
        self.assertTrue(d.atomic)
        self.assertEqual(len(d), 3)
        np.testing.assert_allclose(sorted(d.eigenvalues), [3.0, 3.0, 5.0])
        self.assertTrue(all(is_atomic(p) for p in d.idempotents))
        total = sum(d.idempotents[1:], d.idempotents[0])
        self.assertTrue(total.isclose(diag3(1.0, 1.0, 1.0)))

    def test_atomic_input_unchanged(self):
        d = refine_atomic(spectral_decompose(diag3(3.0, 3.0, 5.0)), rng_seed=1)
        self.assertIs(refine_atomic(d, rng_seed=2), d)

    def test_spin_unit_has_two_atoms(self):
        spin = make_algebra([FactorSpec.spin(4)])
        unit = SpectralDecomposition(spin, ((1.0, spin.unit),))
        atoms = refine_atomic(unit, rng_seed=4).idempotents
        self.assertEqual(len(atoms), 2)
        for p in atoms:
            self.assertAlmostEqual(p.coords[-1], 0.5)
            self.assertAlmostEqual(np.linalg.norm(p.coords[:-1]), 0.5)

    def test_frames_have_rank_many_atoms(self):
        rng = np.random.default_rng(2)
        for algebra in benchmark_algebras():
            frame = atomic_frame(algebra, rng)
            self.assertEqual(len(frame), algebra.rank, algebra.label)
            self.assertTrue(sum(frame[1:], frame[0]).isclose(algebra.unit, 1e-8))
            for i, p in enumerate(frame):
                self.assertTrue(is_atomic(p))
                for q in frame[i + 1:]:
                    self.assertLess((p * q).norm(), 1e-8)
