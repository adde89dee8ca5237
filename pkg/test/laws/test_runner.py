import json
import math
import unittest

from ejakit.algebra import FactorSpec, make_algebra
from ejakit.exceptions import DescriptorException, NotPositiveException
from ejakit.laws import LawRegistry, SUITES, Trial, run_suite


class TestRunnerMechanics(unittest.TestCase):

    def setUp(self):
        self.algebra = make_algebra([FactorSpec.spin(2)])
        self.registry = LawRegistry()

        @self.registry.on("core", law_id="random", priority=2)
        def random_law(algebra, rng, trials, settings):
            for _ in range(trials):
                value = float(rng.random())
                yield Trial(value * 1e-9, {"value": value, "unit": algebra.unit})

        @self.registry.on("core", law_id="loose", factor=1e6)
        def loose_law(algebra, rng, trials, settings):
            yield Trial(1e-3)

        @self.registry.on("polar", law_id="raises")
        def raising_law(algebra, rng, trials, settings):
            yield Trial(0.0)
            raise NotPositiveException(-1.0)

        @self.registry.on("spectral", law_id="nan")
        def nan_law(algebra, rng, trials, settings):
            yield Trial(math.nan, {"coords": [math.nan]})

    def test_deterministic_for_a_seed(self):
        first = run_suite(self.algebra, "core", seed=3, trials=5, registry=self.registry)
        second = run_suite(self.algebra, "core", seed=3, trials=5, registry=self.registry)
        other = run_suite(self.algebra, "core", seed=4, trials=5, registry=self.registry)
        self.assertEqual(first.to_json(), second.to_json())
        self.assertNotEqual(first.to_json(), other.to_json())

    def test_independent_of_suite_selection_and_workers(self):
        alone = run_suite(self.algebra, "core", seed=11, trials=8, registry=self.registry)
        together = run_suite(self.algebra, "all", seed=11, trials=8, workers=4, registry=self.registry)
        core = {r.law_id: r for r in together.per_law if r.suite == "core"}
        for r in alone.per_law:
            self.assertEqual(r, core[r.law_id])

    def test_factor_scales_tolerance(self):
        report = run_suite(self.algebra, "core", seed=0, trials=2, tol=1e-7, registry=self.registry)
        self.assertTrue(report.passed)
        loose = next(r for r in report.per_law if r.law_id == "loose")
        self.assertAlmostEqual(loose.tolerance, 0.1)
        self.assertIsNone(loose.witness)

    def test_failure_carries_serialized_witness(self):
        report = run_suite(self.algebra, "core", seed=0, trials=3, tol=1e-20, registry=self.registry)
        self.assertFalse(report.passed)
        failed = next(r for r in report.per_law if r.law_id == "random")
        self.assertEqual(failed.witness["unit"]["coords"], [0.0, 0.0, 1.0])
        self.assertEqual(failed.witness["unit"]["algebra"], {"factors": [{"kind": "spin", "n": None, "d": 2}]})

    def test_domain_errors_fail_the_law(self):
        report = run_suite(self.algebra, "polar", seed=0, trials=2, registry=self.registry)
        self.assertFalse(report.passed)
        self.assertEqual(report.per_law[0].max_residual, math.inf)
        self.assertEqual(report.per_law[0].witness["error"], "NotPositiveException")
        self.assertIsNone(json.loads(report.to_json())["max_residual"])

    def test_nan_counts_as_failure(self):
        report = run_suite(self.algebra, "spectral", seed=0, trials=1, registry=self.registry)
        self.assertFalse(report.passed)
        self.assertEqual(report.max_residual, math.inf)

    def test_unknown_suite(self):
        with self.assertRaises(DescriptorException):
            run_suite(self.algebra, "bogus", seed=0, trials=1, registry=self.registry)


class TestBuiltinLaws(unittest.TestCase):

    def test_every_suite_passes_on_small_algebras(self):
        for specs in ([FactorSpec.real_sym(2)], [FactorSpec.spin(4)], [FactorSpec.real_sym(1)] * 3,
                      [FactorSpec.complex_herm(2), FactorSpec.spin(2)]):
            algebra = make_algebra(specs)
            for suite in SUITES:
                report = run_suite(algebra, suite, seed=7, trials=4)
                failed = [r.law_id for r in report.per_law if not r.passed]
                self.assertTrue(report.passed, f"{algebra.label} {suite}: {failed}")

    def test_polar_on_albert(self):
        albert = make_algebra([FactorSpec.albert()])
        report = run_suite(albert, "polar", seed=7, trials=3, workers=2)
        self.assertTrue(report.passed)
        self.assertEqual(report.suite_name, "polar")
        self.assertEqual(report.seed, 7)

    def test_tiny_tolerance_fails_with_witness(self):
        algebra = make_algebra([FactorSpec.quat_herm(2)])
        report = run_suite(algebra, "core", seed=1, trials=3, tol=1e-20)
        self.assertFalse(report.passed)
        failed = [r for r in report.per_law if not r.passed]
        self.assertTrue(failed)
        self.assertTrue(any(r.witness for r in failed))
