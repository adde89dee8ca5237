import unittest

from ejakit.exceptions import DescriptorException
from ejakit.laws import ALL, SUITES, Law, LawRegistry, Trial, law_registry


def constant(value):
    def fn(algebra, rng, trials, settings):
        for _ in range(trials):
            yield Trial(value)

    return fn


class TestLawRegistry(unittest.TestCase):

    def setUp(self):
        self.registry = LawRegistry()

    def test_priority_ordering(self):
        self.registry.on("core", law_id="low", priority=1)(constant(0.0))
        self.registry.on("core", law_id="high", priority=5)(constant(0.0))
        self.registry.on("core", law_id="middle", priority=3)(constant(0.0))
        self.assertEqual([law.law_id for law in self.registry.laws_for("core")], ["high", "middle", "low"])

    def test_decorator_returns_function(self):
        fn = constant(1.0)
        self.assertIs(self.registry.on("polar", law_id="x")(fn), fn)

    def test_unknown_suite(self):
        with self.assertRaises(DescriptorException):
            self.registry.on("nonsense", law_id="x")
        with self.assertRaises(DescriptorException):
            self.registry.laws_for("nonsense")

    def test_all_follows_suite_order(self):
        self.registry.on("diamond", law_id="d")(constant(0.0))
        self.registry.on("core", law_id="c")(constant(0.0))
        self.assertEqual([law.suite for law in self.registry.laws_for(ALL)], ["core", "diamond"])
        self.assertEqual(self.registry.laws_for("spectral"), [])

    def test_unregister(self):
        self.registry.on("core", law_id="gone")(constant(0.0))
        self.registry.unregister("core", "gone")
        self.registry.unregister("polar", "never")
        self.assertEqual(self.registry.laws_for("core"), [])

    def test_trial_share(self):
        law = Law("core", "x", constant(0.0), trial_share=0.2)
        self.assertEqual(law.trials_for(50), 10)
        self.assertEqual(law.trials_for(1), 1)


class TestBuiltinSuites(unittest.TestCase):

    def test_every_suite_has_laws(self):
        for suite in SUITES:
            self.assertTrue(law_registry.laws_for(suite), suite)

    def test_law_ids_are_unique_per_suite(self):
        for suite in SUITES:
            ids = [law.law_id for law in law_registry.laws_for(suite)]
            self.assertEqual(len(ids), len(set(ids)), suite)
