import os
import unittest

from ejakit.env import Environment
from ejakit.env.environment import ACTIVE_PROFILES_PROPERTY_NAME


class TestEnvironment(unittest.TestCase):

    def setUp(self):
        self.saved = os.environ.get(ACTIVE_PROFILES_PROPERTY_NAME)

    def tearDown(self):
        if self.saved is None:
            os.environ.pop(ACTIVE_PROFILES_PROPERTY_NAME, None)
        else:
            os.environ[ACTIVE_PROFILES_PROPERTY_NAME] = self.saved

    def test_get_active_profiles(self):
        os.environ[ACTIVE_PROFILES_PROPERTY_NAME] = "prod"
        self.assertEqual(Environment.get_active_profiles(), ["prod"])

    def test_comma_delimited(self):
        os.environ[ACTIVE_PROFILES_PROPERTY_NAME] = "dev, test"
        self.assertEqual(Environment.get_active_profiles(), ["dev", "test"])

    def test_default_profile(self):
        os.environ.pop(ACTIVE_PROFILES_PROPERTY_NAME, None)
        self.assertEqual(Environment.get_active_profiles(), ["prod"])
        self.assertEqual(Environment.get_active_profiles("dev"), ["dev"])

    def test_unknown_profile(self):
        os.environ[ACTIVE_PROFILES_PROPERTY_NAME] = "staging"
        with self.assertRaises(RuntimeError):
            Environment.get_active_profiles()

    def test_no_profile(self):
        os.environ[ACTIVE_PROFILES_PROPERTY_NAME] = " "
        with self.assertRaises(RuntimeError):
            Environment.get_active_profiles(None)
