"""
Unit tests for the verification suite.
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import numpy as np

from hermispec.admissible_registry import AdmissibleRegistry
from hermispec.charpoly import char_poly
from hermispec.config import DEFAULT_REGISTRY_PATH
from hermispec.family_registry import FamilyRegistry
from hermispec.switching import apply_switching
from hermispec.verification_suite import (
    VerificationCheck,
    VerificationSuite,
    random_mixed_graph,
    random_switchable_pair,
)

SLOW = os.environ.get("HERMISPEC_SLOW_TESTS") == "1"


class TestVerificationSuite(unittest.TestCase):
    """Test cases for the verification suite"""

    def setUp(self):
        self.registry = FamilyRegistry(AdmissibleRegistry(DEFAULT_REGISTRY_PATH))
        self.suite = VerificationSuite(self.registry)

    def test_available_checks(self):
        """Test that the checks are numbered 1 to 10"""
        self.assertEqual(self.suite.get_available_checks(), [str(i) for i in range(1, 11)])

    def test_selected_checks_pass(self):
        """Test the closed-form, signed-cycle, value-at-2 and identity checks"""
        results = self.suite.evaluate(["1", "2", "5", "9"])
        self.assertEqual([r["id"] for r in results["checks"]], ["1", "2", "5", "9"])
        self.assertTrue(results["passed"], results["failed"])
        self.assertEqual(results["failed"], [])
        for result in results["checks"]:
            self.assertIn("within_budget", result)
            self.assertEqual(result["details"].get("failures", []), [])

    def test_matching_check(self):
        """Test that the matching convolution check passes"""
        results = self.suite.evaluate([3])
        self.assertTrue(results["passed"])

    def test_unknown_check(self):
        """Test that an unknown check id is rejected"""
        with self.assertRaises(ValueError):
            self.suite.evaluate(["42"])

    def test_small_property_sweep(self):
        """Test a reduced switching, interlacing and symmetry sweep"""
        passed, details = self.suite._check_properties(switchings=25, subgraphs=25, symmetric=10)
        self.assertTrue(passed, details)
        self.assertEqual(details["symmetry_cases"], 10)

    def test_small_route_comparison(self):
        """Test a reduced comparison of the char poly routes"""
        passed, details = self.suite._check_charpoly_routes(cases=20)
        self.assertTrue(passed, details["mismatches"])

    def test_failing_check_is_captured(self):
        """Test that a check raising an error is reported as failed"""

        def broken():
            raise ArithmeticError("non-real determinant")

        result = VerificationCheck("x", "broken check", 1, broken).run()
        self.assertFalse(result["passed"])
        self.assertIn("non-real determinant", result["details"]["error"])

    def test_deterministic(self):
        """Test that reruns give identical pass/fail results"""
        first = self.suite.evaluate(["5"])
        second = VerificationSuite(self.registry).evaluate(["5"])
        self.assertEqual(first["checks"][0]["details"], second["checks"][0]["details"])

    @unittest.skipUnless(SLOW, "set HERMISPEC_SLOW_TESTS=1 to run the search-heavy checks")
    def test_full_suite(self):
        """Test that every check passes"""
        results = self.suite.evaluate()
        self.assertTrue(results["passed"], results["failed"])


class TestRandomGraphs(unittest.TestCase):
    """Test cases for the random graph helpers"""

    def test_random_graph_order(self):
        """Test that random graphs have the requested order"""
        rng = np.random.default_rng(7)
        for n in range(1, 8):
            self.assertEqual(random_mixed_graph(rng, n).n, n)

    def test_switchable_pair(self):
        """Test that the switching of a random pair keeps the char poly"""
        rng = np.random.default_rng(11)
        for _ in range(10):
            g, theta = random_switchable_pair(rng, 6)
            self.assertEqual(char_poly(apply_switching(g, theta)), char_poly(g))


if __name__ == "__main__":
    unittest.main()
