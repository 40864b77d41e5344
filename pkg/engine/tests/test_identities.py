"""
Unit tests for the family cospectrality identities.
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hermispec.analysis_logger import clear_logs, get_logs
from hermispec.admissible_registry import AdmissibleRegistry, RegistryError
from hermispec.charpoly import char_poly
from hermispec.config import DEFAULT_REGISTRY_PATH
from hermispec.family_registry import FamilyRegistry, make_named
from hermispec.identities import (
    IdentityFailure,
    family_identities,
    term_polynomial,
    union_polynomial,
    verify_family_identities,
)


class TestIdentityList(unittest.TestCase):
    """Test cases for the identity catalogue"""

    def test_fixed_order(self):
        """Test that the catalogue is deterministic and starts with the 4k+1 paths"""
        first, second = family_identities(), family_identities()
        self.assertEqual(first, second)
        self.assertEqual(first[0].describe(), "P:5 ~ P:2 + C1:3")

    def test_contains_letter_pairs(self):
        """Test that the cospectral letter pairs are listed"""
        names = [identity.name for identity in family_identities()]
        self.assertIn("letters-g-r", names)
        self.assertIn("letters-h-u", names)
        self.assertIn("path-8", names)


class TestPolynomials(unittest.TestCase):
    """Test cases for union polynomials"""

    def setUp(self):
        self.registry = FamilyRegistry(AdmissibleRegistry(DEFAULT_REGISTRY_PATH))

    def test_union_is_product(self):
        """Test that a union polynomial multiplies its terms"""
        expected = char_poly(make_named("P", (2,))) * char_poly(make_named("C1", (3,)))
        self.assertEqual(union_polynomial("P:2 + C1:3", self.registry), expected)

    def test_letter_term(self):
        """Test that letters accept bare and parenthesized names"""
        self.assertEqual(union_polynomial("o", self.registry), union_polynomial("(o)", self.registry))

    def test_unknown_term(self):
        """Test that an unknown family name is reported"""
        with self.assertRaises(RegistryError):
            term_polynomial("Q", (3,), self.registry)

    def test_wrong_recorded_graph(self):
        """Test that a recorded letter graph must keep its registry spectrum"""
        self.registry.admissible.set_graph("k", make_named("P", (4,)), source="test")
        with self.assertRaises(IdentityFailure):
            term_polynomial("k", (), self.registry)


class TestVerifyIdentities(unittest.TestCase):
    """Test cases for the identity verifier"""

    def setUp(self):
        self.registry = FamilyRegistry(AdmissibleRegistry(DEFAULT_REGISTRY_PATH))

    def test_all_identities_hold(self):
        """Test that every identity holds on the shipped registry"""
        results = verify_family_identities(strict=True, registry=self.registry)
        self.assertEqual(len(results), len(family_identities()))
        self.assertTrue(all(r["holds"] for r in results))

    def test_broken_record_is_reported(self):
        """Test that a corrupted letter fails its identities without raising in lenient mode"""
        self.registry.admissible.set_graph("o", make_named("P", (6,)), source="test")
        results = verify_family_identities(strict=False, registry=self.registry)
        failed = [r for r in results if not r["holds"]]
        self.assertTrue(failed)
        self.assertTrue(all("error" in r for r in failed))
        self.assertIn("P:8 ~ P:2 + o", [r["identity"] for r in failed])

    def test_unrecorded_letter_is_flagged(self):
        """Test that a letter without a graph is logged and named in the results"""
        clear_logs()
        self.registry.admissible.data["letters"]["o"]["graph"] = None
        results = verify_family_identities(strict=True, registry=self.registry)
        path_eight = next(r for r in results if r["identity"] == "P:8 ~ P:2 + o")
        self.assertTrue(path_eight["holds"])
        self.assertEqual(path_eight["unrecorded"], ["o"])
        logs = get_logs(subject="(o)", step_type="registry")
        self.assertTrue(logs)
        self.assertTrue(logs[0]["details"]["unverified"])

    def test_shipped_identities_use_recorded_graphs(self):
        """Test that no identity falls back to a registry spectrum"""
        results = verify_family_identities(strict=True, registry=self.registry)
        self.assertEqual([r["identity"] for r in results if "unrecorded" in r], [])

    def test_strict_mode_raises(self):
        """Test that strict mode raises on a failure"""
        self.registry.admissible.set_graph("o", make_named("P", (6,)), source="test")
        with self.assertRaises(IdentityFailure):
            verify_family_identities(strict=True, registry=self.registry)


if __name__ == "__main__":
    unittest.main()
