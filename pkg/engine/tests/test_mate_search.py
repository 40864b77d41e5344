"""
Unit tests for cospectral-mate search and DHS verdicts.
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hermispec.enumeration import SearchConstraints, SearchGuardExceeded
from hermispec.family_registry import make_named
from hermispec.graph_families import theta_graph
from hermispec.mate_search import (
    DHS,
    INCONCLUSIVE,
    NOT_DHS,
    degree_cap,
    find_mates,
    is_dhs,
    label_component,
    label_graph,
)
from hermispec.mixed_graph import disjoint_union

SLOW = os.environ.get("HERMISPEC_SLOW_TESTS") == "1"


class TestLabels(unittest.TestCase):
    """Test cases for component labelling"""

    def test_family_members(self):
        """Test that family members are named by shorthand"""
        self.assertEqual(label_component(make_named("P", (4,))), "P:4")
        self.assertEqual(label_component(make_named("C1", (5,))), "C1:5")
        self.assertEqual(label_component(make_named("C2", (4,))), "C2:4")

    def test_relabelled_member(self):
        """Test that labelling is invariant under relabeling"""
        cycle = make_named("C1", (4,)).relabel([3, 1, 0, 2])
        self.assertEqual(label_component(cycle), "C1:4")

    def test_union_label(self):
        """Test that union labels list smaller components first"""
        union = disjoint_union(make_named("C1", (3,)), make_named("P", (2,)))
        self.assertEqual(label_graph(union), "P:2 + C1:3")

    def test_cospectral_letters(self):
        """Test that cospectral letters are told apart by their recorded graphs"""
        for letter in ("g", "r", "h", "u", "t"):
            self.assertEqual(label_component(make_named(letter)), f"({letter})")

    def test_unnamed_graph(self):
        """Test that an unnamed graph falls back to its order and size"""
        self.assertEqual(label_component(theta_graph(2, 3, 3)), "G[4,5]")

    def test_degree_cap(self):
        """Test that the degree cap is the squared spectral radius"""
        self.assertEqual(degree_cap(make_named("C", (4,))), 4)
        self.assertEqual(degree_cap(make_named("P", (2,))), 1)


class TestFindMates(unittest.TestCase):
    """Test cases for mate search"""

    def test_path_five_mate(self):
        """Test that P5 has exactly the Type 1 triangle mate"""
        report = find_mates(make_named("P", (5,)), label="P:5")
        self.assertEqual(report.mate_labels(), ["P:2 + C1:3"])
        self.assertTrue(report.exhaustive)
        self.assertEqual(report.verify(), [])

    def test_report_json(self):
        """Test the report layout"""
        report = find_mates(make_named("P", (5,)), label="P:5")
        data = report.to_json()
        self.assertEqual(data["target"], "P:5")
        self.assertEqual(data["mode"], "free")
        self.assertEqual(data["char_poly"], [0, 3, 0, -4, 0, 1])
        self.assertEqual(data["mates"][0]["components"], ["P:2", "C1:3"])
        self.assertIn("certificate", data["mates"][0])

    def test_four_cycle_has_no_mate(self):
        """Test that the undirected 4-cycle has no mate"""
        self.assertEqual(find_mates(make_named("C", (4,))).mates, [])

    def test_guided_path_eight(self):
        """Test that the guided search finds the lettered mate of P8"""
        report = find_mates(make_named("P", (8,)), mode="guided", label="P:8")
        self.assertIn("P:2 + (o)", report.mate_labels())
        self.assertFalse(report.exhaustive)

    def test_connected_constraint(self):
        """Test that connected mates exclude unions"""
        constraints = SearchConstraints(max_order=5, connected=True)
        report = find_mates(make_named("P", (5,)), constraints=constraints)
        self.assertEqual(report.mates, [])

    def test_unknown_mode(self):
        """Test that an unknown mode is rejected"""
        with self.assertRaises(ValueError):
            find_mates(make_named("P", (3,)), mode="bad")

    def test_order_guard(self):
        """Test that the order guard is enforced"""
        with self.assertRaises(SearchGuardExceeded):
            find_mates(make_named("P", (5,)), max_order=3)


class TestDHSVerdicts(unittest.TestCase):
    """Test cases for DHS verdicts"""

    def test_path_five_not_dhs(self):
        """Test that P5 is not DHS"""
        verdict = is_dhs(make_named("P", (5,)))
        self.assertEqual(verdict.status, NOT_DHS)
        self.assertEqual([m.label for m in verdict.mates], ["P:2 + C1:3"])

    def test_four_cycle_dhs(self):
        """Test that the undirected 4-cycle is DHS by free search"""
        verdict = is_dhs(make_named("C", (4,)))
        self.assertEqual(verdict.status, DHS)
        self.assertEqual(verdict.to_json()["status"], "DHS")

    def test_guided_is_never_dhs(self):
        """Test that a mate-free guided search is inconclusive"""
        verdict = is_dhs(make_named("C", (4,)), mode="guided")
        self.assertEqual(verdict.status, INCONCLUSIVE)

    def test_guard_is_inconclusive(self):
        """Test that a guard hit is inconclusive"""
        verdict = is_dhs(make_named("P", (5,)), max_order=3)
        self.assertEqual(verdict.status, INCONCLUSIVE)
        self.assertEqual(verdict.mates, [])
        self.assertIn("guard", verdict.reason)

    def test_small_odd_cycles_dhs(self):
        """Test that odd undirected and Type 2 cycles of order 3 and 5 have no mate"""
        for family, n in (("C", 3), ("C", 5), ("C2", 3), ("C2", 5)):
            report = find_mates(make_named(family, (n,)))
            self.assertTrue(report.exhaustive)
            self.assertEqual(report.mates, [], f"{family}:{n}")

    @unittest.skipUnless(SLOW, "set HERMISPEC_SLOW_TESTS=1 to run order 7 searches")
    def test_seven_cycles_dhs(self):
        """Test that the odd cycles of order 7 are DHS"""
        for family in ("C", "C2"):
            self.assertEqual(is_dhs(make_named(family, (7,))).status, DHS, family)

    @unittest.skipUnless(SLOW, "set HERMISPEC_SLOW_TESTS=1 to run order 6 searches")
    def test_six_cycle_not_dhs(self):
        """Test that the undirected 6-cycle has a union mate"""
        verdict = is_dhs(make_named("C", (6,)))
        self.assertEqual(verdict.status, NOT_DHS)
        self.assertIn("C2:3 + C:3", [m.label for m in verdict.mates])


if __name__ == "__main__":
    unittest.main()
