"""
Unit tests for enumeration of mixed graphs up to switching.
"""

import unittest
import sys
import os
from itertools import product

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import networkx as nx
from pydantic import ValidationError

from hermispec.charpoly import char_poly
from hermispec.enumeration import (
    MAX_CHORDS,
    SearchConstraints,
    SearchGuardExceeded,
    class_certificate,
    connected_classes,
    connected_underlying_graphs,
    enumerate_up_to_switching,
    same_class,
    switching_classes,
)
from hermispec.family_registry import make_named
from hermispec.mixed_graph import build_mixed_graph

SLOW = os.environ.get("HERMISPEC_SLOW_TESTS") == "1"


class TestSearchConstraints(unittest.TestCase):
    """Test cases for the search constraint model"""

    def test_defaults(self):
        """Test that only max_order is required"""
        constraints = SearchConstraints(max_order=5)
        self.assertEqual(constraints.min_order, 1)
        self.assertFalse(constraints.connected)
        self.assertIsNone(constraints.max_degree)

    def test_min_above_max_rejected(self):
        """Test that min_order may not exceed max_order"""
        with self.assertRaises(ValidationError):
            SearchConstraints(max_order=3, min_order=4)

    def test_negative_size_rejected(self):
        """Test that sizes are non-negative"""
        with self.assertRaises(ValidationError):
            SearchConstraints(max_order=3, size=-1)

    def test_unknown_component_family_rejected(self):
        """Test that component whitelists must name registered families"""
        with self.assertRaises(ValidationError):
            SearchConstraints(max_order=3, components=["Q"])
        constraints = SearchConstraints(max_order=3, components=["P", "C1"])
        self.assertEqual(constraints.components, ["P", "C1"])

    def test_frozen(self):
        """Test that constraints cannot be mutated"""
        constraints = SearchConstraints(max_order=3)
        with self.assertRaises(ValidationError):
            constraints.max_order = 4

    def test_size_allowed(self):
        """Test the exact and maximum size filters"""
        self.assertTrue(SearchConstraints(max_order=4, size=3).size_allowed(3))
        self.assertFalse(SearchConstraints(max_order=4, size=3).size_allowed(4))
        self.assertFalse(SearchConstraints(max_order=4, max_size=2).size_allowed(3))


class TestUnderlyingGraphs(unittest.TestCase):
    """Test cases for connected underlying graph generation"""

    def test_connected_graph_counts(self):
        """Test the number of connected graphs of small orders"""
        self.assertEqual(len(connected_underlying_graphs(1)), 1)
        self.assertEqual(len(connected_underlying_graphs(3)), 2)
        self.assertEqual(len(connected_underlying_graphs(4)), 6)
        self.assertEqual(len(connected_underlying_graphs(5)), 21)

    def test_trees_by_size(self):
        """Test that order 5 has three trees and the complete graph is unique"""
        self.assertEqual(len(connected_underlying_graphs(5, size=4)), 3)
        self.assertEqual(len(connected_underlying_graphs(5, size=10)), 1)
        self.assertEqual(connected_underlying_graphs(4, size=2), [])

    def test_max_degree(self):
        """Test that the degree cap drops the star"""
        trees = connected_underlying_graphs(4, size=3, max_degree=2)
        self.assertEqual(len(trees), 1)
        degrees = [sum(v in e for e in trees[0]) for v in range(4)]
        self.assertEqual(sorted(degrees), [1, 1, 2, 2])


class TestSwitchingClasses(unittest.TestCase):
    """Test cases for switching classes on one underlying graph"""

    def test_tree_has_one_class(self):
        """Test that a tree has only the undirected class"""
        classes = switching_classes(4, [(0, 1), (1, 2), (1, 3)])
        self.assertEqual(len(classes), 1)
        self.assertEqual(classes[0].arcs, frozenset())

    def test_triangle_classes(self):
        """Test that the triangle has three classes up to relabeling"""
        classes = switching_classes(3, [(0, 1), (1, 2), (0, 2)])
        self.assertEqual(len(classes), 3)
        polys = {char_poly(g) for g in classes}
        self.assertEqual(len(polys), 3)
        self.assertIn(char_poly(make_named("C", (3,))), polys)
        self.assertIn(char_poly(make_named("C1", (3,))), polys)
        self.assertIn(char_poly(make_named("C2", (3,))), polys)

    def test_square_classes(self):
        """Test that the 4-cycle has three classes up to relabeling"""
        classes = switching_classes(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        self.assertEqual(len(classes), 3)

    def test_chord_guard(self):
        """Test that a corank above the chord guard is refused"""
        n = 6
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.assertGreater(len(edges) - n + 1, MAX_CHORDS)
        with self.assertRaises(SearchGuardExceeded):
            switching_classes(n, edges)


class TestConnectedClasses(unittest.TestCase):
    """Test cases for connected class enumeration"""

    def test_order_three(self):
        """Test that order 3 has the path and three triangle classes"""
        self.assertEqual(len(connected_classes(3)), 4)

    def test_unicyclic_order_four(self):
        """Test that order 4 has six unicyclic classes"""
        self.assertEqual(len(connected_classes(4, size=4)), 6)

    def test_corank_cap(self):
        """Test that max_corank removes the denser graphs"""
        trees_only = connected_classes(4, max_corank=0)
        self.assertEqual(len(trees_only), 2)
        self.assertEqual(connected_classes(4, size=5, max_corank=1), ())

    def test_sorted_by_size(self):
        """Test that representatives come out in size order"""
        sizes = [g.size for g in connected_classes(4)]
        self.assertEqual(sizes, sorted(sizes))


def brute_force_class_count(n):
    """Count connected classes by labelling every atlas graph of order n with 1, i or -i."""
    buckets = {}
    for underlying in nx.graph_atlas_g():
        if underlying.number_of_nodes() != n or not nx.is_connected(underlying):
            continue
        edges = list(underlying.edges())
        for labels in product(range(3), repeat=len(edges)):
            undirected = [e for e, label in zip(edges, labels) if label == 0]
            arcs = [e if label == 1 else e[::-1] for e, label in zip(edges, labels) if label]
            g = build_mixed_graph(n, undirected, arcs)
            bucket = buckets.setdefault((len(edges), char_poly(g)), [])
            if not any(same_class(rep, g) for rep in bucket):
                bucket.append(g)
    return sum(len(bucket) for bucket in buckets.values())


class TestExhaustiveness(unittest.TestCase):
    """Test cases comparing connected_classes with a brute force over all labellings"""

    def test_small_orders(self):
        """Test the class counts of orders 1 to 4"""
        for n, expected in zip(range(1, 5), (1, 1, 4, 23)):
            self.assertEqual(brute_force_class_count(n), expected, n)
            self.assertEqual(len(connected_classes(n)), expected, n)

    @unittest.skipUnless(SLOW, "set HERMISPEC_SLOW_TESTS=1 to brute-force order 5")
    def test_order_five(self):
        """Test the class count of order 5"""
        self.assertEqual(len(connected_classes(5)), brute_force_class_count(5))


class TestEnumerateUpToSwitching(unittest.TestCase):
    """Test cases for enumeration with disconnected graphs"""

    def test_forests_of_order_four(self):
        """Test that there are six forests on four vertices"""
        constraints = SearchConstraints(max_order=4, min_order=4, max_corank=0)
        forests = list(enumerate_up_to_switching(constraints))
        self.assertEqual(len(forests), 6)
        self.assertTrue(all(not g.arcs for g in forests))

    def test_connected_flag(self):
        """Test that connected enumeration matches connected_classes"""
        constraints = SearchConstraints(max_order=3, min_order=3, connected=True)
        self.assertEqual(len(list(enumerate_up_to_switching(constraints))), 4)

    def test_exact_size(self):
        """Test that every emitted graph has the requested size"""
        constraints = SearchConstraints(max_order=4, min_order=4, size=3)
        graphs = list(enumerate_up_to_switching(constraints))
        self.assertTrue(graphs)
        self.assertTrue(all(g.size == 3 for g in graphs))

    def test_orders_ascend(self):
        """Test that orders are emitted in ascending order"""
        constraints = SearchConstraints(max_order=3)
        orders = [g.n for g in enumerate_up_to_switching(constraints)]
        self.assertEqual(orders, sorted(orders))
        self.assertEqual(orders[0], 1)

    def test_max_classes_guard(self):
        """Test that max_classes stops the stream"""
        constraints = SearchConstraints(max_order=4, max_classes=3)
        with self.assertRaises(SearchGuardExceeded):
            list(enumerate_up_to_switching(constraints))


class TestSameClass(unittest.TestCase):
    """Test cases for switching-and-relabeling equivalence"""

    def test_reversed_cycle_is_same_class(self):
        """Test that reversing the arc of a Type 1 cycle gives the same class up to relabeling"""
        reversed_arc = build_mixed_graph(4, [(1, 2), (2, 3), (0, 3)], [(1, 0)])
        self.assertTrue(same_class(make_named("C1", (4,)), reversed_arc))

    def test_relabelled_path(self):
        """Test that a relabelled path is equivalent"""
        path = make_named("P", (4,))
        self.assertTrue(same_class(path, path.relabel([2, 0, 3, 1])))

    def test_different_types(self):
        """Test that cycles of different types are not equivalent"""
        self.assertFalse(same_class(make_named("C", (4,)), make_named("C2", (4,))))

    def test_component_matching(self):
        """Test that unions are matched component by component"""
        from hermispec.mixed_graph import disjoint_union

        a = disjoint_union(make_named("P", (2,)), make_named("C1", (3,)))
        b = disjoint_union(make_named("C1", (3,)), make_named("P", (2,)))
        self.assertTrue(same_class(a, b))
        self.assertFalse(same_class(a, make_named("P", (5,))))

    def test_certificate(self):
        """Test that certificates separate cospectral inequivalent graphs"""
        from hermispec.mixed_graph import disjoint_union

        path = make_named("P", (5,))
        mate = disjoint_union(make_named("P", (2,)), make_named("C1", (3,)))
        first, second = class_certificate(path), class_certificate(mate)
        self.assertEqual(first["char_poly"], second["char_poly"])
        self.assertNotEqual(first["cycle_classes"], second["cycle_classes"])
        self.assertEqual(second["cycle_classes"], [[3, "+-i"]])


if __name__ == "__main__":
    unittest.main()
