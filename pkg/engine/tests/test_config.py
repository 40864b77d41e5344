"""
Unit tests for the runtime configuration module.
"""

import unittest
import sys
import os
from unittest.mock import patch

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hermispec.config import (
    DEFAULT_FREE_MAX_ORDER,
    DEFAULT_GUIDED_MAX_ORDER,
    DEFAULT_REGISTRY_PATH,
    DEFAULT_TOLERANCE,
    get_max_order,
    get_registry_path,
    get_thread_count,
    get_tolerance,
)


class TestConfig(unittest.TestCase):
    """Tests for environment-driven settings."""

    @patch.dict(os.environ, {}, clear=True)
    def test_defaults(self):
        """Test the defaults with an empty environment."""
        self.assertEqual(get_thread_count(), 1)
        self.assertEqual(get_tolerance(), DEFAULT_TOLERANCE)
        self.assertEqual(get_max_order("free"), DEFAULT_FREE_MAX_ORDER)
        self.assertEqual(get_max_order("guided"), DEFAULT_GUIDED_MAX_ORDER)
        self.assertEqual(get_registry_path(), DEFAULT_REGISTRY_PATH)

    @patch.dict(os.environ, {"HERMISPEC_THREADS": "4", "HERMISPEC_TOL": "1e-8",
                             "HERMISPEC_MAX_ORDER": "12", "HERMISPEC_REGISTRY": "/tmp/registry.json"})
    def test_environment(self):
        """Test that environment variables override the defaults."""
        self.assertEqual(get_thread_count(), 4)
        self.assertEqual(get_tolerance(), 1e-8)
        self.assertEqual(get_max_order("free"), 12)
        self.assertEqual(get_registry_path(), "/tmp/registry.json")

    @patch.dict(os.environ, {"HERMISPEC_THREADS": "4", "HERMISPEC_MAX_ORDER": "12"})
    def test_explicit_arguments_win(self):
        """Test that explicit arguments beat the environment."""
        self.assertEqual(get_thread_count(2), 2)
        self.assertEqual(get_max_order("free", 7), 7)
        self.assertEqual(get_tolerance(1e-6), 1e-6)
        self.assertEqual(get_registry_path("other.json"), "other.json")

    @patch.dict(os.environ, {"HERMISPEC_THREADS": "many"})
    def test_malformed_integer(self):
        """Test that a non-integer thread count is rejected."""
        with self.assertRaises(ValueError):
            get_thread_count()

    @patch.dict(os.environ, {"HERMISPEC_TOL": "-1"})
    def test_non_positive_tolerance(self):
        """Test that a non-positive tolerance is rejected."""
        with self.assertRaises(ValueError):
            get_tolerance()


if __name__ == "__main__":
    unittest.main()
