"""
Unit tests for the Analysis Logger module.
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hermispec.analysis_logger import STEP_TYPES, AnalysisLogger, clear_logs, get_logs


class TestAnalysisLogger(unittest.TestCase):
    """Tests for the AnalysisLogger class."""

    def setUp(self):
        """Set up a logger over an empty log."""
        clear_logs()
        self.logger = AnalysisLogger()

    def tearDown(self):
        """Leave the shared log empty."""
        clear_logs()

    def test_log_event(self):
        """Test logging a general event."""
        entry = self.logger.log_event("registry", "Recorded graph (q)", {"subject": "(q)"})
        self.assertEqual(entry["step_type"], "registry")
        self.assertEqual(entry["subject"], "(q)")
        self.assertIn("timestamp", entry)

    def test_unknown_step_type(self):
        """Test that an unknown step type is rejected."""
        with self.assertRaises(ValueError):
            self.logger.log_event("network", "nope", {})

    def test_default_subject(self):
        """Test that a missing subject defaults to general."""
        entry = self.logger.log_event("verification", "ran", {})
        self.assertEqual(entry["subject"], "general")

    def test_typed_helpers(self):
        """Test the typed logging helpers."""
        entry = self.logger.log_mate_search("P:8", "free", 12, 1, True, 0.5)
        self.assertEqual(entry["details"]["mates"], 1)
        entry = self.logger.log_campaign_result("theta", 9, 9, 0, 1.25)
        self.assertIn("all out", entry["message"])
        entry = self.logger.log_identity_check("P:8 ~ P:2 + o", False)
        self.assertIn("FAILS", entry["message"])
        entry = self.logger.log_error("dhs", RuntimeError("boom"))
        self.assertEqual(entry["details"]["error_type"], "RuntimeError")
        for helper_type in ("mate_search", "out_campaign", "identity_check", "error"):
            self.assertIn(helper_type, STEP_TYPES)

    def test_get_logs_newest_first(self):
        """Test ordering and filtering of stored logs."""
        self.logger.log_reconstruction("(q)", 10, 1, 0.1)
        self.logger.log_dhs_verdict("P:8", "NotDHS", "mate found")
        self.logger.log_dhs_verdict("C:4", "DHS", "no mate")
        logs = get_logs()
        self.assertEqual(logs[0]["subject"], "C:4")
        self.assertEqual(len(get_logs(step_type="dhs_verdict")), 2)
        self.assertEqual(len(self.logger.get_logs(subject="(q)")), 1)
        self.assertEqual(len(get_logs(limit=1)), 1)

    def test_bounded_storage(self):
        """Test that the log keeps a bounded number of entries."""
        for i in range(510):
            self.logger.log_event("enumeration", f"step {i}", {})
        self.assertEqual(len(get_logs(limit=1000)), 500)


if __name__ == "__main__":
    unittest.main()
