"""
Unit tests for the out campaigns and the campaign registry.
"""

import unittest
import sys
import os
import tempfile

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hermispec.admissible_registry import AdmissibleRegistry
from hermispec.campaign_registry import CampaignDefinitionError, CampaignRegistry, replicate_out_campaign
from hermispec.config import DEFAULT_REGISTRY_PATH
from hermispec.family_registry import FamilyRegistry
from hermispec.out_campaigns import CompleteCampaign, NamedFamilyCampaign, Theta33Campaign, ThetaCampaign

SLOW = os.environ.get("HERMISPEC_SLOW_TESTS") == "1"


class TestCampaignRegistry(unittest.TestCase):
    """Test cases for the campaign registry"""

    def setUp(self):
        self.family_registry = FamilyRegistry(AdmissibleRegistry(DEFAULT_REGISTRY_PATH))
        self.registry = CampaignRegistry(family_registry=self.family_registry)
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, text):
        path = os.path.join(self.tmp.name, "campaigns.yaml")
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_packaged_campaigns(self):
        """Test that the packaged definitions are loaded in order"""
        self.assertEqual(
            self.registry.get_available_campaigns(),
            ["deg4-order5", "theta", "theta33", "K4-based", "smith-families"],
        )
        self.assertIsInstance(self.registry.get_campaign("theta33"), Theta33Campaign)
        self.assertIsInstance(self.registry.get_campaign("K4-based"), CompleteCampaign)
        self.assertIsInstance(self.registry.get_campaign("smith-families"), NamedFamilyCampaign)
        self.assertIsNone(self.registry.get_campaign("missing"))

    def test_notes_are_kept(self):
        """Test that a definition note reaches the campaign"""
        campaign = self.registry.get_campaign("deg4-order5")
        self.assertTrue(any("degree 4" in note for note in campaign.notes))

    def test_duplicate_registration_refused(self):
        """Test that a campaign name is registered once"""
        self.assertFalse(self.registry.register_campaign(ThetaCampaign("theta", [(2, 3, 3)])))
        self.assertTrue(self.registry.register_campaign(ThetaCampaign("diamond", [(2, 3, 3)])))

    def test_unknown_campaign(self):
        """Test that running an unknown campaign raises"""
        with self.assertRaises(ValueError):
            self.registry.run_campaign("missing")

    def test_unknown_kind(self):
        """Test that an unknown campaign kind is rejected"""
        path = self._write("campaigns:\n  odd:\n    kind: spiral\n")
        with self.assertRaises(CampaignDefinitionError) as context:
            CampaignRegistry(path, self.family_registry)
        self.assertIn("spiral", str(context.exception))

    def test_missing_field(self):
        """Test that a missing field is named"""
        path = self._write("campaigns:\n  deg:\n    kind: degree\n    order: 5\n")
        with self.assertRaises(CampaignDefinitionError) as context:
            CampaignRegistry(path, self.family_registry)
        self.assertIn("degree", str(context.exception))

    def test_missing_mapping(self):
        """Test that a file without a campaigns mapping is rejected"""
        path = self._write("other: 1\n")
        with self.assertRaises(CampaignDefinitionError):
            CampaignRegistry(path, self.family_registry)

    def test_custom_definitions(self):
        """Test that a custom file builds its own campaigns"""
        path = self._write(
            "campaigns:\n"
            "  small-theta:\n"
            "    kind: theta\n"
            "    triples: [[2, 3, 3]]\n"
        )
        registry = CampaignRegistry(path, self.family_registry)
        self.assertEqual(registry.get_available_campaigns(), ["small-theta"])
        report = registry.run_campaign("small-theta")
        self.assertTrue(report["passed"])


class TestCampaignRuns(unittest.TestCase):
    """Test cases for campaign reports"""

    def setUp(self):
        self.family_registry = FamilyRegistry(AdmissibleRegistry(DEFAULT_REGISTRY_PATH))
        self.registry = CampaignRegistry(family_registry=self.family_registry)

    def test_complete_graph_campaign(self):
        """Test that every class on K4 is out"""
        report = self.registry.run_campaign("K4-based")
        self.assertEqual(report["campaign"], "K4-based")
        self.assertGreater(report["members"], 0)
        self.assertEqual(report["out_members"], report["members"])
        self.assertEqual(report["counterexamples"], [])
        self.assertTrue(report["passed"])

    def test_theta_campaign(self):
        """Test that the listed theta graphs are out"""
        report = self.registry.run_campaign("theta")
        self.assertEqual(report["counterexamples"], [])
        self.assertTrue(report["passed"])

    def test_report_keys(self):
        """Test the report layout"""
        report = replicate_out_campaign("K4-based", self.registry)
        for key in ("campaign", "description", "claim", "members", "out_members",
                    "counterexamples", "checks", "notes", "passed", "elapsed_s"):
            self.assertIn(key, report)

    def test_counterexample_is_reported(self):
        """Test that an admissible member makes the campaign fail"""
        campaign = NamedFamilyCampaign("paths", [("P", [4])], self.family_registry)
        report = campaign.run()
        self.assertEqual(report["members"], 1)
        self.assertEqual(report["out_members"], 0)
        self.assertEqual(len(report["counterexamples"]), 1)
        self.assertFalse(report["passed"])

    def test_theta33_checks(self):
        """Test the values at 2 of Y1 and Y2"""
        campaign = Theta33Campaign("small", [3, 4], self.family_registry)
        checks = campaign.extra_checks()
        self.assertEqual(len(checks), 4)
        self.assertTrue(all(check["passed"] for check in checks))
        self.assertEqual(checks[0]["value"], 0)
        self.assertEqual(checks[2]["value"], -2)

    @unittest.skipUnless(SLOW, "set HERMISPEC_SLOW_TESTS=1 to run every campaign")
    def test_all_campaigns_pass(self):
        """Test that every packaged campaign passes"""
        reports = self.registry.run_all()
        self.assertEqual(len(reports), 5)
        self.assertTrue(all(report["passed"] for report in reports))


if __name__ == "__main__":
    unittest.main()
