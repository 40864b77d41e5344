"""
Unit tests for the command-line front end.
"""

import unittest
import sys
import os
import io
import json
import tempfile

# Add the parent directory to the path so we can import the modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hermispec.analysis_logger import clear_logs
from hermispec.cli import EXIT_CLAIM_FAILED, EXIT_OK, EXIT_USAGE, run
from hermispec.config import DEFAULT_REGISTRY_PATH
from hermispec.family_registry import set_default_registry

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestGoldenOutput(unittest.TestCase):
    """Test cases comparing JSON output with stored reports"""

    def assertMatchesGolden(self, name, *argv):
        code, out, _ = invoke("--json", *argv)
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(len(report.pop("report_sha256")), 64)
        with open(os.path.join(GOLDEN_DIR, name)) as f:
            self.assertEqual(report, json.load(f))

    def test_charpoly(self):
        """Test the charpoly report of the 4-cycle"""
        self.assertMatchesGolden("charpoly_C4.json", "charpoly", "C:4")

    def test_cospectral(self):
        """Test the cospectral report of P8 and its lettered mate"""
        self.assertMatchesGolden("cospectral_P8_P2_o.json", "cospectral", "P:8", "P:2+o")

    def test_equivalent(self):
        """Test the equivalence report of two 4-cycles of different types"""
        self.assertMatchesGolden("equivalent_C4_C2_4.json", "equivalent", "C:4", "C2:4")

    def test_hash_is_stable(self):
        """Test that repeated runs give the same digest"""
        first = json.loads(invoke("--json", "charpoly", "C:4")[1])
        second = json.loads(invoke("--json", "charpoly", "C:4")[1])
        self.assertEqual(first["report_sha256"], second["report_sha256"])


class TestCommands(unittest.TestCase):
    """Test cases for individual verbs"""

    def setUp(self):
        clear_logs()

    def test_spectrum_closed_form(self):
        """Test that the Type 1 cycle spectrum agrees with its closed form"""
        code, out, _ = invoke("spectrum", "C1:12")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("C1:12: 12 eigenvalues", out)
        self.assertIn("closed form agrees", out)
        self.assertIn("pi/24)", out)

    def test_spectrum_json(self):
        """Test the spectrum report fields"""
        code, out, _ = invoke("--json", "spectrum", "P:4")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)["result"]
        self.assertEqual(result["n"], 4)
        self.assertTrue(result["closed_form_agrees"])

    def test_charpoly_routes(self):
        """Test the cross-check of the char poly routes"""
        code, out, _ = invoke("charpoly", "Gt:2", "--routes")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("all routes agree", out)

    def test_charpoly_of_letter(self):
        """Test that a reconstructed letter is built from the registry"""
        code, out, _ = invoke("--json", "charpoly", "(u)")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)["result"]
        self.assertEqual(result["n"], 8)
        self.assertEqual(result["char_poly"], [1, 0, -24, 0, 26, 0, -9, 0, 1])

    def test_canonicalize_cycle(self):
        """Test that a Type 2 cycle is recognized"""
        code, out, _ = invoke("canonicalize", "C2:5")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("C2:5: Type2", out)

    def test_canonicalize_forest(self):
        """Test that a path canonicalizes as a forest"""
        code, out, _ = invoke("--json", "canonicalize", "P:3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["result"]["type"], "forest")

    def test_canonicalize_refuses_dense_graph(self):
        """Test that canonicalize refuses a graph with two independent cycles"""
        code, _, err = invoke("canonicalize", "K:4")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("forests and connected unicyclic", err)

    def test_equivalent_with_witness(self):
        """Test that equivalent graphs come with a switching witness"""
        code, out, _ = invoke("--json", "equivalent", "C1:4", "C1:4")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)["result"]
        self.assertTrue(result["equivalent"])
        self.assertIn("switching", result)

    def test_mates(self):
        """Test the mates of P5"""
        code, out, _ = invoke("mates", "P:5")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("P:5: 1 mate(s), free search (exhaustive)", out)
        self.assertIn("P:2 + C1:3", out)

    def test_dhs_guided(self):
        """Test the guided verdict for P8"""
        code, out, _ = invoke("dhs", "P:8", "--guided")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("P:8: NotDHS", out)
        self.assertIn("P:2 + (o)", out)

    def test_dhs_guard_is_inconclusive(self):
        """Test that a guard hit is reported, not raised"""
        code, out, _ = invoke("dhs", "P:5", "--max-order", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Inconclusive", out)

    def test_mates_guard_is_usage_error(self):
        """Test that a guard hit in a mate search exits with a usage error"""
        code, _, err = invoke("mates", "P:5", "--max-order", "3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("guard", err)

    def test_out_check_list(self):
        """Test the campaign listing"""
        code, out, _ = invoke("out-check", "--list")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("smith-families", out)
        self.assertIn("K4-based", out)

    def test_out_check_campaign(self):
        """Test a passing campaign"""
        code, out, _ = invoke("out-check", "K4-based")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("K4-based", out)

    def test_out_check_unknown_campaign(self):
        """Test that an unknown campaign is a usage error"""
        code, _, err = invoke("out-check", "missing")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("Unknown out campaign", err)

    def test_verify_selected(self):
        """Test a selected verification check under both verb names"""
        for verb in ("verify", "verify-paper"):
            code, out, _ = invoke(verb, "--check", "5")
            self.assertEqual(code, EXIT_OK)
            self.assertIn("1/1 checks passed", out)

    def test_verify_unknown_check(self):
        """Test that an unknown check id is a usage error"""
        code, _, err = invoke("verify", "--check", "42")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("42", err)

    def test_show_log(self):
        """Test that the analysis log is appended on request"""
        code, out, _ = invoke("--show-log", "mates", "P:4")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("== log ==", out)
        self.assertIn("mate_search", out)


class TestExitCodes(unittest.TestCase):
    """Test cases for usage errors"""

    def test_missing_verb(self):
        """Test that a missing verb exits with 2"""
        self.assertEqual(invoke()[0], EXIT_USAGE)

    def test_unknown_family(self):
        """Test that an unknown family exits with 2 and names it"""
        code, _, err = invoke("charpoly", "Q:3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("Q", err)

    def test_bad_parameters(self):
        """Test that a bad family parameter exits with 2"""
        self.assertEqual(invoke("charpoly", "C:2")[0], EXIT_USAGE)

    def test_missing_file(self):
        """Test that a missing graph file exits with 2"""
        self.assertEqual(invoke("charpoly", "missing/graph.json")[0], EXIT_USAGE)

    def test_unrecorded_letter(self):
        """Test that a letter without a recorded structure is a claim failure with a hint"""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "registry.json")
            with open(DEFAULT_REGISTRY_PATH) as f:
                data = json.load(f)
            data["letters"]["q"]["graph"] = None
            with open(path, "w") as f:
                json.dump(data, f)
            try:
                code, _, err = invoke("--registry", path, "charpoly", "q")
            finally:
                set_default_registry()
        self.assertEqual(code, EXIT_CLAIM_FAILED)
        self.assertIn("reconstruct", err)


if __name__ == "__main__":
    unittest.main()
