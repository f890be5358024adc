import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
import sys


ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))


from hypercube_walks.app.cli import main  # noqa: E402
from hypercube_walks.app.schemas import OutputRecord, decode_json, encode_json  # noqa: E402


class CliTestCase(unittest.TestCase):
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.config = str(Path(self._tmp.name) / "missing.toml")

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def run_cli(self, *argv: str) -> tuple:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main([argv[0], "--config", self.config, *argv[1:]])
        return code, out.getvalue(), err.getvalue()

    def run_json(self, *argv: str) -> dict:
        code, out, _ = self.run_cli(*argv, "--format", "json")
        self.assertEqual(code, 0, out)
        return json.loads(out)


class TestWalksCommand(CliTestCase):
    def test_single_method(self) -> None:
        data = self.run_json("walks", "-n", "3", "--from", "000", "--to", "110", "-k", "4", "--method", "spectral")
        self.assertEqual(data["result"]["count"], "20")
        self.assertNotIn("verification", data)

    def test_empty_walk(self) -> None:
        data = self.run_json("walks", "-n", "3", "--from", "000", "--to", "000", "-k", "0")
        self.assertEqual(data["result"]["count"], "1")

    def test_all_routes(self) -> None:
        data = self.run_json("walks", "-n", "3", "--from", "000", "--to", "111", "-k", "5", "--method", "all")
        self.assertEqual(data["result"]["routes"], {"brute": "60", "spectral": "60", "closed": "60"})
        self.assertTrue(data["ok"])

    def test_general_steps(self) -> None:
        data = self.run_json("walks", "-n", "2", "--from", "00", "--to", "00", "-k", "3", "--steps", "11")
        self.assertEqual(data["result"]["count"], "0")
        self.assertFalse(data["result"]["closed_applicable"])

    def test_table_output(self) -> None:
        code, out, _ = self.run_cli("walks", "-n", "3", "--from", "000", "--to", "110", "-k", "4")
        self.assertEqual(code, 0)
        self.assertIn(": 20", out.splitlines()[0])

    def test_usage_error(self) -> None:
        code, out, err = self.run_cli("walks", "-n", "3", "--from", "0a0", "--to", "110", "-k", "4")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("malformed", err)

    def test_cap_error(self) -> None:
        code, _, err = self.run_cli(
            "walks", "-n", "3", "--from", "000", "--to", "110", "-k", "4", "--method", "brute", "--max-n", "2"
        )
        self.assertEqual(code, 3)
        self.assertIn("--max-n", err)


class TestDimCommand(CliTestCase):
    def test_algebras(self) -> None:
        z2n = self.run_json("dim", "-k", "2", "-n", "3", "--algebra", "z2n", "--verify")
        self.assertEqual(z2n["result"]["dimension"], "21")
        self.assertEqual(z2n["result"]["routes"], {"spectral": "21", "diagrammatic": "21"})
        self.assertEqual(z2n["verification"]["dimension"]["values"]["enumeration"], "21")
        sn = self.run_json("dim", "-k", "2", "-n", "3", "--algebra", "sn", "--verify")
        self.assertEqual(sn["result"]["dimension"], "14")
        g21n = self.run_json("dim", "-k", "2", "-n", "3", "--algebra", "g21n", "--verify")
        self.assertEqual(g21n["result"]["dimension"], "4")

    def test_sn_verify_over_budget_still_compares_routes(self) -> None:
        data = self.run_json("dim", "-k", "3", "-n", "3", "--algebra", "sn", "--verify", "--budget", "10")
        self.assertEqual(data["result"]["dimension"], "122")
        values = data["verification"]["dimension"]["values"]
        self.assertEqual(values, {"recurrence": "122", "explicit": "122"})
        self.assertTrue(data["verification"]["dimension"]["match"])
        self.assertTrue(data["ok"])

    def test_empty_verification_is_not_ok(self) -> None:
        record = OutputRecord("dim", {}, {}, verification={})
        self.assertFalse(record.ok)
        self.assertTrue(OutputRecord("dim", {}, {}).ok)


class TestSeriesCommand(CliTestCase):
    def test_poincare(self) -> None:
        data = self.run_json("series", "-n", "3", "-a", "000", "--kind", "poincare", "-K", "8")
        poincare = data["result"]["poincare"]
        self.assertEqual(poincare["coefficients"], ["1", "0", "3", "0", "21", "0", "183", "0", "1641"])
        self.assertEqual(poincare["reduced"]["num"], ["1", "0", "-7"])
        self.assertEqual(poincare["as_computed"]["den_factors"], [["3", "1"], ["1", "3"], ["-1", "3"], ["-3", "1"]])

    def test_egf(self) -> None:
        data = self.run_json("series", "-n", "3", "-a", "111", "--kind", "egf", "-K", "7")
        self.assertEqual(data["result"]["egf"]["coefficients"], ["0", "0", "0", "6", "0", "60", "0", "546"])

    def test_n1_and_verify(self) -> None:
        data = self.run_json("series", "-n", "1", "-a", "0", "--kind", "both", "-K", "4", "--verify")
        self.assertEqual(data["result"]["poincare"]["coefficients"], ["1", "0", "1", "0", "1"])
        self.assertTrue(data["verification"]["coefficients"]["match"])


class TestDiagramsCommand(CliTestCase):
    def test_even_only(self) -> None:
        data = self.run_json("diagrams", "-k", "2", "-n", "3", "--even-only")
        self.assertEqual(data["result"]["count"], "4")

    def test_expand(self) -> None:
        data = self.run_json("diagrams", "-k", "2", "-n", "3", "--even-only", "--expand", "--verify")
        self.assertEqual([d["count"] for d in data["result"]["diagrams"]], ["3", "6", "6", "6"])
        self.assertEqual(data["result"]["total_summands"], "21")
        self.assertTrue(data["verification"]["cover"]["match"])

    def test_expand_table_rows_are_keyed_by_rgs(self) -> None:
        code, out, _ = self.run_cli("diagrams", "-k", "2", "-n", "3", "--even-only", "--expand")
        self.assertEqual(code, 0)
        rows = out.splitlines()[1:5]
        self.assertEqual([row.split()[0] for row in rows], ["1,1|1,1", "1,1|2,2", "1,2|1,2", "1,2|2,1"])
        self.assertIn("E_12^12", rows[2])
        self.assertIn("E_22^11", rows[1])

    def test_k1_n1(self) -> None:
        data = self.run_json("diagrams", "-k", "1", "-n", "1")
        self.assertEqual(data["result"]["count"], "1")
        data = self.run_json("diagrams", "-k", "1", "-n", "2")
        self.assertEqual([d["rgs"] for d in data["result"]["diagrams"]], ["1|1", "1|2"])

    def test_budget(self) -> None:
        code, _, err = self.run_cli("diagrams", "-k", "4", "-n", "4", "--budget", "10")
        self.assertEqual(code, 3)
        self.assertIn("--budget", err)


class TestBratteliCommand(CliTestCase):
    def test_right_column(self) -> None:
        data = self.run_json("bratteli", "-n", "3", "--k-max", "6", "--verify")
        self.assertEqual(
            data["result"]["sums_of_squares"],
            ["1", "3", "21", "183", "1641", "14763", "132861"],
        )
        level4 = data["result"]["levels"][4]["multiplicities"]
        self.assertEqual(level4, {"000": "21", "011": "20", "101": "20", "110": "20"})
        self.assertTrue(data["ok"])

    def test_n1(self) -> None:
        data = self.run_json("bratteli", "-n", "1", "--k-max", "3")
        self.assertEqual(
            [level["multiplicities"] for level in data["result"]["levels"]],
            [{"0": "1"}, {"1": "1"}, {"0": "1"}, {"1": "1"}],
        )


class TestDeterminism(CliTestCase):
    def test_byte_identical_and_round_trip(self) -> None:
        argv = ("series", "-n", "3", "-a", "110", "--kind", "both", "--format", "json")
        _, first, _ = self.run_cli(*argv)
        _, second, _ = self.run_cli(*argv)
        self.assertEqual(first, second)
        payload = first.strip()
        self.assertEqual(encode_json(decode_json(payload)), payload)


if __name__ == "__main__":
    unittest.main()
