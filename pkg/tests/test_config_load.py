import tempfile
import unittest
from pathlib import Path
import sys


ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))


from hypercube_walks.core.config import load_config, resolve_limits  # noqa: E402


class TestConfigLoad(unittest.TestCase):
    def test_load_defaults_when_missing(self) -> None:
        with tempfile.TemporaryDirectory() as td:
            cfg = load_config(Path(td) / "missing.toml")
            self.assertEqual(cfg.limits.max_n, 12)
            self.assertEqual(cfg.limits.budget, 10_000_000)
            self.assertEqual(cfg.output.format, "table")
            self.assertEqual(cfg.selftest.max_n, 4)
            self.assertEqual(cfg.selftest.k_max, 8)

    def test_load_from_file_and_overrides(self) -> None:
        with tempfile.TemporaryDirectory() as td:
            path = Path(td) / "config.toml"
            path.write_text(
                '\n'.join(
                    [
                        "[limits]",
                        "max_n = 6",
                        "budget = 5000",
                        "",
                        "[output]",
                        'format = "json"',
                        "",
                        "[selftest]",
                        "k_max = 6",
                    ]
                )
                + "\n",
                encoding="utf-8",
            )
            cfg = load_config(path, overrides={"limits": {"budget": 100}})
            self.assertEqual(cfg.limits.max_n, 6)
            self.assertEqual(cfg.limits.budget, 100)
            self.assertEqual(cfg.output.format, "json")
            self.assertEqual(cfg.selftest.k_max, 6)
            self.assertEqual(cfg.selftest.max_n, 4)

    def test_rejects_bad_values(self) -> None:
        with tempfile.TemporaryDirectory() as td:
            missing = Path(td) / "missing.toml"
            with self.assertRaises(ValueError):
                load_config(missing, overrides={"limits": {"max_n": 0}})
            with self.assertRaises(ValueError):
                load_config(missing, overrides={"output": {"format": "yaml"}})

    def test_resolve_limits_default(self) -> None:
        self.assertEqual(resolve_limits(None).max_n, 12)


if __name__ == "__main__":
    unittest.main()
