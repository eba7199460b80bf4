"""Black-box checks of the maxclass command line: outputs, exit codes, TSV shape, JSON schema."""

import json
import os
import subprocess
import sys
import unittest

import jsonschema

BINARY = sys.argv[1]
SCHEMA_PATH = sys.argv[2]
HEADER = "n\tp\tN\tr_enum\tr_closed\tr_series\tagree\terror\n"


def run(*args, env=None):
    merged = dict(os.environ)
    merged.pop("MAXCLASS_BUDGET", None)
    if env:
        merged.update(env)
    proc = subprocess.run([BINARY, *args], capture_output=True, env=merged)
    return proc.returncode, proc.stdout.decode("utf-8"), proc.stderr.decode("utf-8")


class Count(unittest.TestCase):
    def test_agreement(self):
        code, out, _ = run("count", "--n", "3", "--p", "5", "--N", "2", "--method", "all")
        self.assertEqual(code, 0)
        self.assertIn("r=56, agree", out)

    def test_two_generators(self):
        code, out, _ = run("count", "--n", "2", "--p", "3", "--N", "1")
        self.assertEqual(code, 0)
        self.assertIn("r=2, agree", out)

    def test_exceptional_prime(self):
        code, _, err = run("count", "--n", "4", "--p", "3", "--N", "1")
        self.assertEqual(code, 2)
        self.assertIn("exceptional prime p=3 < n=4", err)

    def test_budget_env_override(self):
        code, _, err = run("count", "--n", "3", "--p", "5", "--N", "2", env={"MAXCLASS_BUDGET": "10"})
        self.assertEqual(code, 2)
        self.assertIn("exceeds budget 10", err)
        code, out, _ = run("count", "--n", "3", "--p", "5", "--N", "2", "--method", "closed",
                           env={"MAXCLASS_BUDGET": "10"})
        self.assertEqual(code, 0)
        self.assertIn("r=56", out)

    def test_not_prime(self):
        code, _, err = run("count", "--n", "2", "--p", "4", "--N", "1")
        self.assertEqual(code, 2)
        self.assertIn("not prime", err)

    def test_threads_deterministic(self):
        _, one, _ = run("count", "--n", "4", "--p", "5", "--N", "2", "--format", "json")
        _, four, _ = run("count", "--n", "4", "--p", "5", "--N", "2", "--format", "json", "--threads", "4")
        self.assertEqual(one, four)


class Zeta(unittest.TestCase):
    def test_three_generators(self):
        code, out, _ = run("zeta", "--n", "3")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "(1 - t)^2 / ((1 - p t)^2)")
        self.assertIn("abscissa 1", lines)
        self.assertIn("funceq OK (factor p^2)", lines)

    def test_series(self):
        code, out, _ = run("zeta", "--n", "2", "--p", "3", "--series", "3")
        self.assertEqual(code, 0)
        self.assertIn("series p=3: 1, 2, 6, 18", out)

    def test_abscissa(self):
        _, out, _ = run("zeta", "--n", "6")
        self.assertIn("abscissa 4", out.splitlines())


class Verify(unittest.TestCase):
    def test_shout(self):
        code, out, _ = run("verify", "--suite", "shout", "--n", "3", "--p", "5", "--N", "1")
        self.assertEqual(code, 0)
        self.assertIn("orbit-size law", out)
        self.assertIn("125 tuples", out)
        self.assertEqual(out.splitlines()[-1], "pass")

    def test_oracle(self):
        code, out, _ = run("verify", "--suite", "oracle", "--n", "2", "--p", "3", "--N", "2")
        self.assertEqual(code, 0)
        self.assertIn("81 tuples", out)
        self.assertIn("dim <= 9", out)

    def test_zeta(self):
        code, out, _ = run("verify", "--suite", "zeta")
        self.assertEqual(code, 0)
        self.assertIn("n=2..10", out)


class Table(unittest.TestCase):
    def test_grid(self):
        code, out, _ = run("table", "--n", "3", "--p", "5", "--max-N", "2")
        self.assertEqual(code, 0)
        self.assertEqual(out, HEADER + "3\t5\t0\t1\t1\t1\tyes\t\n3\t5\t1\t8\t8\t8\tyes\t\n3\t5\t2\t56\t56\t56\tyes\t\n")

    def test_two_generators(self):
        _, out, _ = run("table", "--n", "2", "--p", "2", "--max-N", "3")
        rows = [line.split("\t") for line in out.splitlines()[1:]]
        self.assertEqual([r[3] for r in rows], ["1", "1", "2", "4"])

    def test_empty_grid(self):
        _, out, _ = run("table", "--n", "3", "--p", "5", "--max-N", "0")
        self.assertEqual(out, HEADER + "3\t5\t0\t1\t1\t1\tyes\t\n")

    def test_line_endings(self):
        proc = subprocess.run([BINARY, "table", "--n", "2", "--p", "3", "--max-N", "1"], capture_output=True)
        self.assertNotIn(b"\r", proc.stdout)
        self.assertTrue(proc.stdout.endswith(b"\n"))

    def test_cell_errors_continue(self):
        code, out, _ = run("table", "--n", "4", "--p", "3,5", "--max-N", "1")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(len(lines), 5)
        bad = lines[1].split("\t")
        self.assertEqual(bad[:3], ["4", "3", "0"])
        self.assertIn("exceptional prime p=3 < n=4", bad[7])
        self.assertEqual(lines[4], "4\t5\t1\t28\t28\t28\tyes\t")

    def test_budget_error_column(self):
        _, out, _ = run("table", "--n", "3", "--p", "5", "--max-N", "2", "--budget", "30")
        last = out.splitlines()[-1].split("\t")
        self.assertEqual(last[3], "")
        self.assertEqual(last[4:7], ["56", "56", "yes"])
        self.assertIn("exceeds budget", last[7])


class Dump(unittest.TestCase):
    def test_rows(self):
        code, out, _ = run("dump", "--n", "3", "--p", "5", "--N", "1", "--lambda", "0,1,1")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertEqual(doc["rows"], [[0, 2, 0, 4, 4], [1, 2, 3, 4, 0], [1, 1, 1, 1, 1]])

    def test_bad_lambda(self):
        code, _, _ = run("dump", "--n", "3", "--p", "5", "--N", "1", "--lambda", "1,1,1")
        self.assertEqual(code, 2)


class Schema(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA_PATH, encoding="utf-8") as fh:
            cls.validator = jsonschema.Draft202012Validator(json.load(fh))

    def check(self, *args):
        code, out, _ = run(*args)
        self.assertEqual(code, 0)
        self.validator.validate(json.loads(out))
        return json.loads(out)

    def test_count(self):
        doc = self.check("count", "--n", "3", "--p", "5", "--N", "2", "--format", "json")
        self.assertEqual(doc["r"], "56")
        self.assertEqual(doc["orbit_census"], {"1": "20", "5": "16", "25": "20"})

    def test_count_single_method(self):
        doc = self.check("count", "--n", "5", "--p", "7", "--N", "9", "--method", "closed", "--format", "json")
        self.assertIsNone(doc["r_enumerated"])

    def test_zeta(self):
        doc = self.check("zeta", "--n", "4", "--p", "5", "--series", "4", "--format", "json")
        self.assertEqual(doc["series"][:2], ["1", "28"])
        self.assertEqual(doc["funceq_factor"], "p^3")

    def test_verify(self):
        doc = self.check("verify", "--suite", "shout", "--n", "3", "--p", "5", "--N", "1", "--format", "json")
        self.assertTrue(doc["passed"])

    def test_dump(self):
        self.check("dump", "--n", "2", "--p", "2", "--N", "1", "--lambda", "0,1")


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0]], verbosity=2)
