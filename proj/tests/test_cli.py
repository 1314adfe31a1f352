"""End-to-end checks of the skly3 command-line tool."""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

ARGS = None


def run(*argv, env=None):
    proc = subprocess.run([ARGS.cli, *argv], capture_output=True, text=True, env=env, timeout=300)
    report = json.loads(proc.stdout)
    jsonschema.validate(report, SCHEMA)
    return proc.returncode, report


class Cli(unittest.TestCase):
    def test_classify_order_two(self):
        code, r = run("classify", "--a", "1", "--b", "1", "--c", "5")
        self.assertEqual(code, 0)
        self.assertEqual(r["status"], "ok")
        self.assertEqual(r["results"]["sigma_order"], 2)
        self.assertEqual(r["results"]["pi_degree"], 2)

    def test_hilbert(self):
        code, r = run("hilbert", "--a", "1", "--b", "2", "--c", "3", "--max-degree", "4")
        self.assertEqual(code, 0)
        self.assertEqual(r["results"]["dims"], [1, 3, 6, 10, 15])

    def test_verify_sample(self):
        code, r = run("verify-rep", "--a", "1", "--b", "-1", "--c", "-1", "--field", "Q(zeta_12)",
                      "--rep", os.path.join(ARGS.samples, "prop41_family1.json"))
        self.assertEqual(code, 0)
        res = r["results"]
        self.assertEqual(res["residual"], "0")
        self.assertTrue(res["irreducible"])
        self.assertEqual(res["torsion"], "g-torsionfree")

    def test_degenerate_finding_exits_three(self):
        code, r = run("verify-rep", "--a", "1", "--b", "0", "--c", "0", "--field", "Q(zeta_3)",
                      "--family", "degenerate", "--n", "2", "--x", "2", "--y", "3", "--z", "5", "--p", "7")
        self.assertEqual(code, 3)
        self.assertEqual(r["status"], "finding")
        self.assertEqual(r["findings"][0]["kind"], "irreducibility_differs_from_claim")
        self.assertEqual(r["results"]["residual"], "0")

    def test_validation_errors_exit_two(self):
        for argv in (["classify", "--a", "1", "--b", "x", "--c", "5"],
                     ["classify", "--a", "1", "--b", "1", "--c", "5", "--nope"],
                     ["bogus"],
                     ["verify-rep", "--a", "1", "--b", "-1", "--c", "-1", "--rep", "/nonexistent.json"]):
            code, r = run(*argv)
            self.assertEqual(code, 2, argv)
            self.assertEqual(r["status"], "error")

    def test_every_command_validates(self):
        for argv in (["curve", "--a", "1", "--b", "1", "--c", "5"],
                     ["center", "--mode", "skew", "--q", "1", "--max-degree", "4"],
                     ["center", "--mode", "shat"],
                     ["center", "--mode", "invariants", "--n", "3", "--max-degree", "9"],
                     ["orbit", "--n", "3", "--demo"]):
            code, r = run(*argv)
            self.assertEqual(code, 0, argv)

    def test_search_roundtrip_and_seed(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "rep.json")
            argv = ["search", "--a", "1", "--b", "1", "--c", "5", "--d", "2", "--field", "complex",
                    "--restarts", "10", "--seed", "42"]
            code, r = run(*argv, "--out", out)
            self.assertEqual(code, 0)
            self.assertEqual(r["input"]["seed"], 42)
            tol = r["input"]["tol"]
            code, v = run("verify-rep", "--a", "1", "--b", "1", "--c", "5", "--field", "complex", "--rep", out)
            self.assertEqual(code, 0)
            self.assertLessEqual(float(v["results"]["residual"]), 2 * tol)
            _, again = run(*argv)
            self.assertEqual(again["results"]["hits"], r["results"]["hits"])

    def test_tolerance_from_environment(self):
        env = dict(os.environ, SKLY3_TOL="1e-7")
        _, r = run("classify", "--a", "1", "--b", "1", "--c", "5", env=env)
        self.assertEqual(r["input"]["tol"], 1e-7)
        _, r = run("classify", "--a", "1", "--b", "1", "--c", "5", "--tol", "1e-5", env=env)
        self.assertEqual(r["input"]["tol"], 1e-5)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    parser.add_argument("--schema", required=True)
    parser.add_argument("--samples", required=True)
    ARGS, rest = parser.parse_known_args()
    with open(ARGS.schema) as f:
        SCHEMA = json.load(f)
    jsonschema.Draft202012Validator.check_schema(SCHEMA)
    unittest.main(argv=[sys.argv[0], *rest])
