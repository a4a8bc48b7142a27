"""End-to-end checks of the dancyl command line: exit codes, proof round trips,
tampering, determinism and schema conformance."""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

CLI = pathlib.Path(sys.argv.pop(1))
SCHEMAS = pathlib.Path(sys.argv.pop(1))

S0 = "x^1 z = (y-1)^1 (y+1)^1"
S1 = "x^2 z = (y-1)^1 (y+1)^1"


def run(*args):
    return subprocess.run([str(CLI), *args], capture_output=True, text=True, timeout=300)


def validator(name):
    try:
        import jsonschema
        import referencing
    except ImportError:
        return None
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        resources.append((doc["$id"], referencing.Resource.from_contents(doc)))
    registry = referencing.Registry().with_resources(resources)
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=registry)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def conforms(self, doc, schema):
        v = validator(schema)
        if v is None:
            self.skipTest("jsonschema not installed")
        errors = sorted(v.iter_errors(doc), key=str)
        self.assertEqual(errors, [], msg="\n".join(e.message for e in errors))

    def test_analyze_report(self):
        r = run("analyze", S0)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        self.assertTrue(doc["smooth"])
        self.assertEqual(len(doc["fibers"][0]["components"]), 2)
        self.assertEqual(doc["cocycle_class"]["text"], "2*x^-1")
        self.assertEqual(doc["classification"], "CounterexampleCandidate")
        self.conforms(doc, "report.schema.json")
        for text in ["x z = y", "x^2 z = y^2 - x", "x^2 z = (y - 1)^3 (y + 2)^2 - x"]:
            r = run("analyze", text)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.conforms(json.loads(r.stdout), "report.schema.json")

    def test_counterexample_round_trip(self):
        out = self.dir / "proof.json"
        r = run("counterexample", S0, "--out", str(out))
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(out.read_text())
        self.assertEqual(doc["target"]["n"], 2)
        self.assertTrue(all(doc["certificate"]["flags"].values()))
        self.conforms(doc, "proof.schema.json")
        v = run("verify", str(out))
        self.assertEqual(v.returncode, 0, v.stderr)
        verdict = json.loads(v.stdout)
        self.assertTrue(verdict["valid"])
        self.conforms(verdict, "verification.schema.json")

    def test_cylinder_iso_round_trip(self):
        for a, b, extra in [(S0, S1, []), (S1, "x^3 z = (y-1)(y+1)", []), (S0, S1, ["--auxiliary-shift", "1"])]:
            out = self.dir / "iso.json"
            r = run("cylinder-iso", a, b, "--out", str(out), *extra)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.conforms(json.loads(out.read_text()), "proof.schema.json")
            self.assertEqual(run("verify", str(out)).returncode, 0)

    def test_tampered_proof_fails(self):
        out = self.dir / "proof.json"
        self.assertEqual(run("cylinder-iso", S0, S1, "--out", str(out)).returncode, 0)
        doc = json.loads(out.read_text())
        y = doc["certificate"]["forward"]["y"]
        tampered = y.replace("-1/2*", "-1/3*", 1)
        self.assertNotEqual(tampered, y)
        doc["certificate"]["forward"]["y"] = tampered
        bad = self.dir / "bad.json"
        bad.write_text(json.dumps(doc))
        v = run("verify", str(bad))
        self.assertEqual(v.returncode, 1)
        self.assertIn("membership fails", v.stderr)
        self.assertFalse(json.loads(v.stdout)["valid"])

    def test_repeated_runs_are_byte_identical(self):
        for args in [("analyze", S0), ("counterexample", S0), ("cylinder-iso", S0, "x^3 z = (y-1)(y+1)")]:
            first, second = run(*args), run(*args)
            self.assertEqual(first.returncode, 0)
            self.assertEqual(first.stdout, second.stdout)

    def test_cocycle_subcommands(self):
        r = run("cocycle", "push", "2*x^-3", "x^2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout)["result"]["text"], "2*x^-1")
        self.assertEqual(run("cocycle", "orbit", "2*x^-1", "3*x^-1").returncode, 0)
        self.assertEqual(run("cocycle", "orbit", "2*x^-1", "2*x^-2").returncode, 1)
        p = run("cocycle", "profile", "0,1: x^-1; 0,2: 3*x^-2")
        self.assertEqual(p.returncode, 0, p.stderr)
        self.assertEqual(json.loads(p.stdout)["pole_orders"], [1, 2, 2])

    def test_exit_codes(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("analyze").returncode, 2)
        self.assertEqual(run("analyze", "x^1 z = 2 (y-1)^1").returncode, 2)
        self.assertEqual(run("cocycle", "push", "x^-1", "x^").returncode, 2)
        self.assertEqual(run("counterexample", "x z = y").returncode, 1)
        self.assertEqual(run("cylinder-iso", S0, "x z = (y-1)(y+1)(y-2)").returncode, 1)
        self.assertEqual(run("cylinder-iso", S0, S1, "--degree-bound", "2").returncode, 1)
        garbage = self.dir / "garbage.json"
        garbage.write_text("{not json")
        self.assertEqual(run("verify", str(garbage)).returncode, 2)


if __name__ == "__main__":
    unittest.main(verbosity=2)
