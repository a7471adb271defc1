import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from jacksov.cli import EXIT_DEGENERATE, EXIT_OK, EXIT_USAGE, main
from jacksov import testing


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue().strip(), err.getvalue()


class TestCompute(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_repr1(self):
        self.assertEqual(
            run("compute", "--vars", "3", "--lambda", "1,0,0", "--g", "1/3",
                "--form", "repr1", "--basis", "elementary"),
            (EXIT_OK, "e1", ""),
        )

    def test_gegenbauer(self):
        code, out, _ = run(
            "compute", "--vars", "2", "--lambda", "2,0", "--g", "2", "--form", "gegenbauer"
        )
        self.assertEqual((code, out), (EXIT_OK, "m_(2) + 4/3*m_(1,1)"))

    def test_oracle_default(self):
        code, out, _ = run("compute", "--lambda", "2,1", "--g", "1")
        self.assertEqual((code, out), (EXIT_OK, "m_(2,1) + 2*m_(1,1,1)"))

    def test_degenerate(self):
        code, out, err = run(
            "compute", "--vars", "3", "--lambda", "2,1,0", "--g", "1", "--form", "repr2"
        )
        self.assertEqual(code, EXIT_DEGENERATE)
        self.assertEqual(out, "")
        self.assertIn("repr1", err)
        self.assertIn("oracle", err)

    def test_help_names_degenerate_forms(self):
        out = io.StringIO()
        with redirect_stdout(out), self.assertRaises(SystemExit) as ctx:
            main(["compute", "--help"])
        self.assertEqual(ctx.exception.code, 0)
        text = " ".join(out.getvalue().split())
        self.assertIn("repr1 and repr2 are degenerate at g=1", text)
        self.assertIn("exit with status 3", text)

    def test_json(self):
        code, out, _ = run(
            "compute", "--vars", "2", "--lambda", "2,0", "--g", "2", "--json"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            json.loads(out),
            {
                "nvars": 2,
                "basis": "monomial",
                "terms": [{"mu": [2, 0], "coeff": "1"}, {"mu": [1, 1], "coeff": "4/3"}],
            },
        )

    def test_shaped_forms(self):
        code, out, _ = run(
            "compute", "--lambda", "2", "--g", "1", "--form", "one-row", "--basis", "elementary"
        )
        self.assertEqual((code, out), (EXIT_OK, "e1^2 - e2"))
        code, out, _ = run(
            "compute", "--lambda", "1,1", "--g", "2/5", "--form", "two-row", "--basis", "elementary"
        )
        self.assertEqual((code, out), (EXIT_OK, "e2"))
        code, out, _ = run(
            "compute", "--vars", "4", "--lambda", "1,1,1", "--form", "rectangular",
            "--basis", "elementary",
        )
        self.assertEqual((code, out), (EXIT_OK, "e3"))

    def test_usage_errors(self):
        for argv in (
            ("compute", "--lambda", "1,2,0"),
            ("compute", "--lambda", "2,1", "--form", "one-row"),
            ("compute", "--lambda", "2,1", "--g", "0"),
            ("compute", "--lambda", "2,1", "--g", "0.5"),
            ("compute", "--vars", "3", "--lambda", "2,1,0", "--form", "standard"),
        ):
            with self.subTest(argv=argv):
                code, _, err = run(*argv)
                self.assertEqual(code, EXIT_USAGE)
                self.assertTrue(err.startswith("error:"), err)

    def test_missing_lambda(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["compute"])
        self.assertEqual(ctx.exception.code, EXIT_USAGE)

    def test_list_forms(self):
        code, out, _ = run("compute", "--list-forms")
        self.assertEqual(code, EXIT_OK)
        names = [line.split()[0] for line in out.splitlines()]
        self.assertIn("repr1", names)
        self.assertIn("rectangular", names)


class TestSeparated(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_sum(self):
        self.assertEqual(
            run("separated", "--vars", "3", "--lambda", "1,0,0", "--g", "1/3")[:2],
            (EXIT_OK, "1, 1/2"),
        )
        self.assertEqual(
            run("separated", "--vars", "3", "--lambda", "2,2,2")[:2], (EXIT_OK, "0, 0, 1")
        )

    def test_product(self):
        self.assertEqual(
            run("separated", "--vars", "2", "--lambda", "1,0", "--g", "5/2",
                "--form", "product")[:2],
            (EXIT_OK, "1, 1"),
        )
        code, _, err = run(
            "separated", "--vars", "2", "--lambda", "1,0", "--g", "1", "--form", "product"
        )
        self.assertEqual(code, EXIT_DEGENERATE)
        self.assertIn("degenerate", err)

    def test_json(self):
        code, out, _ = run(
            "separated", "--vars", "3", "--lambda", "1", "--g", "1/3", "--json"
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out), {"coeffs": ["1", "1/2"]})


class TestCoeffs(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_expansion(self):
        code, out, _ = run("coeffs", "--r1", "1", "--g", "2/5", "--formula", "expansion")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            json.loads(out)["entries"],
            [
                {"m": 0, "n": 0, "value": "3/2"},
                {"m": 0, "n": 1, "value": "-1/2"},
                {"m": 1, "n": 0, "value": "3/4"},
            ],
        )

    def test_a_table(self):
        code, out, _ = run("coeffs", "--r1", "1", "--g", "2/5", "--formula", "a-table")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["kind"], "a")

    def test_degenerate(self):
        code, _, err = run("coeffs", "--r1", "2", "--r2", "1", "--g", "1", "--formula", "f1")
        self.assertEqual(code, EXIT_DEGENERATE)
        self.assertIn("f2", err)

    def test_bad_rows(self):
        self.assertEqual(run("coeffs", "--r1", "0", "--r2", "1")[0], EXIT_USAGE)


class TestVerify(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_unknown_suite(self):
        code, _, err = run("verify", "--suite", "nope")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("unknown suite 'nope'", err)

    def test_report(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "report.json")
            code, out, _ = run(
                "verify", "--suite", "cmn", "--max-weight", "1", "--g-panel", "2/5",
                "--no-progress", "--output", path,
            )
            self.assertEqual(code, EXIT_OK)
            report = json.loads(out)
            self.assertEqual(report["suite"], "cmn")
            self.assertEqual(report["cases_run"], 6)
            self.assertEqual(report["failures"], [])
            with open(path, encoding="utf-8") as f:
                written = json.load(f)
            written.pop("wall_time_ms")
            report.pop("wall_time_ms")
            self.assertEqual(written, report)
