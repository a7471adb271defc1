import json
import unittest

from fractions import Fraction

from jacksov.exceptions import DegenerateLowerParameter, UnknownSuiteError
from jacksov.utils.files import dumps
from jacksov.verify import (
    SUITE_NAMES,
    Case,
    CaseResult,
    SuiteReport,
    run_case,
    run_suite,
    screen_panel,
    suite_cases,
)
from jacksov import testing


def _degenerate():
    raise DegenerateLowerParameter(-1, 2, branch="f1")


class TestRunCase(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_pass_fail(self):
        self.assertEqual(run_case(Case("a", lambda: (1, 1))).status, "pass")
        res = run_case(Case("b", lambda: (1, 2)))
        self.assertEqual(res.status, "fail")
        self.assertEqual((res.expected, res.actual), (1, 2))

    def test_skip(self):
        res = run_case(Case("c", _degenerate))
        self.assertEqual(res.status, "skip")
        self.assertIn("[f1]", res.reason)


class TestSuiteReport(unittest.TestCase):
    def test_from_results(self):
        results = [
            CaseResult("z", "pass"),
            CaseResult("b", "fail", 1, 2),
            CaseResult("a", "skip", reason="degenerate"),
            CaseResult("c", "fail", 3, 4, audit=True),
        ]
        report = SuiteReport.from_results("demo", results, 12)
        self.assertEqual(report.cases_run, 3)
        self.assertEqual(report.cases_passed, 1)
        self.assertEqual(report.failures, [{"case_id": "b", "expected": 1, "actual": 2}])
        self.assertEqual(report.skipped, [{"case_id": "a", "reason": "degenerate"}])
        self.assertEqual(report.outcomes, [{"case_id": "c", "status": "fail"}])
        self.assertFalse(report.ok)
        self.assertEqual(report.skip_rate, 0.25)

    def test_audit_failures_do_not_fail(self):
        report = SuiteReport.from_results("demo", [CaseResult("c", "fail", audit=True)], 0)
        self.assertTrue(report.ok)

    def test_json(self):
        data = json.loads(dumps(SuiteReport("demo", wall_time_ms=5)))
        self.assertEqual(
            data,
            {
                "suite": "demo",
                "cases_run": 0,
                "cases_passed": 0,
                "failures": [],
                "skipped": [],
                "outcomes": [],
                "wall_time_ms": 5,
                "panel_substitutions": [],
            },
        )


class TestSuites(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_names(self):
        self.assertEqual(
            SUITE_NAMES,
            (
                "separated",
                "watson",
                "a1",
                "cmn",
                "recurrences",
                "sov-a2",
                "oracle",
                "orthogonality",
                "conjecture-rect",
                "all",
            ),
        )

    def test_unknown(self):
        with self.assertRaises(UnknownSuiteError):
            suite_cases("nope", 1, ["1"])
        with self.assertRaises(ValueError):
            suite_cases("cmn", -1, ["1"])

    def test_case_ids_unique(self):
        ids = [c.case_id for c in suite_cases("all", 2, ["1/3", "2/5"])]
        self.assertEqual(len(ids), len(set(ids)))

    def test_cmn(self):
        report = run_suite("cmn", max_weight=2, g_panel=["2/5"], workers=1, progress=False)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.cases_run, 12)
        self.assertEqual(report.skipped, [])

    def test_skips_at_g_one(self):
        report = run_suite("cmn", max_weight=1, g_panel="1", workers=1, progress=False)
        self.assertTrue(report.ok)
        self.assertEqual(report.cases_run, 3)
        self.assertEqual(
            [s["case_id"] for s in report.skipped],
            ["cmn/r1=1/r2=0/g=1/f1", "cmn/r1=1/r2=0/g=1/f2", "cmn/r1=1/r2=1/g=1/f1"],
        )

    def test_threads(self):
        report = run_suite("oracle", max_weight=2, g_panel=["7/3"], workers=3, progress=False)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(report.cases_run, report.cases_passed)

    def test_all_small(self):
        report = run_suite("all", max_weight=1, g_panel=["2/5"], workers=1, progress=False)
        self.assertTrue(report.ok, report.failures)
        self.assertGreater(report.cases_run, 0)
        self.assertEqual(
            {o["status"] for o in report.outcomes}, {"pass"}
        )


class TestPanelScreening(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_replaces_degenerate_coupling(self):
        panel, substitutions = screen_panel("cmn", 1, ["1", "2/5"])
        self.assertEqual([g.value for g in panel], [Fraction(8, 7), Fraction(2, 5)])
        self.assertEqual(len(substitutions), 1)
        sub = substitutions[0]
        self.assertEqual((str(sub.g), str(sub.replaced_by)), ("1", "8/7"))
        self.assertTrue(sub.reason.startswith("cmn/r1=1/r2=0/g=1/"))

    def test_generic_panel_unchanged(self):
        panel, substitutions = screen_panel("cmn", 2, ["2/5", "7/3"])
        self.assertEqual([str(g) for g in panel], ["2/5", "7/3"])
        self.assertEqual(substitutions, [])

    def test_replacement_not_on_panel(self):
        panel, _ = screen_panel("cmn", 1, ["1", "8/7"])
        self.assertEqual([g.value for g in panel], [Fraction(9, 7), Fraction(8, 7)])

    def test_default_panel_skip_rate(self):
        for suite in ("cmn", "separated", "sov-a2"):
            with self.subTest(suite=suite):
                report = run_suite(suite, max_weight=2, workers=1, progress=False)
                self.assertTrue(report.ok, report.failures)
                self.assertLessEqual(report.skip_rate, 0.1)
                self.assertEqual(report.skipped, [])

    def test_default_panel_records_substitutions(self):
        report = run_suite("cmn", max_weight=2, workers=1, progress=False)
        replaced = {s["g"]: s["replaced_by"] for s in report.panel_substitutions}
        self.assertEqual(replaced.get("1"), "8/7")
        data = json.loads(dumps(report))
        self.assertEqual(data["panel_substitutions"], report.panel_substitutions)

    def test_explicit_panel_not_screened(self):
        report = run_suite("cmn", max_weight=1, g_panel=["1"], workers=1, progress=False)
        self.assertEqual(report.panel_substitutions, [])
        self.assertEqual(len(report.skipped), 3)

    def test_oracle_covers_four_variables(self):
        ids = [c.case_id for c in suite_cases("oracle", 2, ["2/5"])]
        self.assertIn("oracle/matrix/n=4/d=2/g=2/5", ids)
        self.assertTrue(any(i.endswith("/symmetric-image") and "(1,1,0,0)" in i for i in ids))
