import json
import unittest
from fractions import Fraction

from jacksov.exceptions import DegenerateLowerParameter, InvalidIndexError, PartitionError
from jacksov.sov.coefficients import (
    CoeffProblem,
    CoeffTable,
    a_to_c,
    amn_table,
    cmn_by_expansion,
    cmn_table,
    first_recurrence_residuals,
    second_recurrence_residuals,
    substitution_factor,
    two_term_residuals,
)
from jacksov.utils.files import dumps
from jacksov import testing


def nonzero(residuals):
    return {k: v for k, v in residuals.items() if v}


class TestCoeffProblem(unittest.TestCase):
    def test_order(self):
        with self.assertRaises(PartitionError):
            CoeffProblem(0, 1, 1)
        with self.assertRaises(PartitionError):
            CoeffProblem(1, -1, 1)

    def test_from_partition(self):
        p = CoeffProblem.from_partition((5, 3, 2), "2/5")
        self.assertEqual((p.r1, p.r2), (3, 1))
        self.assertEqual(p.partition(), (3, 1, 0))
        with self.assertRaises(PartitionError):
            CoeffProblem.from_partition((5, 3), "2/5")

    def test_indices(self):
        self.assertEqual(
            list(CoeffProblem(2, 0, 1).indices()),
            [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)],
        )


class TestCTable(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_expansion_anchor(self):
        self.assertEqual(
            cmn_by_expansion((1, 0, 0), "2/5").to_text(),
            "{(0,0): 3/2, (0,1): -1/2, (1,0): 3/4}",
        )

    def test_expansion_strips_prefactor(self):
        self.assertEqual(
            cmn_by_expansion((3, 2, 1), "2/5").entries,
            cmn_by_expansion((2, 1, 0), "2/5").entries,
        )

    def test_closed_forms_agree(self):
        for r1, r2, g in [(2, 1, "2/5"), (3, 1, "7/3"), (3, 3, "2/5"), (4, 2, "3/2")]:
            problem = CoeffProblem(r1, r2, g)
            expected = cmn_table(problem, "expansion")
            for formula in ("f1", "f2"):
                with self.subTest(r1=r1, r2=r2, g=g, formula=formula):
                    self.assertEqual(cmn_table(problem, formula).entries, expected.entries)

    def test_fallback(self):
        problem = CoeffProblem(1, 1, 1)
        with self.assertRaises(DegenerateLowerParameter) as ctx:
            cmn_table(problem, "f1")
        self.assertEqual(ctx.exception.branch, "f1")
        self.assertIn("f2", str(ctx.exception))

        table = cmn_table(problem, "auto")
        self.assertEqual(table.branch, "f2")
        self.assertEqual(
            table.entries,
            {(0, 0): Fraction(3), (1, 0): Fraction(6), (0, 1): Fraction(-2)},
        )
        self.assertEqual(table, cmn_table(problem, "expansion"))

    def test_both_degenerate(self):
        with self.assertRaises(DegenerateLowerParameter) as ctx:
            cmn_table(CoeffProblem(2, 1, 1), "auto")
        self.assertEqual(ctx.exception.branch, "f2")

    def test_unknown_formula(self):
        with self.assertRaises(ValueError):
            cmn_table(CoeffProblem(1, 0, 1), "f3")

    def test_trivial(self):
        self.assertEqual(cmn_table(CoeffProblem(0, 0, "1/3")).entries, {(0, 0): 1})


class TestRecurrences(unittest.TestCase):
    def setUp(self):
        testing.setup()

    def tearDown(self):
        testing.teardown()

    def test_first_recurrence(self):
        for r1, r2, g in [(1, 1, 1), (2, 1, "2/5"), (3, 2, "7/3")]:
            with self.subTest(r1=r1, r2=r2, g=g):
                table = cmn_table(CoeffProblem(r1, r2, g), "expansion")
                self.assertEqual(nonzero(first_recurrence_residuals(table)), {})

    def test_a_table_anchor(self):
        table = amn_table(CoeffProblem(1, 0, "2/5"))
        self.assertEqual(table.kind, "a")
        self.assertEqual(
            table.entries,
            {(0, 0): Fraction(3, 2), (1, 0): Fraction(9, 8), (0, 1): Fraction(3, 8)},
        )

    def test_a_table_identities(self):
        for r1, r2, g in [(1, 0, "2/5"), (2, 1, "2/5"), (3, 1, "7/3")]:
            problem = CoeffProblem(r1, r2, g)
            table = amn_table(problem)
            with self.subTest(r1=r1, r2=r2, g=g):
                self.assertEqual(nonzero(two_term_residuals(table)), {})
                self.assertEqual(nonzero(second_recurrence_residuals(table)), {})
                self.assertEqual(
                    a_to_c(table).entries, cmn_table(problem, "expansion").entries
                )

    def test_substitution_factor(self):
        problem = CoeffProblem(1, 0, "2/5")
        self.assertEqual(substitution_factor(problem, 0, 0), 1)
        self.assertEqual(substitution_factor(problem, 1, 0), Fraction(2, 3))
        self.assertEqual(substitution_factor(problem, 0, 1), Fraction(-4, 3))
        with self.assertRaises(InvalidIndexError):
            substitution_factor(problem, 1, 1)

    def test_kind_checks(self):
        c = cmn_table(CoeffProblem(1, 0, "2/5"), "expansion")
        with self.assertRaises(ValueError):
            a_to_c(c)
        with self.assertRaises(ValueError):
            two_term_residuals(c)
        with self.assertRaises(ValueError):
            first_recurrence_residuals(amn_table(CoeffProblem(1, 0, "2/5")))


class TestCoeffTableJson(unittest.TestCase):
    def test_schema(self):
        table = cmn_by_expansion((1, 0, 0), "2/5")
        data = json.loads(dumps(table))
        self.assertEqual(
            data,
            {
                "r1": 1,
                "r2": 0,
                "g": "2/5",
                "kind": "c",
                "entries": [
                    {"m": 0, "n": 0, "value": "3/2"},
                    {"m": 0, "n": 1, "value": "-1/2"},
                    {"m": 1, "n": 0, "value": "3/4"},
                ],
            },
        )
        self.assertEqual(CoeffTable.from_json(data), table)

    def test_range(self):
        with self.assertRaises(InvalidIndexError):
            CoeffTable(CoeffProblem(1, 0, 1), {(1, 1): 1})
        with self.assertRaises(ValueError):
            CoeffTable(CoeffProblem(1, 0, 1), {}, kind="b")
