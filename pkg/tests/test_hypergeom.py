import unittest
from fractions import Fraction

from jacksov.exact import pochhammer
from jacksov.exceptions import DegenerateLowerParameter, NonTerminating
from jacksov.hypergeom import (
    HypergeomSpec,
    appell_f4_terminating,
    gegenbauer,
    pfq_polynomial,
    pfq_terminating,
    pfq_terms,
    saalschutz_3f2,
)
from jacksov.unipoly import UniPoly


class TestPfq(unittest.TestCase):
    def test_small_sum(self):
        self.assertEqual(
            pfq_terminating(HypergeomSpec((1, 2, -1), (4, -1), 1)), Fraction(3, 2)
        )

    def test_chu_vandermonde(self):
        # 2F1(-n, b; c; 1) = (c - b)_n / (c)_n
        b, c = Fraction(1, 2), Fraction(5, 2)
        self.assertEqual(
            pfq_terminating(HypergeomSpec((-3, b), (c,), 1)),
            pochhammer(c - b, 3) / pochhammer(c, 3),
        )

    def test_argument(self):
        # 1F0(-2;;y) = (1 - y)^2
        self.assertEqual(pfq_polynomial([-2], []), UniPoly([1, -2, 1]))
        self.assertEqual(
            pfq_terminating(HypergeomSpec((-2,), (), "1/3")), Fraction(4, 9)
        )

    def test_non_terminating(self):
        with self.assertRaises(NonTerminating):
            pfq_terminating(HypergeomSpec((1, 2), (3,)))

    def test_degenerate(self):
        with self.assertRaises(DegenerateLowerParameter) as ctx:
            pfq_terms([-3], [-1], 4, branch="test")
        self.assertEqual(ctx.exception.index, 2)
        self.assertEqual(ctx.exception.branch, "test")

    def test_lower_vanishing_after_termination(self):
        # (-1)_k only vanishes from k = 2 on, the series stops at k = 1
        self.assertEqual(pfq_terms([-1], [-1], 2), [1, 1])


class TestSaalschutz(unittest.TestCase):
    def test_matches_direct_sum(self):
        a, b, c, n = Fraction(1, 3), Fraction(2), Fraction(5, 2), 3
        direct = pfq_terminating(HypergeomSpec((a, b, -n), (c, 1 + a + b - c - n), 1))
        self.assertEqual(saalschutz_3f2(a, b, n, c), direct)

    def test_n_zero(self):
        self.assertEqual(saalschutz_3f2("1/3", 2, 0, "5/2"), 1)


class TestAppellF4(unittest.TestCase):
    def test_trivial(self):
        self.assertEqual(appell_f4_terminating(0, 5, 1, 1, 0), {(0, 0): Fraction(1)})

    def test_first_order(self):
        self.assertEqual(
            appell_f4_terminating(-1, 2, 3, 4, 1),
            {(0, 0): Fraction(1), (1, 0): Fraction(-2, 3), (0, 1): Fraction(-1, 2)},
        )

    def test_needs_termination(self):
        with self.assertRaises(NonTerminating):
            appell_f4_terminating(-1, 2, 3, 4, 2)


class TestGegenbauer(unittest.TestCase):
    def test_chebyshev_u(self):
        self.assertEqual(gegenbauer(0, 1), UniPoly([1]))
        self.assertEqual(gegenbauer(2, 1), UniPoly([-1, 0, 4]))
        self.assertEqual(gegenbauer(3, 1), UniPoly([0, -4, 0, 8]))

    def test_general_g(self):
        g = Fraction(2, 5)
        self.assertEqual(gegenbauer(1, g), UniPoly([0, 2 * g]))
        self.assertEqual(gegenbauer(2, g), UniPoly([-g, 0, 2 * g * (g + 1)]))
