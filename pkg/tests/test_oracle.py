import unittest
from fractions import Fraction

from jacksov.exceptions import InvalidCouplingError, NotSymmetricError
from jacksov.oracle import (
    apply_hg,
    apply_hg_full,
    constant_term_inner,
    eigenvalue,
    jack_oracle,
    operator_matrix,
)
from jacksov.partitions import partitions_of
from jacksov.separated import c_lambda
from jacksov.sympoly import SymPoly, is_symmetric


def m(mu, nvars, coeff=1):
    return SymPoly.monomial(mu, nvars, coeff)


class TestOperator(unittest.TestCase):
    def test_apply_on_m11(self):
        self.assertEqual(apply_hg(m((1, 1), 2), 1).to_text(), "2*m_(1,1)")

    def test_apply_on_m2(self):
        g = Fraction(2, 5)
        self.assertEqual(
            apply_hg(m((2,), 2), g), m((2,), 2, 4 + 2 * g) + m((1, 1), 2, 4 * g)
        )

    def test_constants_are_killed(self):
        self.assertTrue(apply_hg(SymPoly.constant(5, 3), "1/3").is_zero())

    def test_eigenvalue(self):
        self.assertEqual(eigenvalue((2, 0), 1, 2), 6)
        self.assertEqual(eigenvalue((1, 0, 0), "2/5", 3), Fraction(9, 5))
        self.assertEqual(eigenvalue((1, 1, 1), "2/5", 3), 3)

    def test_matrix(self):
        matrix = operator_matrix(3, 3, "2/5")
        self.assertEqual(matrix.basis, tuple(partitions_of(3, 3)))
        self.assertTrue(matrix.is_triangular())
        self.assertTrue(matrix.diagonal_is_spectrum())
        self.assertEqual(matrix.entry((1, 1, 1), (3, 0, 0)), 0)


class TestExpandedOperator(unittest.TestCase):
    def test_m2_by_hand(self):
        # 4 x1^2 + 4 x2^2 plus g (2 x1^2 + 4 x1 x2 + 2 x2^2)
        self.assertEqual(
            apply_hg_full(m((2,), 2), 1),
            {(2, 0): 6, (0, 2): 6, (1, 1): 4},
        )

    def test_agrees_with_monomial_basis(self):
        g = Fraction(2, 5)
        for nvars in (2, 3, 4):
            for lam in partitions_of(4, nvars):
                with self.subTest(lam=lam):
                    p = jack_oracle(lam, g, nvars)
                    image = apply_hg_full(p, g)
                    self.assertTrue(is_symmetric(nvars, image))
                    self.assertEqual(SymPoly.from_monomials(nvars, image), apply_hg(p, g))

    def test_sum_of_monomials(self):
        p = m((2, 1), 4) + m((1, 1, 1), 4, "3/7")
        image = apply_hg_full(p, "7/3")
        self.assertTrue(is_symmetric(4, image))
        self.assertEqual(SymPoly.from_monomials(4, image), apply_hg(p, "7/3"))

    def test_rejects_asymmetric_input(self):
        # x1 alone: (x1^2 + x1 x2) is not divisible by x1 - x2
        with self.assertRaises(NotSymmetricError):
            apply_hg_full({(1, 0): 1}, 1)

    def test_is_symmetric(self):
        self.assertTrue(is_symmetric(2, {(1, 0): 1, (0, 1): 1}))
        self.assertFalse(is_symmetric(2, {(1, 0): 1, (0, 1): 2}))
        self.assertFalse(is_symmetric(2, {(0, 1): 1}))


class TestOracle(unittest.TestCase):
    def test_two_variables(self):
        self.assertEqual(jack_oracle((2, 0), 2, 2).to_text(), "m_(2) + 4/3*m_(1,1)")
        g = Fraction(7, 3)
        self.assertEqual(
            jack_oracle((2,), g, 2), m((2,), 2) + m((1, 1), 2, 2 * g / (g + 1))
        )

    def test_schur_at_g_one(self):
        self.assertEqual(
            jack_oracle((2, 1, 0), 1, 3), m((2, 1), 3) + m((1, 1, 1), 3, 2)
        )

    def test_elementary(self):
        # P_(1^k) = e_k for every g
        for g in ("1/3", "3/2"):
            self.assertEqual(jack_oracle((1, 1, 0), g, 3), m((1, 1), 3))

    def test_eigenvector(self):
        lam, g, n = (3, 1, 0), Fraction(2, 5), 3
        p = jack_oracle(lam, g, n)
        self.assertEqual(apply_hg(p, g), p.scale(eigenvalue(lam, g, n)))

    def test_shift(self):
        self.assertEqual(
            jack_oracle((3, 1), "2/5", 2), jack_oracle((2, 0), "2/5", 2).shift(1)
        )

    def test_value_at_ones(self):
        lam, g = (2, 1, 0), Fraction(2, 5)
        self.assertEqual(jack_oracle(lam, g, 3).evaluate((1, 1, 1)), c_lambda(lam, g))


class TestConstantTermProduct(unittest.TestCase):
    def test_constants(self):
        one = SymPoly.constant(1, 2)
        self.assertEqual(constant_term_inner(one, one, 1, 2), 2)

    def test_orthogonal(self):
        p = jack_oracle((2, 0), 1, 2)
        q = jack_oracle((1, 1), 1, 2)
        self.assertEqual(constant_term_inner(p, q, 1, 2), 0)
        self.assertNotEqual(constant_term_inner(p, p, 1, 2), 0)

    def test_orthogonal_three_variables(self):
        basis = partitions_of(3, 3)
        polys = [jack_oracle(lam, 2, 3) for lam in basis]
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                self.assertEqual(constant_term_inner(polys[i], polys[j], 2, 3), 0)

    def test_needs_integer_g(self):
        one = SymPoly.constant(1, 2)
        with self.assertRaises(InvalidCouplingError):
            constant_term_inner(one, one, "1/2", 2)
