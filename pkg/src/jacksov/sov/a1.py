"""
Jack polynomials in two variables: the standard form, the symmetric p_mn form,
the elementary form and the Gegenbauer form, plus both sides of Watson's
product formula and of the S_2 factorization.
"""

from __future__ import annotations
from fractions import Fraction
from typing import Dict, Tuple

from ..exact import (
    CouplingLike,
    RationalLike,
    as_coupling,
    binomial,
    factorial,
    parse_rational,
    pochhammer,
    sign,
)
from ..exceptions import PartitionError
from ..hypergeom import appell_f4_terminating, gegenbauer, pfq_polynomial
from ..partitions import Partition, PartitionLike, as_partition
from ..separated import separated_product
from ..sympoly import (
    PmnExpansion,
    SymPoly,
    elementary_to_monomial,
    pmn_to_sympoly,
    sympoly_to_pmn,
)
from ..unipoly import UniPoly
from .operators import s2_apply


def _two_parts(lam: PartitionLike) -> Partition:
    lam = as_partition(lam)
    if len(lam) != 2:
        raise PartitionError(f"A1 formulas need a partition with two parts, got {lam}")
    return lam


def a1_parameter_map(lam: PartitionLike, g: CouplingLike) -> Tuple[int, Fraction, Fraction]:
    """(n, b, c) = (lam_12, g, 1 - lam_12 - g), the 2F1 parameters of f_lambda."""
    lam = _two_parts(lam)
    g = as_coupling(g).value
    n = lam.diff(1, 2)
    return n, g, 1 - n - g


def f_lambda_a1_hypergeometric(lam: PartitionLike, g: CouplingLike) -> UniPoly:
    """
    f_lambda(x) = x^{lam_2} 2F1(-lam_12, g; 1 - lam_12 - g; x).

    Examples:
      >>> f_lambda_a1_hypergeometric((1, 0), "5/2")
      UniPoly([1, 1])
    """
    lam = _two_parts(lam)
    n, b, c = a1_parameter_map(lam, g)
    return pfq_polynomial([-n, b], [c]).shift(lam[1])


def homogenize(f: UniPoly, degree: int) -> SymPoly:
    """
    x2^degree f(x1 / x2) as a two-variable polynomial; raises NotSymmetricError
    if the result is not symmetric.
    """
    monomials: Dict[Tuple[int, int], Fraction] = {}
    for k, c in enumerate(f.coeffs):
        if c:
            monomials[(k, degree - k)] = c
    return SymPoly.from_monomials(2, monomials, check=True)


def jack_a1_standard(lam: PartitionLike, g: CouplingLike) -> SymPoly:
    """
    P_lambda(x1, x2) = x2^{|lambda|} f_lambda(x1 / x2).

    Examples:
      >>> jack_a1_standard((2, 0), 1).to_text()
      'm_(2) + m_(1,1)'
    """
    lam = _two_parts(lam)
    return homogenize(f_lambda_a1_hypergeometric(lam, g), lam.weight)


def a1_pmn_expansion(lam: PartitionLike, g: CouplingLike) -> PmnExpansion:
    """
    (x1 x2)^{lam_2} sum_{m+n <= lam_12} (-lam_12)_{m+n} (g)_{m+n}
    / ((1 - lam_12 - g)_m (g)_n m! n!) p_mn.
    """
    lam = _two_parts(lam)
    n, b, c = a1_parameter_map(lam, g)
    return PmnExpansion(appell_f4_terminating(-n, b, c, b, n), lam[1])


def jack_a1_pmn(lam: PartitionLike, g: CouplingLike) -> SymPoly:
    return pmn_to_sympoly(a1_pmn_expansion(lam, g))


def a1_elementary_expansion(lam: PartitionLike, g: CouplingLike) -> Dict[Tuple[int, ...], Fraction]:
    """
    e2^{lam_2} (-1)^{lam_12} lam_12! / (g)_{lam_12}
    sum_{i + 2j = lam_12} (g)_{i+j} (-1)^{i+j} e1^i e2^j / (i! j!),
    keyed by the elementary partition (2, ..., 2, 1, ..., 1).
    """
    lam = _two_parts(lam)
    g = as_coupling(g).value
    n = lam.diff(1, 2)
    norm = sign(n) * factorial(n) / pochhammer(g, n)
    result: Dict[Tuple[int, ...], Fraction] = {}
    for j in range(n // 2 + 1):
        i = n - 2 * j
        key = (2,) * (j + lam[1]) + (1,) * i
        result[key] = (
            norm * pochhammer(g, i + j) * sign(i + j) / (factorial(i) * factorial(j))
        )
    return result


def jack_a1_elementary(lam: PartitionLike, g: CouplingLike) -> SymPoly:
    return elementary_to_monomial(a1_elementary_expansion(lam, g), 2)


def jack_a1_gegenbauer(lam: PartitionLike, g: CouplingLike) -> SymPoly:
    """
    (x1 x2)^{|lambda|/2} lam_12! / (g)_{lam_12} C_{lam_12}^g(z) with
    z = ((x1/x2)^{1/2} + (x2/x1)^{1/2}) / 2.

    C_n has the parity of n, so all half-integer powers cancel.
    """
    lam = _two_parts(lam)
    coupling = as_coupling(g)
    n = lam.diff(1, 2)
    weight = lam.weight
    norm = factorial(n) / pochhammer(coupling.value, n)
    poly = gegenbauer(n, coupling)
    monomials: Dict[Tuple[int, int], Fraction] = {}
    for k, ck in enumerate(poly.coeffs):
        if not ck:
            continue
        # z^k = 2^-k sum_j binom(k, j) t^(k - 2j), t = (x1/x2)^(1/2)
        scale = norm * ck / Fraction(2**k)
        for j in range(k + 1):
            e = k - 2 * j
            key = ((weight + e) // 2, (weight - e) // 2)
            monomials[key] = monomials.get(key, Fraction(0)) + scale * binomial(k, j)
    return SymPoly.from_monomials(2, monomials, check=True)


def watson_product(n: int, b: RationalLike, c: RationalLike) -> SymPoly:
    """2F1(-n, b; c; x1) 2F1(-n, b; c; x2)."""
    return separated_product(pfq_polynomial([-n, b], [c]))


def watson_f4(n: int, b: RationalLike, c: RationalLike) -> SymPoly:
    """(c - b)_n / (c)_n F4(-n, b; c, 1 - n + b - c; x1 x2, (1 - x1)(1 - x2))."""
    b, c = parse_rational(b), parse_rational(c)
    table = appell_f4_terminating(-n, b, c, 1 - n + b - c, n)
    norm = pochhammer(c - b, n) / pochhammer(c, n)
    return pmn_to_sympoly(PmnExpansion(table)).scale(norm)


def s2_factorization_sides(lam: PartitionLike, g: CouplingLike) -> Tuple[PmnExpansion, PmnExpansion]:
    """
    (S_2[P_lambda], (g)_{lam_12} / (2g)_{lam_12} f_lambda(x1) f_lambda(x2)),
    both in the p_mn basis. They are equal.
    """
    lam = _two_parts(lam)
    coupling = as_coupling(g)
    n = lam.diff(1, 2)
    lhs = s2_apply(sympoly_to_pmn(jack_a1_standard(lam, coupling)), coupling)
    f = f_lambda_a1_hypergeometric(lam, coupling)
    ratio = pochhammer(coupling.value, n) / pochhammer(2 * coupling.value, n)
    rhs = sympoly_to_pmn(separated_product(f)).scale(ratio)
    return lhs, rhs
