"""
The separated polynomials f_lambda(y), in product form and in nested-sum
form, together with the normalizations b_lambda = f_lambda(1) and
c_lambda = P_lambda(1, ..., 1).
"""

from __future__ import annotations
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from .exact import CouplingLike, as_coupling, factorial, pochhammer
from .exceptions import InvalidIndexError, TruncationFailure
from .hypergeom import pfq_terms
from .partitions import PartitionLike, as_partition
from .sympoly import SymPoly
from .unipoly import UniPoly
from ._logging import get_logger
from .config import get_truncation_margin

logger = get_logger("separated")


def series_parameters(
    lam: PartitionLike, g: CouplingLike
) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Upper parameters a_i = lam_n - lam_i + 1 - (n - i + 1) g (i = 1..n) and
    lower parameters b_j = a_j + g (j = 1..n-1) of the nF(n-1) factor.

    Examples:
      >>> series_parameters((1, 0), 1)
      ([Fraction(-2, 1), Fraction(0, 1)], [Fraction(-1, 1)])
    """
    lam = as_partition(lam)
    g = as_coupling(g).value
    n = len(lam)
    last = lam[n - 1]
    upper = [Fraction(last - lam[i - 1] + 1) - (n - i + 1) * g for i in range(1, n + 1)]
    lower = [a + g for a in upper[:-1]]
    return upper, lower


def _check_partition(lam) -> None:
    if len(lam) == 0:
        raise InvalidIndexError("a separated polynomial needs at least one part")


def f_lambda_product_form(
    lam: PartitionLike, g: CouplingLike, margin: Optional[int] = None
) -> UniPoly:
    """
    f_lambda(y) = y^{lam_n} (1 - y)^{1 - n g} nF(n-1)(a; b; y).

    Both factors are expanded as formal power series up to degree
    lam_1 - lam_n + margin. The coefficients above lam_1 - lam_n have to cancel.

    Raises:
      DegenerateLowerParameter: if some (b_j)_k vanishes inside the expansion range.
      TruncationFailure: if a coefficient above the expected degree survives.
    """
    lam = as_partition(lam)
    _check_partition(lam)
    g = as_coupling(g)
    if margin is None:
        margin = get_truncation_margin()
    n = len(lam)
    degree = lam[0] - lam[n - 1]
    if n == 1:
        return UniPoly.monomial(lam[0])

    count = degree + margin + 1
    upper, lower = series_parameters(lam, g)
    exponent = 1 - n * g.value
    # (1 - y)^e = sum_k (-e)_k / k! y^k
    binomial_series = pfq_terms([-exponent], [], count)
    hyper_series = pfq_terms(upper, lower, count, branch="product-form")

    coeffs: List[Fraction] = []
    for k in range(count):
        coeffs.append(
            sum(
                (binomial_series[j] * hyper_series[k - j] for j in range(k + 1)),
                Fraction(0),
            )
        )

    tail = coeffs[degree + 1 :]
    logger.debug(
        "product form %s at g=%s: checking %d coefficients above degree %d",
        lam,
        g,
        len(tail),
        degree,
    )
    for offset, c in enumerate(tail, start=degree + 1):
        if c != 0:
            raise TruncationFailure(
                f"coefficient of y^{offset} in the product form of f{lam} at g={g} "
                f"is {c}, expected 0"
            )
    return UniPoly(coeffs[: degree + 1]).shift(lam[n - 1])


def f_lambda_sum_form(lam: PartitionLike, g: CouplingLike) -> UniPoly:
    """
    f_lambda(y) = b_lambda y^{lam_n} sum over 0 <= k_i <= lam_i - lam_{i+1} of
    prod_i (1 - y)^{k_i} (-lam_{i,i+1})_{k_i} / k_i! (i g)_{K_i} / ((i + 1) g)_{K_i},
    with K_i = k_1 + ... + k_i.

    Examples:
      >>> f_lambda_sum_form((1, 0, 0), "1/3")
      UniPoly([1, 1/2])
    """
    lam = as_partition(lam)
    _check_partition(lam)
    g = as_coupling(g).value
    n = len(lam)
    diffs = [lam.diff(i, i + 1) for i in range(1, n)]

    # weight of (1 - y)^K, K = sum of all k_i
    weights: Dict[int, Fraction] = {}
    for ks in product(*(range(d + 1) for d in diffs)):
        term = Fraction(1)
        cumulative = 0
        for i, (k, d) in enumerate(zip(ks, diffs), start=1):
            cumulative += k
            term *= pochhammer(-d, k) / factorial(k)
            term *= pochhammer(i * g, cumulative) / pochhammer((i + 1) * g, cumulative)
            if term == 0:
                break
        if term:
            weights[cumulative] = weights.get(cumulative, Fraction(0)) + term

    one_minus_y = UniPoly([1, -1])
    poly = UniPoly()
    for k, w in sorted(weights.items()):
        poly = poly + (one_minus_y**k) * w
    return (poly * b_lambda(lam, g)).shift(lam[n - 1])


def b_lambda(lam: PartitionLike, g: CouplingLike) -> Fraction:
    """
    b_lambda = f_lambda(1) = prod_{i=1}^{n-1} ((n-i+1) g)_{lam_in} / ((n-i) g)_{lam_in}.

    Examples:
      >>> b_lambda((1, 0, 0), 5)
      Fraction(3, 2)
    """
    lam = as_partition(lam)
    g = as_coupling(g).value
    n = len(lam)
    result = Fraction(1)
    for i in range(1, n):
        d = lam.diff(i, n)
        result *= pochhammer((n - i + 1) * g, d) / pochhammer((n - i) * g, d)
    return result


def c_lambda(lam: PartitionLike, g: CouplingLike) -> Fraction:
    """
    c_lambda = P_lambda(1, ..., 1) = prod_{i<j} ((j-i+1) g)_{lam_ij} / ((j-i) g)_{lam_ij}.

    Examples:
      >>> c_lambda((1, 0, 0), "2/5")
      Fraction(3, 1)
    """
    lam = as_partition(lam)
    g = as_coupling(g).value
    n = len(lam)
    result = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = lam.diff(i, j)
            result *= pochhammer((j - i + 1) * g, d) / pochhammer((j - i) * g, d)
    return result


def separated_product(f: UniPoly) -> SymPoly:
    """f(x1) f(x2) as a symmetric polynomial in two variables."""
    coeffs = list(f.coeffs)
    terms: Dict[Tuple[int, int], Fraction] = {}
    for i, fi in enumerate(coeffs):
        if not fi:
            continue
        for j in range(i + 1):
            if coeffs[j]:
                terms[(i, j)] = fi * coeffs[j]
    return SymPoly(2, terms)


def xi_coeffs(
    lam: PartitionLike, g: CouplingLike, via: str = "sum", formula: str = "auto"
) -> List[Fraction]:
    """
    The coefficients xi_k of f_lambda(y) = sum_{k=lam_n}^{lam_1} xi_k y^k, as a
    list starting at k = lam_n.

    With ``via="cmn"`` (three parts only) they are read off the first column of
    the c_{m,n} table: xi_{lam_3 + m} = c_{m,0} / b_lambda. `formula` selects the
    table ("auto", "f1", "f2" or "expansion").
    """
    lam = as_partition(lam)
    _check_partition(lam)
    n = len(lam)
    if via == "sum":
        f = f_lambda_sum_form(lam, g)
        return [f.coefficient(k) for k in range(lam[n - 1], lam[0] + 1)]
    if via == "cmn":
        if n != 3:
            raise InvalidIndexError(f"the c_mn route needs three parts, got {lam}")
        # import here to avoid circular import
        from .sov.coefficients import CoeffProblem, cmn_table  # noqa C0415 # pylint: disable=import-outside-toplevel

        problem = CoeffProblem(lam.diff(1, 3), lam.diff(2, 3), as_coupling(g))
        table = cmn_table(problem, formula=formula)
        b = b_lambda(lam, g)
        return [table.get(m, 0) / b for m in range(problem.r1 + 1)]
    raise ValueError(f"unknown route {via!r}, expected 'sum' or 'cmn'")
