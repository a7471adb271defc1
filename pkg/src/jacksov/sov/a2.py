"""
Jack polynomials in three variables from the inverted S_3 action on the c_{m,n}
tables, and the closed forms for one-row, two-row and rectangular partitions.
"""

from __future__ import annotations
from fractions import Fraction
from typing import Dict, Tuple

from ..exact import CouplingLike, as_coupling, factorial, pochhammer, sign
from ..exceptions import (
    DegenerateLowerParameter,
    InvalidIndexError,
    NotSymmetricError,
    PartitionError,
)
from ..hypergeom import appell_f4_terminating
from ..oracle import jack_oracle
from ..partitions import Partition, PartitionLike, as_partition, partitions_of
from ..separated import b_lambda, c_lambda, f_lambda_sum_form, separated_product
from ..sympoly import (
    PmnExpansion,
    SymPoly,
    elementary_to_monomial,
    pmn_to_sympoly,
    sympoly_to_pmn,
)
from .coefficients import CoeffProblem, cmn_table
from .operators import s3hat_apply

ElementaryExpansion = Dict[Tuple[int, ...], Fraction]

REPRESENTATIONS = {"repr1": "f1", "repr2": "f2"}


def _three_parts(lam: PartitionLike) -> Partition:
    lam = as_partition(lam)
    if len(lam) != 3:
        raise PartitionError(f"A2 formulas need a partition with three parts, got {lam}")
    return lam


def pmn_of_reduced(p: SymPoly) -> PmnExpansion:
    """p(x1, x2) = P(x1, x2, 1) in the p_mn basis."""
    if p.nvars != 3:
        raise ValueError(f"expected a polynomial in 3 variables, got {p.nvars}")
    return sympoly_to_pmn(p.specialize_last(1))


def s3hat_factorization_sides(
    lam: PartitionLike, g: CouplingLike
) -> Tuple[PmnExpansion, PmnExpansion]:
    """
    (S_3[p_lambda], c_lambda b_lambda^-2 f_lambda(x1) f_lambda(x2)) in the p_mn
    basis, with p_lambda taken from the eigenvector oracle. They are equal.
    """
    lam = _three_parts(lam)
    coupling = as_coupling(g)
    lhs = s3hat_apply(pmn_of_reduced(jack_oracle(lam, coupling, 3)), coupling)
    norm = c_lambda(lam, coupling) / b_lambda(lam, coupling) ** 2
    rhs = sympoly_to_pmn(separated_product(f_lambda_sum_form(lam, coupling))).scale(norm)
    return lhs, rhs


def reduced_pmn(lam: PartitionLike, g: CouplingLike, formula: str = "f1") -> PmnExpansion:
    """
    p_lambda(x1, x2) = S_3^-1[c_lambda b_lambda^-2 f_lambda(x1) f_lambda(x2)]
    with the c_{m,n} table from the given closed form (or "expansion").

    S_3^-1 is diagonal, so entry by entry this is the explicit triple sum

        p_lambda = (x1 x2)^lam_3 sum_{m+n <= lam_1 - lam_3}
            c_lambda b_lambda^-2 (3g)_n / (2g)_n c_{m,n} u^m v^n,

    u = x1 x2, v = (1 - x1)(1 - x2), with c_{m,n} from cmn_closed_form_1
    ("f1") or cmn_closed_form_2 ("f2"). Homogenizing in x3 gives P_lambda.
    """
    lam = _three_parts(lam)
    coupling = as_coupling(g)
    problem = CoeffProblem.from_partition(lam, coupling)
    table = cmn_table(problem, formula=formula)
    norm = c_lambda(lam, coupling) / b_lambda(lam, coupling) ** 2
    return s3hat_apply(PmnExpansion(table.entries, lam[2]), coupling, inverse=True).scale(norm)


def homogenize_reduced(q: SymPoly, degree: int) -> SymPoly:
    """
    x3^degree q(x1/x3, x2/x3) for a two-variable q.

    Raises:
      NotSymmetricError: if a monomial of q exceeds `degree` or the result is
        not symmetric in all three variables.
    """
    monomials: Dict[Tuple[int, int, int], Fraction] = {}
    for (a, b), coeff in q.monomials():
        rest = degree - a - b
        if rest < 0:
            raise NotSymmetricError(
                f"x1^{a} x2^{b} does not fit into degree {degree}; the result is not a polynomial"
            )
        monomials[(a, b, rest)] = coeff
    return SymPoly.from_monomials(3, monomials, check=True)


def _jack_a2(lam: PartitionLike, g: CouplingLike, representation: str) -> SymPoly:
    lam = _three_parts(lam)
    formula = REPRESENTATIONS[representation]
    try:
        q = pmn_to_sympoly(reduced_pmn(lam, g, formula=formula))
    except DegenerateLowerParameter as e:
        sibling = "repr2" if representation == "repr1" else "repr1"
        raise e.with_branch(
            representation,
            f"{representation} is degenerate at g={as_coupling(g)}; "
            f"use {sibling}, the oracle form or another g",
        ) from e
    return homogenize_reduced(q, lam.weight)


def jack_a2_repr1(lam: PartitionLike, g: CouplingLike) -> SymPoly:
    """
    P_lambda(x1, x2, x3) from the first closed form of c_{m,n}.

    Examples:
      >>> jack_a2_repr1((1, 0, 0), "1/3").to_text("elementary")
      'e1'
    """
    return _jack_a2(lam, g, "repr1")


def jack_a2_repr2(lam: PartitionLike, g: CouplingLike) -> SymPoly:
    """P_lambda(x1, x2, x3) from the second closed form of c_{m,n}."""
    return _jack_a2(lam, g, "repr2")


# one-row partitions


def one_row_elementary(r: int, nvars: int, g: CouplingLike) -> ElementaryExpansion:
    """
    r!/(g)_r sum_{|mu| = r} e_mu (g)_{l(mu)} (-1)^{r - l(mu)} / prod_i m_i!,
    over mu with parts <= nvars.
    """
    if r < 0 or nvars < 1:
        raise InvalidIndexError(f"need r >= 0 and nvars >= 1, got r={r}, nvars={nvars}")
    g = as_coupling(g).value
    norm = factorial(r) / pochhammer(g, r)
    result: ElementaryExpansion = {}
    for mu in partitions_of(r, max(r, 1), max_part=nvars):
        parts = tuple(p for p in mu if p)
        length = len(parts)
        denom = Fraction(1)
        for count in Partition(parts).multiplicities().values():
            denom *= factorial(count)
        result[parts] = norm * pochhammer(g, length) * sign(r - length) / denom
    return result


def jack_one_row(r: int, nvars: int, g: CouplingLike) -> SymPoly:
    """
    P_(r) in `nvars` variables.

    Examples:
      >>> jack_one_row(2, 3, 1).to_text("elementary")
      'e1^2 - e2'
    """
    return elementary_to_monomial(one_row_elementary(r, nvars, g), nvars)


def jack_one_row_e3(r: int, g: CouplingLike) -> SymPoly:
    """
    P_(r,0,0) = r!/(g)_r (-1)^r sum_{i+2j+3k=r} (-1)^{i+j+k} (g)_{i+j+k} / (i! j! k!) e1^i e2^j e3^k.
    """
    if r < 0:
        raise InvalidIndexError(f"r must be nonnegative, got {r}")
    g = as_coupling(g).value
    norm = factorial(r) / pochhammer(g, r) * sign(r)
    expansion: ElementaryExpansion = {}
    for k in range(r // 3 + 1):
        for j in range((r - 3 * k) // 2 + 1):
            i = r - 3 * k - 2 * j
            key = (3,) * k + (2,) * j + (1,) * i
            expansion[key] = (
                norm
                * sign(i + j + k)
                * pochhammer(g, i + j + k)
                / (factorial(i) * factorial(j) * factorial(k))
            )
    return elementary_to_monomial(expansion, 3)


def one_row_pmn(r: int, g: CouplingLike) -> PmnExpansion:
    """
    P_(r,0,0)(x1, x2, 1) = (2g)_r/(g)_r sum (-r)_{m+n} (g)_{m+n}
    / ((1-2g-r)_m (2g)_n m! n!) p_mn.
    """
    if r < 0:
        raise InvalidIndexError(f"r must be nonnegative, got {r}")
    g = as_coupling(g).value
    table = appell_f4_terminating(-r, g, 1 - 2 * g - r, 2 * g, r)
    return PmnExpansion(table).scale(pochhammer(2 * g, r) / pochhammer(g, r))


def one_row_reduced(r: int, g: CouplingLike) -> SymPoly:
    """
    P_(r,0,0)(x1, x2, 1) = sum_{i+2j <= r} (-1)^{i+j} / (i! j!)
    (-r)_{i+2j} (g)_{i+j} (g)_{r-i-2j} / (g)_r (x1 + x2)^i (x1 x2)^j.
    """
    if r < 0:
        raise InvalidIndexError(f"r must be nonnegative, got {r}")
    g = as_coupling(g).value
    expansion: ElementaryExpansion = {}
    for j in range(r // 2 + 1):
        for i in range(r - 2 * j + 1):
            key = (2,) * j + (1,) * i
            expansion[key] = (
                sign(i + j)
                / (factorial(i) * factorial(j))
                * pochhammer(-r, i + 2 * j)
                * pochhammer(g, i + j)
                * pochhammer(g, r - i - 2 * j)
                / pochhammer(g, r)
            )
    return elementary_to_monomial(expansion, 2)


# rectangular partitions (r, ..., r, 0)


def rectangular_elementary(r: int, nvars: int, g: CouplingLike) -> ElementaryExpansion:
    """
    r!/(g)_r sum_{|mu| = (n-1) r} e_mu (g)_{r - m_n} (-1)^{m_n}
    / ((r - sum_i m_i)! prod_{i<n} m_i!), over mu = (1^m_1 ... n^m_n).
    Terms with sum_i m_i > r vanish.
    """
    if r < 0 or nvars < 2:
        raise InvalidIndexError(f"need r >= 0 and nvars >= 2, got r={r}, nvars={nvars}")
    g = as_coupling(g).value
    n = nvars
    norm = factorial(r) / pochhammer(g, r)
    weight = (n - 1) * r
    result: ElementaryExpansion = {}
    for mu in partitions_of(weight, max(r, 1), max_part=n):
        parts = tuple(p for p in mu if p)
        counts = Partition(parts).multiplicities()
        total = sum(counts.values())
        if total > r:
            continue
        m_n = counts.get(n, 0)
        denom = factorial(r - total)
        for i in range(1, n):
            denom *= factorial(counts.get(i, 0))
        result[parts] = norm * pochhammer(g, r - m_n) * sign(m_n) / denom
    return result


def jack_rectangular(r: int, nvars: int, g: CouplingLike) -> SymPoly:
    """The conjectured closed form for P_(r^(n-1), 0) in n = nvars variables."""
    return elementary_to_monomial(rectangular_elementary(r, nvars, g), nvars)


def jack_two_row(r: int, g: CouplingLike) -> SymPoly:
    """
    P_(r,r,0) in three variables.

    Examples:
      >>> jack_two_row(1, "2/5").to_text("elementary")
      'e2'
    """
    return jack_rectangular(r, 3, g)
