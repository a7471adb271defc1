"""
Brute-force Jack polynomials as eigenvectors of the Sutherland operator

    H_g = sum_i (x_i d/dx_i)^2 + g sum_{i<j} (x_i + x_j)/(x_i - x_j) (x_i d/dx_i - x_j d/dx_j)

acting on symmetric polynomials, and the constant-term scalar product.
None of this uses separation of variables; it is the reference the other
constructions are checked against.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, Mapping, Tuple, Union

from .exact import (
    CouplingG,
    CouplingLike,
    RationalLike,
    as_coupling,
    binomial,
    parse_rational,
    sign,
)
from .exceptions import EigenvalueCollision, InvalidCouplingError, NotSymmetricError
from .partitions import PartitionLike, as_partition, dominance_leq, partitions_of
from .sympoly import Key, SymPoly, _add_into, _is_decreasing
from ._logging import get_logger

logger = get_logger("oracle")


def _hg_terms(exps: Key, g: Fraction, out: Dict[Key, Fraction]):
    """
    Adds H_g x^exps to `out`, keeping only decreasing keys.

    The interaction part only makes sense on pair sums
    x_i^a x_j^b + x_i^b x_j^a; it is applied once per pair i < j from the
    monomial with a > b, whose partner in the orbit carries the same coefficient.
    """
    euler = sum(e * e for e in exps)
    if euler and _is_decreasing(exps):
        _add_into(out, exps, Fraction(euler))
    n = len(exps)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = exps[i], exps[j]
            if a <= b:
                continue
            # (a - b) (x_i x_j)^b (x_i + x_j) sum_k x_i^(a-b-1-k) x_j^k
            d = a - b
            weight = g * d
            base = list(exps)
            for k in range(d):
                for extra_i, extra_j in ((1, 0), (0, 1)):
                    base[i] = b + d - 1 - k + extra_i
                    base[j] = b + k + extra_j
                    key = tuple(base)
                    if _is_decreasing(key):
                        _add_into(out, key, weight)


@lru_cache(maxsize=4096)
def _hg_orbit_image(key: Key, g: Fraction) -> Tuple[Tuple[Key, Fraction], ...]:
    """H_g m_key, as (decreasing key, coefficient) pairs."""
    out: Dict[Key, Fraction] = {}
    for exps, _ in SymPoly._raw(len(key), {key: Fraction(1)}).monomials():
        _hg_terms(exps, g, out)
    return tuple(sorted(out.items(), reverse=True))


def apply_hg(p: SymPoly, g: CouplingLike) -> SymPoly:
    """
    H_g applied to a symmetric polynomial.

    Examples:
      >>> apply_hg(SymPoly.monomial((1, 1), 2), 1).to_text()
      '2*m_(1,1)'
    """
    g = as_coupling(g).value
    out: Dict[Key, Fraction] = {}
    for key, coeff in p.terms.items():
        for exps, c in _hg_orbit_image(key, g):
            _add_into(out, exps, c * coeff)
    return SymPoly._raw(p.nvars, out)


def _divide_by_difference(num: Dict[Key, Fraction], i: int, j: int) -> Dict[Key, Fraction]:
    """
    num / (x_i - x_j), by synthetic division in x_i.

    Raises:
      NotSymmetricError: if the division leaves a remainder.
    """
    # coefficients of x_i^k, with the x_i exponent cleared
    by_power: Dict[int, Dict[Key, Fraction]] = {}
    for key, c in num.items():
        rest = list(key)
        rest[i] = 0
        _add_into(by_power.setdefault(key[i], {}), tuple(rest), c)

    def times_xj(poly: Dict[Key, Fraction]) -> Dict[Key, Fraction]:
        out: Dict[Key, Fraction] = {}
        for key, c in poly.items():
            bumped = list(key)
            bumped[j] += 1
            out[tuple(bumped)] = c
        return out

    quotient: Dict[Key, Fraction] = {}
    # q_{k-1} = a_k + x_j q_k, from the top power down
    q: Dict[Key, Fraction] = {}
    for k in range(max(by_power, default=0), 0, -1):
        nxt = dict(by_power.get(k, {}))
        for key, c in times_xj(q).items():
            _add_into(nxt, key, c)
        q = nxt
        for key, c in q.items():
            placed = list(key)
            placed[i] = k - 1
            quotient[tuple(placed)] = c
    remainder = dict(by_power.get(0, {}))
    for key, c in times_xj(q).items():
        _add_into(remainder, key, c)
    if remainder:
        raise NotSymmetricError(
            f"H_g numerator is not divisible by x{i + 1} - x{j + 1}; the input is not symmetric"
        )
    return quotient


def apply_hg_full(
    p: Union[SymPoly, Mapping[Key, RationalLike]], g: CouplingLike
) -> Dict[Key, Fraction]:
    """
    H_g applied to the expanded polynomial, every exponent vector kept. `p` is
    a SymPoly or a dict of ordinary monomials (exponent vector -> coefficient).

    Each pair term is formed as (x_i + x_j)(x_i d_i - x_j d_j) p and divided by
    x_i - x_j exactly, so nothing here assumes the image is symmetric; see
    :func:`jacksov.sympoly.is_symmetric`.

    Raises:
      NotSymmetricError: if some pair numerator is not divisible.

    Examples:
      >>> apply_hg_full(SymPoly.monomial((2,), 2), 1)
      {(2, 0): Fraction(6, 1), (0, 2): Fraction(6, 1), (1, 1): Fraction(4, 1)}
    """
    g = as_coupling(g).value
    if isinstance(p, SymPoly):
        monomials = dict(p.monomials())
        n = p.nvars
    else:
        monomials = {tuple(k): parse_rational(c) for k, c in p.items()}
        n = len(next(iter(monomials), ()))
    out: Dict[Key, Fraction] = {}
    for exps, c in monomials.items():
        euler = sum(e * e for e in exps)
        if euler:
            _add_into(out, exps, c * euler)
    for i in range(n):
        for j in range(i + 1, n):
            num: Dict[Key, Fraction] = {}
            for exps, c in monomials.items():
                d = exps[i] - exps[j]
                if not d:
                    continue
                for k in (i, j):
                    bumped = list(exps)
                    bumped[k] += 1
                    _add_into(num, tuple(bumped), c * d)
            for key, c in _divide_by_difference(num, i, j).items():
                _add_into(out, key, g * c)
    return out


def eigenvalue(lam: PartitionLike, g: CouplingLike, nvars: int) -> Fraction:
    """
    E_g(lambda) = sum_i lambda_i (lambda_i + g (n + 1 - 2i)).

    Examples:
      >>> eigenvalue((2, 0), 1, 2)
      Fraction(6, 1)
    """
    lam = as_partition(lam).padded(nvars)
    g = as_coupling(g).value
    return sum(
        (p * (p + g * (nvars + 1 - 2 * i)) for i, p in enumerate(lam, start=1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class OperatorMatrix:
    """
    H_g on the homogeneous symmetric polynomials of one degree, in the m_mu
    basis. entries[(mu, lam)] is the coefficient of m_mu in H_g m_lam.
    """

    degree: int
    nvars: int
    g: CouplingG
    basis: Tuple[Key, ...]
    entries: Dict[Tuple[Key, Key], Fraction]

    def entry(self, mu: Key, lam: Key) -> Fraction:
        return self.entries.get((tuple(mu), tuple(lam)), Fraction(0))

    def column(self, lam: Key) -> Iterator[Tuple[Key, Fraction]]:
        lam = tuple(lam)
        for mu in self.basis:
            value = self.entries.get((mu, lam))
            if value:
                yield mu, value

    def is_triangular(self) -> bool:
        """True iff every nonzero entry (mu, lam) has mu <= lam in dominance order."""
        return all(dominance_leq(mu, lam) for (mu, lam) in self.entries)

    def diagonal_is_spectrum(self) -> bool:
        return all(
            self.entry(lam, lam) == eigenvalue(lam, self.g, self.nvars) for lam in self.basis
        )


@lru_cache(maxsize=128)
def _operator_matrix(degree: int, nvars: int, g: CouplingG) -> OperatorMatrix:
    basis = tuple(partitions_of(degree, nvars))
    entries: Dict[Tuple[Key, Key], Fraction] = {}
    for lam in basis:
        for mu, value in _hg_orbit_image(lam, g.value):
            entries[(mu, lam)] = value
    logger.debug("built H_g matrix degree=%d nvars=%d g=%s (%d)", degree, nvars, g, len(basis))
    return OperatorMatrix(degree, nvars, g, basis, entries)


def operator_matrix(degree: int, nvars: int, g: CouplingLike) -> OperatorMatrix:
    return _operator_matrix(degree, nvars, as_coupling(g))


@lru_cache(maxsize=512)
def _jack_oracle(lam: Key, g: CouplingG, nvars: int) -> SymPoly:
    degree = sum(lam)
    matrix = _operator_matrix(degree, nvars, g)
    target = eigenvalue(lam, g, nvars)
    coeffs: Dict[Key, Fraction] = {lam: Fraction(1)}
    # decreasing lex order extends dominance, so every nu > mu is already known
    start = matrix.basis.index(lam)
    for mu in matrix.basis[start + 1 :]:
        if not dominance_leq(mu, lam):
            continue
        numerator = Fraction(0)
        for nu, u in coeffs.items():
            numerator += matrix.entry(mu, nu) * u
        denominator = target - matrix.entry(mu, mu)
        if denominator == 0:
            raise EigenvalueCollision(lam, mu, g)
        if numerator:
            coeffs[mu] = numerator / denominator
    return SymPoly._raw(nvars, coeffs)


def jack_oracle(lam: PartitionLike, g: CouplingLike, nvars: int) -> SymPoly:
    """
    The monic Jack polynomial P_lambda = m_lambda + sum_{mu < lambda} u_mu m_mu,
    solved from H_g P = E_g(lambda) P by back-substitution.

    Raises:
      EigenvalueCollision: if E_g(mu) == E_g(lambda) for some mu below lambda.

    Examples:
      >>> jack_oracle((2, 0), 2, 2).to_text()
      'm_(2) + 4/3*m_(1,1)'
    """
    key = tuple(as_partition(lam).padded(nvars))
    return _jack_oracle(key, as_coupling(g), nvars)


# constant-term scalar product

Laurent = Dict[Tuple[int, ...], Fraction]


@lru_cache(maxsize=32)
def _weight(g: int, nvars: int) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
    """prod_{i != j} (1 - x_i / x_j)^g as (exponent vector, coefficient) pairs."""
    result: Laurent = {(0,) * nvars: Fraction(1)}
    for i in range(nvars):
        for j in range(nvars):
            if i == j:
                continue
            factor = []
            for k in range(g + 1):
                exps = [0] * nvars
                exps[i] += k
                exps[j] -= k
                factor.append((tuple(exps), sign(k) * binomial(g, k)))
            nxt: Laurent = {}
            for a, ca in result.items():
                for b, cb in factor:
                    _add_into(nxt, tuple(x + y for x, y in zip(a, b)), ca * cb)
            result = nxt
    return tuple(result.items())


def constant_term_inner(p: SymPoly, q: SymPoly, g: CouplingLike, nvars: int) -> Fraction:
    """
    CT[ p(1/x) q(x) prod_{i != j} (1 - x_i / x_j)^g ] for a positive integer g.

    Raises:
      InvalidCouplingError: if g is not a positive integer.

    Examples:
      >>> constant_term_inner(SymPoly.constant(1, 2), SymPoly.constant(1, 2), 1, 2)
      Fraction(2, 1)
    """
    coupling = as_coupling(g)
    if not coupling.is_integer():
        raise InvalidCouplingError(
            f"the constant-term product needs an integer g, got {coupling}"
        )
    if p.nvars != nvars or q.nvars != nvars:
        raise ValueError(f"both polynomials must have {nvars} variables")
    weight = dict(_weight(int(coupling.value), nvars))
    q_monomials = list(q.monomials())
    total = Fraction(0)
    for a, pa in p.monomials():
        for b, qb in q_monomials:
            w = weight.get(tuple(x - y for x, y in zip(a, b)))
            if w:
                total += pa * qb * w
    return total
