"""
Terminating hypergeometric sums, Saalschutz's closed form, the terminating
Appell F4 coefficient table and Gegenbauer polynomials.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .exact import CouplingLike, RationalLike, as_coupling, parse_rational, pochhammer
from .exceptions import DegenerateLowerParameter, InvalidIndexError, NonTerminating
from .unipoly import UniPoly


def _nonpositive_integer(a: Fraction) -> bool:
    return a.denominator == 1 and a <= 0


def check_lower(lower: Sequence[Fraction], bound: int, branch: Optional[str] = None):
    """
    Raises DegenerateLowerParameter if some (b)_k vanishes for k <= bound.
    """
    for b in lower:
        if _nonpositive_integer(b) and -b < bound:
            raise DegenerateLowerParameter(b, int(-b) + 1, branch=branch)


@dataclass(frozen=True)
class HypergeomSpec:
    """pFq(upper; lower; argument), terminating through a non-positive integer upper parameter."""

    upper: Tuple[Fraction, ...]
    lower: Tuple[Fraction, ...] = ()
    argument: Fraction = Fraction(1)
    branch: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(parse_rational(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(parse_rational(b) for b in self.lower))
        object.__setattr__(self, "argument", parse_rational(self.argument))

    @property
    def termination_bound(self) -> int:
        bounds = [int(-a) for a in self.upper if _nonpositive_integer(a)]
        if not bounds:
            raise NonTerminating(
                f"no non-positive integer among upper parameters {list(map(str, self.upper))}"
            )
        return min(bounds)


def pfq_terms(
    upper: Sequence[RationalLike],
    lower: Sequence[RationalLike],
    count: int,
    branch: Optional[str] = None,
) -> List[Fraction]:
    """
    The first `count` series coefficients prod (a_i)_k / prod (b_j)_k / k!, k = 0 .. count-1,
    without the power of the argument.

    Raises:
      DegenerateLowerParameter: if a lower Pochhammer symbol vanishes for k < count.
    """
    upper = [parse_rational(a) for a in upper]
    lower = [parse_rational(b) for b in lower]
    check_lower(lower, count - 1, branch=branch)
    terms: List[Fraction] = []
    term = Fraction(1)
    for k in range(count):
        terms.append(term)
        if k == count - 1:
            break
        num = Fraction(k + 1)
        for b in lower:
            num *= b + k
        ratio = Fraction(1)
        for a in upper:
            ratio *= a + k
        term = term * ratio / num if ratio else Fraction(0)
    return terms


def pfq_terminating(spec: HypergeomSpec) -> Fraction:
    """
    Sums a terminating pFq exactly.

    Raises:
      NonTerminating: if no upper parameter is a non-positive integer.
      DegenerateLowerParameter: if a lower Pochhammer symbol vanishes in range.

    Examples:
      >>> pfq_terminating(HypergeomSpec((1, 2, -1), (4, -1), 1))
      Fraction(3, 2)
    """
    n = spec.termination_bound
    terms = pfq_terms(spec.upper, spec.lower, n + 1, branch=spec.branch)
    total = Fraction(0)
    power = Fraction(1)
    for t in terms:
        total += t * power
        power *= spec.argument
    return total


def pfq_polynomial(
    upper: Sequence[RationalLike], lower: Sequence[RationalLike]
) -> UniPoly:
    """The terminating series as a polynomial in its argument."""
    n = HypergeomSpec(tuple(upper), tuple(lower)).termination_bound
    return UniPoly(pfq_terms(upper, lower, n + 1))


def saalschutz_3f2(a: RationalLike, b: RationalLike, n: int, c: RationalLike) -> Fraction:
    """
    3F2(a, b, -n; c, 1 + a + b - c - n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
    """
    if n < 0:
        raise InvalidIndexError(f"n must be nonnegative, got {n}")
    a, b, c = parse_rational(a), parse_rational(b), parse_rational(c)
    den1 = pochhammer(c, n)
    if den1 == 0:
        raise DegenerateLowerParameter(c, -int(c) + 1, branch="saalschutz")
    den2 = pochhammer(c - a - b, n)
    if den2 == 0:
        raise DegenerateLowerParameter(c - a - b, -int(c - a - b) + 1, branch="saalschutz")
    return pochhammer(c - a, n) * pochhammer(c - b, n) / (den1 * den2)


def appell_f4_terminating(
    a: RationalLike, b: RationalLike, c: RationalLike, d: RationalLike, N: int
) -> Dict[Tuple[int, int], Fraction]:
    """
    Coefficients (a)_{m+n} (b)_{m+n} / ((c)_m (d)_n m! n!) of the terminating
    Appell F4 for 0 <= m + n <= N, where a = -N.

    Examples:
      >>> appell_f4_terminating(0, 5, 1, 1, 0)
      {(0, 0): Fraction(1, 1)}
    """
    a, b, c, d = (parse_rational(x) for x in (a, b, c, d))
    if N < 0 or a != -N:
        raise NonTerminating(f"F4 needs a = -N with N >= 0, got a={a}, N={N}")
    cm = pfq_terms([], [c], N + 1)  # 1 / ((c)_m m!)
    dn = pfq_terms([], [d], N + 1)
    table: Dict[Tuple[int, int], Fraction] = {}
    for s in range(N + 1):
        top = pochhammer(a, s) * pochhammer(b, s)
        for m in range(s + 1):
            n = s - m
            table[(m, n)] = top * cm[m] * dn[n]
    return table


def gegenbauer(n: int, g: CouplingLike) -> UniPoly:
    """
    The Gegenbauer polynomial C_n^g by its three-term recurrence
    k C_k = 2 x (k + g - 1) C_{k-1} - (k + 2g - 2) C_{k-2}.
    """
    if n < 0:
        raise InvalidIndexError(f"degree must be nonnegative, got {n}")
    g = as_coupling(g).value
    x = UniPoly.variable()
    prev = UniPoly([1])
    if n == 0:
        return prev
    cur = x * (2 * g)
    for k in range(2, n + 1):
        prev, cur = cur, (x * cur * (2 * (k + g - 1)) - prev * (k + 2 * g - 2)) * Fraction(1, k)
    return cur
