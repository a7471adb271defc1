"""
Exact symmetric polynomials in the monomial symmetric basis m_mu, their
elementary and (two-variable) p_mn forms, and evaluation.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .exact import RationalLike, format_rational, parse_rational
from .exceptions import InvalidIndexError, NotSymmetricError, PartitionError
from .partitions import PartitionLike, as_partition, conjugate

Key = Tuple[int, ...]
Monomials = Dict[Key, Fraction]


@lru_cache(maxsize=4096)
def distinct_permutations(key: Key) -> Tuple[Key, ...]:
    return tuple(sorted(set(permutations(key)), reverse=True))


def _is_decreasing(key: Key) -> bool:
    return all(key[i] >= key[i + 1] for i in range(len(key) - 1))


def _add_into(target: Dict[Any, Fraction], key, value: Fraction):
    new = target.get(key, 0) + value
    if new:
        target[key] = new
    else:
        target.pop(key, None)


class SymPoly:
    """
    A symmetric polynomial in `nvars` variables, stored as coefficients of the
    monomial symmetric polynomials m_mu. Keys are partitions padded to `nvars`.

    Instances are treated as immutable.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], RationalLike]] = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        clean: Dict[Key, Fraction] = {}
        for key, coeff in (terms or {}).items():
            key = tuple(as_partition(key).padded(nvars))
            coeff = parse_rational(coeff)
            _add_into(clean, key, coeff)
        self._terms = clean

    # construction

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Key, Fraction]) -> SymPoly:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> SymPoly:
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, value: RationalLike, nvars: int) -> SymPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, mu: PartitionLike, nvars: int, coeff: RationalLike = 1) -> SymPoly:
        return cls(nvars, {tuple(as_partition(mu).padded(nvars)): coeff})

    @classmethod
    def from_monomials(
        cls, nvars: int, monomials: Mapping[Key, Fraction], check: bool = False
    ) -> SymPoly:
        """
        Builds a SymPoly from a dict of ordinary monomials (exponent vector -> coefficient).

        The coefficient of m_mu is read off the monomial with exponent vector mu.
        With `check`, every monomial of each orbit must carry the same coefficient.

        Raises:
          NotSymmetricError: if `check` is set and the input is not symmetric.
        """
        terms: Dict[Key, Fraction] = {}
        for key, coeff in monomials.items():
            if len(key) != nvars:
                raise ValueError(f"exponent vector {key} does not have {nvars} entries")
            if coeff and _is_decreasing(key):
                terms[key] = Fraction(coeff)
        if check:
            seen = 0
            for key, coeff in terms.items():
                for perm in distinct_permutations(key):
                    seen += 1
                    if monomials.get(perm, 0) != coeff:
                        raise NotSymmetricError(
                            f"monomial {perm} has coefficient "
                            f"{format_rational(monomials.get(perm, 0))}, expected "
                            f"{format_rational(coeff)}"
                        )
            if seen != sum(1 for c in monomials.values() if c):
                raise NotSymmetricError("input has monomials outside the symmetric orbits")
        return cls._raw(nvars, terms)

    # access

    @property
    def terms(self) -> Dict[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Key, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, mu: PartitionLike) -> Fraction:
        return self._terms.get(tuple(as_partition(mu).padded(self.nvars)), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degrees(self) -> set:
        return {sum(k) for k in self._terms}

    @property
    def degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def monomials(self) -> Iterator[Tuple[Key, Fraction]]:
        """All ordinary monomials (exponent vector, coefficient)."""
        for key, coeff in self._terms.items():
            for perm in distinct_permutations(key):
                yield perm, coeff

    # arithmetic

    def _check_compatible(self, other: SymPoly):
        if self.nvars != other.nvars:
            raise ValueError(
                f"cannot combine polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: Any) -> SymPoly:
        if not isinstance(other, SymPoly):
            other = SymPoly.constant(parse_rational(other), self.nvars)
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            _add_into(terms, key, coeff)
        return SymPoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> SymPoly:
        return SymPoly._raw(self.nvars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Any) -> SymPoly:
        if not isinstance(other, SymPoly):
            other = SymPoly.constant(parse_rational(other), self.nvars)
        return self + (-other)

    def __rsub__(self, other: Any) -> SymPoly:
        return (-self) + other

    def scale(self, c: RationalLike) -> SymPoly:
        c = parse_rational(c)
        if c == 0:
            return SymPoly.zero(self.nvars)
        return SymPoly._raw(self.nvars, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: Any) -> SymPoly:
        if not isinstance(other, SymPoly):
            return self.scale(other)
        self._check_compatible(other)
        # the coefficient of m_nu is the coefficient of x^nu for nu decreasing
        raw_other = list(other.monomials())
        terms: Dict[Key, Fraction] = {}
        for a, ca in self.monomials():
            for b, cb in raw_other:
                key = tuple(i + j for i, j in zip(a, b))
                if _is_decreasing(key):
                    _add_into(terms, key, ca * cb)
        return SymPoly._raw(self.nvars, terms)

    def __rmul__(self, other: Any) -> SymPoly:
        return self.scale(other)

    def __pow__(self, k: int) -> SymPoly:
        if k < 0:
            raise InvalidIndexError("negative power of a polynomial")
        result = SymPoly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, SymPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SymPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def shift(self, s: int) -> SymPoly:
        """Multiplies by (x_1 ... x_n)^s; negative s divides (must be exact)."""
        terms: Dict[Key, Fraction] = {}
        for key, coeff in self._terms.items():
            new = tuple(k + s for k in key)
            if new and new[-1] < 0:
                raise PartitionError(f"(x_1...x_n)^{-s} does not divide m_{key}")
            terms[new] = coeff
        return SymPoly._raw(self.nvars, terms)

    def common_shift(self) -> int:
        """The largest s such that (x_1 ... x_n)^s divides the polynomial."""
        return min((k[-1] for k in self._terms), default=0)

    # evaluation and specialization

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        """
        Exact value at a point.

        Examples:
          >>> SymPoly.monomial((1, 1), 2).evaluate((2, 3))
          Fraction(6, 1)
        """
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} entries, expected {self.nvars}")
        xs = [parse_rational(x) for x in point]
        total = Fraction(0)
        for exps, coeff in self.monomials():
            term = coeff
            for x, e in zip(xs, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def specialize_last(self, value: RationalLike = 1) -> SymPoly:
        """Sets x_n = value, returning a symmetric polynomial in n-1 variables."""
        if self.nvars < 2:
            raise ValueError("need at least two variables to specialize one")
        value = parse_rational(value)
        raw: Dict[Key, Fraction] = {}
        for exps, coeff in self.monomials():
            key = exps[:-1]
            if _is_decreasing(key):
                _add_into(raw, key, coeff * value ** exps[-1])
        return SymPoly._raw(self.nvars - 1, raw)

    def scaled_point_check(self, t: RationalLike, point: Sequence[RationalLike]) -> bool:
        """True iff P(t x) == t^deg P(x) at the given point."""
        t = parse_rational(t)
        scaled = [t * parse_rational(x) for x in point]
        return self.evaluate(scaled) == t ** max(self.degree, 0) * self.evaluate(point)

    # text / json

    def __repr__(self) -> str:
        return f"SymPoly({self.nvars}, {self.to_text()})"

    def to_text(self, basis: str = "monomial") -> str:
        if basis == "elementary":
            # leading monomial of e_mu is m_{mu'}
            return format_linear_combination(
                sorted(
                    monomial_to_elementary(self).items(),
                    key=lambda kv: (sum(kv[0]), conjugate(kv[0])),
                    reverse=True,
                ),
                elementary_name,
            )
        return format_linear_combination(self.items(), monomial_name)

    def _repr_json_(self) -> Dict[str, Any]:
        return self.to_json()

    def to_json(self, basis: str = "monomial") -> Dict[str, Any]:
        if basis == "elementary":
            items = monomial_to_elementary(self).items()
        elif basis == "monomial":
            items = self.items()
        else:
            raise ValueError(f"unknown basis {basis!r}")
        return {
            "nvars": self.nvars,
            "basis": basis,
            "terms": [
                {"mu": list(mu), "coeff": format_rational(c)}
                for mu, c in sorted(items, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> SymPoly:
        nvars = int(data["nvars"])
        basis = data.get("basis", "monomial")
        terms = {tuple(t["mu"]): parse_rational(t["coeff"]) for t in data["terms"]}
        if basis == "elementary":
            return elementary_to_monomial(terms, nvars)
        if basis != "monomial":
            raise ValueError(f"unknown basis {basis!r}")
        return cls(nvars, terms)


def is_symmetric(nvars: int, monomials: Mapping[Key, Fraction]) -> bool:
    """True iff the ordinary polynomial is invariant under every permutation of its variables."""
    try:
        SymPoly.from_monomials(nvars, monomials, check=True)
    except NotSymmetricError:
        return False
    return True


def monomial_name(mu: Key) -> str:
    if not any(mu):
        return ""
    return "m_(" + ",".join(str(p) for p in mu if p) + ")"


def elementary_name(mu: Key) -> str:
    counts: Dict[int, int] = {}
    for p in mu:
        if p:
            counts[p] = counts.get(p, 0) + 1
    factors = []
    for p in sorted(counts):
        factors.append(f"e{p}" if counts[p] == 1 else f"e{p}^{counts[p]}")
    return "*".join(factors)


def format_linear_combination(items: Iterable[Tuple[Any, Fraction]], namer) -> str:
    parts = []
    for key, coeff in items:
        name = namer(key)
        mag = abs(coeff)
        if not name:
            body = format_rational(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{format_rational(mag)}*{name}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"


# elementary basis


@lru_cache(maxsize=None)
def elementary_product(mu: Key, nvars: int) -> SymPoly:
    """e_mu = e_{mu_1} e_{mu_2} ... in the monomial basis; e_k = 0 for k > nvars."""
    result = SymPoly.constant(1, nvars)
    for k in mu:
        if k == 0:
            continue
        if k > nvars:
            return SymPoly.zero(nvars)
        result = result * SymPoly.monomial((1,) * k, nvars)
    return result


def monomial_to_elementary(p: SymPoly) -> Dict[Key, Fraction]:
    """
    Expands a symmetric polynomial in products of elementary polynomials.

    Keys are partitions (decreasing, no zeros) whose parts are the indices of the
    elementary factors; () stands for the constant 1.

    Examples:
      m_(2,1) in three variables gives {(2, 1): 1, (3,): -3}, i.e. e1*e2 - 3*e3.
    """
    remaining = dict(p.terms)
    result: Dict[Key, Fraction] = {}
    while remaining:
        lead = max(remaining)
        coeff = remaining[lead]
        mu = tuple(sorted(conjugate(tuple(k for k in lead if k)), reverse=True))
        result[mu] = result.get(mu, 0) + coeff
        for key, c in elementary_product(mu, p.nvars).terms.items():
            _add_into(remaining, key, -coeff * c)
    return {k: v for k, v in result.items() if v}


def elementary_to_monomial(
    expansion: Mapping[Sequence[int], RationalLike], nvars: int
) -> SymPoly:
    result = SymPoly.zero(nvars)
    for mu, coeff in expansion.items():
        key = tuple(sorted((k for k in mu if k), reverse=True))
        result = result + elementary_product(key, nvars).scale(parse_rational(coeff))
    return result


# the two-variable basis p_mn = (x1 x2)^m [(1 - x1)(1 - x2)]^n


def _bivariate_mul(a: Dict[Tuple[int, int], Fraction], b: Dict[Tuple[int, int], Fraction]):
    out: Dict[Tuple[int, int], Fraction] = {}
    for (i, j), ca in a.items():
        for (k, l), cb in b.items():
            _add_into(out, (i + k, j + l), ca * cb)
    return out


@lru_cache(maxsize=None)
def _power_table(base: Tuple[Tuple[Tuple[int, int], Fraction], ...], k: int):
    result: Dict[Tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    factor = dict(base)
    for _ in range(k):
        result = _bivariate_mul(result, factor)
    return tuple(sorted(result.items()))


# e1 = 1 + u - v  (in (u, v) exponents)
_E1_IN_UV = (((0, 0), Fraction(1)), ((1, 0), Fraction(1)), ((0, 1), Fraction(-1)))
# v = 1 - e1 + e2  (in (e1, e2) exponents)
_V_IN_E = (((0, 0), Fraction(1)), ((1, 0), Fraction(-1)), ((0, 1), Fraction(1)))


@dataclass(frozen=True)
class PmnExpansion:
    """
    (x1 x2)^prefactor_power * sum terms[m, n] u^m v^n with u = x1 x2,
    v = (1 - x1)(1 - x2).
    """

    terms: Mapping[Tuple[int, int], Fraction] = field(default_factory=dict)
    prefactor_power: int = 0

    def __post_init__(self):
        clean: Dict[Tuple[int, int], Fraction] = {}
        for (m, n), c in dict(self.terms).items():
            if m < 0 or n < 0:
                raise InvalidIndexError(f"negative p_mn index ({m}, {n})")
            c = parse_rational(c)
            if c:
                clean[(int(m), int(n))] = c
        if self.prefactor_power < 0:
            raise InvalidIndexError("negative prefactor power")
        object.__setattr__(self, "terms", clean)

    def get(self, m: int, n: int) -> Fraction:
        return self.terms.get((m, n), Fraction(0))

    def normalized(self) -> PmnExpansion:
        """The same polynomial with the prefactor absorbed into the m index."""
        if self.prefactor_power == 0:
            return self
        return PmnExpansion(
            {(m + self.prefactor_power, n): c for (m, n), c in self.terms.items()}, 0
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PmnExpansion):
            return NotImplemented
        return dict(self.normalized().terms) == dict(other.normalized().terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.normalized().terms.items()))

    def scale(self, c: RationalLike) -> PmnExpansion:
        c = parse_rational(c)
        return PmnExpansion({k: v * c for k, v in self.terms.items()}, self.prefactor_power)

    def map_entries(self, func) -> PmnExpansion:
        """Applies func(m, n, value) -> new value to every entry."""
        return PmnExpansion(
            {(m, n): func(m, n, c) for (m, n), c in self.terms.items()},
            self.prefactor_power,
        )

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def _repr_json_(self) -> Dict[str, Any]:
        return {
            "prefactor_power": self.prefactor_power,
            "terms": [
                {"m": m, "n": n, "value": format_rational(c)}
                for (m, n), c in self.sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> PmnExpansion:
        return cls(
            {(int(t["m"]), int(t["n"])): parse_rational(t["value"]) for t in data["terms"]},
            int(data.get("prefactor_power", 0)),
        )


def sympoly_to_pmn(p: SymPoly) -> PmnExpansion:
    """
    Expands a symmetric polynomial in two variables in the p_mn basis, using
    x1 + x2 = 1 + u - v and x1 x2 = u.

    The largest power of x1 x2 dividing p is pulled out as the prefactor.

    Examples:
      x1 + x2 gives {(0, 0): 1, (1, 0): 1, (0, 1): -1}.
    """
    if p.nvars != 2:
        raise ValueError(f"p_mn expansion needs exactly 2 variables, got {p.nvars}")
    power = p.common_shift()
    stripped = p.shift(-power) if power else p
    terms: Dict[Tuple[int, int], Fraction] = {}
    for mu, coeff in monomial_to_elementary(stripped).items():
        i = sum(1 for k in mu if k == 1)
        j = sum(1 for k in mu if k == 2)
        for (a, b), c in _power_table(_E1_IN_UV, i):
            _add_into(terms, (a + j, b), coeff * c)
    return PmnExpansion(terms, power)


def pmn_to_sympoly(expansion: PmnExpansion) -> SymPoly:
    elementary: Dict[Key, Fraction] = {}
    for (m, n), coeff in expansion.terms.items():
        for (i, j), c in _power_table(_V_IN_E, n):
            key = (2,) * (j + m + expansion.prefactor_power) + (1,) * i
            _add_into(elementary, key, coeff * c)
    return elementary_to_monomial(elementary, 2)


def pmn_basis_element(m: int, n: int) -> SymPoly:
    return pmn_to_sympoly(PmnExpansion({(m, n): Fraction(1)}))
