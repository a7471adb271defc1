"""
Exact rational scalars and the combinatorial primitives every formula uses.

Everything is computed with :class:`fractions.Fraction`; no floating point value
ever enters a computation.
"""

from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
from typing import Iterable, List, Tuple, Union

from .exceptions import InvalidCouplingError, InvalidIndexError

Rational = Fraction

RationalLike = Union[Fraction, int, str]

DEFAULT_G_PANEL: Tuple[str, ...] = ("1/3", "2/5", "1", "3/2", "7/3")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parses a rational from "p/q", "p", an int or a Fraction.

    Floats are rejected, since they are not exact.

    Examples:
      >>> parse_rational("-3/6")
      Fraction(-1, 2)
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational")
        if any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    if isinstance(value, CouplingG):
        return value.value
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """
    Serializes a rational as "p/q" (or "p" when q = 1), sign on the numerator.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class CouplingG:
    """The coupling constant g > 0 (Jack parameter alpha = 1/g)."""

    value: Fraction

    def __post_init__(self):
        value = parse_rational(self.value)
        if value <= 0:
            raise InvalidCouplingError(f"g must be positive, got {format_rational(value)}")
        object.__setattr__(self, "value", value)

    @property
    def alpha(self) -> Fraction:
        return 1 / self.value

    def is_integer(self) -> bool:
        return self.value.denominator == 1

    def __str__(self) -> str:
        return format_rational(self.value)

    def _repr_json_(self) -> str:
        return format_rational(self.value)


CouplingLike = Union[CouplingG, Fraction, int, str]


def as_coupling(g: CouplingLike) -> CouplingG:
    if isinstance(g, CouplingG):
        return g
    return CouplingG(parse_rational(g))


def parse_panel(values: Union[str, Iterable[RationalLike]]) -> List[CouplingG]:
    """
    Parses a g panel from "1/3,2/5,1" or an iterable of rationals.
    """
    if isinstance(values, str):
        values = [v for v in values.split(",") if v.strip()]
    return [as_coupling(v) for v in values]


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """
    The rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.

    Examples:
      >>> pochhammer(Fraction(1, 2), 3)
      Fraction(15, 8)
    """
    if n < 0:
        raise InvalidIndexError(f"pochhammer index must be nonnegative, got {n}")
    a = parse_rational(a)
    result = Fraction(1)
    for k in range(n):
        result *= a + k
        if result == 0:
            break
    return result


def first_vanishing_index(a: RationalLike, n: int) -> int:
    """
    Returns the smallest k <= n with (a)_k == 0, or -1 if (a)_k != 0 for all k <= n.
    """
    a = parse_rational(a)
    if a.denominator == 1 and a <= 0 and -a < n:
        return int(-a) + 1
    return -1


@lru_cache(maxsize=None)
def _factorial(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> Fraction:
    if n < 0:
        raise InvalidIndexError(f"factorial of negative number {n}")
    return Fraction(_factorial(n))


def binomial(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise InvalidIndexError(f"binomial({n}, {k}) needs nonnegative arguments")
    if k > n:
        raise InvalidIndexError(f"binomial({n}, {k}): k > n")
    return Fraction(math.comb(n, k))


def sign(k: int) -> int:
    """(-1)^k"""
    return -1 if k % 2 else 1
