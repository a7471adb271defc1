from __future__ import annotations
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple

from .exact import RationalLike, format_rational, parse_rational


class UniPoly:
    """
    An exact univariate polynomial, coefficients in ascending degree with
    trailing zeros trimmed. The zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [parse_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, coeff: RationalLike = 1) -> UniPoly:
        return cls([0] * k + [coeff])

    @classmethod
    def variable(cls) -> UniPoly:
        return cls([0, 1])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def order(self) -> int:
        """The lowest power with a nonzero coefficient (-1 for zero)."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return -1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == UniPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: Any) -> UniPoly:
        other = _as_unipoly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return UniPoly(self.coefficient(k) + other.coefficient(k) for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self._coeffs)

    def __sub__(self, other: Any) -> UniPoly:
        return self + (-_as_unipoly(other))

    def __rsub__(self, other: Any) -> UniPoly:
        return _as_unipoly(other) - self

    def __mul__(self, other: Any) -> UniPoly:
        if not isinstance(other, UniPoly):
            c = parse_rational(other)
            return UniPoly(c * a for a in self._coeffs)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x: RationalLike) -> Fraction:
        x = parse_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> UniPoly:
        """Multiplies by y^k."""
        if self.is_zero():
            return self
        return UniPoly([0] * k + list(self._coeffs))

    def truncated(self, degree: int) -> UniPoly:
        return UniPoly(self._coeffs[: degree + 1])

    def compose_linear(self, a: RationalLike, b: RationalLike) -> UniPoly:
        """p(a + b y)"""
        lin = UniPoly([a, b])
        result = UniPoly()
        for c in reversed(self._coeffs):
            result = result * lin + c
        return result

    def __repr__(self) -> str:
        return f"UniPoly([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def to_text(self) -> str:
        """Coefficients in ascending degree, comma separated."""
        if not self._coeffs:
            return "0"
        return ", ".join(format_rational(c) for c in self._coeffs)

    def _repr_json_(self) -> Dict[str, List[str]]:
        return {"coeffs": [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: Mapping[str, Sequence[str]]) -> UniPoly:
        return cls(parse_rational(c) for c in data["coeffs"])


def _as_unipoly(value: Any) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly([parse_rational(value)])
