"""
The c_{m,n} coefficients of f_lambda(x1) f_lambda(x2) in the p_mn basis, for
partitions with three parts, and the auxiliary a_{m,n} table.

c_{m,n} depends on lambda only through r1 = lambda_1 - lambda_3 and
r2 = lambda_2 - lambda_3. Three independent routes are provided: direct
expansion of the product (the reference), and two closed 4F3 forms that are
equal for generic g but degenerate at different special values.
"""

from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, Iterator, Literal, Mapping, Optional, Sequence, Tuple

from ..exact import (
    CouplingG,
    CouplingLike,
    as_coupling,
    binomial,
    factorial,
    first_vanishing_index,
    format_rational,
    parse_rational,
    pochhammer,
    sign,
)
from ..exceptions import DegenerateLowerParameter, InvalidIndexError, PartitionError
from ..hypergeom import HypergeomSpec, pfq_terminating
from ..partitions import PartitionLike, as_partition
from ..separated import f_lambda_sum_form, separated_product
from ..sympoly import PmnExpansion, sympoly_to_pmn
from .._logging import get_logger

logger = get_logger("coefficients")

TableKind = Literal["c", "a"]
Formula = Literal["auto", "f1", "f2", "expansion"]

FORMULAS: Tuple[str, ...] = ("auto", "f1", "f2", "expansion")

_SIBLING = {"f1": "f2", "f2": "f1"}


@dataclass(frozen=True)
class CoeffProblem:
    """(r1, r2, g) with r1 >= r2 >= 0."""

    r1: int
    r2: int
    g: CouplingG

    def __post_init__(self):
        if not (int(self.r1) >= int(self.r2) >= 0):
            raise PartitionError(f"need r1 >= r2 >= 0, got r1={self.r1}, r2={self.r2}")
        object.__setattr__(self, "r1", int(self.r1))
        object.__setattr__(self, "r2", int(self.r2))
        object.__setattr__(self, "g", as_coupling(self.g))

    @classmethod
    def from_partition(cls, lam: PartitionLike, g: CouplingLike) -> CoeffProblem:
        lam = as_partition(lam)
        if len(lam) != 3:
            raise PartitionError(f"c_mn tables need a partition with three parts, got {lam}")
        return cls(lam.diff(1, 3), lam.diff(2, 3), as_coupling(g))

    def indices(self) -> Iterator[Tuple[int, int]]:
        """(m, n) with m + n <= r1, ordered by m + n, then m."""
        for s in range(self.r1 + 1):
            for m in range(s + 1):
                yield m, s - m

    def partition(self) -> Tuple[int, int, int]:
        """The representative partition (r1, r2, 0)."""
        return (self.r1, self.r2, 0)


@dataclass(frozen=True)
class CoeffTable:
    """
    A triangular table of c_{m,n} (kind "c") or a_{m,n} (kind "a").

    Zero entries are not stored. `branch` names the route that produced the
    table; it is informational and not serialized.
    """

    problem: CoeffProblem
    entries: Mapping[Tuple[int, int], Fraction]
    kind: TableKind = "c"
    branch: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("c", "a"):
            raise ValueError(f"unknown table kind {self.kind!r}")
        clean: Dict[Tuple[int, int], Fraction] = {}
        for (m, n), value in dict(self.entries).items():
            if m < 0 or n < 0 or m + n > self.problem.r1:
                raise InvalidIndexError(
                    f"entry ({m}, {n}) outside m + n <= {self.problem.r1}"
                )
            value = parse_rational(value)
            if value:
                clean[(int(m), int(n))] = value
        object.__setattr__(self, "entries", clean)

    def get(self, m: int, n: int = 0) -> Fraction:
        return self.entries.get((m, n), Fraction(0))

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def as_pmn(self) -> PmnExpansion:
        return PmnExpansion(self.entries)

    def _repr_json_(self) -> Dict[str, Any]:
        return {
            "r1": self.problem.r1,
            "r2": self.problem.r2,
            "g": str(self.problem.g),
            "kind": self.kind,
            "entries": [
                {"m": m, "n": n, "value": format_rational(v)}
                for (m, n), v in self.sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CoeffTable:
        problem = CoeffProblem(int(data["r1"]), int(data["r2"]), as_coupling(data["g"]))
        return cls(
            problem,
            {(int(e["m"]), int(e["n"])): parse_rational(e["value"]) for e in data["entries"]},
            kind=data.get("kind", "c"),
        )

    def to_text(self) -> str:
        return "{" + ", ".join(
            f"({m},{n}): {format_rational(v)}" for (m, n), v in self.sorted_items()
        ) + "}"


# pochhammer products with degeneracy detection


def _den(b: Fraction, k: int, branch: Optional[str]) -> Fraction:
    """(b)_k for use as a denominator."""
    value = pochhammer(b, k)
    if value == 0:
        raise DegenerateLowerParameter(b, first_vanishing_index(b, k), branch=branch)
    return value


def _ratio(
    upper: Sequence[Tuple[Fraction, int]],
    lower: Sequence[Tuple[Fraction, int]],
    branch: Optional[str],
) -> Fraction:
    result = Fraction(1)
    for b, k in lower:
        result /= _den(b, k, branch)
    for a, k in upper:
        result *= pochhammer(a, k)
    return result


def _check_index(problem: CoeffProblem, m: int, n: int):
    if m < 0 or n < 0 or m + n > problem.r1:
        raise InvalidIndexError(f"(m, n) = ({m}, {n}) outside m + n <= {problem.r1}")


# normalizations


def alpha_1(problem: CoeffProblem) -> Fraction:
    """
    (r1-r2)!/r1! (3g)_{r1} (2g)_{r2} / ((2g)_{r1-r2} (1-g)_{r2}).
    """
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    return (
        factorial(r1 - r2)
        / factorial(r1)
        * _ratio(
            [(3 * g, r1), (2 * g, r2)],
            [(2 * g, r1 - r2), (1 - g, r2)],
            "f1",
        )
    )


def alpha_2(problem: CoeffProblem) -> Fraction:
    """
    r2!/r1! (1+g)_{r1} (g)_{r1-r2} / ((1+g)_{r2} (2g)_{r1-r2})
    * (3g)_{r1} (2g)_{r2} / ((2g)_{r1} (g)_{r2}).
    """
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    return (
        factorial(r2)
        / factorial(r1)
        * _ratio(
            [(1 + g, r1), (g, r1 - r2), (3 * g, r1), (2 * g, r2)],
            [(1 + g, r2), (2 * g, r1 - r2), (2 * g, r1), (g, r2)],
            "f2",
        )
    )


# closed forms


def _hyper_1(problem: CoeffProblem, m: int, n: int) -> Fraction:
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    return pfq_terminating(
        HypergeomSpec(
            (Fraction(-r2), g, -g - r1, 1 - 2 * g - m - n),
            (1 - g - r2, 1 - 2 * g - r1, g - m),
            1,
            branch="f1",
        )
    )


def _hyper_2(problem: CoeffProblem, m: int, n: int) -> Fraction:
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    return pfq_terminating(
        HypergeomSpec(
            (Fraction(r2 - r1), g, 2 * g + r2, 1 - g + r2 - m - n),
            (1 - g + r2 - r1, 1 + g + r2, 2 * g + r2 - m),
            1,
            branch="f2",
        )
    )


def cmn_closed_form_1(problem: CoeffProblem, m: int, n: int) -> Fraction:
    """
    c_{m,n} = alpha_1 (-r1)_{m+n} (g-r2)_{m+n} (1-g)_m
    / (m! n! (1-2g-r1)_m (1-g-r2)_m (3g)_n)
    * 4F3(-r2, g, -g-r1, 1-2g-m-n; 1-g-r2, 1-2g-r1, g-m; 1).

    Raises:
      DegenerateLowerParameter: with branch "f1".
    """
    _check_index(problem, m, n)
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    pre = _ratio(
        [(Fraction(-r1), m + n), (g - r2, m + n), (1 - g, m)],
        [(1 - 2 * g - r1, m), (1 - g - r2, m), (3 * g, n)],
        "f1",
    ) / (factorial(m) * factorial(n))
    return alpha_1(problem) * pre * _hyper_1(problem, m, n)


def cmn_closed_form_2(problem: CoeffProblem, m: int, n: int) -> Fraction:
    """
    c_{m,n} = alpha_2 (1-2g-r2)_m (-r1)_{m+n} (2g)_{m+n}
    / ((1-2g-r1)_m (1-g-r2)_m (3g)_n m! n!)
    * 4F3(r2-r1, g, 2g+r2, 1-g+r2-m-n; 1-g+r2-r1, 1+g+r2, 2g+r2-m; 1).

    Raises:
      DegenerateLowerParameter: with branch "f2".
    """
    _check_index(problem, m, n)
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    pre = _ratio(
        [(1 - 2 * g - r2, m), (Fraction(-r1), m + n), (2 * g, m + n)],
        [(1 - 2 * g - r1, m), (1 - g - r2, m), (3 * g, n)],
        "f2",
    ) / (factorial(m) * factorial(n))
    return alpha_2(problem) * pre * _hyper_2(problem, m, n)


def a_m0_closed_form_1(problem: CoeffProblem, m: int) -> Fraction:
    """a_{m,0} = alpha_1 (1-g)_m / (2g)_m * 4F3(-r2, g, -g-r1, 1-2g-m; 1-g-r2, 1-2g-r1, g-m; 1)."""
    _check_index(problem, m, 0)
    g = problem.g.value
    pre = _ratio([(1 - g, m)], [(2 * g, m)], "f1")
    return alpha_1(problem) * pre * _hyper_1(problem, m, 0)


def a_m0_closed_form_2(problem: CoeffProblem, m: int) -> Fraction:
    """a_{m,0} = alpha_2 (1-2g-r2)_m / (g-r2)_m * 4F3(r2-r1, g, 2g+r2, 1-g+r2-m; 1-g+r2-r1, 1+g+r2, 2g+r2-m; 1)."""
    _check_index(problem, m, 0)
    r2, g = problem.r2, problem.g.value
    pre = _ratio([(1 - 2 * g - r2, m)], [(g - r2, m)], "f2")
    return alpha_2(problem) * pre * _hyper_2(problem, m, 0)


_C_FORMS: Dict[str, Callable[[CoeffProblem, int, int], Fraction]] = {
    "f1": cmn_closed_form_1,
    "f2": cmn_closed_form_2,
}

_A_FORMS: Dict[str, Callable[[CoeffProblem, int], Fraction]] = {
    "f1": a_m0_closed_form_1,
    "f2": a_m0_closed_form_2,
}


def _hint(branch: str) -> str:
    sibling = _SIBLING[branch]
    return f"formula {branch} is degenerate at this g; use --formula {sibling} or another g"


def _with_fallback(problem: CoeffProblem, formula: str, build: Callable[[str], Any]):
    """
    Runs build(branch) for the requested closed form. "auto" tries f1, then f2,
    and returns (result, branch that served).
    """
    if formula in _SIBLING:
        try:
            return build(formula), formula
        except DegenerateLowerParameter as e:
            raise e.with_branch(formula, _hint(formula)) from e
    if formula != "auto":
        raise ValueError(f"unknown formula {formula!r}, expected one of {FORMULAS}")
    try:
        return build("f1"), "f1"
    except DegenerateLowerParameter as first:
        logger.info(
            "f1 degenerate for r1=%d r2=%d g=%s (%s), switching to f2",
            problem.r1,
            problem.r2,
            problem.g,
            first,
        )
        try:
            return build("f2"), "f2"
        except DegenerateLowerParameter as second:
            raise second.with_branch(
                "f2", "both closed forms are degenerate at this g; choose another g"
            ) from second


def cmn_by_expansion(lam: PartitionLike, g: CouplingLike) -> CoeffTable:
    """
    The reference c table: expands f_lambda(x1) f_lambda(x2), strips
    (x1 x2)^{lambda_3} and reads the coefficients in the p_mn basis.

    Examples:
      >>> cmn_by_expansion((1, 0, 0), "2/5").to_text()
      '{(0,0): 3/2, (0,1): -1/2, (1,0): 3/4}'
    """
    lam = as_partition(lam)
    problem = CoeffProblem.from_partition(lam, g)
    f = f_lambda_sum_form(lam, problem.g)
    expansion = sympoly_to_pmn(separated_product(f)).normalized()
    shift = lam[2]
    entries = {}
    for (m, n), c in expansion.terms.items():
        if m < shift:
            raise ArithmeticError(f"p_({m},{n}) below the prefactor (x1 x2)^{shift}")
        entries[(m - shift, n)] = c
    return CoeffTable(problem, entries, "c", branch="expansion")


def cmn_table(problem: CoeffProblem, formula: str = "auto") -> CoeffTable:
    """
    The full c table from one route: "f1", "f2", "auto" (f1 with fallback to
    f2) or "expansion".

    Raises:
      DegenerateLowerParameter: if the requested closed form (or, for "auto",
        both) is degenerate; the error names the branch and a remedy.
    """
    if formula == "expansion":
        return cmn_by_expansion(problem.partition(), problem.g)

    def build(branch: str) -> Dict[Tuple[int, int], Fraction]:
        form = _C_FORMS[branch]
        return {(m, n): form(problem, m, n) for m, n in problem.indices()}

    entries, branch = _with_fallback(problem, formula, build)
    logger.debug(
        "c table r1=%d r2=%d g=%s served by %s", problem.r1, problem.r2, problem.g, branch
    )
    return CoeffTable(problem, entries, "c", branch=branch)


def amn_table(problem: CoeffProblem, formula: str = "auto") -> CoeffTable:
    """
    a_{m,n} = sum_l (-1)^l binom(n, l) a_{m+l,0}, with a_{m,0} from the closed
    form "f1" or "f2" ("auto" falls back from f1 to f2).
    """

    def build(branch: str) -> Dict[int, Fraction]:
        form = _A_FORMS[branch]
        return {m: form(problem, m) for m in range(problem.r1 + 1)}

    column, branch = _with_fallback(problem, formula, build)
    entries = {}
    for m, n in problem.indices():
        entries[(m, n)] = sum(
            (sign(l) * binomial(n, l) * column[m + l] for l in range(n + 1)), Fraction(0)
        )
    return CoeffTable(problem, entries, "a", branch=branch)


def substitution_factor(problem: CoeffProblem, m: int, n: int) -> Fraction:
    """
    c_{m,n} / a_{m,n} = (2g)_{m+n} (-r1)_{m+n} (g-r2)_{m+n}
    / (m! n! (3g-1)_n (3g)_n (1-2g-r1)_m (1-g-r2)_m).

    Raises:
      DegenerateLowerParameter: with branch "substitution".
    """
    _check_index(problem, m, n)
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    return _ratio(
        [(2 * g, m + n), (Fraction(-r1), m + n), (g - r2, m + n)],
        [(3 * g - 1, n), (3 * g, n), (1 - 2 * g - r1, m), (1 - g - r2, m)],
        "substitution",
    ) / (factorial(m) * factorial(n))


def a_to_c(table: CoeffTable) -> CoeffTable:
    """Maps an a table to the c table it encodes."""
    if table.kind != "a":
        raise ValueError(f"expected an a table, got kind {table.kind!r}")
    problem = table.problem
    entries = {
        (m, n): substitution_factor(problem, m, n) * table.get(m, n)
        for m, n in problem.indices()
    }
    return CoeffTable(problem, entries, "c", branch=table.branch)


def first_recurrence_residuals(table: CoeffTable) -> Dict[Tuple[int, int], Fraction]:
    """
    c_{m+1,n}(m+1)(1-2g+m-r1)(1-g+m-r2) + c_{m,n+1}(n+1)(3g+n-1)(3g+n)
    + c_{m,n}(2g+m+n)(r1-m-n)(g+m+n-r2) for every (m, n) of the table.
    Entries outside the table count as zero.
    """
    if table.kind != "c":
        raise ValueError(f"expected a c table, got kind {table.kind!r}")
    problem = table.problem
    r1, r2, g = problem.r1, problem.r2, problem.g.value
    c = table.get
    residuals = {}
    for m, n in problem.indices():
        residuals[(m, n)] = (
            c(m + 1, n) * (m + 1) * (1 - 2 * g + m - r1) * (1 - g + m - r2)
            + c(m, n + 1) * (n + 1) * (3 * g + n - 1) * (3 * g + n)
            + c(m, n) * (2 * g + m + n) * (r1 - m - n) * (g + m + n - r2)
        )
    return residuals


def second_recurrence_residuals(table: CoeffTable) -> Dict[Tuple[int, int], Fraction]:
    """
    The second (five-term) recurrence of the a table, evaluated at every
    (m, n) of the table. Entries outside the table count as zero.
    """
    if table.kind != "a":
        raise ValueError(f"expected an a table, got kind {table.kind!r}")
    problem = table.problem
    r1, r2, g = problem.r1, problem.r2, problem.g.value

    def a(m: int, n: int) -> Fraction:
        if m < 0 or n < 0:
            return Fraction(0)
        return table.get(m, n)

    residuals = {}
    for m, n in problem.indices():
        diagonal = (
            n * (3 * g + n - 1) * (3 * g + n - 2)
            - 3 * m * (m + 1) * n
            - n * (r1 - 1) * (r2 - 1)
            + 2 * (m - r2) * (g * (1 + r1) + (r1 - m) * m)
            + 2 * (3 * g + r1 + r2) * m * n
            - g * (g - 1) * (r1 + 3 * r2 - 5 * m)
            - g * (2 * g - 3 + r1 + 2 * r2) * n
        )
        residuals[(m, n)] = (
            m * (2 * g + r1 - m) * (g + r2 - m) * a(m - 1, n)
            - n * (3 * g + n - 2) * (3 * g + n - 1) * a(m, n - 1)
            + (m + n - r1) * (2 * g + m + n) * (g - r2 + m + n) * a(m + 1, n)
            + diagonal * a(m, n)
        )
    return residuals


def two_term_residuals(table: CoeffTable) -> Dict[Tuple[int, int], Fraction]:
    """a_{m+1,n} + a_{m,n+1} - a_{m,n} for every (m, n) with m + n < r1."""
    if table.kind != "a":
        raise ValueError(f"expected an a table, got kind {table.kind!r}")
    return {
        (m, n): table.get(m + 1, n) + table.get(m, n + 1) - table.get(m, n)
        for m, n in table.problem.indices()
        if m + n < table.problem.r1
    }
