"""
Named verification suites.

A suite is a list of independent cases. Each case computes the same object
along two routes and compares them exactly; the runner collects the results
into a :class:`SuiteReport`.
"""

from __future__ import annotations
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
import time
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .config import get_config, get_g_panel
from .exact import CouplingG, CouplingLike, as_coupling, parse_panel
from .exceptions import (
    DegenerateLowerParameter,
    EigenvalueCollision,
    NotSymmetricError,
    UnknownSuiteError,
)
from .oracle import (
    apply_hg,
    apply_hg_full,
    constant_term_inner,
    eigenvalue,
    jack_oracle,
    operator_matrix,
)
from .partitions import Partition, all_partitions, partitions_of
from .separated import (
    b_lambda,
    c_lambda,
    f_lambda_product_form,
    f_lambda_sum_form,
    xi_coeffs,
)
from .sov import (
    CoeffProblem,
    a_to_c,
    amn_table,
    cmn_table,
    f_lambda_a1_hypergeometric,
    first_recurrence_residuals,
    jack_a1_elementary,
    jack_a1_gegenbauer,
    jack_a1_pmn,
    jack_a1_standard,
    jack_a2_repr1,
    jack_a2_repr2,
    jack_one_row,
    jack_one_row_e3,
    jack_rectangular,
    jack_two_row,
    one_row_pmn,
    one_row_reduced,
    s2_factorization_sides,
    s3hat_factorization_sides,
    second_recurrence_residuals,
    two_term_residuals,
    watson_f4,
    watson_product,
)
from .sympoly import SymPoly, is_symmetric, pmn_to_sympoly
from .utils.progress import SuiteProgress, TqdmState
from ._logging import get_logger

logger = get_logger("verify")

Comparison = Tuple[Any, Any]


@dataclass(frozen=True)
class Case:
    """
    One check. `run` returns (expected, actual); the case passes iff they are equal.

    Audit cases are recorded in the report's outcomes but never counted as failures.
    `screen`, if set, evaluates only the closed-form route of the case; the
    panel builder calls it to find degenerate couplings before anything runs.
    """

    case_id: str
    run: Callable[[], Comparison]
    audit: bool = False
    screen: Optional[Callable[[], Any]] = None


@dataclass
class CaseResult:
    case_id: str
    status: str  # "pass", "fail" or "skip"
    expected: Any = None
    actual: Any = None
    reason: Optional[str] = None
    audit: bool = False


@dataclass
class SuiteReport:
    suite: str
    cases_run: int = 0
    cases_passed: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    skipped: List[Dict[str, str]] = field(default_factory=list)
    outcomes: List[Dict[str, str]] = field(default_factory=list)
    wall_time_ms: int = 0
    panel_substitutions: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def skip_rate(self) -> float:
        total = self.cases_run + len(self.skipped)
        return len(self.skipped) / total if total else 0.0

    def _repr_json_(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "failures": self.failures,
            "skipped": self.skipped,
            "outcomes": self.outcomes,
            "wall_time_ms": self.wall_time_ms,
            "panel_substitutions": self.panel_substitutions,
        }

    @classmethod
    def from_results(cls, suite: str, results: Sequence[CaseResult], wall_time_ms: int):
        report = cls(suite, wall_time_ms=wall_time_ms)
        for res in sorted(results, key=lambda r: r.case_id):
            if res.status == "skip":
                report.skipped.append({"case_id": res.case_id, "reason": res.reason or ""})
                continue
            report.cases_run += 1
            if res.status == "pass":
                report.cases_passed += 1
            if res.audit:
                report.outcomes.append({"case_id": res.case_id, "status": res.status})
            elif res.status == "fail":
                report.failures.append(
                    {"case_id": res.case_id, "expected": res.expected, "actual": res.actual}
                )
        return report


def run_case(case: Case) -> CaseResult:
    try:
        expected, actual = case.run()
    except (DegenerateLowerParameter, EigenvalueCollision) as e:
        logger.info("skipping %s: %s", case.case_id, e)
        return CaseResult(case.case_id, "skip", reason=str(e), audit=case.audit)
    status = "pass" if expected == actual else "fail"
    if status == "fail" and not case.audit:
        logger.warning("case %s failed", case.case_id)
    return CaseResult(case.case_id, status, expected, actual, audit=case.audit)


# case builders


def _nonzero(residuals: Dict[Tuple[int, int], Any]) -> Dict[Tuple[int, int], Any]:
    return {k: v for k, v in residuals.items() if v}


def _cases_separated(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for n in (2, 3, 4):
            top = min(max_weight, 5) if n == 4 else max_weight
            for lam in all_partitions(n, top):
                tag = f"separated/{lam}/g={g}"
                yield Case(
                    f"{tag}/product",
                    lambda lam=lam, g=g: (f_lambda_sum_form(lam, g), f_lambda_product_form(lam, g)),
                    screen=lambda lam=lam, g=g: f_lambda_product_form(lam, g),
                )
                yield Case(
                    f"{tag}/at-one",
                    lambda lam=lam, g=g: (b_lambda(lam, g), f_lambda_sum_form(lam, g)(1)),
                )
                if n == 2:
                    yield Case(
                        f"{tag}/hypergeometric",
                        lambda lam=lam, g=g: (
                            f_lambda_sum_form(lam, g),
                            f_lambda_a1_hypergeometric(lam, g),
                        ),
                        screen=lambda lam=lam, g=g: f_lambda_a1_hypergeometric(lam, g),
                    )
                if n == 3:
                    yield Case(
                        f"{tag}/xi-cmn",
                        lambda lam=lam, g=g: (
                            xi_coeffs(lam, g, via="sum"),
                            xi_coeffs(lam, g, via="cmn"),
                        ),
                        screen=lambda lam=lam, g=g: xi_coeffs(lam, g, via="cmn"),
                    )


def _cases_watson(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for n in range(max_weight + 1):
            b, c = g.value, 1 - n - g.value
            yield Case(
                f"watson/n={n}/g={g}",
                lambda n=n, b=b, c=c: (watson_product(n, b, c), watson_f4(n, b, c)),
                screen=lambda n=n, b=b, c=c: watson_f4(n, b, c),
            )


_A1_FORMS = {
    "standard": jack_a1_standard,
    "pmn": jack_a1_pmn,
    "elementary": jack_a1_elementary,
    "gegenbauer": jack_a1_gegenbauer,
}


def _cases_a1(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for d in range(max_weight + 1):
            for last in range(min(max_weight, 3) + 1):
                lam = Partition((d + last, last))
                for name, build in _A1_FORMS.items():
                    yield Case(
                        f"a1/{lam}/g={g}/{name}",
                        lambda lam=lam, g=g, build=build: (jack_oracle(lam, g, 2), build(lam, g)),
                        screen=lambda lam=lam, g=g, build=build: build(lam, g),
                    )
                yield Case(
                    f"a1/{lam}/g={g}/s2-factorization",
                    lambda lam=lam, g=g: s2_factorization_sides(lam, g),
                )


def _cases_cmn(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for r1 in range(max_weight + 1):
            for r2 in range(r1 + 1):
                problem = CoeffProblem(r1, r2, g)
                for formula in ("f1", "f2"):
                    yield Case(
                        f"cmn/r1={r1}/r2={r2}/g={g}/{formula}",
                        lambda problem=problem, formula=formula: (
                            cmn_table(problem, "expansion"),
                            cmn_table(problem, formula),
                        ),
                        screen=lambda problem=problem, formula=formula: cmn_table(
                            problem, formula
                        ),
                    )


def _cases_recurrences(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for r1 in range(max_weight + 1):
            for r2 in range(r1 + 1):
                problem = CoeffProblem(r1, r2, g)
                tag = f"recurrences/r1={r1}/r2={r2}/g={g}"
                yield Case(
                    f"{tag}/first",
                    lambda problem=problem: (
                        {},
                        _nonzero(first_recurrence_residuals(cmn_table(problem, "expansion"))),
                    ),
                )
                yield Case(
                    f"{tag}/second",
                    lambda problem=problem: (
                        {},
                        _nonzero(second_recurrence_residuals(amn_table(problem))),
                    ),
                    screen=lambda problem=problem: amn_table(problem),
                )
                yield Case(
                    f"{tag}/two-term",
                    lambda problem=problem: ({}, _nonzero(two_term_residuals(amn_table(problem)))),
                    screen=lambda problem=problem: amn_table(problem),
                )
                yield Case(
                    f"{tag}/substitution",
                    lambda problem=problem: (
                        cmn_table(problem, "expansion"),
                        a_to_c(amn_table(problem)),
                    ),
                    screen=lambda problem=problem: a_to_c(amn_table(problem)),
                )


def _cases_sov_a2(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for lam in all_partitions(3, max_weight, max_last=min(max_weight, 2)):
            tag = f"sov-a2/{lam}/g={g}"
            yield Case(f"{tag}/s3-factorization", lambda lam=lam, g=g: s3hat_factorization_sides(lam, g))
            for name, build in (("repr1", jack_a2_repr1), ("repr2", jack_a2_repr2)):
                yield Case(
                    f"{tag}/{name}",
                    lambda lam=lam, g=g, build=build: (jack_oracle(lam, g, 3), build(lam, g)),
                    screen=lambda lam=lam, g=g, build=build: build(lam, g),
                )
            yield Case(
                f"{tag}/at-ones",
                lambda lam=lam, g=g: (c_lambda(lam, g), jack_oracle(lam, g, 3).evaluate((1, 1, 1))),
            )
        for r in range(max_weight + 1):
            lam = (r, 0, 0)
            tag = f"sov-a2/one-row/r={r}/g={g}"
            closed_form_cases = {
                f"{tag}/elementary": lambda lam=lam, r=r, g=g: (
                    jack_a2_repr1(lam, g),
                    jack_one_row(r, 3, g),
                ),
                f"{tag}/e3": lambda lam=lam, r=r, g=g: (jack_a2_repr1(lam, g), jack_one_row_e3(r, g)),
                f"{tag}/pmn": lambda lam=lam, r=r, g=g: (
                    jack_a2_repr1(lam, g).specialize_last(1),
                    pmn_to_sympoly(one_row_pmn(r, g)),
                ),
                f"{tag}/reduced": lambda lam=lam, r=r, g=g: (
                    jack_a2_repr1(lam, g).specialize_last(1),
                    one_row_reduced(r, g),
                ),
                f"sov-a2/two-row/r={r}/g={g}": lambda r=r, g=g: (
                    jack_a2_repr2((r, r, 0), g),
                    jack_two_row(r, g),
                ),
            }
            # both sides are closed forms
            for case_id, run in closed_form_cases.items():
                yield Case(case_id, run, screen=run)


def _oracle_eigen(lam, g, nvars) -> Comparison:
    p = jack_oracle(lam, g, nvars)
    return p.scale(eigenvalue(lam, g, nvars)), apply_hg(p, g)


def _oracle_full_image(lam, g, nvars) -> Comparison:
    """H_g on the expanded polynomial: same result as on the m basis, and symmetric."""
    p = jack_oracle(lam, g, nvars)
    try:
        image = apply_hg_full(p, g)
    except NotSymmetricError as e:
        return (apply_hg(p, g), True), (str(e), False)
    return (
        (apply_hg(p, g), True),
        (SymPoly.from_monomials(nvars, image), is_symmetric(nvars, image)),
    )


def _oracle_homogeneity(lam, g, nvars) -> Comparison:
    p = jack_oracle(lam, g, nvars)
    point = tuple(range(1, nvars + 1))
    return (True, {sum(lam)}), (p.scaled_point_check(2, point), p.degrees())


def _cases_oracle(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for nvars in (2, 3, 4):
            top = min(max_weight, 5) if nvars == 4 else max_weight
            for degree in range(top + 1):
                yield Case(
                    f"oracle/matrix/n={nvars}/d={degree}/g={g}",
                    lambda degree=degree, nvars=nvars, g=g: (
                        (True, True),
                        (
                            operator_matrix(degree, nvars, g).is_triangular(),
                            operator_matrix(degree, nvars, g).diagonal_is_spectrum(),
                        ),
                    ),
                )
                for lam in partitions_of(degree, nvars):
                    tag = f"oracle/{Partition(lam)}/g={g}"
                    yield Case(f"{tag}/eigen", lambda lam=lam, g=g, n=nvars: _oracle_eigen(lam, g, n))
                    yield Case(
                        f"{tag}/symmetric-image",
                        lambda lam=lam, g=g, n=nvars: _oracle_full_image(lam, g, n),
                    )
                    yield Case(
                        f"{tag}/homogeneous",
                        lambda lam=lam, g=g, n=nvars: _oracle_homogeneity(lam, g, n),
                    )
                    for s in (1, 2):
                        yield Case(
                            f"{tag}/shift={s}",
                            lambda lam=lam, g=g, n=nvars, s=s: (
                                jack_oracle(lam, g, n).shift(s),
                                jack_oracle(tuple(p + s for p in lam), g, n),
                            ),
                        )
                    if nvars == 3:
                        yield Case(
                            f"{tag}/at-ones",
                            lambda lam=lam, g=g: (
                                c_lambda(lam, g),
                                jack_oracle(lam, g, 3).evaluate((1, 1, 1)),
                            ),
                        )


ORTHOGONALITY_COUPLINGS = (1, 2)


def _cases_orthogonality(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    # the weight function is a Laurent polynomial only for integer g
    for g in ORTHOGONALITY_COUPLINGS:
        for nvars in (2, 3):
            for degree in range(min(max_weight, 4) + 1):
                for lam, mu in combinations(partitions_of(degree, nvars), 2):
                    yield Case(
                        f"orthogonality/{Partition(lam)}/{Partition(mu)}/g={g}",
                        lambda lam=lam, mu=mu, g=g, n=nvars: (
                            0,
                            constant_term_inner(
                                jack_oracle(lam, g, n), jack_oracle(mu, g, n), g, n
                            ),
                        ),
                    )


def _cases_conjecture_rect(max_weight: int, panel: Sequence[CouplingG]) -> Iterator[Case]:
    for g in panel:
        for nvars in (4, 5):
            for r in range(min(max_weight, 3) + 1):
                lam = (r,) * (nvars - 1) + (0,)
                yield Case(
                    f"conjecture-rect/{Partition(lam)}/g={g}",
                    lambda lam=lam, r=r, g=g, n=nvars: (
                        jack_oracle(lam, g, n),
                        jack_rectangular(r, n, g),
                    ),
                    audit=True,
                    screen=lambda r=r, g=g, n=nvars: jack_rectangular(r, n, g),
                )


SUITES: Dict[str, Callable[[int, Sequence[CouplingG]], Iterator[Case]]] = {
    "separated": _cases_separated,
    "watson": _cases_watson,
    "a1": _cases_a1,
    "cmn": _cases_cmn,
    "recurrences": _cases_recurrences,
    "sov-a2": _cases_sov_a2,
    "oracle": _cases_oracle,
    "orthogonality": _cases_orthogonality,
    "conjecture-rect": _cases_conjecture_rect,
}

SUITE_NAMES: Tuple[str, ...] = tuple(SUITES) + ("all",)


def _suite_names(suite: str) -> List[str]:
    if suite == "all":
        return list(SUITES)
    if suite in SUITES:
        return [suite]
    raise UnknownSuiteError(f"unknown suite {suite!r}, expected one of {', '.join(SUITE_NAMES)}")


# panel screening

SUBSTITUTE_STEP = Fraction(1, 7)
SUBSTITUTE_TRIES = 6


@dataclass(frozen=True)
class PanelSubstitution:
    """A panel coupling found degenerate for a suite, and what replaced it (None if dropped)."""

    suite: str
    g: CouplingG
    replaced_by: Optional[CouplingG]
    reason: str

    def _repr_json_(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "g": str(self.g),
            "replaced_by": None if self.replaced_by is None else str(self.replaced_by),
            "reason": self.reason,
        }


def degeneracy_at(suite: str, max_weight: int, g: CouplingLike) -> Optional[str]:
    """
    Runs the screens of one suite at a single g. Returns "<case id>: <error>"
    for the first degenerate case, or None if every closed form is usable.
    """
    for case in SUITES[suite](max_weight, [as_coupling(g)]):
        if case.screen is None:
            continue
        try:
            case.screen()
        except (DegenerateLowerParameter, EigenvalueCollision) as e:
            return f"{case.case_id}: {e}"
    return None


def screen_panel(
    suite: str, max_weight: int, panel: Sequence[CouplingLike]
) -> Tuple[List[CouplingG], List[PanelSubstitution]]:
    """
    Checks every panel coupling for degenerate closed forms at this weight
    before the suite is built. A degenerate g is replaced by the first of
    g + 1/7, g + 2/7, ... that is neither degenerate nor already on the panel,
    or dropped if none is found.

    Examples:
      >>> screen_panel("cmn", 1, ["1", "2/5"])[0]
      [CouplingG(value=Fraction(8, 7)), CouplingG(value=Fraction(2, 5))]
    """
    couplings = parse_panel(panel)
    taken = {g.value for g in couplings}
    screened: List[CouplingG] = []
    substitutions: List[PanelSubstitution] = []
    for g in couplings:
        reason = degeneracy_at(suite, max_weight, g)
        if reason is None:
            screened.append(g)
            continue
        replacement: Optional[CouplingG] = None
        for k in range(1, SUBSTITUTE_TRIES + 1):
            candidate = as_coupling(g.value + k * SUBSTITUTE_STEP)
            if candidate.value in taken:
                continue
            if degeneracy_at(suite, max_weight, candidate) is None:
                replacement = candidate
                break
        if replacement is None:
            logger.warning("%s: dropping g=%s from the panel (%s)", suite, g, reason)
        else:
            logger.info("%s: g=%s is degenerate (%s), using g=%s", suite, g, reason, replacement)
            taken.add(replacement.value)
            screened.append(replacement)
        substitutions.append(PanelSubstitution(suite, g, replacement, reason))
    return screened, substitutions


def _build_cases(
    suite: str, max_weight: int, panel: Sequence[CouplingLike], screen: bool
) -> Tuple[List[Case], List[PanelSubstitution]]:
    names = _suite_names(suite)
    if max_weight < 0:
        raise ValueError(f"max weight must be nonnegative, got {max_weight}")
    couplings = parse_panel(panel)
    cases: List[Case] = []
    substitutions: List[PanelSubstitution] = []
    for name in names:
        suite_panel = couplings
        if screen:
            suite_panel, replaced = screen_panel(name, max_weight, couplings)
            substitutions.extend(replaced)
        cases.extend(SUITES[name](max_weight, suite_panel))
    return cases, substitutions


def suite_cases(
    suite: str, max_weight: int, panel: Sequence[CouplingLike], screen: bool = False
) -> List[Case]:
    """
    Raises:
      UnknownSuiteError: if `suite` is neither a suite name nor "all".
    """
    return _build_cases(suite, max_weight, panel, screen)[0]


def _log_progress(state: TqdmState):
    logger.debug("%s: %s/%s cases", state["prefix"], state["n"], state["total"])


def run_suite(
    suite: str,
    max_weight: Optional[int] = None,
    g_panel: Optional[Sequence[CouplingLike]] = None,
    workers: Optional[int] = None,
    progress: Optional[bool] = None,
    screen: Optional[bool] = None,
) -> SuiteReport:
    """
    Runs a named suite and returns its report. Unset arguments come from the
    ``verify`` section of the configuration.

    The configured panel is screened for degenerate couplings first (see
    :func:`screen_panel`); an explicit `g_panel` is used as given unless
    `screen` is set. Cases that still hit a degenerate parameter (a vanishing
    lower parameter, or an eigenvalue collision in the oracle) are skipped
    and logged.
    """
    cfg = get_config().get("verify", {})
    if max_weight is None:
        max_weight = int(cfg.get("max_weight", 4))
    if screen is None:
        screen = g_panel is None
    if g_panel is None:
        g_panel = get_g_panel()
    if workers is None:
        workers = int(cfg.get("workers", 1))
    if progress is None:
        progress = bool(cfg.get("progress", True))

    cases, substitutions = _build_cases(suite, max_weight, g_panel, screen)
    logger.info("suite %s: %d cases, max weight %d", suite, len(cases), max_weight)
    start = time.perf_counter()
    results: List[CaseResult] = []
    with SuiteProgress(
        total=len(cases),
        desc=suite,
        disable=not progress,
        broadcast_func=_log_progress,
    ) as bar:
        if workers <= 1:
            for case in cases:
                results.append(run_case(case))
                bar.update(1)
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                futures = [pool.submit(run_case, case) for case in cases]
                for future in as_completed(futures):
                    results.append(future.result())
                    bar.update(1)
    wall_time_ms = int((time.perf_counter() - start) * 1000)

    report = SuiteReport.from_results(suite, results, wall_time_ms)
    report.panel_substitutions = [s._repr_json_() for s in substitutions]
    logger.info(
        "suite %s: %d/%d passed, %d failed, %d skipped (%.1f%%) in %d ms",
        suite,
        report.cases_passed,
        report.cases_run,
        len(report.failures),
        len(report.skipped),
        100 * report.skip_rate,
        wall_time_ms,
    )
    return report
