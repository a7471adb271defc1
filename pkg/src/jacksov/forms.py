"""
The named constructions behind ``jacksov compute --form``.

Every form is an exposed method; callers read ``ef_funcmeta["input_params"]``
to find out which of ``lam``, ``r``, ``nvars`` and ``g`` it takes.
"""

from typing import Callable, Dict, List

from exposedfunctionality import assure_exposed_method
from exposedfunctionality.function_parser.types import add_type

from .exceptions import PartitionError, UnknownFormError
from .oracle import jack_oracle
from .partitions import Partition
from .sov.a1 import jack_a1_elementary, jack_a1_gegenbauer, jack_a1_pmn, jack_a1_standard
from .sov.a2 import jack_a2_repr1, jack_a2_repr2, jack_one_row, jack_rectangular, jack_two_row
from .sympoly import SymPoly

add_type(SymPoly, "SymPoly")

FORMS: Dict[str, Callable[..., SymPoly]] = {}


def form(name: str):
    """Registers `func` as the compute form `name`."""

    def decorator(func: Callable[..., SymPoly]) -> Callable[..., SymPoly]:
        exposed = assure_exposed_method(func, name=name)
        FORMS[name] = exposed
        return exposed

    return decorator


def form_params(name: str) -> List[str]:
    return [ip["name"] for ip in get_form(name).ef_funcmeta["input_params"]]


def form_summary(name: str) -> str:
    return (get_form(name).ef_funcmeta.get("docstring") or {}).get("summary", "")


def get_form(name: str) -> Callable[..., SymPoly]:
    try:
        return FORMS[name]
    except KeyError as e:
        raise UnknownFormError(
            f"unknown form {name!r}, expected one of {', '.join(FORMS)}"
        ) from e


@form("standard")
def standard(lam: List[int], g: str) -> SymPoly:
    """Two variables, x2^|lambda| f_lambda(x1/x2)."""
    return jack_a1_standard(lam, g)


@form("pmn")
def pmn(lam: List[int], g: str) -> SymPoly:
    """Two variables, from the terminating F4 double sum in the p_mn basis."""
    return jack_a1_pmn(lam, g)


@form("elementary")
def elementary(lam: List[int], g: str) -> SymPoly:
    """Two variables, from the e1/e2 expansion."""
    return jack_a1_elementary(lam, g)


@form("gegenbauer")
def gegenbauer(lam: List[int], g: str) -> SymPoly:
    """Two variables, from the Gegenbauer polynomial C_{lam_12}^g."""
    return jack_a1_gegenbauer(lam, g)


@form("repr1")
def repr1(lam: List[int], g: str) -> SymPoly:
    """Three variables, inverse S_3 on the first closed form of c_mn."""
    return jack_a2_repr1(lam, g)


@form("repr2")
def repr2(lam: List[int], g: str) -> SymPoly:
    """Three variables, inverse S_3 on the second closed form of c_mn."""
    return jack_a2_repr2(lam, g)


@form("one-row")
def one_row(r: int, nvars: int, g: str) -> SymPoly:
    """P_(r) in any number of variables, elementary closed form."""
    return jack_one_row(r, nvars, g)


@form("two-row")
def two_row(r: int, g: str) -> SymPoly:
    """P_(r,r,0) in three variables."""
    return jack_two_row(r, g)


@form("rectangular")
def rectangular(r: int, nvars: int, g: str) -> SymPoly:
    """P_(r,...,r,0), the conjectured elementary closed form."""
    return jack_rectangular(r, nvars, g)


@form("oracle")
def oracle(lam: List[int], g: str, nvars: int) -> SymPoly:
    """Eigenvector of the Sutherland operator by back-substitution."""
    return jack_oracle(lam, g, nvars)


def row_length(name: str, lam: Partition) -> int:
    """
    r for the shape-restricted forms: (r, 0, ..., 0) for "one-row",
    (r, r, 0) for "two-row" and (r, ..., r, 0) for "rectangular".

    Raises:
      PartitionError: if `lam` does not have the shape the form expects.
    """
    parts = tuple(lam)
    r = parts[0] if parts else 0
    if name == "one-row":
        expected = (r,) + (0,) * (len(parts) - 1)
    elif name == "two-row":
        expected = (r, r, 0)
    elif name == "rectangular":
        expected = (r,) * (len(parts) - 1) + (0,)
    else:
        raise PartitionError(f"form {name!r} takes a partition, not a row length")
    if parts != expected:
        raise PartitionError(f"form {name!r} needs a partition of shape {expected}, got {lam}")
    return r
