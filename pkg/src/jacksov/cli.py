"""
Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on a usage error,
3 when the requested formula is degenerate at the given g.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional

from .config import get_config, get_g_panel
from .exceptions import (
    DegenerateLowerParameter,
    EigenvalueCollision,
    JackSovError,
)
from .forms import FORMS, form_params, form_summary, get_form, row_length
from .partitions import Partition
from .separated import f_lambda_product_form, f_lambda_sum_form
from .sov.coefficients import CoeffProblem, amn_table, cmn_table
from .utils.files import dumps, write_json_secure
from .verify import SUITE_NAMES, run_suite
from ._logging import get_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

COEFF_FORMULAS = ("f1", "f2", "auto", "expansion", "a-table")


def _default_g() -> str:
    return get_config().get("cli", {}).get("default_g", "2/5")


def _partition(args: argparse.Namespace) -> Partition:
    return Partition.parse(args.lam).padded(args.vars)


def _emit(text: str):
    sys.stdout.write(text + "\n")


def cmd_compute(args: argparse.Namespace) -> int:
    if args.list_forms:
        for name in FORMS:
            _emit(f"{name:<12} ({', '.join(form_params(name))})  {form_summary(name)}")
        return EXIT_OK
    lam = _partition(args)
    available: Dict[str, Any] = {"lam": list(lam), "g": args.g, "nvars": args.vars}
    params = form_params(args.form)
    if "r" in params:
        available["r"] = row_length(args.form, lam)
    kwargs = {name: available[name] for name in params}
    logger.debug("compute %s with %s", args.form, kwargs)
    poly = get_form(args.form)(**kwargs)
    if args.json:
        _emit(dumps(poly.to_json(args.basis)))
    else:
        _emit(poly.to_text(args.basis))
    return EXIT_OK


def cmd_separated(args: argparse.Namespace) -> int:
    lam = _partition(args)
    if args.form == "product":
        f = f_lambda_product_form(lam, args.g)
    else:
        f = f_lambda_sum_form(lam, args.g)
    _emit(dumps(f) if args.json else f.to_text())
    return EXIT_OK


def cmd_coeffs(args: argparse.Namespace) -> int:
    problem = CoeffProblem(args.r1, args.r2, args.g)
    if args.formula == "a-table":
        table = amn_table(problem)
    else:
        table = cmn_table(problem, formula=args.formula)
    if table.branch and table.branch != args.formula:
        logger.info("table served by %s", table.branch)
    _emit(dumps(table))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(
        args.suite,
        max_weight=args.max_weight,
        g_panel=args.g_panel,
        workers=args.workers,
        progress=False if args.no_progress else None,
    )
    if args.output:
        write_json_secure(report, args.output, indent=2)
    _emit(dumps(report))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jacksov",
        description="Exact Jack polynomials by separation of variables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def polynomial_args(p: argparse.ArgumentParser):
        p.add_argument("--vars", type=int, default=3, help="number of variables (default: 3)")
        p.add_argument(
            "--lambda",
            dest="lam",
            default=None,
            help="partition, comma separated; padded with zeros to --vars",
        )
        p.add_argument("--g", default=_default_g(), help="coupling constant as p/q")
        p.add_argument("--json", action="store_true", help="print JSON instead of text")

    compute = sub.add_parser("compute", help="compute a Jack polynomial")
    polynomial_args(compute)
    compute.add_argument(
        "--form",
        choices=list(FORMS),
        default="oracle",
        help=(
            "construction to use (default: oracle). repr1 and repr2 are degenerate "
            "at g=1 for almost every partition and exit with status 3 there; "
            "the oracle form gives the Schur polynomial at g=1"
        ),
    )
    compute.add_argument("--basis", choices=["monomial", "elementary"], default="monomial")
    compute.add_argument("--list-forms", action="store_true", help="list the forms and exit")
    compute.set_defaults(func=cmd_compute)

    separated = sub.add_parser("separated", help="compute a separated polynomial f_lambda")
    polynomial_args(separated)
    separated.add_argument("--form", choices=["product", "sum"], default="sum")
    separated.set_defaults(func=cmd_separated)

    coeffs = sub.add_parser("coeffs", help="print a c_mn (or a_mn) table as JSON")
    coeffs.add_argument("--r1", type=int, required=True)
    coeffs.add_argument("--r2", type=int, default=0)
    coeffs.add_argument("--g", default=_default_g(), help="coupling constant as p/q")
    coeffs.add_argument("--formula", choices=COEFF_FORMULAS, default="auto")
    coeffs.set_defaults(func=cmd_coeffs)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all", help=f"one of {', '.join(SUITE_NAMES)}")
    verify.add_argument("--max-weight", type=int, default=None)
    verify.add_argument(
        "--g-panel",
        default=None,
        help=(
            f"comma separated couplings (default: {','.join(get_g_panel())}, screened "
            "for degenerate values before the run; an explicit panel is used as given)"
        ),
    )
    verify.add_argument("--output", default=None, help="also write the report to this file")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--no-progress", action="store_true")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("compute", "separated") and args.lam is None:
        if not getattr(args, "list_forms", False):
            parser.error(f"{args.command} needs --lambda")
    try:
        return args.func(args)
    except (DegenerateLowerParameter, EigenvalueCollision) as e:
        sys.stderr.write(f"degenerate: {e}\n")
        return EXIT_DEGENERATE
    except (ValueError, KeyError, TypeError) as e:
        # KeyError wraps its message in quotes
        message = e.args[0] if isinstance(e, KeyError) and e.args else e
        sys.stderr.write(f"error: {message}\n")
        return EXIT_USAGE
    except JackSovError as e:
        sys.stderr.write(f"error: {e}\n")
        # an internal consistency check failed
        return EXIT_VERIFY_FAILED
