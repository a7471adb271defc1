__version__ = "0.1.0"

from .exact import (
    CouplingG,
    DEFAULT_G_PANEL,
    as_coupling,
    binomial,
    factorial,
    format_rational,
    parse_panel,
    parse_rational,
    pochhammer,
)
from .exceptions import (
    JackSovError,
    InvalidIndexError,
    PartitionError,
    InvalidCouplingError,
    NonTerminating,
    DegenerateLowerParameter,
    TruncationFailure,
    EigenvalueCollision,
    NotSymmetricError,
    UnknownSuiteError,
    UnknownFormError,
)
from .partitions import Partition, dominance_leq, partitions_of
from .sympoly import (
    SymPoly,
    PmnExpansion,
    elementary_to_monomial,
    is_symmetric,
    monomial_to_elementary,
    pmn_to_sympoly,
    sympoly_to_pmn,
)
from .unipoly import UniPoly
from .hypergeom import (
    HypergeomSpec,
    appell_f4_terminating,
    gegenbauer,
    pfq_terminating,
    saalschutz_3f2,
)
from .separated import (
    b_lambda,
    c_lambda,
    f_lambda_product_form,
    f_lambda_sum_form,
    xi_coeffs,
)
from .oracle import (
    OperatorMatrix,
    apply_hg,
    apply_hg_full,
    constant_term_inner,
    eigenvalue,
    jack_oracle,
    operator_matrix,
)
from . import sov
from . import config
from . import _logging as logging
from ._logging import JACKSOV_LOGGER, get_logger, set_log_format
from .utils.serialization import JSONEncoder, Encdata
from .verify import SuiteReport, run_suite

__all__ = [
    "CouplingG",
    "DEFAULT_G_PANEL",
    "as_coupling",
    "binomial",
    "factorial",
    "format_rational",
    "parse_panel",
    "parse_rational",
    "pochhammer",
    "JackSovError",
    "InvalidIndexError",
    "PartitionError",
    "InvalidCouplingError",
    "NonTerminating",
    "DegenerateLowerParameter",
    "TruncationFailure",
    "EigenvalueCollision",
    "NotSymmetricError",
    "UnknownSuiteError",
    "UnknownFormError",
    "Partition",
    "dominance_leq",
    "partitions_of",
    "SymPoly",
    "PmnExpansion",
    "elementary_to_monomial",
    "is_symmetric",
    "monomial_to_elementary",
    "pmn_to_sympoly",
    "sympoly_to_pmn",
    "UniPoly",
    "HypergeomSpec",
    "appell_f4_terminating",
    "gegenbauer",
    "pfq_terminating",
    "saalschutz_3f2",
    "b_lambda",
    "c_lambda",
    "f_lambda_product_form",
    "f_lambda_sum_form",
    "xi_coeffs",
    "OperatorMatrix",
    "apply_hg",
    "apply_hg_full",
    "constant_term_inner",
    "eigenvalue",
    "jack_oracle",
    "operator_matrix",
    "sov",
    "config",
    "logging",
    "JACKSOV_LOGGER",
    "get_logger",
    "set_log_format",
    "JSONEncoder",
    "Encdata",
    "SuiteReport",
    "run_suite",
]
