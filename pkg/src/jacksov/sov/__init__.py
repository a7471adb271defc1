from .operators import s2_apply, s3hat_apply
from .a1 import (
    a1_parameter_map,
    a1_pmn_expansion,
    f_lambda_a1_hypergeometric,
    jack_a1_elementary,
    jack_a1_gegenbauer,
    jack_a1_pmn,
    jack_a1_standard,
    s2_factorization_sides,
    watson_f4,
    watson_product,
)
from .coefficients import (
    CoeffProblem,
    CoeffTable,
    FORMULAS,
    a_m0_closed_form_1,
    a_m0_closed_form_2,
    a_to_c,
    alpha_1,
    alpha_2,
    amn_table,
    cmn_by_expansion,
    cmn_closed_form_1,
    cmn_closed_form_2,
    cmn_table,
    first_recurrence_residuals,
    second_recurrence_residuals,
    substitution_factor,
    two_term_residuals,
)
from .a2 import (
    REPRESENTATIONS,
    jack_a2_repr1,
    jack_a2_repr2,
    jack_one_row,
    jack_one_row_e3,
    jack_rectangular,
    jack_two_row,
    one_row_pmn,
    one_row_reduced,
    pmn_of_reduced,
    reduced_pmn,
    s3hat_factorization_sides,
)

__all__ = [
    "s2_apply",
    "s3hat_apply",
    "a1_parameter_map",
    "a1_pmn_expansion",
    "f_lambda_a1_hypergeometric",
    "jack_a1_elementary",
    "jack_a1_gegenbauer",
    "jack_a1_pmn",
    "jack_a1_standard",
    "s2_factorization_sides",
    "watson_f4",
    "watson_product",
    "CoeffProblem",
    "CoeffTable",
    "FORMULAS",
    "a_m0_closed_form_1",
    "a_m0_closed_form_2",
    "a_to_c",
    "alpha_1",
    "alpha_2",
    "amn_table",
    "cmn_by_expansion",
    "cmn_closed_form_1",
    "cmn_closed_form_2",
    "cmn_table",
    "first_recurrence_residuals",
    "second_recurrence_residuals",
    "substitution_factor",
    "two_term_residuals",
    "REPRESENTATIONS",
    "jack_a2_repr1",
    "jack_a2_repr2",
    "jack_one_row",
    "jack_one_row_e3",
    "jack_rectangular",
    "jack_two_row",
    "one_row_pmn",
    "one_row_reduced",
    "pmn_of_reduced",
    "reduced_pmn",
    "s3hat_factorization_sides",
]
