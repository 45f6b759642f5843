"""Exact series engine: pFq expansions, pullbacks, susceptibility assembly,
and series-level identity and modular-curve verification."""

from .pfq import (InvalidParameters, binomial_series, pfq_series,
                  pfq_operator, pfq_coefficient_recursion_holds, poly_series,
                  ratfun_series)
from .chi import (CHI3_WEIGHTS, CHI4_WEIGHTS, IntegralityReport,
                  assemble_chi3, assemble_chi4, chi3_piece1, chi3_piece2,
                  chi3_piece3, chi4_piece1, chi4_piece2, chi4_piece3,
                  core_pullback, integrality_check, quartic_argument)
from .modular import (curve_names, curve_residual, hauptmodul_names,
                      inverse_landen_series, load_curve, load_hauptmodul,
                      parametrizations, verify_parametrization)
from .identities import (IDENTITY_NAMES, IdentityReport, UnknownIdentity,
                         verify_all_identities, verify_hypergeometric_identity)
from .special import (special_solution_names, verify_special_solution,
                      verify_special_solutions)

__all__ = [
    "InvalidParameters", "binomial_series", "pfq_series", "pfq_operator",
    "pfq_coefficient_recursion_holds", "poly_series", "ratfun_series",
    "CHI3_WEIGHTS", "CHI4_WEIGHTS", "IntegralityReport",
    "assemble_chi3", "assemble_chi4", "chi3_piece1", "chi3_piece2",
    "chi3_piece3", "chi4_piece1", "chi4_piece2", "chi4_piece3",
    "core_pullback", "integrality_check", "quartic_argument",
    "curve_names", "curve_residual", "hauptmodul_names",
    "inverse_landen_series", "load_curve", "load_hauptmodul",
    "parametrizations", "verify_parametrization",
    "IDENTITY_NAMES", "IdentityReport", "UnknownIdentity",
    "verify_all_identities", "verify_hypergeometric_identity",
    "special_solution_names", "verify_special_solution",
    "verify_special_solutions",
]
