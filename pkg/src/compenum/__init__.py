"""Exact enumeration of integer compositions with restricted parts.

Part sets are eventually periodic subsets of the positive integers
(residue classes modulo k with finitely many exceptions).  For any such
set the package derives the rational generating function of the
composition counts exactly, turns it into a linear recurrence with big
integer terms and a fast modular evaluator, expands it into a numeric
closed form over the denominator poles, and cross-checks everything
against brute-force enumeration and direct dynamic programming.
"""

from .bivariate import (
    BivariateTable,
    bivariate_table,
    odd_parts_by_length,
    row_check_against_slices,
)
from .closedform import (
    ClosedFormError,
    ComplexRoot,
    ConvergenceError,
    DominanceReport,
    EvalResult,
    PartialFraction,
    RepeatedRootError,
    dominance_report,
    eval_closed,
    find_roots,
    partial_fractions,
)
from .genfun import composition_gf, composition_series, count, length_slice_series
from .oracle import (
    DEFAULT_ENUM_LIMIT,
    Check,
    CheckRow,
    Composition,
    VerificationReport,
    compositions,
    dp_count,
    dp_count_series,
    expected_discrepancy,
    random_partset,
    run_verification_suite,
    suite_passed,
    verify_cayley_shift,
    verify_sills_zeilberger,
    verify_theorem,
    verify_triangle,
)
from .partset import PartSet, SetSpecError, parse_setspec
from .polyring import IntPolynomial, RationalGF
from .recurrence import (
    LinearRecurrence,
    avoid_residue_recurrence,
    avoid_residue_seed_formula,
    no_multiples_recurrence,
    recurrence_from_gf,
)

__version__ = "0.1.0"

__all__ = [
    "BivariateTable",
    "Check",
    "CheckRow",
    "ClosedFormError",
    "ComplexRoot",
    "Composition",
    "ConvergenceError",
    "DEFAULT_ENUM_LIMIT",
    "DominanceReport",
    "EvalResult",
    "IntPolynomial",
    "LinearRecurrence",
    "PartSet",
    "PartialFraction",
    "RationalGF",
    "RepeatedRootError",
    "SetSpecError",
    "VerificationReport",
    "avoid_residue_recurrence",
    "avoid_residue_seed_formula",
    "bivariate_table",
    "composition_gf",
    "composition_series",
    "compositions",
    "count",
    "dominance_report",
    "dp_count",
    "dp_count_series",
    "eval_closed",
    "expected_discrepancy",
    "find_roots",
    "length_slice_series",
    "no_multiples_recurrence",
    "odd_parts_by_length",
    "parse_setspec",
    "partial_fractions",
    "random_partset",
    "recurrence_from_gf",
    "row_check_against_slices",
    "run_verification_suite",
    "suite_passed",
    "verify_cayley_shift",
    "verify_sills_zeilberger",
    "verify_theorem",
    "verify_triangle",
]
