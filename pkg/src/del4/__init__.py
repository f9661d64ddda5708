"""Optimal and perfect single-deletion-correcting codes of length 4 over even alphabets."""

from __future__ import annotations

from .bounds import BoundReport, exact_cover_sqs, levenshtein_bound, max_code_search, sharp_bound
from .codes import ConstructionTrace, base_code, code_from_gdd, code_from_sqs, double_code, optimal_code, perfect_code
from .errors import BudgetExhausted, ConstructionError, Del4Error, InternalError, InvalidArgument, UnsupportedParameter
from .gdd import GDD, build_gdd, family_A, is_gdd
from .orbits import gen_A, gen_B
from .pairs import mills_pairs, p_bar_systems, p_systems, reiss_partition
from .sqs import CanonicalSQS, CaseId, build_case, build_sqs_step, has_step_property, is_sqs, select_upper_quads
from .words import (
    Code,
    Profile,
    WordClass,
    classify,
    deletion_ball,
    is_deletion_correcting,
    is_perfect,
    min_distance,
    profile,
    rho,
)

__all__ = [
    "BoundReport", "BudgetExhausted", "CanonicalSQS", "CaseId", "Code", "ConstructionError",
    "ConstructionTrace", "Del4Error", "GDD", "InternalError", "InvalidArgument", "Profile",
    "UnsupportedParameter", "WordClass", "base_code", "build_case", "build_gdd", "build_sqs_step",
    "classify", "code_from_gdd", "code_from_sqs", "deletion_ball", "double_code", "exact_cover_sqs",
    "family_A", "gen_A", "gen_B", "has_step_property", "is_deletion_correcting", "is_gdd",
    "is_perfect", "is_sqs", "levenshtein_bound", "max_code_search", "mills_pairs", "min_distance",
    "optimal_code", "p_bar_systems", "p_systems", "perfect_code", "profile", "reiss_partition",
    "rho", "select_upper_quads", "sharp_bound",
]
