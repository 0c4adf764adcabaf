"""Bindings for the quartic x^4 + 2n x^2 y^2 + m y^4 = z^2 toolkit."""

from ._quartic import (
    QuarticError,
    ScanLimitError,
    case_i,
    case_ii,
    conic_brute_force,
    descend,
    divisor_pairs,
    enumerate_primitive,
    hasse_scan,
    inverse_construct,
    is_kth_power_residue,
    is_prime,
    isqrt,
    local_report,
    primitive_solvable_mod,
    residue_branch_scan,
    search,
    search_general,
    selmer_fixture,
    validate_combo,
    verify_factorization_identity,
)

__all__ = [
    "QuarticError",
    "ScanLimitError",
    "case_i",
    "case_ii",
    "conic_brute_force",
    "descend",
    "divisor_pairs",
    "enumerate_primitive",
    "hasse_scan",
    "inverse_construct",
    "is_kth_power_residue",
    "is_prime",
    "isqrt",
    "local_report",
    "primitive_solvable_mod",
    "residue_branch_scan",
    "search",
    "search_general",
    "selmer_fixture",
    "validate_combo",
    "verify_factorization_identity",
]
