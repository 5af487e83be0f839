"""Exact power sums S_k(n) and their expressions in S_1(n), S_2(n)."""

from .engine import (
    A_POLY,
    B_POLY,
    CoeffVector,
    ConsistencyError,
    DecompResult,
    PowerSumTable,
    decompose_greedy_AB,
    even_step,
    faulhaber_even_factor,
    faulhaber_in_A,
    g_poly,
    leading_coefficients,
    odd_step,
    pascal_power_sum,
    peel_in_A,
    term_count_report,
)
from .exact_poly import (
    BiPoly,
    NotDivisibleError,
    UniPoly,
    bipoly_substitute,
    poly_add,
    poly_div_exact,
    poly_eval,
    poly_mul,
    poly_shift_minus_one,
)
from .oracle import SweepReport, brute_force_sum, verify_poly
from .resultant import relation_polynomial

__version__ = "0.1.0"
