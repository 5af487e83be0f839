"""Brute-force ground truth for power sums.

Deliberately naive: plain integer summation, no closed forms, no shortcuts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .exact_poly import UniPoly, poly_eval


@dataclass
class SweepReport:
    k: int
    n_max: int
    mismatches: List[Tuple[int, int, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def brute_force_sum(k: int, n: int) -> int:
    return sum(m**k for m in range(1, n + 1))


def _sweep(k: int, p: UniPoly, lo: int, hi: int) -> List[Tuple[int, int, Fraction]]:
    bad = []
    total = brute_force_sum(k, lo - 1) if lo > 0 else 0
    for n in range(lo, hi + 1):
        if n > 0:
            total += n**k
        got = poly_eval(p, n)
        if got.denominator != 1 or got != total:
            bad.append((n, total, got))
    return bad


def verify_poly(k: int, p: UniPoly, n_max: int, jobs: int = 1) -> SweepReport:
    """Compare ``p(n)`` with the direct sum for every n in 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if jobs <= 1 or n_max < jobs:
        return SweepReport(k, n_max, _sweep(k, p, 0, n_max))
    step = (n_max + 1 + jobs - 1) // jobs
    bounds = [(lo, min(lo + step - 1, n_max)) for lo in range(0, n_max + 1, step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_sweep, *zip(*((k, p, lo, hi) for lo, hi in bounds)))
        mismatches = [m for part in parts for m in part]
    return SweepReport(k, n_max, sorted(mismatches))
