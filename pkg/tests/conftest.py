from fractions import Fraction

import pytest

from powersums import PowerSumTable, UniPoly


@pytest.fixture(scope="session")
def half():
    return PowerSumTable("halfterm")


@pytest.fixture(scope="session")
def pascal():
    return PowerSumTable("pascal")


def brute_coeffs(values, degree):
    """Monomial coefficients of the degree-``degree`` polynomial through
    (m, values[m]) for m = 0..degree, by exact Gaussian elimination on the
    Vandermonde system. Independent of every routine under test."""
    size = degree + 1
    rows = [[Fraction(m) ** j for j in range(size)] + [Fraction(values[m])] for m in range(size)]
    for col in range(size):
        piv = next(r for r in range(col, size) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return UniPoly({j: rows[j][-1] for j in range(size)})


@pytest.fixture
def interpolate():
    return brute_coeffs
