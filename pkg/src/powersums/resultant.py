"""Polynomial relations T(S_i, S_j) = 0 by eliminating n.

T is the resultant in n of ``S_i(n) - x`` and ``S_j(n) - y``, computed as
the determinant of their Sylvester matrix with fraction-free (Bareiss)
elimination over Z[x, y].
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence

from .engine import ConsistencyError, PowerSumTable, default_table
from .exact_poly import BiPoly, NotDivisibleError, UniPoly, X, Y, bipoly_div_exact

Matrix = List[List[BiPoly]]


def _integral(p: UniPoly) -> tuple[list[int], int]:
    """Ascending integer coefficients of L*p and the scale L."""
    L = math.lcm(*(c.denominator for c in p.terms.values()))
    deg = p.degree
    return [int(p.coefficient(e) * L) for e in range(deg + 1)], L


def sylvester_matrix(f: Sequence[BiPoly], g: Sequence[BiPoly]) -> Matrix:
    """Sylvester matrix of two polynomials in n given by ascending coefficient lists."""
    p, q = len(f) - 1, len(g) - 1
    size = p + q
    zero = BiPoly()
    rows: Matrix = []
    for i in range(q):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(p):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def bareiss_determinant(matrix: Matrix) -> BiPoly:
    """Determinant by fraction-free elimination with row pivoting."""
    m = [list(row) for row in matrix]
    size = len(m)
    if size == 0:
        return BiPoly.constant(1)
    sign = 1
    prev = BiPoly.constant(1)
    for k in range(size - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not m[i][k].is_zero()), None)
            if swap is None:
                return BiPoly()
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            mik = m[i][k]
            for j in range(k + 1, size):
                num = m[i][j] * pivot - mik * m[k][j]
                m[i][j] = bipoly_div_exact(num, prev) if not num.is_zero() else num
            m[i][k] = BiPoly()
        prev = pivot
    det = m[size - 1][size - 1]
    return det if sign > 0 else -det


def _y_slices(t: BiPoly) -> dict:
    # coefficient of y^b as a polynomial in x (stored with b = 0)
    out: dict = {}
    for (a, b), c in t.terms.items():
        out.setdefault(b, {})[(a, 0)] = c
    return {b: BiPoly(v) for b, v in out.items()}


def _root_monic_in_y(t: BiPoly, e: int) -> Optional[BiPoly]:
    """R with R**e == t, for t monic in y of degree divisible by e; else None.

    Coefficients of R are fixed top-down: the y^{de - s} coefficient of R^e
    is e * r_{d-s} plus terms in already-known coefficients.
    """
    dy = t.degree_y()
    d = dy // e
    t_sl = _y_slices(t)
    root = BiPoly.monomial(0, d)
    for s in range(1, d + 1):
        cur = _y_slices(root**e).get(dy - s, BiPoly())
        target = t_sl.get(dy - s, BiPoly())
        root = root + (target - cur).scale(Fraction(1, e)) * BiPoly.monomial(0, d - s)
    return root if root**e == t else None


def primitive_integer(t: BiPoly) -> BiPoly:
    """Scale to coprime integer coefficients, lex-largest term positive."""
    terms = t.terms
    L = math.lcm(*(c.denominator for c in terms.values()))
    ints = {e: int(c * L) for e, c in terms.items()}
    content = math.gcd(*ints.values())
    _, lead = t.lex_leading()
    if lead < 0:
        content = -content
    return BiPoly({e: Fraction(v // content) for e, v in ints.items()})


def raw_resultant(i: int, j: int, table: Optional[PowerSumTable] = None) -> BiPoly:
    """Res_n(L_i (S_i(n) - x), L_j (S_j(n) - y)), unnormalized."""
    table = table or default_table()
    fi, Li = _integral(table.closed_form(i))
    fj, Lj = _integral(table.closed_form(j))
    f = [BiPoly.constant(c) for c in fi]
    g = [BiPoly.constant(c) for c in fj]
    f[0] = f[0] - X.scale(Li)
    g[0] = g[0] - Y.scale(Lj)
    try:
        return bareiss_determinant(sylvester_matrix(f, g))
    except NotDivisibleError as exc:
        raise ConsistencyError("inexact division during fraction-free elimination") from exc


def relation_polynomial(
    i: int, j: int, table: Optional[PowerSumTable] = None, reduce: bool = True
) -> BiPoly:
    """Nonzero T in Z[x, y] with T(S_i(n), S_j(n)) == 0 identically.

    With ``reduce`` (default) the resultant, which is a power of the
    minimal relation whenever n -> (S_i, S_j) is many-to-one, is replaced
    by its largest exact root. The result is primitive with the
    lex-largest term positive.
    """
    if i == j:
        raise ValueError("relation_polynomial needs i != j")
    if i < 1 or j < 1:
        raise ValueError("indices must be >= 1")
    res = raw_resultant(i, j, table)
    if res.is_zero():
        raise ConsistencyError(f"resultant for ({i}, {j}) vanished identically")
    if reduce:
        # monic in y up to a scalar: the n-degree of S_i - x has a constant leading coefficient
        dy = res.degree_y()
        lead = _y_slices(res)[dy]
        if lead.degree_x() != 0:
            raise ConsistencyError("resultant is not monic in y")
        monic = res.scale(1 / lead.constant_term())
        for e in range(dy, 1, -1):
            if dy % e:
                continue
            root = _root_monic_in_y(monic, e)
            if root is not None:
                res = root
                break
    return primitive_integer(res)
