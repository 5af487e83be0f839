"""Exit criteria. Each test prints one PASS/FAIL line with its runtime.

Run alone with ``pytest tests/test_acceptance.py -s`` or
``python tests/test_acceptance.py``.
"""

import time
from fractions import Fraction as F

import pytest

from powersums.engine import (
    PowerSumTable,
    decompose_greedy_AB,
    even_step,
    faulhaber_even_factor,
    faulhaber_in_A,
    g_poly,
    odd_step,
    substitute_AB,
    term_count_report,
)
from powersums.exact_poly import BiPoly, UniPoly, bipoly_substitute, poly_eval
from powersums.oracle import verify_poly
from powersums.resultant import relation_polynomial


def _line(number, title, ok, elapsed, limit):
    status = "PASS" if ok and elapsed < limit else "FAIL"
    print(f"\n[{status}] criterion {number}: {title} ({elapsed:.2f}s, limit {limit}s)")


def check(number, title, limit, body):
    start = time.perf_counter()
    ok = False
    try:
        ok = bool(body())
    finally:
        elapsed = time.perf_counter() - start
        _line(number, title, ok, elapsed, limit)
    assert ok, title
    assert elapsed < limit, f"{title}: {elapsed:.2f}s >= {limit}s"


def test_1_golden_g():
    def body():
        t = PowerSumTable()
        return (
            g_poly(3, t) == BiPoly({(2, 0): 1})
            and g_poly(4, t) == BiPoly({(1, 1): F(6, 5), (0, 1): F(-1, 5)})
            and g_poly(5, t) == BiPoly({(0, 2): F(3, 2), (2, 0): F(-1, 2)})
            and g_poly(6, t) == BiPoly({(2, 1): F(12, 7), (1, 1): F(-6, 7), (0, 1): F(1, 7)})
        )

    check(1, "golden g_3..g_6", 1, body)


def test_2_golden_faulhaber():
    def body():
        t = PowerSumTable()
        return (
            faulhaber_in_A(3, t) == BiPoly({(2, 0): 1})
            and faulhaber_in_A(5, t) == BiPoly({(3, 0): F(4, 3), (2, 0): F(-1, 3)})
            and faulhaber_in_A(7, t) == BiPoly({(4, 0): F(12, 6), (3, 0): F(-8, 6), (2, 0): F(2, 6)})
        )

    check(2, "Faulhaber f_3, f_5, f_7 in A", 1, body)


def test_3_even_factor():
    def body():
        return faulhaber_even_factor(4, PowerSumTable()) == BiPoly({(0, 1): 1}) * BiPoly(
            {(1, 0): F(6, 5), (0, 0): F(-1, 5)}
        )

    check(3, "S_4 = B (6/5 A - 1/5)", 1, body)


def test_4_coefficient_laws():
    def body():
        t = PowerSumTable()
        for r in range(1, 61):
            d, _ = odd_step(r, t)
            e, _ = even_step(r, t)
            if d[2 * r + 1] != F(2, r + 1) or d[2 * r] != 0:
                return False
            if e[2 * r + 2] != F(2 * r + 3, (r + 1) * (r + 2)) or e[2 * r + 1] != 0:
                return False
        return True

    check(4, "d/e top-coefficient laws, r <= 60", 30, body)


def test_5_route_equivalence():
    def body():
        p, h = PowerSumTable("pascal"), PowerSumTable("halfterm")
        return all(p.closed_form(k) == h.closed_form(k) for k in range(0, 101))

    check(5, "Pascal and half-term routes agree, k <= 100", 60, body)


def test_6_oracle_equivalence():
    def body():
        p = PowerSumTable("pascal")
        if poly_eval(p.closed_form(1), 100) != 5050:
            return False
        return all(verify_poly(k, p.closed_form(k), 200).ok for k in range(0, 61))

    check(6, "brute-force sweep k <= 60, n <= 200; S_1(100) = 5050", 60, body)


def test_7_theorem():
    def body():
        t = PowerSumTable()
        for k in range(1, 101):
            g = g_poly(k, t)
            if g.constant_term() != 0 or substitute_AB(g) != t.closed_form(k):
                return False
        return True

    check(7, "S_k = g_k(A, B), g_k(0, 0) = 0, k <= 100", 120, body)


def test_8_term_count():
    def body():
        for k in range(3, 101):
            pascal, half = term_count_report(k)
            if pascal != k or half > -(-k // 2) + 2:
                return False
        return True

    check(8, "half-term references <= ceil(k/2) + 2, Pascal = k", 5, body)


def test_9_greedy():
    def body():
        t = PowerSumTable()
        for k in range(1, 41):
            res = decompose_greedy_AB(t.closed_form(k))
            if not res.ok or substitute_AB(res.value) != t.closed_form(k):
                return False
        lin = decompose_greedy_AB(UniPoly({1: 1}))
        return lin.status == "obstructed" and lin.residual == UniPoly({1: 1})

    check(9, "greedy A^a B^b succeeds k <= 40; n is obstructed", 30, body)


def test_10_relations():
    def body():
        t = PowerSumTable()
        t13 = relation_polynomial(1, 3, t)
        target = BiPoly({(2, 0): 1, (0, 1): -1})
        (e, c) = next(iter(t13.terms.items()))
        if t13 != target.scale(c / target.coefficient(*e)):
            return False
        for i in range(1, 5):
            for j in range(i + 1, 5):
                rel = relation_polynomial(i, j, t)
                si, sj = t.closed_form(i), t.closed_form(j)
                if rel.is_zero() or not bipoly_substitute(rel, si, sj).is_zero():
                    return False
                if any(rel(poly_eval(si, n), poly_eval(sj, n)) != 0 for n in range(0, 101)):
                    return False
        return True

    check(10, "relation polynomials T(S_i, S_j) = 0, i < j <= 4", 60, body)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
