"""Power sums S_k(n) = 1^k + ... + n^k as exact polynomials.

Two independent routes produce the closed forms:

* ``"pascal"``   -- the telescoped binomial recursion, which needs every
  S_l with l < k;
* ``"halfterm"`` -- the squared/product recursions, which only need
  S_r .. S_{2r} to reach S_{2r+1} and S_{2r+2}.

On top of those the module builds g_k(x, y) with S_k = g_k(A, B), the
Faulhaber forms in A alone (odd k) and B times a polynomial in A (even k),
the greedy A^a B^b degree reduction, and the term-count comparison.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .exact_poly import (
    BiPoly,
    N,
    NotDivisibleError,
    UniPoly,
    X,
    Y,
    bipoly_substitute,
    poly_div_exact,
    poly_shift_minus_one,
)

ROUTES = ("pascal", "halfterm")

#: S_1(n) = n(n+1)/2
A_POLY = UniPoly({2: Fraction(1, 2), 1: Fraction(1, 2)})
#: S_2(n) = n(n+1)(2n+1)/6
B_POLY = UniPoly({3: Fraction(1, 3), 2: Fraction(1, 2), 1: Fraction(1, 6)})


class ConsistencyError(RuntimeError):
    """An identity that must hold by theory failed to hold."""


@dataclass(frozen=True)
class CoeffVector:
    """Expansion coefficients of a product of power sums.

    ``kind == "odd"``: the d_i in S_r^2 = sum d_i S_i, i in [r, 2r+1].
    ``kind == "even"``: the e_i in S_r S_{r+1} = sum e_i S_i, i in [r+1, 2r+2].
    Every index in the range is present, zeros included.
    """

    kind: str
    r: int
    coeffs: Dict[int, Fraction]

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    @property
    def top_index(self) -> int:
        return 2 * self.r + 1 if self.kind == "odd" else 2 * self.r + 2


@dataclass(frozen=True)
class DecompResult:
    status: str  # "success" | "obstructed"
    value: Optional[BiPoly] = None
    residual: Optional[UniPoly] = None

    @property
    def ok(self) -> bool:
        return self.status == "success"


class PowerSumTable:
    """Memo of closed forms S_k and of g_k, filled bottom-up.

    ``route`` picks how missing S_k are produced. One table never mixes
    routes, so two tables built on different routes are independent.
    Insertions happen under a lock; a table may be shared between threads.
    """

    def __init__(self, route: str = "halfterm"):
        if route not in ROUTES:
            raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")
        self.route = route
        self.memo: Dict[int, UniPoly] = {0: N}
        self.gmemo: Dict[int, BiPoly] = {}
        self.dmemo: Dict[int, CoeffVector] = {}
        self.ememo: Dict[int, CoeffVector] = {}
        self._lock = threading.RLock()
        if route == "halfterm":
            self.memo[1] = A_POLY
            self.memo[2] = B_POLY

    def closed_form(self, k: int) -> UniPoly:
        if k < 0:
            raise ValueError("k must be non-negative")
        found = self.memo.get(k)
        if found is not None:
            return found
        with self._lock:
            for j in range(k + 1):
                if j in self.memo:
                    continue
                if self.route == "pascal":
                    s = _pascal_step(j, self)
                elif j % 2:
                    s = odd_step((j - 1) // 2, self)[1]
                else:
                    s = even_step((j - 2) // 2, self)[1]
                self.memo[j] = s
            return self.memo[k]


_default_tables: Dict[str, PowerSumTable] = {}
_default_lock = threading.Lock()


def default_table(route: str = "halfterm") -> PowerSumTable:
    with _default_lock:
        if route not in _default_tables:
            _default_tables[route] = PowerSumTable(route)
        return _default_tables[route]


def _pascal_step(k: int, table: PowerSumTable) -> UniPoly:
    # S_k = ((n+1)^{k+1} - 1 - sum_{l<k} C(k+1, l) S_l) / (k+1)
    top = UniPoly({j: math.comb(k + 1, j) for j in range(1, k + 2)})
    for ell in range(k):
        top = top - table.closed_form(ell).scale(math.comb(k + 1, ell))
    return top.scale(Fraction(1, k + 1))


def pascal_power_sum(k: int, table: Optional[PowerSumTable] = None) -> UniPoly:
    """S_k(n) via Pascal's identity. Lower S_l are taken from (and stored in) ``table``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if table is None:
        table = default_table("pascal")
    if k == 0:
        return table.memo[0]
    found = table.memo.get(k)
    if found is not None and table.route == "pascal":
        return found
    with table._lock:
        s = _pascal_step(k, table)
        table.memo.setdefault(k, s)
    return s


def leading_coefficients(
    k: int, table: Optional[PowerSumTable] = None
) -> Tuple[Fraction, Fraction, Fraction]:
    """(c_{(k+1)k}, c_{kk}, c_{0k}) read off S_k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    s = (table or default_table()).closed_form(k)
    return s.coefficient(k + 1), s.coefficient(k), s.coefficient(0)


def _monomial_coeffs(p: UniPoly, lo: int, hi: int, what: str) -> Dict[int, Fraction]:
    stray = [e for e in p.terms if not lo <= e <= hi]
    if stray:
        raise ConsistencyError(f"{what}: unexpected exponents {sorted(stray)}")
    return {i: p.coefficient(i) for i in range(lo, hi + 1)}


def odd_step(r: int, table: Optional[PowerSumTable] = None) -> Tuple[CoeffVector, UniPoly]:
    """d-coefficients of S_r^2 and the closed form of S_{2r+1}.

    The d_i are the monomial coefficients of m^{2r} + 2 m^r S_r(m-1);
    then S_{2r+1} = (r+1)/2 (S_r^2 - sum_{i=r}^{2r-1} d_i S_i).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    table = table or default_table()
    s_r = table.closed_form(r)
    with table._lock:
        d = table.dmemo.get(r)
        if d is None:
            p = UniPoly.monomial(2 * r) + (UniPoly.monomial(r, 2) * poly_shift_minus_one(s_r))
            d = CoeffVector("odd", r, _monomial_coeffs(p, r, 2 * r + 1, f"odd_step r={r}"))
            table.dmemo[r] = d
    if d[2 * r] != 0 or d[2 * r + 1] != Fraction(2, r + 1):
        raise ConsistencyError(f"odd_step r={r}: top coefficients {d[2 * r + 1]}, {d[2 * r]}")
    acc = s_r * s_r
    for i in range(r, 2 * r):
        if d[i]:
            acc = acc - table.closed_form(i).scale(d[i])
    return d, acc.scale(Fraction(r + 1, 2))


def even_step(r: int, table: Optional[PowerSumTable] = None) -> Tuple[CoeffVector, UniPoly]:
    """e-coefficients of S_r S_{r+1} and the closed form of S_{2r+2}.

    The e_i are the monomial coefficients of
    m^{2r+1} + m^r S_{r+1}(m-1) + m^{r+1} S_r(m-1).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    table = table or default_table()
    s_r = table.closed_form(r)
    s_r1 = table.closed_form(r + 1)
    with table._lock:
        e = table.ememo.get(r)
        if e is None:
            p = (
                UniPoly.monomial(2 * r + 1)
                + UniPoly.monomial(r) * poly_shift_minus_one(s_r1)
                + UniPoly.monomial(r + 1) * poly_shift_minus_one(s_r)
            )
            e = CoeffVector("even", r, _monomial_coeffs(p, r + 1, 2 * r + 2, f"even_step r={r}"))
            table.ememo[r] = e
    if e[2 * r + 1] != 0 or e[2 * r + 2] != Fraction(2 * r + 3, (r + 1) * (r + 2)):
        raise ConsistencyError(f"even_step r={r}: top coefficients {e[2 * r + 2]}, {e[2 * r + 1]}")
    acc = s_r * s_r1
    for i in range(r + 1, 2 * r + 1):
        if e[i]:
            acc = acc - table.closed_form(i).scale(e[i])
    return e, acc.scale(Fraction((r + 1) * (r + 2), 2 * r + 3))


def g_poly(k: int, table: Optional[PowerSumTable] = None) -> BiPoly:
    """g_k(x, y) with S_k(n) = g_k(A(n), B(n)) and g_k(0, 0) = 0.

    Built inductively from g_1 = x, g_2 = y by replaying the odd/even
    identities with every S_i replaced by g_i.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    table = table or default_table()
    found = table.gmemo.get(k)
    if found is not None:
        return found
    with table._lock:
        g = table.gmemo
        g.setdefault(1, X)
        g.setdefault(2, Y)
        for j in range(3, k + 1):
            if j in g:
                continue
            if j % 2:
                r = (j - 1) // 2
                d, _ = odd_step(r, table)
                acc = g[r] * g[r]
                for i in range(r, 2 * r):
                    if d[i]:
                        acc = acc - g[i].scale(d[i])
                g[j] = acc.scale(Fraction(r + 1, 2))
            else:
                r = (j - 2) // 2
                e, _ = even_step(r, table)
                acc = g[r] * g[r + 1]
                for i in range(r + 1, 2 * r + 1):
                    if e[i]:
                        acc = acc - g[i].scale(e[i])
                g[j] = acc.scale(Fraction((r + 1) * (r + 2), 2 * r + 3))
        return g[k]


def peel_in_A(p: UniPoly) -> DecompResult:
    """Write ``p`` as a polynomial in A alone by cancelling leading terms.

    Each step removes the leading n^d term with c * A^(d/2). An odd leading
    degree cannot be matched and ends the peel as an obstruction, with the
    remaining polynomial as residual. Constants are absorbed as A^0 terms.
    """
    rest = p
    out: Dict[tuple, Fraction] = {}
    a_pow = {0: UniPoly.constant(1)}
    while not rest.is_zero():
        d = rest.degree
        if d % 2:
            return DecompResult("obstructed", residual=rest)
        a = d // 2
        if a not in a_pow:
            top = max(a_pow)
            for j in range(top + 1, a + 1):
                a_pow[j] = a_pow[j - 1] * A_POLY
        alpha = rest.leading_coefficient() * 2**a
        out[(a, 0)] = out.get((a, 0), 0) + alpha
        rest = rest - a_pow[a].scale(alpha)
    return DecompResult("success", value=BiPoly(out))


def faulhaber_in_A(k: int, table: Optional[PowerSumTable] = None) -> BiPoly:
    """f_k(x) with S_k = f_k(A), for odd k >= 3."""
    if k < 3 or k % 2 == 0:
        raise ValueError("faulhaber_in_A needs odd k >= 3")
    s = (table or default_table()).closed_form(k)
    res = peel_in_A(s)
    if not res.ok:
        raise ConsistencyError(f"S_{k} is not a polynomial in A; residual {res.residual!r}")
    return res.value


def faulhaber_even_factor(k: int, table: Optional[PowerSumTable] = None) -> BiPoly:
    """y * q(x) with S_k = B * q(A), for even k >= 2."""
    if k < 2 or k % 2:
        raise ValueError("faulhaber_even_factor needs even k >= 2")
    s = (table or default_table()).closed_form(k)
    try:
        quotient = poly_div_exact(s, B_POLY)
    except NotDivisibleError as exc:
        raise ConsistencyError(f"S_{k} is not divisible by B; remainder {exc.remainder!r}") from exc
    res = peel_in_A(quotient)
    if not res.ok:
        raise ConsistencyError(f"S_{k}/B is not a polynomial in A; residual {res.residual!r}")
    return res.value * Y


def greedy_exponents(d: int) -> Tuple[int, int]:
    """The (a, b) with 2a + 3b = d used to cancel a degree-d leading term."""
    if d < 2:
        raise ValueError("no A^a B^b term has degree below 2")
    b = d % 2
    return (d - 3 * b) // 2, b


def decompose_greedy_AB(p: UniPoly) -> DecompResult:
    """Greedy degree reduction of ``p`` by A^a B^b terms.

    Succeeds when the remainder reaches zero; if a nonzero polynomial of
    degree <= 1 is left, returns it as the obstruction residual.
    """
    if p.coefficient(0) != 0:
        raise ValueError("input must have zero constant term")
    rest = p
    out: Dict[tuple, Fraction] = {}
    a_pow = [UniPoly.constant(1)]
    b_pow = [UniPoly.constant(1), B_POLY]
    while not rest.is_zero():
        d = rest.degree
        if d < 2:
            return DecompResult("obstructed", residual=rest)
        a, b = greedy_exponents(d)
        while len(a_pow) <= a:
            a_pow.append(a_pow[-1] * A_POLY)
        alpha = rest.leading_coefficient() * 2**a * 3**b
        out[(a, b)] = out.get((a, b), 0) + alpha
        rest = rest - (a_pow[a] * b_pow[b]).scale(alpha)
    return DecompResult("success", value=BiPoly(out))


def substitute_AB(g: BiPoly) -> UniPoly:
    return bipoly_substitute(g, A_POLY, B_POLY)


@dataclass(frozen=True)
class TermCount:
    k: int
    pascal_terms: int
    halfterm_terms: int
    pascal_refs: Tuple[int, ...] = field(repr=False, default=())
    halfterm_refs: Tuple[int, ...] = field(repr=False, default=())

    def __iter__(self):
        return iter((self.pascal_terms, self.halfterm_terms))


def term_count_report(k: int) -> TermCount:
    """Count the power-sum references each recursion needs to produce S_k.

    Pascal: S_0 .. S_{k-1}, one reference each. Half-term: one per summand
    of the correction sum, plus one per distinct factor of the leading
    product (S_r once for the square; S_r and S_{r+1} for the even case).
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    pascal_refs = tuple(range(k))
    if k % 2:
        r = (k - 1) // 2
        product = (r,)
        summands = tuple(range(r, 2 * r))
    else:
        r = (k - 2) // 2
        product = (r, r + 1)
        summands = tuple(range(r + 1, 2 * r + 1))
    refs = product + summands
    return TermCount(k, len(pascal_refs), len(product) + len(summands), pascal_refs, refs)
