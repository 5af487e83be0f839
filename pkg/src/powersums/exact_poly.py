"""Exact sparse polynomials over the rationals.

Two value types live here:

* ``UniPoly``  -- a polynomial in one variable ``n``; holds closed forms S_k(n).
* ``BiPoly``   -- a polynomial in ``(x, y)``; holds expressions in A(n), B(n).

Both are immutable and canonical: coefficients are ``fractions.Fraction``
(already reduced, with positive denominator), and zero coefficients are never
stored, so ``==`` on two values is mathematical equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Tuple, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.
NEG_INF = -math.inf


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"expected int or Fraction, got {type(c).__name__}")


def _clean(terms: Mapping) -> dict:
    return {e: _as_fraction(c) for e, c in terms.items() if c != 0}


class UniPoly:
    """Sparse univariate polynomial ``sum c_e n^e`` with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = _clean(terms or {})
        for e in clean:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponent must be a non-negative int, got {e!r}")
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "UniPoly":
        # terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "UniPoly":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Scalar]) -> "UniPoly":
        """Build from ascending coefficients ``[c_0, c_1, ...]``."""
        return cls(dict(enumerate(coeffs)))

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> Union[int, float]:
        return max(self._terms) if self._terms else NEG_INF

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def leading_coefficient(self) -> Fraction:
        return self._terms[max(self._terms)] if self._terms else Fraction(0)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Terms in descending degree."""
        for e in sorted(self._terms, reverse=True):
            yield e, self._terms[e]

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a non-negative int")
        result = UniPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "UniPoly":
        c = _as_fraction(c)
        if c == 0:
            return UniPoly._raw({})
        return UniPoly._raw({e: v * c for e, v in self._terms.items()})

    def __call__(self, v: Scalar) -> Fraction:
        return poly_eval(self, v)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __reduce__(self):
        return (UniPoly, (self._terms,))

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in self.items())
        return f"UniPoly({{{body}}})"


def poly_add(p: UniPoly, q: UniPoly) -> UniPoly:
    terms = dict(p._terms)
    for e, c in q._terms.items():
        s = terms.get(e, 0) + c
        if s:
            terms[e] = s
        else:
            terms.pop(e, None)
    return UniPoly._raw(terms)


def poly_mul(p: UniPoly, q: UniPoly) -> UniPoly:
    if not p._terms or not q._terms:
        return UniPoly._raw({})
    acc: dict = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = e1 + e2
            acc[e] = acc.get(e, 0) + c1 * c2
    return UniPoly._raw({e: c for e, c in acc.items() if c})


def poly_shift(p: UniPoly, h: Scalar) -> UniPoly:
    """Return ``p(n + h)`` by binomial expansion."""
    h = _as_fraction(h)
    acc: dict = {}
    for e, c in p._terms.items():
        # (n + h)^e = sum_j C(e, j) h^(e-j) n^j
        hp = Fraction(1)
        for j in range(e, -1, -1):
            acc[j] = acc.get(j, 0) + c * math.comb(e, j) * hp
            hp *= h
    return UniPoly._raw({e: c for e, c in acc.items() if c})


def poly_shift_minus_one(p: UniPoly) -> UniPoly:
    return poly_shift(p, -1)


def poly_eval(p: UniPoly, v: Scalar) -> Fraction:
    v = _as_fraction(v)
    if not p._terms:
        return Fraction(0)
    # Horner over the sparse exponents, descending
    exps = sorted(p._terms, reverse=True)
    acc = Fraction(0)
    prev = exps[0]
    for e in exps:
        acc = acc * v ** (prev - e) + p._terms[e]
        prev = e
    return acc * v ** prev


def poly_divmod(p: UniPoly, q: UniPoly) -> Tuple[UniPoly, UniPoly]:
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    dq = q.degree
    lc = q.leading_coefficient()
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        dr = max(rem)
        if dr < dq:
            break
        c = rem[dr] / lc
        shift = dr - dq
        quot[shift] = c
        for e, qc in q._terms.items():
            k = e + shift
            s = rem.get(k, 0) - c * qc
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return UniPoly._raw(quot), UniPoly._raw(rem)


def poly_div_exact(p: UniPoly, q: UniPoly) -> UniPoly:
    """Quotient ``u`` with ``p == q * u``.

    Raises ``ZeroDivisionError`` for ``q == 0`` and ``NotDivisibleError``
    (carrying the remainder) when ``q`` does not divide ``p``.
    """
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise NotDivisibleError("nonzero remainder in exact division", rem)
    return quot


N = UniPoly.monomial(1)


# ---------------------------------------------------------------------------
# Bivariate


Exp2 = Tuple[int, int]


def weighted_degree(exp: Exp2) -> int:
    """Degree in n of A^a B^b."""
    a, b = exp
    return 2 * a + 3 * b


def display_key(exp: Exp2):
    # descending weighted degree, ties by descending y-power
    return (-weighted_degree(exp), -exp[1])


class BiPoly:
    """Sparse polynomial ``sum c_{a,b} x^a y^b`` with exact coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp2, Scalar] | None = None):
        clean = _clean(terms or {})
        for e in clean:
            if (
                not isinstance(e, tuple)
                or len(e) != 2
                or not all(isinstance(i, int) and i >= 0 for i in e)
            ):
                raise ValueError(f"exponent must be a pair of non-negative ints, got {e!r}")
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Scalar = 1) -> "BiPoly":
        return cls({(a, b): coeff})

    @classmethod
    def constant(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> Mapping[Exp2, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, a: int, b: int) -> Fraction:
        return self._terms.get((a, b), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient(0, 0)

    def degree_x(self):
        return max((a for a, _ in self._terms), default=NEG_INF)

    def degree_y(self):
        return max((b for _, b in self._terms), default=NEG_INF)

    def items(self) -> Iterator[Tuple[Exp2, Fraction]]:
        """Terms in display order (weighted degree, then y-power, descending)."""
        for e in sorted(self._terms, key=display_key):
            yield e, self._terms[e]

    def lex_leading(self) -> Tuple[Exp2, Fraction]:
        e = max(self._terms)
        return e, self._terms[e]

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return BiPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return BiPoly._raw({})
        acc: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                acc[e] = acc.get(e, 0) + c1 * c2
        return BiPoly._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("power must be a non-negative int")
        result = BiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "BiPoly":
        c = _as_fraction(c)
        if c == 0:
            return BiPoly._raw({})
        return BiPoly._raw({e: v * c for e, v in self._terms.items()})

    def __call__(self, x: Scalar, y: Scalar) -> Fraction:
        x, y = _as_fraction(x), _as_fraction(y)
        return sum((c * x**a * y**b for (a, b), c in self._terms.items()), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __reduce__(self):
        return (BiPoly, (self._terms,))

    def __repr__(self):
        body = ", ".join(f"{e}: {c}" for e, c in self.items())
        return f"BiPoly({{{body}}})"


X = BiPoly.monomial(1, 0)
Y = BiPoly.monomial(0, 1)


def bipoly_div_exact(p: BiPoly, q: BiPoly) -> BiPoly:
    """Exact quotient ``p / q`` by division on lex-leading terms."""
    if q.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    (qa, qb), qc = q.lex_leading()
    rem = dict(p._terms)
    quot: dict = {}
    while rem:
        (ra, rb) = max(rem)
        if ra < qa or rb < qb:
            raise NotDivisibleError("nonzero remainder in exact division", BiPoly._raw(rem))
        c = rem[(ra, rb)] / qc
        da, db = ra - qa, rb - qb
        quot[(da, db)] = c
        for (a, b), v in q._terms.items():
            k = (a + da, b + db)
            s = rem.get(k, 0) - c * v
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return BiPoly._raw(quot)


def bipoly_substitute(g: BiPoly, xs: UniPoly, ys: UniPoly) -> UniPoly:
    """Return ``g(xs(n), ys(n))`` as a polynomial in n.

    Nested Horner: outer in y, inner in x, so only multiplications by
    ``xs`` and ``ys`` themselves are performed.
    """
    if g.is_zero():
        return UniPoly._raw({})
    by_b: dict = {}
    for (a, b), c in g._terms.items():
        by_b.setdefault(b, {})[a] = c

    def horner_x(coeffs: dict) -> UniPoly:
        acc = UniPoly._raw({})
        for a in range(max(coeffs), -1, -1):
            acc = acc * xs
            c = coeffs.get(a)
            if c is not None:
                acc = acc + UniPoly._raw({0: c})
        return acc

    acc = UniPoly._raw({})
    for b in range(max(by_b), -1, -1):
        acc = acc * ys
        if b in by_b:
            acc = acc + horner_x(by_b[b])
    return acc
