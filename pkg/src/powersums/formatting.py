"""Plain-text, LaTeX and JSON renderings of polynomials."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .exact_poly import BiPoly, UniPoly

Poly = Union[UniPoly, BiPoly]

SYMBOLS = {"xy": ("x", "y"), "AB": ("A", "B")}


def _frac_plain(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _frac_latex(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"\\frac{{{c.numerator}}}{{{c.denominator}}}"


def _join(pieces: Iterable[Tuple[Fraction, str]], frac, sep: str) -> str:
    # pieces: (coefficient, monomial text); monomial "" means constant
    out: List[str] = []
    for c, mono in pieces:
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{frac(mag)}{sep}{mono}"
        else:
            body = frac(mag)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) if out else "0"


def _power_plain(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _power_latex(var: str, e: int, suffix: str = "") -> str:
    if e == 0:
        return ""
    if e == 1:
        return f"{var}{suffix}"
    exp = str(e) if e < 10 else f"{{{e}}}"
    return f"{var}^{exp}{suffix}"


def to_plain(p: Poly, symbols: str = "xy") -> str:
    if isinstance(p, UniPoly):
        return _join(((c, _power_plain("n", e)) for e, c in p.items()), _frac_plain, " ")
    vx, vy = SYMBOLS[symbols]
    pieces = []
    for (a, b), c in p.items():
        mono = " ".join(s for s in (_power_plain(vx, a), _power_plain(vy, b)) if s)
        pieces.append((c, mono))
    return _join(pieces, _frac_plain, " ")


def to_latex(p: Poly, symbols: str = "xy") -> str:
    if isinstance(p, UniPoly):
        return _join(((c, _power_latex("n", e)) for e, c in p.items()), _frac_latex, "")
    vx, vy = SYMBOLS[symbols]
    suffix = "(n)" if symbols == "AB" else ""
    pieces = []
    for (a, b), c in p.items():
        pieces.append((c, _power_latex(vx, a, suffix) + _power_latex(vy, b, suffix)))
    return _join(pieces, _frac_latex, "")


def poly_to_json_obj(p: Poly, variables: Sequence[str] | None = None) -> dict:
    if isinstance(p, UniPoly):
        variables = list(variables or ["n"])
        terms = [
            {"exp": [e], "num": str(c.numerator), "den": str(c.denominator)}
            for e, c in p.items()
        ]
    else:
        variables = list(variables or ["x", "y"])
        terms = [
            {"exp": [a, b], "num": str(c.numerator), "den": str(c.denominator)}
            for (a, b), c in p.items()
        ]
    return {"variables": variables, "terms": terms}


def poly_from_json_obj(obj: dict) -> Poly:
    variables = obj["variables"]
    coeffs = {}
    for t in obj["terms"]:
        exp = tuple(int(e) for e in t["exp"])
        if len(exp) != len(variables):
            raise ValueError(f"term {t!r} does not match variables {variables!r}")
        coeffs[exp[0] if len(exp) == 1 else exp] = Fraction(int(t["num"]), int(t["den"]))
    if len(variables) == 1:
        return UniPoly(coeffs)
    if len(variables) == 2:
        return BiPoly(coeffs)
    raise ValueError("only one or two variables are supported")


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=False)


def loads_poly(text: str) -> Poly:
    """Parse a JSON output document (or bare polynomial object) back to a polynomial."""
    obj = json.loads(text)
    if "body" in obj:
        obj = obj["body"]
    return poly_from_json_obj(obj)
