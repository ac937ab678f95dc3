"""Braided copies of the h-deformed Lobachevsky plane.

Single copy:      [x, y]  = -2ih y          (y invertible)
Across copies m<n (lower index kept to the left):
    [x_m, x_n] = 2ih x_m - 2ih x_n
    [x_m, y_n] = -2ih y_n
    [y_m, x_n] = 2ih y_m
    [y_m, y_n] = 0
Canonical order: copies ascend left to right; x before y inside a copy.
"""

from __future__ import annotations

from .rewrite import Algebra, Element, expand_units
from .scalars import Scalar, ONE, IH


class PlaneAlgebra(Algebra):
    symbols = ("x", "y")

    def __init__(self, ncopies: int = 1):
        super().__init__()
        self.ncopies = ncopies
        self.name = f"plane[{ncopies}]"

    def key(self, symbol, copy):
        return (copy, 0 if symbol == "x" else 1)

    def invertible(self, symbol):
        return symbol == "y"

    def swap(self, a, b):
        sa, ca, ea = a
        sb, cb, eb = b
        two_ih = IH * Scalar.rational(2)
        if ca == cb:
            # y^e x -> x y^e + 2ih*e * y^e
            return [(ONE, (b, a)), (two_ih * Scalar.rational(ea), (a,))]
        # cross-copy, ca > cb
        if sa == "x" and sb == "x":
            return [(ONE, (b, a)), (-two_ih, (b,)), (two_ih, (a,))]
        if sa == "y" and sb == "x":
            # y_n^e x_m -> x_m y_n^e + 2ih*e y_n^e
            return [(ONE, (b, a)), (two_ih * Scalar.rational(ea), (a,))]
        if sa == "x" and sb == "y":
            # x_n y_m^e -> y_m^e x_n - 2ih*e y_m^e
            return [(ONE, (b, a)), (-two_ih * Scalar.rational(eb), (b,))]
        return None  # y with y commute


# ---------------------------------------------------------------------------
# operations on plane elements


def star(f: Element) -> Element:
    """Antilinear antihomomorphism with hermitian x, y (every copy)."""
    alg = f.algebra
    out = alg.element()
    for mono, coeff in f.data.items():
        word = tuple(reversed(tuple(expand_units(mono))))
        out = out + alg.from_word(word, coeff.conj())
    return out


def shift_x(f: Element, c: Scalar, copy: int = 0) -> Element:
    """Substitute x -> x + c in one copy (binomial expansion on symbols)."""
    alg = f.algebra
    out = {}
    for mono, coeff in f.data.items():
        pieces = [alg.one()]
        for sym, cp, exp in mono:
            if sym == "x" and cp == copy:
                xc = alg.gen("x", cp) + alg.one().scale(c)
                term = xc ** exp
            else:
                term = alg.from_word([(sym, cp, exp)])
            pieces.append(term)
        prod = pieces[0]
        for p in pieces[1:]:
            prod = prod * p
        for m, c2 in prod.data.items():
            prev = out.get(m)
            s = coeff * c2 if prev is None else prev + coeff * c2
            if s:
                out[m] = s
            elif prev is not None:
                del out[m]
    return Element(alg, out)


def _formal_derivative(f: Element, symbol: str, copy: int) -> Element:
    """d/dsymbol on normal-ordered monomials (valid: letters self-commute)."""
    alg = f.algebra
    out = alg.element()
    for mono, coeff in f.data.items():
        for idx, (sym, cp, exp) in enumerate(mono):
            if sym == symbol and cp == copy:
                new = list(mono)
                if exp == 1:
                    del new[idx]
                else:
                    new[idx] = (sym, cp, exp - 1)
                out = out + Element(alg, {tuple(new): coeff * Scalar.rational(exp)})
    return out


def partial_x(f: Element, copy: int = 0) -> Element:
    return _formal_derivative(f, "x", copy)


def partial_y(f: Element, copy: int = 0) -> Element:
    return _formal_derivative(f, "y", copy)


def finite_difference_Dx(f: Element, copy: int = 0) -> Element:
    """D_x f = (f(x) - f(x - 2ih)) / 2ih on one copy."""
    minus_2ih = -(IH * Scalar.rational(2))
    diff = f - shift_x(f, minus_2ih, copy)
    return diff.scale((IH * Scalar.rational(2)).inverse())


def delta_x(alg: PlaneAlgebra, m: int = 0, n: int = 1) -> Element:
    return alg.gen("x", m) - alg.gen("x", n)


def delta_y(alg: PlaneAlgebra, m: int = 0, n: int = 1) -> Element:
    return alg.gen("y", m) - alg.gen("y", n)


def xbar(alg: PlaneAlgebra, m: int = 0, n: int = 1) -> Element:
    return (alg.gen("x", m) + alg.gen("x", n)).scale(Scalar.rational(1, 2))


def ybar(alg: PlaneAlgebra, m: int = 0, n: int = 1) -> Element:
    return (alg.gen("y", m) + alg.gen("y", n)).scale(Scalar.rational(1, 2))


def distance_invariant(alg: PlaneAlgebra, m: int = 0, n: int = 1) -> Element:
    """Q = y_m^-1 y_n^-1 ((dx)^2 + (dy)^2); central two-point invariant."""
    if m == n:
        raise ValueError("need two distinct copies")
    dx = delta_x(alg, m, n)
    dy = delta_y(alg, m, n)
    yinv = alg.gen("y", m, -1) * alg.gen("y", n, -1)
    return yinv * (dx * dx + dy * dy)


def commutator(a: Element, b: Element) -> Element:
    return a * b - b * a


def is_central(f: Element) -> bool:
    alg = f.algebra
    for copy in range(alg.ncopies):
        for sym in ("x", "y"):
            if not commutator(f, alg.gen(sym, copy)).is_zero():
                return False
    return True


def subs_h_zero(f: Element) -> Element:
    """Classical limit h -> 0 of every coefficient."""
    alg = f.algebra
    out = {}
    for mono, coeff in f.data.items():
        c0 = coeff.subs_h_zero()
        if c0:
            out[mono] = c0
    return Element(alg, out)


# -- parsing ----------------------------------------------------------------


def parse_element(alg: Algebra, text: str) -> Element:
    """Parse the deterministic textual form produced by Element.render."""
    from .scalars import _split_top_level, _split_factors

    text = text.replace(" ", "")
    if text in ("0", ""):
        return alg.element()
    symbols = sorted({s for s in getattr(alg, "symbols", ("x", "y"))},
                     key=len, reverse=True)
    total = alg.element()
    for chunk in _split_top_level(text):
        coeff = ONE
        word = []
        for factor in _split_factors(chunk):
            matched = None
            for sym in symbols:
                if factor.startswith(sym):
                    matched = sym
                    break
            if matched and (len(factor) == len(matched)
                            or factor[len(matched)].isdigit()
                            or factor[len(matched)] == "^"):
                rest = factor[len(matched):]
                if "^" in rest:
                    copy_s, exp_s = rest.split("^")
                    exp = int(exp_s)
                else:
                    copy_s, exp = rest, 1
                copy = int(copy_s) if copy_s else 0
                word.append((matched, copy, exp))
            else:
                inner = factor[1:-1] if factor.startswith("(") else factor
                coeff = coeff * Scalar.parse_compact(inner)
        total = total + alg.from_word(tuple(expand_units(word)), coeff)
    return total
