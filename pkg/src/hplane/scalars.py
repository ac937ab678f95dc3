"""Exact scalar ring: Gaussian rationals extended by Laurent polynomials in h.

A Scalar is a finite sum  sum_e (a_e + b_e*i) * h^e  with a_e, b_e rational
and e any integer.  This is the coefficient ring of every symbolic module:
the deformation parameter h stays symbolic, i^2 = -1, and conjugation fixes
h (h is real) while negating imaginary parts.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Tuple

Gauss = Tuple[Fraction, Fraction]  # (real, imag)

_ZERO = (Fraction(0), Fraction(0))


class Scalar:
    """Immutable element of Q(i)[h, h^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Gauss] | None = None):
        clean = {}
        if terms:
            for e, (re_, im_) in terms.items():
                if re_ or im_:
                    clean[int(e)] = (Fraction(re_), Fraction(im_))
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return _S_ZERO

    @staticmethod
    def one() -> "Scalar":
        return _S_ONE

    @staticmethod
    def rational(p, q=1) -> "Scalar":
        return Scalar({0: (Fraction(p, q), Fraction(0))})

    @staticmethod
    def imag(p=1, q=1) -> "Scalar":
        return Scalar({0: (Fraction(0), Fraction(p, q))})

    @staticmethod
    def h(power: int = 1) -> "Scalar":
        return Scalar({power: (Fraction(1), Fraction(0))})

    @staticmethod
    def ih(power: int = 1) -> "Scalar":
        """(i*h)**power, the ubiquitous deformation unit."""
        k = power % 4
        unit = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
                (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1))][k]
        return Scalar({power: unit})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        terms = dict(self._terms)
        for e, (a, b) in other._terms.items():
            c, d = terms.get(e, _ZERO)
            terms[e] = (a + c, b + d)
        return Scalar(terms)

    def __neg__(self) -> "Scalar":
        return Scalar({e: (-a, -b) for e, (a, b) in self._terms.items()})

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            return NotImplemented
        terms: dict[int, Gauss] = {}
        for e1, (a, b) in self._terms.items():
            for e2, (c, d) in other._terms.items():
                e = e1 + e2
                re_ = a * c - b * d
                im_ = a * d + b * c
                p, q = terms.get(e, _ZERO)
                terms[e] = (p + re_, q + im_)
        return Scalar(terms)

    def conj(self) -> "Scalar":
        """Complex conjugation; h is real and stays fixed."""
        return Scalar({e: (a, -b) for e, (a, b) in self._terms.items()})

    def inverse(self) -> "Scalar":
        """Inverse of a single-term scalar c*h^e (Laurent monomials only)."""
        if len(self._terms) != 1:
            raise ValueError("only Laurent monomials are invertible: %s" % self)
        (e, (a, b)), = self._terms.items()
        n = a * a + b * b
        return Scalar({-e: (a / n, -b / n)})

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        out = _S_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def eval(self, h_value: float) -> complex:
        """Floating evaluation at a numeric h."""
        if h_value == 0 and any(e < 0 for e in self._terms):
            raise ZeroDivisionError("negative power of h at h = 0")
        out = 0j
        for e, (a, b) in self._terms.items():
            out += complex(a + b * 1j) * (h_value ** e)
        return out

    def subs_h_zero(self) -> "Scalar":
        """Classical limit: drop every positive power of h, require no poles."""
        if any(e < 0 for e in self._terms):
            raise ZeroDivisionError("negative power of h at h = 0")
        keep = {e: c for e, c in self._terms.items() if e == 0}
        return Scalar(keep)

    def terms(self) -> Iterable[tuple[int, Gauss]]:
        return self._terms.items()

    # -- protocol ------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- rendering / parsing --------------------------------------------

    @staticmethod
    def _render_gauss(a: Fraction, b: Fraction) -> str:
        if b == 0:
            return str(a)
        istr = "i" if b == 1 else ("-i" if b == -1 else f"{b}*i")
        if a == 0:
            return istr
        sign = "+" if b > 0 else "-"
        iabs = istr.lstrip("-")
        return f"{a}{sign}{iabs}"

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, (a, b) in self._terms.items():
            coeff = f"({self._render_gauss(a, b)})"
            if e == 0:
                parts.append(coeff)
            else:
                parts.append(f"{coeff}*h^{e}")
        return " + ".join(parts)

    __str__ = render

    def render_compact(self) -> str:
        """Single-token form used inside element coefficients: '4*i*h^2'."""
        if not self._terms:
            return "0"
        parts = []
        for e, (a, b) in self._terms.items():
            factors = []
            if b == 0:
                if a != 1 or e == 0:
                    factors.append(str(a) if a != -1 or e == 0 else "-1")
                if a == -1 and e != 0:
                    factors = ["-1"]
            else:
                if a != 0:
                    # mixed gaussian coefficient keeps inner parens
                    factors.append(f"({self._render_gauss(a, b)})")
                elif b == 1:
                    factors.append("i")
                elif b == -1:
                    factors.append("-i")
                else:
                    factors.append(f"{b}*i")
            if e == 1:
                factors.append("h")
            elif e != 0:
                factors.append(f"h^{e}")
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)

    @staticmethod
    def parse_compact(text: str) -> "Scalar":
        text = text.replace(" ", "")
        if text in ("0", ""):
            return _S_ZERO
        total = _S_ZERO
        for chunk in _split_top_level(text):
            coeff = _S_ONE
            # optional leading sign on the first factor
            for factor in _split_factors(chunk):
                if factor in ("h",):
                    coeff = coeff * Scalar.h()
                elif factor.startswith("h^"):
                    coeff = coeff * Scalar.h(int(factor[2:]))
                elif factor == "i":
                    coeff = coeff * Scalar.imag()
                elif factor == "-i":
                    coeff = coeff * Scalar.imag(-1)
                elif factor.startswith("(") and factor.endswith(")"):
                    a, b = _parse_gauss(factor[1:-1])
                    coeff = coeff * Scalar({0: (a, b)})
                elif factor.endswith("*i"):
                    coeff = coeff * Scalar.imag() * Scalar.rational(Fraction(factor[:-2]))
                else:
                    coeff = coeff * Scalar.rational(Fraction(factor))
            total = total + coeff
        return total

    def __repr__(self):
        return f"Scalar({self.render()})"

    _TERM_RE = re.compile(
        r"^\(([^()]*)\)(?:\*h\^(-?\d+))?$"
    )
    _GAUSS_RE = re.compile(
        r"^(?P<re>[+-]?\d+(?:/\d+)?)?"
        r"(?P<im>(?:(?<=\d)[+-]|^[+-]?)(?:\d+(?:/\d+)?\*)?i)?$"
    )

    @staticmethod
    def parse(text: str) -> "Scalar":
        text = text.replace(" ", "")
        if text in ("0", ""):
            return _S_ZERO
        terms: dict[int, Gauss] = {}
        for chunk in _split_top_level(text):
            m = Scalar._TERM_RE.match(chunk)
            if not m:
                raise ValueError(f"cannot parse scalar term {chunk!r}")
            coeff, exp = m.group(1), int(m.group(2) or 0)
            a, b = _parse_gauss(coeff)
            p, q = terms.get(exp, _ZERO)
            terms[exp] = (p + a, q + b)
        return Scalar(terms)


def _split_top_level(text: str) -> list[str]:
    """Split on '+' that sit outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [c for c in out if c]


def _split_factors(text: str) -> list[str]:
    """Split on '*' outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    # re-join the '*' of a trailing '*i' split, e.g. '3/2', 'i'
    return [c for c in out if c]


def _parse_gauss(text: str) -> Gauss:
    if not text:
        raise ValueError("empty coefficient")
    # split into real and imaginary pieces
    re_part, im_part = Fraction(0), Fraction(0)
    for piece in re.findall(r"[+-]?[^+-]+", text):
        if piece.endswith("i"):
            body = piece[:-1].rstrip("*")
            if body in ("", "+"):
                im_part += 1
            elif body == "-":
                im_part -= 1
            else:
                im_part += Fraction(body)
        else:
            re_part += Fraction(piece)
    return (re_part, im_part)


_S_ZERO = Scalar()
_S_ONE = Scalar({0: (Fraction(1), Fraction(0))})

ZERO = _S_ZERO
ONE = _S_ONE
I = Scalar.imag()
H = Scalar.h()
IH = Scalar.ih()
