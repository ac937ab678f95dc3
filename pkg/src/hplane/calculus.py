"""Frame differential calculus on the deformed plane.

The frame one-forms theta^1 = y^-1 dx, theta^2 = y^-1 dy are central and
satisfy (theta^1)^2 = (theta^2)^2 = 0, theta^1 theta^2 = -theta^2 theta^1.
The dual derivations act on generators as

    e1 x = y,  e1 y = 0,        e2 x = 0,  e2 y = -y,

extended by Leibniz with in-place insertion.  The Laplacian is
Delta_h f = -(e1^2 + e2^2 + e2) f.

d is defined on generators (dx = y theta^1, dy = y theta^2) and extended by
Leibniz; this gives df = (e1 f) theta^1 + (e2t f) theta^2 with e2t the
y-degree counting derivation e2t(y^m) = m y^m = -e2(y^m).  The Hodge star is
completed by *(theta^2) = -theta^1, *(theta^1 theta^2) = 1, and
delta = *d* then reproduces -(delta d + d delta) = Delta_h on functions.
"""

from __future__ import annotations

from .rewrite import Element, expand_units
from .scalars import Scalar, ONE


def _leibniz(f: Element, unit_image) -> Element:
    """Derivation by insertion: unit_image maps a unit letter to an Element
    (or None for zero)."""
    alg = f.algebra
    out = alg.element()
    for mono, coeff in f.data.items():
        units = tuple(expand_units(mono))
        for i, u in enumerate(units):
            img = unit_image(alg, u)
            if img is None:
                continue
            pre, post = units[:i], units[i + 1:]
            for m2, c2 in img.data.items():
                word = pre + tuple(expand_units(m2)) + post
                out = out + alg.from_word(word, coeff * c2)
    return out


def _e1_image(alg, u):
    sym, copy, exp = u
    if sym == "x":
        return alg.gen("y", copy)
    return None


def _e2_image(alg, u):
    sym, copy, exp = u
    if sym == "y":
        # e2(y) = -y ; e2(y^-1) = + y^-1
        return alg.gen("y", copy, exp).scale(Scalar.rational(-exp))
    return None


def _ydeg_image(alg, u):
    """theta^2-component of d on functions: y^e -> e y^e, x -> 0."""
    sym, copy, exp = u
    if sym == "y":
        return alg.gen("y", copy, exp).scale(Scalar.rational(exp))
    return None


def e1(f: Element) -> Element:
    return _leibniz(f, _e1_image)


def e2(f: Element) -> Element:
    return _leibniz(f, _e2_image)


def laplacian_h(f: Element) -> Element:
    e2f = e2(f)
    return -(e1(e1(f)) + e2(e2f) + e2f)


class Form:
    """Mixed-degree form c0 + c1 theta^1 + c2 theta^2 + c12 theta^1 theta^2."""

    __slots__ = ("c0", "c1", "c2", "c12")

    def __init__(self, c0: Element, c1: Element, c2: Element, c12: Element):
        self.c0, self.c1, self.c2, self.c12 = c0, c1, c2, c12

    @staticmethod
    def function(f: Element) -> "Form":
        z = f.algebra.element()
        return Form(f, z, z, z)

    @staticmethod
    def one_form(a: Element, b: Element) -> "Form":
        z = a.algebra.element()
        return Form(z, a, b, z)

    @staticmethod
    def two_form(c: Element) -> "Form":
        z = c.algebra.element()
        return Form(z, z, z, c)

    def __add__(self, other: "Form") -> "Form":
        return Form(self.c0 + other.c0, self.c1 + other.c1,
                    self.c2 + other.c2, self.c12 + other.c12)

    def __sub__(self, other: "Form") -> "Form":
        return Form(self.c0 - other.c0, self.c1 - other.c1,
                    self.c2 - other.c2, self.c12 - other.c12)

    def __neg__(self) -> "Form":
        return Form(-self.c0, -self.c1, -self.c2, -self.c12)

    def scale(self, coeff: Scalar) -> "Form":
        return Form(self.c0.scale(coeff), self.c1.scale(coeff),
                    self.c2.scale(coeff), self.c12.scale(coeff))

    def is_zero(self) -> bool:
        return (self.c0.is_zero() and self.c1.is_zero()
                and self.c2.is_zero() and self.c12.is_zero())

    def render(self) -> str:
        parts = []
        for coeff, tag in ((self.c0, ""), (self.c1, " th1"),
                           (self.c2, " th2"), (self.c12, " th1 th2")):
            if not coeff.is_zero():
                parts.append(f"[{coeff.render()}]{tag}")
        return " + ".join(parts) if parts else "0"

    __str__ = render


def d(form: Form) -> Form:
    """Exterior derivative; uses d theta^1 = theta^1 theta^2, d theta^2 = 0."""
    # degree 0 -> 1
    c1 = e1(form.c0)
    c2 = _leibniz(form.c0, _ydeg_image)
    # degree 1 -> 2:
    # d(a th1 + b th2) = (da)_2 th2 th1 + a dth1 + (db)_1 th1 th2
    #                  = (-(da)_2 + (db)_1 + a) th1 th2
    c12 = -_leibniz(form.c1, _ydeg_image) + e1(form.c2) + form.c1
    z = form.c0.algebra.element()
    return Form(z, c1, c2, c12)


def hodge(form: Form) -> Form:
    """*1 = th1 th2, *th1 = th2, *th2 = -th1, *(th1 th2) = 1."""
    return Form(form.c12, -form.c2, form.c1, form.c0)


def codifferential(form: Form) -> Form:
    return hodge(d(hodge(form)))


def laplacian_from_forms(f: Element) -> Element:
    """-(delta d + d delta) on a function; must equal laplacian_h."""
    form = Form.function(f)
    total = codifferential(d(form)) + d(codifferential(form))
    return -total.c0


def first_order_calculus_check() -> list[tuple[str, bool]]:
    """The coordinate/one-form relations versus the R-matrix contraction."""
    from .hopf import calculus_relation_checks
    return calculus_relation_checks()
