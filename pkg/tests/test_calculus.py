"""Frame calculus: derivations, exterior derivative, Hodge star, Laplacian."""

import random

from hplane.calculus import (Form, codifferential, d, e1, e2, hodge,
                             laplacian_from_forms, laplacian_h)
from hplane.plane import PlaneAlgebra
from hplane.rewrite import random_word
from hplane.scalars import Scalar

ALG = PlaneAlgebra(1)
X, Y = ALG.gen("x"), ALG.gen("y")


def test_derivations_on_generators():
    assert (e1(X) - Y).is_zero()
    assert e1(Y).is_zero()
    assert e2(X).is_zero()
    assert (e2(Y) + Y).is_zero()
    assert (e2(ALG.gen("y", 0, -1)) - ALG.gen("y", 0, -1)).is_zero()


def test_derivations_satisfy_leibniz():
    rng = random.Random(13)
    for _ in range(15):
        f = ALG.from_word(random_word(rng, ("x", "y"), 4, 1,
                                      frozenset(("y",))))
        g = ALG.from_word(random_word(rng, ("x", "y"), 4, 1,
                                      frozenset(("y",))))
        for der in (e1, e2):
            resid = der(f * g) - der(f) * g - f * der(g)
            assert resid.is_zero(), resid.render()


def test_laplacian_on_y_powers():
    for m in range(-3, 4):
        if m == 0:
            continue
        ym = ALG.gen("y", 0, m)
        expected = ym.scale(Scalar.rational(m - m * m))
        assert (laplacian_h(ym) - expected).is_zero(), m


def test_laplacian_equals_form_laplacian():
    for a in range(4):
        for b in range(-3, 4):
            if a + abs(b) > 4 or (a == 0 and b == 0):
                continue
            f = ALG.from_word((("x", 0, a),) * (a > 0)
                              + ((("y", 0, b),) if b else ()))
            resid = laplacian_h(f) - laplacian_from_forms(f)
            assert resid.is_zero(), (a, b, resid.render())


def test_d_squared_vanishes():
    samples = [X * X * Y, X * ALG.gen("y", 0, -1), X + Y * Y, X * Y * X]
    for f in samples:
        assert d(d(Form.function(f))).is_zero()
        assert d(d(Form.one_form(f, Y * f))).is_zero()


def test_hodge_square():
    f = X * Y
    # functions and two-forms: ** = +1
    assert (hodge(hodge(Form.function(f))).c0 - f).is_zero()
    assert (hodge(hodge(Form.two_form(f))).c12 - f).is_zero()
    # one-forms: ** = -1
    hh = hodge(hodge(Form.one_form(X, Y)))
    assert (hh.c1 + X).is_zero() and (hh.c2 + Y).is_zero()


def test_codifferential_annihilates_functions():
    assert codifferential(Form.function(X * Y)).is_zero()
