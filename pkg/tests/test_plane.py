"""Braided plane copies: relations, centrality, star, parsing, confluence."""

import random

import pytest

from hplane.plane import (PlaneAlgebra, commutator, distance_invariant,
                          finite_difference_Dx, is_central, parse_element,
                          partial_x, shift_x, star, subs_h_zero)
from hplane.rewrite import random_word
from hplane.scalars import Scalar, ONE, IH

TWO_IH = IH * Scalar.rational(2)


def test_single_copy_relation():
    alg = PlaneAlgebra(1)
    x, y = alg.gen("x"), alg.gen("y")
    assert (commutator(x, y) + y.scale(TWO_IH)).is_zero()
    assert (alg.gen("y") * alg.gen("y", exp=-1) - alg.one()).is_zero()


def test_cross_copy_relations():
    alg = PlaneAlgebra(2)
    x0, y0 = alg.gen("x", 0), alg.gen("y", 0)
    x1, y1 = alg.gen("x", 1), alg.gen("y", 1)
    assert (commutator(x0, x1) - x0.scale(TWO_IH) + x1.scale(TWO_IH)).is_zero()
    assert (commutator(x0, y1) + y1.scale(TWO_IH)).is_zero()
    assert (commutator(y0, x1) - y0.scale(TWO_IH)).is_zero()
    assert commutator(y0, y1).is_zero()


def test_distance_invariant_central_and_hermitian():
    alg = PlaneAlgebra(2)
    Q = distance_invariant(alg)
    assert is_central(Q)
    assert (star(Q) - Q).is_zero()


def test_distance_invariant_classical_limit():
    alg = PlaneAlgebra(2)
    Q0 = subs_h_zero(distance_invariant(alg))
    # classical: y0^-1 y1^-1 ((x0-x1)^2 + (y0-y1)^2), all letters commuting
    dx = alg.gen("x", 0) - alg.gen("x", 1)
    dy = alg.gen("y", 0) - alg.gen("y", 1)
    yinv = alg.gen("y", 0, -1) * alg.gen("y", 1, -1)
    classical = subs_h_zero(yinv * (dx * dx + dy * dy))
    assert (Q0 - classical).is_zero()


def test_star_is_involutive_antihomomorphism():
    alg = PlaneAlgebra(2)
    rng = random.Random(7)
    for _ in range(25):
        f = alg.from_word(random_word(rng, ("x", "y"), 4, 2,
                                      frozenset(("y",))))
        g = alg.from_word(random_word(rng, ("x", "y"), 4, 2,
                                      frozenset(("y",))))
        assert (star(star(f)) - f).is_zero()
        assert (star(f * g) - star(g) * star(f)).is_zero()


def test_shift_x_composes():
    alg = PlaneAlgebra(1)
    f = alg.gen("x") * alg.gen("x") * alg.gen("y") + alg.gen("x").scale(IH)
    once = shift_x(shift_x(f, IH), IH)
    twice = shift_x(f, IH * Scalar.rational(2))
    assert (once - twice).is_zero()
    assert (shift_x(f, Scalar.zero()) - f).is_zero()


def test_finite_difference():
    alg = PlaneAlgebra(1)
    x = alg.gen("x")
    assert (finite_difference_Dx(x) - alg.one()).is_zero()
    # D_x x^2 = 2x - 2ih
    expected = x.scale(Scalar.rational(2)) - alg.one().scale(TWO_IH)
    assert (finite_difference_Dx(x * x) - expected).is_zero()
    # classical limit of D_x equals the formal derivative
    f = x * x * x
    assert (subs_h_zero(finite_difference_Dx(f))
            - subs_h_zero(partial_x(f))).is_zero()


def test_parse_render_roundtrip():
    alg = PlaneAlgebra(2)
    rng = random.Random(11)
    for _ in range(20):
        f = alg.from_word(random_word(rng, ("x", "y"), 5, 2,
                                      frozenset(("y",))),
                          IH + Scalar.rational(1, 3))
        assert (parse_element(alg, f.render()) - f).is_zero()
    assert parse_element(alg, "0").is_zero()


@pytest.mark.parametrize("ncopies", [1, 2, 3])
def test_confluence_sampling(ncopies):
    alg = PlaneAlgebra(ncopies)
    rng = random.Random(ncopies)
    for _ in range(150):
        word = random_word(rng, ("x", "y"), 6, ncopies, frozenset(("y",)))
        assert alg.normal_form(word, "left") == alg.normal_form(word, "right")
