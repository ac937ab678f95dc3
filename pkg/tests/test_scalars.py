"""Ring laws and text round-trips for the exact scalar coefficients."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hplane.scalars import Scalar, ZERO, ONE, I, H, IH


fractions = st.builds(Fraction,
                      st.integers(min_value=-20, max_value=20),
                      st.integers(min_value=1, max_value=12))

scalars = st.builds(
    Scalar,
    st.dictionaries(st.integers(min_value=-4, max_value=4),
                    st.tuples(fractions, fractions), max_size=4))


@given(scalars, scalars, scalars)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO
    assert a * ZERO == ZERO


@given(scalars, scalars)
def test_conjugation(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()


def test_units():
    assert I * I == -ONE
    assert IH == I * H
    assert IH * IH == -(H * H)
    assert Scalar.ih(2) == -(H * H)
    assert Scalar.ih(-1) == IH.inverse()
    assert H * H.inverse() == ONE


@given(st.integers(min_value=-3, max_value=3), fractions, fractions)
def test_monomial_inverse(e, a, b):
    if a == 0 and b == 0:
        return
    s = Scalar({e: (a, b)})
    assert s * s.inverse() == ONE
    assert s ** 2 == s * s
    assert s ** -2 == (s.inverse()) ** 2


def test_inverse_rejects_sums():
    with pytest.raises(ValueError):
        (ONE + H).inverse()


@given(scalars)
def test_parse_render_roundtrip(a):
    assert Scalar.parse(a.render()) == a
    assert Scalar.parse_compact(a.render_compact()) == a


def test_parse_examples():
    s = Scalar.parse("(-4)*h^2 + (2*i)*h^-1")
    assert s == Scalar.rational(-4) * H * H + Scalar.imag(2) * H.inverse()
    assert Scalar.parse("0") == ZERO
    assert Scalar.parse("(1/2+3/4*i)") == Scalar({0: (Fraction(1, 2),
                                                      Fraction(3, 4))})


@given(scalars, scalars)
def test_eval_is_a_homomorphism(a, b):
    for hv in (0.37, 2.0):
        lhs = (a * b).eval(hv)
        rhs = a.eval(hv) * b.eval(hv)
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))
        assert abs((a + b).eval(hv) - (a.eval(hv) + b.eval(hv))) \
            <= 1e-9 * max(1.0, abs(lhs))


def test_classical_limit():
    s = Scalar.rational(3) + H * Scalar.imag(5)
    assert s.subs_h_zero() == Scalar.rational(3)
    with pytest.raises(ZeroDivisionError):
        H.inverse().subs_h_zero()
    with pytest.raises(ZeroDivisionError):
        H.inverse().eval(0.0)
