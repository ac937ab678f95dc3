"""Formal momentum-series identities with symbolic coefficients."""

import pytest

from hplane.plane import PlaneAlgebra
from hplane.scalars import Scalar, ONE
from hplane.series import (FormalSeries, check_appendix_A, check_comrel,
                           check_e1_eigen, check_exp_inverse, exp_ikx,
                           exp_series, lminus_series, lplus_series)


def test_momentum_series_coefficients():
    alg = PlaneAlgebra(1)
    lp = lplus_series(alg, 4)
    lm = lminus_series(alg, 4)
    # lplus = k + h k^2 + (2/3) h^2 k^3 + (1/3) h^3 k^4 + ...
    assert lp.coefficient((1,)) == alg.one()
    assert lp.coefficient((2,)) == alg.one().scale(Scalar.h())
    assert lp.coefficient((3,)) == alg.one().scale(
        Scalar.h(2) * Scalar.rational(2, 3))
    # lminus is lplus with h -> -h
    assert lm.coefficient((2,)) == alg.one().scale(-Scalar.h())
    assert lm.coefficient((3,)) == lp.coefficient((3,))


def test_exp_series_requires_nilpotent_constant():
    alg = PlaneAlgebra(1)
    with pytest.raises(ValueError):
        exp_series(FormalSeries.constant(alg, 1, 4, alg.one()))


def test_exp_ikx_truncation_and_inverse():
    alg = PlaneAlgebra(1)
    e = exp_ikx(alg, 5)
    # coefficient of k^n is (ix)^n / n!
    x = alg.gen("x")
    from hplane.scalars import I
    assert (e.coefficient((2,))
            - (x * x).scale(I * I * Scalar.rational(1, 2))).is_zero()
    prod = e * exp_ikx(alg, 5, sign=-1)
    assert (prod - FormalSeries.one(alg, 1, 5)).is_zero()


@pytest.mark.parametrize("order", [4, 6])
def test_generated_identities(order):
    for check in (check_appendix_A, check_comrel, check_e1_eigen,
                  check_exp_inverse):
        ok, msg = check(order)
        assert ok, f"{check.__name__}({order}): {msg}"


def test_exchange_identity_fails_with_wrong_momentum_sign():
    """Self-test: lminus in place of lplus must break the exchange identity."""
    from hplane.scalars import I
    alg = PlaneAlgebra(2)
    order = 4
    lhs = exp_ikx(alg, order, copy=0, sign=+1) \
        * exp_ikx(alg, order, copy=1, sign=-1)
    dx = alg.gen("x", 0) - alg.gen("x", 1)
    arg = lminus_series(alg, order) \
        * FormalSeries.constant(alg, 1, order, dx.scale(I))
    resid = lhs - exp_series(arg)
    assert not resid.is_zero()
    deg, _ = resid.first_nonzero()
    assert sum(deg) == 2  # first discrepancy at the h k^2 term
