"""Invariant functional: closed form vs quadrature, invariance, adjoints."""

import math
import random

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import kv

from hplane.state import (inner_product, random_test_function, state,
                          stokes_check, verify_action_symmetry,
                          verify_invariance_conditions, y_dy)
from hplane.state import TestFunction as Family


def quadrature_state(f: Family) -> complex:
    """<f> by nested adaptive quadrature against dmu = y^-2 dx dy."""
    def outer(part):
        def integrand_y(y):
            def integrand_x(x):
                return part(f.evaluate(x, y)) / (y * y)
            val, _ = quad(integrand_x, -np.inf, np.inf,
                          epsabs=1e-13, epsrel=1e-12, limit=200)
            return val
        val, _ = quad(integrand_y, 0.0, np.inf,
                      epsabs=1e-13, epsrel=1e-12, limit=200)
        return val
    return complex(outer(np.real), outer(np.imag))


def test_closed_form_matches_quadrature():
    rng = random.Random(21)
    for _ in range(3):
        f = random_test_function(rng)
        exact = state(f)
        numeric = quadrature_state(f)
        assert abs(exact - numeric) <= 1e-8 * max(abs(exact), 1e-6), \
            (exact, numeric)


def test_reference_value():
    # <e^{-x^2} y^2 e^{-y - 1/y}> = sqrt(pi) * 2 K_1(2)
    f = Family.single(poly={(0, 2): 1.0 + 0j})
    expected = math.sqrt(math.pi) * 2.0 * kv(1, 2.0)
    assert abs(state(f) - expected) <= 1e-13 * expected
    assert abs(expected - 0.495811641671982) < 1e-12


def test_degenerate_inputs():
    assert state(Family([])) == 0j
    # odd x-moment of a centered Gaussian vanishes
    f = Family.single(poly={(1, 0): 1.0 + 0j}, c=0.0)
    assert abs(state(f)) < 1e-15


def test_invariance_conditions():
    for h in (0.05, 0.1, 0.5):
        rng = random.Random(1)
        devs = verify_invariance_conditions(rng, h, nsamples=8)
        worst = max(dev for _, dev in devs)
        assert worst <= 1e-9, (h, max(devs, key=lambda it: it[1]))


def test_y_dy_condition_is_exact_algebraically():
    # <y d/dy f> - <f> vanishes term by term in the closed form
    f = Family.single(poly={(2, -1): 1.0 + 0j}, p=1.3, c=0.2 + 0.1j,
                            q=0.7, r=1.9)
    assert abs(state(y_dy(f)) - state(f)) <= 1e-12 * abs(state(f))


def test_stokes():
    rng = random.Random(2)
    devs = stokes_check(rng, h=0.1, nsamples=6)
    assert max(dev for _, dev in devs) <= 1e-9


def test_adjoint_symmetry():
    rng = random.Random(3)
    devs = verify_action_symmetry(rng, h=0.1, nsamples=4, sectors=(0,))
    assert max(dev for _, dev in devs) <= 1e-8, \
        max(devs, key=lambda it: it[1])
    rng = random.Random(3)
    devs = verify_action_symmetry(rng, h=0.5, nsamples=4, sectors=(0, 1))
    assert max(dev for _, dev in devs) <= 1e-8, \
        max(devs, key=lambda it: it[1])


def test_inner_product_hermitian_and_positive():
    rng = random.Random(4)
    f = random_test_function(rng)
    g = random_test_function(rng)
    for sector, h in ((0, 0.1), (1, 0.5)):
        lhs = inner_product(f, g, sector, h)
        rhs = inner_product(g, f, sector, h)
        assert abs(lhs - rhs.conjugate()) <= 1e-10 * max(abs(lhs), 1e-30)
        norm = inner_product(f, f, sector, h)
        assert norm.real > 0
        assert abs(norm.imag) <= 1e-10 * norm.real


def test_sector_one_weight_overflow_guard():
    f = Family.single(poly={(0, 0): 1.0 + 0j}, p=1.0)
    with pytest.raises(OverflowError):
        state(f, weight_beta=math.pi / 0.05)
