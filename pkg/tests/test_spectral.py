"""Sector propagators and eigenmodes against closed-form oracles."""

import math

import numpy as np
import pytest

from hplane.bessel import kk
from hplane.spectral import (ModeParams, PropagatorQuery, build_plan,
                             classical_residual_check, cosh_distance,
                             equal_distance_queries, h_independence_check,
                             lminus, mode, mode_momentum, orthonormality_check,
                             propagator, propagator_all)

# reference geometry with y != y' (absolutely convergent sector integrals,
# see conftest) used by several comparisons
QA = PropagatorQuery(dx=2.0, y=1.0, yp=2.0, mu=1.0, h=0.2)


@pytest.fixture(scope="module")
def qa_results():
    return propagator_all(QA, build_plan(QA))


# ---------------------------------------------------------------------------
# propagator values


def test_extended_value_vs_legendre_oracle(qa_results, extended_oracle):
    res = qa_results["extended"]
    ref = extended_oracle(res.coshd, QA.mu)
    assert abs(res.value - ref) <= 1e-8 * abs(ref)
    assert res.imag == 0.0


def test_sector_values_vs_resolvent_oracle(qa_results, sector_oracle):
    ref_ext = sector_oracle(QA.dx, QA.y, QA.yp, QA.mu, QA.h, "extended")
    for sector in (0, 1, "extended"):
        ref = sector_oracle(QA.dx, QA.y, QA.yp, QA.mu, QA.h, sector)
        res = qa_results[sector]
        got = complex(res.value, res.imag)
        assert abs(got - ref) <= 3e-5 * abs(ref_ext.real), (sector, got, ref)


def test_extended_value_second_geometry(extended_oracle):
    q = PropagatorQuery(dx=0.5, y=1.0, yp=2.5, mu=0.0, h=0.05)
    res = propagator(q)
    ref = extended_oracle(res.coshd, q.mu)
    assert abs(res.value - ref) <= 5e-6 * abs(ref)


def test_sector_additivity(qa_results):
    lhs = qa_results[0].value + qa_results[1].value
    rhs = qa_results["extended"].value
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_h_independence_of_sector_sum():
    dev = h_independence_check(QA, h_values=(0.05, 0.1, 0.5))
    assert dev <= 1e-8


def test_kernel_symmetry():
    plan = build_plan(QA)
    a = propagator(QA, plan).value
    swapped = PropagatorQuery(dx=-QA.dx, y=QA.yp, yp=QA.y, mu=QA.mu, h=QA.h)
    b = propagator(swapped, plan).value
    assert abs(a - b) <= 1e-8 * abs(a)


def test_equal_distance_example_pair():
    # (dx=1, y=1, y'=1) and (dx=0, y=1, y'=(3+sqrt5)/2) both have cosh d = 3/2
    q1 = PropagatorQuery(dx=1.0, y=1.0, yp=1.0, mu=1.0, h=0.1)
    q2 = PropagatorQuery(dx=0.0, y=1.0, yp=(3.0 + math.sqrt(5.0)) / 2.0,
                         mu=1.0, h=0.1)
    assert abs(cosh_distance(q1) - 1.5) < 1e-14
    assert abs(cosh_distance(q2) - 1.5) < 1e-14
    plan = build_plan(q1)
    v1 = propagator(q1, plan).value
    v2 = propagator(q2, plan).value
    assert abs(v1 - v2) <= 1e-5 * abs(v1)


def test_coincidence_guard():
    with pytest.raises(ValueError):
        build_plan(PropagatorQuery(dx=0.0, y=1.0, yp=1.0))
    with pytest.raises(ValueError):
        propagator(PropagatorQuery(dx=0.01, y=1.0, yp=1.0))


def test_est_error_reported(qa_results):
    res = qa_results["extended"]
    assert 0.0 <= res.est_error < 1e-3 * abs(res.value)


def test_residual_grows_toward_coincidence():
    resids = []
    for dx in (1.0, 0.6, 0.35):  # cosh d = 1.5, 1.18, 1.061
        q = PropagatorQuery(dx=dx, y=1.0, yp=1.0, mu=1.0, h=0.1)
        resids.append(classical_residual_check(q, step=0.04))
    assert resids[0] < resids[1] < resids[2], resids


# ---------------------------------------------------------------------------
# modes


def test_momentum_map():
    assert lminus(0.0, 0.1) == 0.0
    assert abs(lminus(1.0, 1e-8) + 1.0) < 1e-7  # classical limit -k
    # sector-1 example: t = 0, h = 0.5 gives |momentum| = 2
    p = ModeParams(kappa=2.0, k=0.0, h=0.5, sector=1)
    assert abs(mode_momentum(p) - 2.0) < 1e-15


def test_mode_classical_limit_is_first_order_in_h():
    kappa, k = 2.0, 1.2
    xs = np.array([0.0, 0.4, 0.4])
    ys = np.array([0.6, 1.0, 2.0])
    norm = math.pi ** -1.5 * math.sqrt(
        kappa * (1.0 - math.exp(-2.0 * math.pi * kappa)) / 2.0)
    classical = norm * np.exp(1j * k * xs) * np.sqrt(ys) * kk(kappa, k * ys)
    devs = []
    for h in (0.02, 0.002):
        got = mode(ModeParams(kappa=kappa, k=k, h=h), xs, ys)
        devs.append(np.max(np.abs(got - classical))
                    / np.max(np.abs(classical)))
    ratio = devs[0] / devs[1]
    assert 5.0 < ratio < 20.0, devs  # O(h) convergence
    assert devs[1] < 5e-3


def test_mode_classical_eigen_equation():
    # -y^2 (d2x + d2y) psi = (kappa^2 + 1/4) psi on the classical symbol
    kappa, k = 2.0, 1.0
    c4 = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
    offs = np.array([-2, -1, 0, 1, 2])

    def psi(x, y):
        return float(np.sqrt(y) * kk(kappa, k * y)[0]) * math.cos(k * x)

    step = 1e-2
    for x0, y0 in ((0.2, 0.8), (0.5, 1.5)):
        pxx = sum(ci * psi(x0 + o * step, y0)
                  for ci, o in zip(c4, offs)) / step ** 2
        pyy = sum(ci * psi(x0, y0 + o * step)
                  for ci, o in zip(c4, offs)) / step ** 2
        lhs = -y0 * y0 * (pxx + pyy)
        rhs = (kappa * kappa + 0.25) * psi(x0, y0)
        assert abs(lhs - rhs) <= 1e-4 * abs(rhs), (x0, y0, lhs, rhs)


def test_mode_sector1_weight():
    p = ModeParams(kappa=2.0, k=0.3, h=0.5, sector=1)
    x = np.array([0.0, 1.0])
    y = np.array([1.0, 1.0])
    vals = mode(p, x, y)
    # |phi(x=1)| / |phi(x=0)| = e^{-pi/(2h)}
    ratio = abs(vals[1]) / abs(vals[0])
    assert abs(ratio - math.exp(-math.pi / (2 * 0.5))) < 1e-12


@pytest.mark.parametrize("sector", [0, 1])
def test_smeared_orthonormality(sector):
    ratio, cross = orthonormality_check(h=0.3, sector=sector)
    assert abs(ratio - 1.0) <= 1e-4, ratio
    assert cross <= 1e-4, cross
