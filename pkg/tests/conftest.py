"""Shared independent oracles for the numeric test suites.

These deliberately avoid the implementation's own quadrature paths:
the sector-propagator oracle reduces the double integral to a single
p-integral through the classical resolvent identity

    int_0^inf kappa sinh(pi kappa) K_{i kappa}(a) K_{i kappa}(b)
        / (kappa^2 + s^2) dkappa = (pi^2 / 2) I_s(min) K_s(max),

and the extended-space oracle is the closed form
G = Q_{s-1/2}(cosh d) / (2 pi) via mpmath's Legendre function.
"""

import math

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss
from scipy.special import ive, kve


def resolvent_sector_oracle(dx, y, yp, mu, h, sector):
    """Sector propagator by 1D p-integration of (pi^2/2) I_s K_s."""
    s = math.sqrt(0.25 + mu * mu)
    c = 1.0 / (2.0 * h)

    ylo, yhi = min(y, yp), max(y, yp)
    front = (math.pi ** 2 / 2.0) * math.sqrt(y * yp)

    def kernel(p):
        ap = np.abs(p)
        lo, hi = ap * ylo, ap * yhi
        # scaled: I_s(lo) K_s(hi) = ive(s,lo) kve(s,hi) e^{lo-hi}
        rad = ive(s, lo) * kve(s, hi) * np.exp(lo - hi)
        return front * np.exp(1j * p * dx) * rad

    nodes, wts = leggauss(80)

    def upper_tail(P):
        """int_P^inf kernel(p) dp by rotating into the upper/lower
        half-plane, where exp(i p dx) decays; when dx = 0 the kernel's
        own e^{-p(yhi-ylo)} decay is used on the real axis instead."""
        if abs(dx) < 1e-9:
            if yhi - ylo < 1e-9:
                raise ValueError("tail not integrable: dx = 0, y = yp")
            rate, direction = yhi - ylo, 1.0
        else:
            rate = abs(dx)
            direction = 1j if dx > 0 else -1j
        tmax = 46.0 / rate + 10.0
        w = min(2.0, 6.0 / (1.0 + rate + (yhi - ylo)))
        tedges = np.arange(0.0, tmax + w, w)
        total = 0.0 + 0j
        for a, b in zip(tedges[:-1], tedges[1:]):
            t = 0.5 * (a + b) + 0.5 * (b - a) * nodes
            wq = 0.5 * (b - a) * wts
            p = P + direction * t
            zlo, zhi = p * ylo, p * yhi
            rad = ive(s, zlo) * kve(s, zhi) \
                * np.exp(zlo.real - zhi + 1j * p * dx)
            total += np.sum(wq * rad)
        return front * direction * total

    pcut = 40.0 / min(y, yp) + c
    # the tail past +-pcut decays only like 1/p when y = yp, so it is
    # evaluated separately by contour rotation; kernel(-p) = conj(kernel(p))
    # maps the lower tail onto the upper one.
    if sector == "extended":
        lo, hi = -pcut, pcut
        tail = upper_tail(pcut)
        tail = tail + np.conj(tail)
    elif sector == 0:
        lo, hi = -c, pcut
        tail = upper_tail(pcut)
    else:
        lo, hi = -pcut, -c
        tail = np.conj(upper_tail(pcut))
    # Segment at 0 and +-c; the kernel has a |p|^{2s} non-analyticity at
    # p = 0, so panels are graded geometrically toward it.
    breaks = sorted({lo, hi} | {b for b in (0.0, -c, c) if lo < b < hi})
    width = min(2.0, 6.0 / (1.0 + abs(dx)))
    edges = []
    for a, b in zip(breaks[:-1], breaks[1:]):
        seg = [a]
        if a == 0.0:
            t = min(1e-10, b / 2)
            while t < min(b, 1.0):
                seg.append(t)
                t *= 2.0
        x = seg[-1]
        while x < b:
            x = min(x + width, b)
            seg.append(x)
        if b == 0.0:
            # mirror the geometric grading onto the negative side
            t = min(1e-10, -a / 2)
            geo = []
            while t < min(-a, 1.0):
                geo.append(-t)
                t *= 2.0
            seg = [a]
            x = a
            target = geo[-1] if geo else 0.0
            while x < target:
                x = min(x + width, target)
                seg.append(x)
            seg.extend(reversed(geo[:-1] if geo else []))
            seg.append(0.0)
        edges.extend(seg[:-1])
    edges.append(breaks[-1])
    edges = np.asarray(edges)
    total = tail
    for a, b in zip(edges[:-1], edges[1:]):
        p = 0.5 * (a + b) + 0.5 * (b - a) * nodes
        w = 0.5 * (b - a) * wts
        total += np.sum(w * kernel(p))
    return total * math.pi ** -3


def legendre_extended_oracle(coshd, mu):
    """G_extended = Q_{s-1/2}(cosh d) / (2 pi), s = sqrt(1/4 + mu^2)."""
    import mpmath as mp
    mp.mp.dps = 30
    s = math.sqrt(0.25 + mu * mu)
    q = mp.legenq(s - mp.mpf(1) / 2, 0, mp.mpf(coshd), type=3)
    return float(mp.re(q)) / (2.0 * math.pi)


@pytest.fixture(scope="session")
def sector_oracle():
    return resolvent_sector_oracle


@pytest.fixture(scope="session")
def extended_oracle():
    return legendre_extended_oracle
