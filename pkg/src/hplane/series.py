"""Truncated formal power series in momentum parameters over plane elements.

Exponentials like e^{ikx} live here as formal series truncated at a fixed
total order in the parameters; coefficients are exact algebra elements, so
every identity is checked with h symbolic.

The momentum functions are

    lplus(k)  = (e^{2hk} - 1) / 2h  = k + h k^2 + (2/3) h^2 k^3 + ...
    lminus(k) = (1 - e^{-2hk}) / 2h = k - h k^2 + (2/3) h^2 k^3 - ...

(lminus is normalized so that e1 e^{ikx} = i lplus y e^{ikx}
 = i lminus e^{ikx} y holds; it is the lplus series with h -> -h).
"""

from __future__ import annotations

from fractions import Fraction

from .calculus import e1
from .rewrite import Element
from .scalars import Scalar, ONE, I


class FormalSeries:
    """Map multi-degree -> Element, truncated at total order <= order."""

    __slots__ = ("algebra", "nparams", "order", "data")

    def __init__(self, algebra, nparams: int, order: int, data=None):
        self.algebra = algebra
        self.nparams = nparams
        self.order = order
        self.data = {}
        if data:
            for deg, elem in data.items():
                if sum(deg) <= order and not elem.is_zero():
                    self.data[deg] = elem

    @staticmethod
    def constant(algebra, nparams: int, order: int,
                 elem: Element) -> "FormalSeries":
        zero_deg = (0,) * nparams
        return FormalSeries(algebra, nparams, order, {zero_deg: elem})

    @staticmethod
    def one(algebra, nparams: int, order: int) -> "FormalSeries":
        return FormalSeries.constant(algebra, nparams, order, algebra.one())

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        data = dict(self.data)
        for deg, elem in other.data.items():
            s = data.get(deg)
            s = elem if s is None else s + elem
            if s.is_zero():
                data.pop(deg, None)
            else:
                data[deg] = s
        return FormalSeries(self.algebra, self.nparams, self.order, data)

    def __neg__(self):
        return FormalSeries(self.algebra, self.nparams, self.order,
                            {deg: -e for deg, e in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff: Scalar) -> "FormalSeries":
        return FormalSeries(self.algebra, self.nparams, self.order,
                            {deg: e.scale(coeff)
                             for deg, e in self.data.items()})

    def __mul__(self, other: "FormalSeries") -> "FormalSeries":
        out: dict = {}
        for da, ea in self.data.items():
            ta = sum(da)
            for db, eb in other.data.items():
                if ta + sum(db) > self.order:
                    continue
                deg = tuple(i + j for i, j in zip(da, db))
                prod = ea * eb
                prev = out.get(deg)
                out[deg] = prod if prev is None else prev + prod
        return FormalSeries(self.algebra, self.nparams, self.order, out)

    def is_zero(self) -> bool:
        return not self.data

    def coefficient(self, deg) -> Element:
        return self.data.get(tuple(deg), self.algebra.element())

    def map_coefficients(self, fn) -> "FormalSeries":
        return FormalSeries(self.algebra, self.nparams, self.order,
                            {deg: fn(e) for deg, e in self.data.items()})

    def first_nonzero(self):
        """(degree, coefficient) of the lowest nonzero term, or None."""
        for deg in sorted(self.data, key=lambda d: (sum(d), d)):
            return deg, self.data[deg]
        return None

    def render(self) -> str:
        if not self.data:
            return "0"
        parts = []
        for deg in sorted(self.data, key=lambda d: (sum(d), d)):
            mono = "*".join(f"k{i}^{n}" for i, n in enumerate(deg) if n)
            body = self.data[deg].render()
            parts.append(f"({body})*{mono}" if mono else f"({body})")
        return " + ".join(parts)

    __str__ = render


def exp_series(arg: FormalSeries) -> FormalSeries:
    """exp of a series with vanishing constant term, truncated."""
    zero_deg = (0,) * arg.nparams
    if zero_deg in arg.data:
        raise ValueError("exp_series needs a vanishing constant term")
    out = FormalSeries.one(arg.algebra, arg.nparams, arg.order)
    power = out
    fact = 1
    for n in range(1, arg.order + 1):
        power = power * arg
        if power.is_zero():
            break
        fact *= n
        out = out + power.scale(Scalar.rational(1, fact))
    return out


def _lpm_coeff(n: int, sign: int) -> Scalar:
    """Order-n Taylor coefficient of lplus (sign=+1) / lminus (sign=-1)."""
    c = Fraction(2 ** (n - 1)) / Fraction(_factorial(n))
    base = Scalar.h(n - 1) * Scalar.rational(c)
    return base if sign > 0 else base * Scalar.rational((-1) ** (n - 1))


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def lplus_series(algebra, order: int, nparams: int = 1,
                 param: int = 0) -> FormalSeries:
    return _momentum_series(algebra, order, nparams, param, +1)


def lminus_series(algebra, order: int, nparams: int = 1,
                  param: int = 0) -> FormalSeries:
    return _momentum_series(algebra, order, nparams, param, -1)


def _momentum_series(algebra, order, nparams, param, sign):
    data = {}
    for n in range(1, order + 1):
        deg = tuple(n if i == param else 0 for i in range(nparams))
        data[deg] = algebra.one().scale(_lpm_coeff(n, sign))
    return FormalSeries(algebra, nparams, order, data)


def scalar_exp_series(algebra, order: int, rate: Scalar, nparams: int = 1,
                      param: int = 0) -> FormalSeries:
    """exp(rate * k) as a scalar-coefficient series."""
    data = {(0,) * nparams: algebra.one()}
    acc = ONE
    for n in range(1, order + 1):
        acc = acc * rate * Scalar.rational(1, n)
        deg = tuple(n if i == param else 0 for i in range(nparams))
        data[deg] = algebra.one().scale(acc)
    return FormalSeries(algebra, nparams, order, data)


def exp_ikx(algebra, order: int, copy: int = 0, sign: int = 1,
            nparams: int = 1, param: int = 0) -> FormalSeries:
    """e^{(sign) i k x_copy} as a formal series."""
    x = algebra.gen("x", copy)
    deg = tuple(1 if i == param else 0 for i in range(nparams))
    arg = FormalSeries(algebra, nparams, order,
                       {deg: x.scale(I if sign > 0 else -I)})
    return exp_series(arg)


# ---------------------------------------------------------------------------
# generated checks


def check_appendix_A(order: int = 8) -> tuple[bool, str]:
    """e^{ikx} e^{-ikx'} = e^{i lplus(k) (x - x')} over two braided copies."""
    from .plane import PlaneAlgebra

    alg = PlaneAlgebra(2)
    lhs = exp_ikx(alg, order, copy=0, sign=+1) \
        * exp_ikx(alg, order, copy=1, sign=-1)
    dx = alg.gen("x", 0) - alg.gen("x", 1)
    arg = lplus_series(alg, order) \
        * FormalSeries.constant(alg, 1, order, dx.scale(I))
    resid = lhs - exp_series(arg)
    if resid.is_zero():
        return True, ""
    deg, coeff = resid.first_nonzero()
    return False, f"first residual at order {deg}: {coeff.render()}"


def check_comrel(order: int = 8, powers=(-2, -1, 1, 2)) -> tuple[bool, str]:
    """e^{ikx} y^m = e^{2hkm} y^m e^{ikx} for y-powers m."""
    from .plane import PlaneAlgebra

    alg = PlaneAlgebra(1)
    exp_x = exp_ikx(alg, order)
    for m in powers:
        ym = FormalSeries.constant(alg, 1, order, alg.gen("y", 0, m))
        rate = Scalar.h() * Scalar.rational(2 * m)
        rhs = scalar_exp_series(alg, order, rate) * ym * exp_x
        resid = exp_x * ym - rhs
        if not resid.is_zero():
            deg, coeff = resid.first_nonzero()
            return False, (f"m = {m}, first residual at order {deg}: "
                           f"{coeff.render()}")
    return True, ""


def check_e1_eigen(order: int = 8) -> tuple[bool, str]:
    """e1 e^{ikx} = i lplus(k) y e^{ikx} = i lminus(k) e^{ikx} y."""
    from .plane import PlaneAlgebra

    alg = PlaneAlgebra(1)
    exp_x = exp_ikx(alg, order)
    lhs = exp_x.map_coefficients(e1)
    y = FormalSeries.constant(alg, 1, order, alg.gen("y"))
    left = lplus_series(alg, order).scale(I) * y * exp_x
    right = lminus_series(alg, order).scale(I) * exp_x * y
    for name, rhs in (("lplus left-y", left), ("lminus right-y", right)):
        resid = lhs - rhs
        if not resid.is_zero():
            deg, coeff = resid.first_nonzero()
            return False, (f"{name}: first residual at order {deg}: "
                           f"{coeff.render()}")
    return True, ""


def check_exp_inverse(order: int = 8) -> tuple[bool, str]:
    """e^{ikx} e^{-ikx} = 1 up to truncation."""
    from .plane import PlaneAlgebra

    alg = PlaneAlgebra(1)
    prod = exp_ikx(alg, order) * exp_ikx(alg, order, sign=-1)
    resid = prod - FormalSeries.one(alg, 1, order)
    if resid.is_zero():
        return True, ""
    deg, coeff = resid.first_nonzero()
    return False, f"first residual at order {deg}: {coeff.render()}"
