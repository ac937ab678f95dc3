"""U_h(sl(2)) in the polynomial G-presentation, Fun_h(SL(2)), and the R-matrix.

U_h(sl(2)) relations (G invertible, [G, J+] = 0):
    [G, J3] = 1 - G^2
    [G, J-] = -(ih/2)(G J3 + J3 G)
    [J3, J-] = -1/2 [(G + G^-1) J- + J- (G + G^-1)]
    [J+, J-] = J3
    [J3, J+] = (G^-1 - G)/(ih)        (G-form of 2 h^-1 sin(hJ+))
PBW order: G^a (J-)^b (J3)^c (J+)^d.

Hopf structure:  dG = G x G,  dJ^j = J^j x G + G^-1 x J^j (j = -,3),
dJ+ = J+ x 1 + 1 x J+;  eps(X) = 0, eps(G) = 1;  S(X) = -G X G^-1,
S(G) = G^-1.  Star: (J^pm)* = -J^pm, (J3)* = -J3, G* = G.

Fun_h(SL(2)) on hermitian A,B,C,D:
    [A,B] = ih d - ih A^2      [A,C] = ih C^2       [A,D] = ih CD - ih CA
    [B,C] = ih CD + ih AC      [B,D] = ih D^2 - ih d [C,D] = -ih C^2
with quantum determinant  d = AD - CB - ih CD = DA - CB - ih CA.
"""

from __future__ import annotations

from .rewrite import Algebra, Element, expand_units
from .scalars import Scalar, ONE, IH

_2IH = IH * Scalar.rational(2)
_IH_HALF = IH * Scalar.rational(1, 2)
_INV_IH = IH.inverse()


class UhAlgebra(Algebra):
    symbols = ("G", "Jm", "J3", "Jp")
    _rank = {"G": 0, "Jm": 1, "J3": 2, "Jp": 3}

    def __init__(self):
        super().__init__()
        self.name = "Uh(sl2)"

    def key(self, symbol, copy):
        return (self._rank[symbol],)

    def invertible(self, symbol):
        return symbol == "G"

    def swap(self, a, b):
        sa, _, ea = a
        sb, _, eb = b
        G = ("G", 0, 1)
        Gi = ("G", 0, -1)
        Jm = ("Jm", 0, 1)
        J3 = ("J3", 0, 1)
        Jp = ("Jp", 0, 1)
        if sb == "G":
            if sa == "Jp":
                return None
            if sa == "J3":
                if eb == 1:   # J3 G = G J3 - 1 + G^2
                    return [(ONE, (G, J3)), (-ONE, ()), (ONE, (G, G))]
                # J3 G^-1 = G^-1 J3 - 1 + G^-2
                return [(ONE, (Gi, J3)), (-ONE, ()), (ONE, (Gi, Gi))]
            if sa == "Jm":
                if eb == 1:   # J- G = G J- + (ih/2)(G J3 + J3 G)
                    return [(ONE, (G, Jm)), (_IH_HALF, (G, J3)),
                            (_IH_HALF, (J3, G))]
                # J- G^-1 = G^-1 J- - (ih/2)(J3 G^-1 + G^-1 J3)
                return [(ONE, (Gi, Jm)), (-_IH_HALF, (J3, Gi)),
                        (-_IH_HALF, (Gi, J3))]
        if sa == "J3" and sb == "Jm":
            # J3 J- = J- J3 - 1/2 (G J- + G^-1 J- + J- G + J- G^-1)
            half = Scalar.rational(1, 2)
            return [(ONE, (Jm, J3)), (-half, (G, Jm)), (-half, (Gi, Jm)),
                    (-half, (Jm, G)), (-half, (Jm, Gi))]
        if sa == "Jp" and sb == "Jm":
            return [(ONE, (Jm, Jp)), (ONE, (J3,))]
        if sa == "Jp" and sb == "J3":
            # J+ J3 = J3 J+ - (G^-1 - G)/(ih)
            return [(ONE, (J3, Jp)), (-_INV_IH, (Gi,)), (_INV_IH, (G,))]
        raise AssertionError(f"unexpected pair {a} {b}")


UH = UhAlgebra()


def uh_relations() -> list[tuple[str, Element, Element]]:
    """Defining relations as (name, lhs, rhs) with lhs = commutator word."""
    G, Gi = UH.gen("G"), UH.gen("G", exp=-1)
    Jm, J3, Jp = UH.gen("Jm"), UH.gen("J3"), UH.gen("Jp")
    one = UH.one()
    return [
        ("[G,J3] = 1 - G^2", G * J3 - J3 * G, one - G * G),
        ("[G,J-] = -(ih/2)(G J3 + J3 G)", G * Jm - Jm * G,
         (G * J3 + J3 * G).scale(-_IH_HALF)),
        ("[J3,J-] = -(1/2)((G+G^-1)J- + J-(G+G^-1))", J3 * Jm - Jm * J3,
         ((G + Gi) * Jm + Jm * (G + Gi)).scale(Scalar.rational(-1, 2))),
        ("[J+,J-] = J3", Jp * Jm - Jm * Jp, J3),
        ("[J3,J+] = (G^-1 - G)/(ih)", J3 * Jp - Jp * J3,
         (Gi - G).scale(_INV_IH)),
        ("[G,J+] = 0", G * Jp - Jp * G, UH.element()),
        ("G G^-1 = 1", G * Gi, one),
    ]


# ---------------------------------------------------------------------------
# tensor square of U_h, for coproduct checks


class TensorElement:
    """Finite sum of (Uh monomial x Uh monomial) with Scalar coefficients."""

    __slots__ = ("data",)

    def __init__(self, data: dict | None = None):
        self.data = data or {}

    @staticmethod
    def of(left: Element, right: Element) -> "TensorElement":
        out = {}
        for ml, cl in left.data.items():
            for mr, cr in right.data.items():
                c = cl * cr
                if c:
                    out[(ml, mr)] = out.get((ml, mr), Scalar.zero()) + c
        return TensorElement({k: v for k, v in out.items() if v})

    def __add__(self, other):
        data = dict(self.data)
        for k, c in other.data.items():
            s = data.get(k, Scalar.zero()) + c
            if s:
                data[k] = s
            elif k in data:
                del data[k]
        return TensorElement(data)

    def __neg__(self):
        return TensorElement({k: -c for k, c in self.data.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff: Scalar):
        return TensorElement({k: coeff * c for k, c in self.data.items()})

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        out = {}
        for (la, ra), ca in self.data.items():
            for (lb, rb), cb in other.data.items():
                lprod = UH.mul_monomials(la, lb)
                rprod = UH.mul_monomials(ra, rb)
                cab = ca * cb
                for ml, cl in lprod.items():
                    for mr, cr in rprod.items():
                        c = cab * cl * cr
                        if c:
                            key = (ml, mr)
                            out[key] = out.get(key, Scalar.zero()) + c
        return TensorElement({k: v for k, v in out.items() if v})

    def is_zero(self):
        return not self.data

    def render(self):
        if not self.data:
            return "0"
        parts = []
        for (ml, mr), c in sorted(self.data.items()):
            l = Element(UH, {ml: ONE}).render()
            r = Element(UH, {mr: ONE}).render()
            parts.append(f"({c.render_compact()})*[{l} (x) {r}]")
        return " + ".join(parts)


def _delta_letter(letter) -> TensorElement:
    sym, _, exp = letter
    one = UH.one()
    if sym == "G":
        g = UH.gen("G", exp=exp)
        return TensorElement.of(g, g)
    gen = UH.gen(sym)
    if sym == "Jp":
        return TensorElement.of(gen, one) + TensorElement.of(one, gen)
    g, gi = UH.gen("G"), UH.gen("G", exp=-1)
    return TensorElement.of(gen, g) + TensorElement.of(gi, gen)


def coproduct(u: Element) -> TensorElement:
    out = TensorElement()
    for mono, coeff in u.data.items():
        prod = TensorElement.of(UH.one(), UH.one())
        for letter in expand_units(mono):
            prod = prod * _delta_letter(letter)
        out = out + prod.scale(coeff)
    return out


def counit(u: Element) -> Scalar:
    total = Scalar.zero()
    for mono, coeff in u.data.items():
        if all(sym == "G" for sym, _, _ in mono):
            total = total + coeff
    return total


def antipode(u: Element) -> Element:
    """S(G^a) = G^-a, S(X) = -G X G^-1; antihomomorphism."""
    g, gi = UH.gen("G"), UH.gen("G", exp=-1)
    out = UH.element()
    for mono, coeff in u.data.items():
        term = UH.one()
        for sym, _, exp in reversed(tuple(expand_units(mono))):
            if sym == "G":
                term = term * UH.gen("G", exp=-exp)
            else:
                term = term * (g * UH.gen(sym) * gi).scale(-ONE)
        out = out + term.scale(coeff)
    return out


def uh_star(u: Element) -> Element:
    """(J^pm)* = -J^pm, (J3)* = -J3, G* = G; antilinear antihomomorphism."""
    out = UH.element()
    for mono, coeff in u.data.items():
        units = tuple(reversed(tuple(expand_units(mono))))
        sign = sum(1 for s, _, _ in units if s != "G")
        c = coeff.conj() if sign % 2 == 0 else -coeff.conj()
        out = out + UH.from_word(units, c)
    return out


def multiply_tensor_legs(t: TensorElement) -> Element:
    """Multiplication map m: u (x) v -> uv."""
    out = UH.element()
    for (ml, mr), c in t.data.items():
        out = out + (Element(UH, {ml: ONE}) * Element(UH, {mr: ONE})).scale(c)
    return out


def verify_hopf_axioms() -> list[tuple[str, bool, str]]:
    """Coproduct respects relations; counit/antipode axioms on generators."""
    checks = []
    for name, lhs, rhs in uh_relations():
        residual = coproduct(lhs) - coproduct(rhs)
        checks.append((f"coproduct respects {name}", residual.is_zero(),
                       residual.render()))
    gens = {"G": UH.gen("G"), "G^-1": UH.gen("G", exp=-1),
            "J+": UH.gen("Jp"), "J3": UH.gen("J3"), "J-": UH.gen("Jm")}
    for label, u in gens.items():
        d = coproduct(u)
        # counit axioms (eps (x) id) d(u) = u = (id (x) eps) d(u)
        left = UH.element()
        right = UH.element()
        for (ml, mr), c in d.data.items():
            left = left + Element(UH, {mr: ONE}).scale(
                c * counit(Element(UH, {ml: ONE})))
            right = right + Element(UH, {ml: ONE}).scale(
                c * counit(Element(UH, {mr: ONE})))
        ok = (left - u).is_zero() and (right - u).is_zero()
        checks.append((f"counit axiom on {label}", ok, (left - u).render()))
        # antipode axiom m(S (x) id) d(u) = eps(u) 1
        s_id = UH.element()
        for (ml, mr), c in d.data.items():
            s_id = s_id + (antipode(Element(UH, {ml: ONE}))
                           * Element(UH, {mr: ONE})).scale(c)
        target = UH.one().scale(counit(u))
        checks.append((f"antipode axiom on {label}", (s_id - target).is_zero(),
                       (s_id - target).render()))
        # star-coproduct compatibility d(u*) = (* x *) d(u)
        star_d = TensorElement()
        for (ml, mr), c in d.data.items():
            star_d = star_d + TensorElement.of(
                uh_star(Element(UH, {ml: ONE})),
                uh_star(Element(UH, {mr: ONE}))).scale(c.conj())
        resid = coproduct(uh_star(u)) - star_d
        checks.append((f"star/coproduct compatibility on {label}",
                       resid.is_zero(), resid.render()))
    return checks


# ---------------------------------------------------------------------------
# Fun_h(SL(2))


class FunAlgebra(Algebra):
    symbols = ("A", "B", "C", "D")
    _rank = {"A": 0, "B": 1, "C": 2, "D": 3}

    def __init__(self):
        super().__init__()
        self.name = "Fun_h(SL2)"

    def key(self, symbol, copy):
        return (self._rank[symbol],)

    def swap(self, a, b):
        A, B, C, D = (("A", 0, 1), ("B", 0, 1), ("C", 0, 1), ("D", 0, 1))
        pair = (a[0], b[0])
        ih = IH
        h2 = IH * IH  # -h^2
        if pair == ("B", "A"):
            # BA = AB + ih A^2 + h^2 AC - ih AD + ih BC
            return [(ONE, (A, B)), (ih, (A, A)), (-h2, (A, C)),
                    (-ih, (A, D)), (ih, (B, C))]
        if pair == ("C", "A"):
            return [(ONE, (A, C)), (-ih, (C, C))]
        if pair == ("D", "A"):
            # DA = AD + ih AC - ih CD + h^2 C^2
            return [(ONE, (A, D)), (ih, (A, C)), (-ih, (C, D)), (-h2, (C, C))]
        if pair == ("C", "B"):
            return [(ONE, (B, C)), (-ih, (A, C)), (-ih, (C, D))]
        if pair == ("D", "B"):
            # DB = BD + ih AD - ih BC - h^2 AC - ih D^2
            return [(ONE, (B, D)), (ih, (A, D)), (-ih, (B, C)),
                    (h2, (A, C)), (-ih, (D, D))]
        if pair == ("D", "C"):
            return [(ONE, (C, D)), (ih, (C, C))]
        raise AssertionError(f"unexpected pair {a} {b}")


FUN = FunAlgebra()


def fun_relations() -> list[tuple[str, Element, Element]]:
    A, B, C, D = (FUN.gen(s) for s in "ABCD")
    det = quantum_determinant()
    return [
        ("[A,B] = ih d - ih A^2", A * B - B * A,
         det.scale(IH) - (A * A).scale(IH)),
        ("[A,C] = ih C^2", A * C - C * A, (C * C).scale(IH)),
        ("[A,D] = ih CD - ih CA", A * D - D * A,
         (C * D).scale(IH) - (C * A).scale(IH)),
        ("[B,C] = ih CD + ih AC", B * C - C * B,
         (C * D).scale(IH) + (A * C).scale(IH)),
        ("[B,D] = ih D^2 - ih d", B * D - D * B,
         (D * D).scale(IH) - det.scale(IH)),
        ("[C,D] = -ih C^2", C * D - D * C, (C * C).scale(-IH)),
    ]


def quantum_determinant() -> Element:
    A, B, C, D = (FUN.gen(s) for s in "ABCD")
    return A * D - C * B - (C * D).scale(IH)


def quantum_determinant_alt() -> Element:
    A, B, C, D = (FUN.gen(s) for s in "ABCD")
    return D * A - C * B - (C * A).scale(IH)


def det_central_check() -> bool:
    det = quantum_determinant()
    if not (det - quantum_determinant_alt()).is_zero():
        return False
    return all((det * FUN.gen(s) - FUN.gen(s) * det).is_zero() for s in "ABCD")


def fun_star_consistent(samples) -> bool:
    """A,B,C,D hermitian: star(normal form) == normal form(reversed word)."""
    for word in samples:
        lhs = FUN.from_word(word)
        # star of the element: reverse each monomial, conjugate coefficients
        starred = FUN.element()
        for mono, coeff in lhs.data.items():
            starred = starred + FUN.from_word(
                tuple(reversed(tuple(expand_units(mono)))), coeff.conj())
        rhs = FUN.from_word(tuple(reversed(word)))
        if not (starred - rhs).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# R-matrix


def rmatrix() -> list[list[Scalar]]:
    """hat-R in the basis (11, 12, 21, 22)."""
    z, o = Scalar.zero(), ONE
    ih = IH
    mh2 = IH * IH  # -h^2
    return [
        [o, -ih, ih, mh2],
        [z, z, o, ih],
        [z, o, z, -ih],
        [z, z, z, o],
    ]


def mat_mul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Scalar.zero())
             for j in range(n)] for i in range(n)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_is_identity(a):
    for i, row in enumerate(a):
        for j, v in enumerate(row):
            if v != (ONE if i == j else Scalar.zero()):
                return False
    return True


def mat_is_zero(a):
    return all(not v for row in a for v in row)


def _kron(a, b):
    na, nb = len(a), len(b)
    out = [[Scalar.zero()] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            for k in range(nb):
                for l in range(nb):
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l]
    return out


def _identity(n):
    return [[ONE if i == j else Scalar.zero() for j in range(n)]
            for i in range(n)]


def rmatrix_checks() -> list[tuple[str, bool]]:
    R = rmatrix()
    checks = [("R^2 = 1", mat_is_identity(mat_mul(R, R)))]
    R12 = _kron(R, _identity(2))
    R23 = _kron(_identity(2), R)
    lhs = mat_mul(mat_mul(R12, R23), R12)
    rhs = mat_mul(mat_mul(R23, R12), R23)
    checks.append(("braid equation R12 R23 R12 = R23 R12 R23",
                   mat_is_zero(mat_sub(lhs, rhs))))
    return checks


# ---------------------------------------------------------------------------
# (r, s) coordinates, auxiliary braided (u, v) copies, and the coaction


class RSAlgebra(Algebra):
    """[r, s] = ih s^2 with s invertible; one copy."""

    symbols = ("r", "s")

    def __init__(self):
        super().__init__()
        self.name = "rs"

    def key(self, symbol, copy):
        return (0 if symbol == "r" else 1,)

    def invertible(self, symbol):
        return symbol == "s"

    def swap(self, a, b):
        # s^e r = r s^e - ih e s^(e+1)
        sa, _, ea = a
        assert sa == "s" and b[0] == "r"
        s_next = [("s", 0, 1)] * (ea + 1) if ea + 1 > 0 else \
                 [("s", 0, -1)] * -(ea + 1)
        return [(ONE, (b, a)),
                (-IH * Scalar.rational(ea), tuple(s_next))]


class UVAlgebra(Algebra):
    """Two braided (u, v) copies: [u_i, v_i] = ih v_i^2 plus cross relations
    [u1,u2] = ih u1 v2 - ih v1 u2 + h^2 v1 v2, [u1,v2] = ih v1 v2,
    [v1,u2] = -ih v1 v2, [v1,v2] = 0."""

    symbols = ("u", "v")

    def __init__(self):
        super().__init__()
        self.ncopies = 2
        self.name = "uv"

    def key(self, symbol, copy):
        return (copy, 0 if symbol == "u" else 1)

    def invertible(self, symbol):
        return symbol == "v"

    def swap(self, a, b):
        sa, ca, ea = a
        sb, cb, eb = b
        if ca == cb:
            # v^e u = u v^e - ih e v^(e+1)
            nxt = [("v", ca, 1)] * (ea + 1) if ea + 1 > 0 else \
                  [("v", ca, -1)] * -(ea + 1)
            return [(ONE, (b, a)), (-IH * Scalar.rational(ea), tuple(nxt))]
        u1, v1 = ("u", 0, 1), ("v", 0, 1)
        u2, v2 = ("u", 1, 1), ("v", 1, 1)
        v1i, v2i = ("v", 0, -1), ("v", 1, -1)
        mh2 = IH * IH  # -h^2
        if sa == "u" and sb == "u":
            # u2 u1 = u1 u2 - ih u1 v2 + ih v1 u2 - h^2 v1 v2
            return [(ONE, (u1, u2)), (-IH, (u1, v2)), (IH, (v1, u2)),
                    (mh2, (v1, v2))]
        if sa == "u" and sb == "v":
            if eb == 1:   # u2 v1 = v1 u2 + ih v1 v2
                return [(ONE, (v1, u2)), (IH, (v1, v2))]
            # u2 v1^-1 = v1^-1 u2 - ih v1^-1 v2
            return [(ONE, (v1i, u2)), (-IH, (v1i, v2))]
        if sa == "v" and sb == "u":
            if ea == 1:   # v2 u1 = u1 v2 - ih v1 v2
                return [(ONE, (u1, v2)), (-IH, (v1, v2))]
            # v2^-1 u1 = u1 v2^-1 + ih v1 v2^-1
            return [(ONE, (u1, v2i)), (IH, (v1, v2i))]
        return None  # v with v


class MixedFunRS(Algebra):
    """Fun_h(SL(2)) tensor the (r,s) plane; Fun letters commute with r,s
    and are ordered to the left."""

    symbols = ("A", "B", "C", "D", "r", "s")

    def __init__(self):
        super().__init__()
        self.name = "Fun(x)rs"
        self._fun = FUN
        self._rs = RSAlgebra()

    def key(self, symbol, copy):
        if symbol in "ABCD":
            return (0, FunAlgebra._rank[symbol])
        return (1, 0 if symbol == "r" else 1)

    def invertible(self, symbol):
        return symbol == "s"

    def swap(self, a, b):
        in_fun_a, in_fun_b = a[0] in "ABCD", b[0] in "ABCD"
        if in_fun_a and in_fun_b:
            return self._fun.swap(a, b)
        if not in_fun_a and not in_fun_b:
            return self._rs.swap(a, b)
        return None  # cross-group letters commute


def coaction_check_rs() -> list[tuple[str, bool, str]]:
    """(r,s) -> (A B; C D) . (r,s) preserves [r,s] = ih s^2; plus the x,y and
    z_1,z_2 consistency checks."""
    checks = []
    mixed = MixedFunRS()
    A, B, C, D = (mixed.gen(s) for s in "ABCD")
    r, s = mixed.gen("r"), mixed.gen("s")
    dr = A * r + B * s
    ds = C * r + D * s
    resid = dr * ds - ds * dr - (ds * ds).scale(IH)
    checks.append(("[dr, ds] - ih (ds)^2 = 0 (coaction preserves rs relation)",
                   resid.is_zero(), resid.render()))

    rs = RSAlgebra()
    x = rs.gen("r") * rs.gen("s", exp=-1) + rs.one().scale(_IH_HALF)
    y = rs.gen("s", exp=-2)
    resid2 = x * y - y * x + y.scale(_2IH)
    checks.append(("x = r s^-1 + ih/2, y = s^-2 satisfy [x,y] = -2ih y",
                   resid2.is_zero(), resid2.render()))

    uv = UVAlgebra()
    z1 = uv.gen("u", 0) * uv.gen("v", 0, -1)
    z2 = uv.gen("u", 1) * uv.gen("v", 1, -1)
    resid3 = z1 * z2 - z2 * z1 - (z1 - z2).scale(_2IH)
    checks.append(("z_i = u_i v_i^-1 satisfy [z1,z2] = 2ih (z1 - z2)",
                   resid3.is_zero(), resid3.render()))
    return checks


def calculus_relation_checks() -> list[tuple[str, bool]]:
    """The (r,s,xi,eta) first-order calculus relations versus R-contraction.

    Basis order (r, s) = (r^1, r^2), (xi, eta) = (xi^1, xi^2).  Relations are
    represented as coefficient dictionaries over the words ab with a in
    {r,s}, b in {xi,eta} (for r xi = R xi r) and over xi-words (for
    xi xi = -R xi xi, reduced modulo xi eta = -eta xi, eta^2 = 0).
    """
    R = rmatrix()
    checks = []

    # explicit commutators from the calculus, as dicts word -> Scalar
    # words are pairs (first letter index, second letter index) with
    # letters 0 = r/xi, 1 = s/eta; mixed words stored as (xi_idx, r_idx)
    # [r, xi] = -ih xi s + ih eta r - h^2 eta s
    # [r, eta] = ih eta s ; [s, xi] = -ih eta s ; [s, eta] = 0
    explicit = {
        (0, 0): {(0, 1): -IH, (1, 0): IH, (1, 1): IH * IH},
        (0, 1): {(1, 1): IH},
        (1, 0): {(1, 1): -IH},
        (1, 1): {},
    }
    for a in (0, 1):
        for b in (0, 1):
            # r^a xi^b - xi^b r^a from R: r^a xi^b = R^{ab}_{cd} xi^c r^d
            got = {}
            row = 2 * a + b
            for c in (0, 1):
                for d in (0, 1):
                    coeff = R[row][2 * c + d]
                    if coeff:
                        got[(c, d)] = got.get((c, d), Scalar.zero()) + coeff
            # subtract xi^b r^a
            got[(b, a)] = got.get((b, a), Scalar.zero()) - ONE
            got = {k: v for k, v in got.items() if v}
            ok = got == explicit[(a, b)]
            names = ("r", "s"), ("xi", "eta")
            checks.append((f"[{names[0][a]}, {names[1][b]}] matches "
                           f"R-contraction", ok))

    # xi^a xi^b + R^{ab}_{cd} xi^c xi^d reduces to 0 modulo
    # {xi xi = ih xi eta, eta xi = -xi eta, eta eta = 0}
    def reduce_xi(word_coeffs):
        # normal form over the single basis word (xi, eta)
        total = Scalar.zero()
        for (c, d), coeff in word_coeffs.items():
            if (c, d) == (0, 1):
                total = total + coeff
            elif (c, d) == (1, 0):
                total = total - coeff
            elif (c, d) == (0, 0):
                total = total + coeff * IH
            # (1,1) -> 0
        return total

    for a in (0, 1):
        for b in (0, 1):
            row = 2 * a + b
            expr = {(a, b): ONE}
            for c in (0, 1):
                for d in (0, 1):
                    coeff = R[row][2 * c + d]
                    if coeff:
                        expr[(c, d)] = expr.get((c, d), Scalar.zero()) + coeff
            names = ("xi", "eta")
            checks.append((f"{names[a]} {names[b]} = -R-contraction "
                           f"(quadratic form relations)",
                           not reduce_xi(expr)))

    # r^a r^b = R^{ab}_{cd} r^c r^d reduces to [r,s] = ih s^2
    rs = RSAlgebra()
    rgen = (rs.gen("r"), rs.gen("s"))
    for a in (0, 1):
        for b in (0, 1):
            row = 2 * a + b
            lhs = rgen[a] * rgen[b]
            rhs = rs.element()
            for c in (0, 1):
                for d in (0, 1):
                    coeff = R[row][2 * c + d]
                    if coeff:
                        rhs = rhs + (rgen[c] * rgen[d]).scale(coeff)
            names = ("r", "s")
            checks.append((f"{names[a]} {names[b]} = R-contraction in rs "
                           f"algebra", (lhs - rhs).is_zero()))
    return checks
