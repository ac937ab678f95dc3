"""Verification suites with a uniform machine-readable report format.

Every check is a dict {suite, check, status, max_error, witness?}; status is
"pass" or "fail", max_error is 0.0 for exact (symbolic) checks and the
observed relative deviation for numeric ones, witness is present only on
failure.  Reports are deterministic for a fixed seed: no timestamps, stable
iteration order, repr-based float formatting.
"""

from __future__ import annotations

import csv
import io
import json
import random

from .rewrite import Element, random_word
from .scalars import Scalar, ONE, IH
from . import calculus, crossprod, hopf, plane, series, state


def make_check(suite: str, name: str, ok: bool, max_error: float = 0.0,
               witness: str | None = None) -> dict:
    out = {"suite": suite, "check": name,
           "status": "pass" if ok else "fail",
           "max_error": float(max_error)}
    if not ok and witness:
        out["witness"] = witness
    return out


def _exact(suite, name, resid: Element) -> dict:
    ok = resid.is_zero()
    return make_check(suite, name, ok, witness=None if ok else resid.render())


# ---------------------------------------------------------------------------
# suite runners


def run_algebra(seed: int = 0, nwords: int = 1000) -> list[dict]:
    """Plane-algebra identities plus two-strategy confluence sampling."""
    checks = []
    alg = plane.PlaneAlgebra(2)
    x, y = alg.gen("x"), alg.gen("y")
    checks.append(_exact("algebra", "[x,y] = -2ih y",
                         x * y - y * x + y.scale(IH * Scalar.rational(2))))
    checks.append(_exact("algebra", "y y^-1 = 1",
                         alg.gen("y") * alg.gen("y", exp=-1) - alg.one()))
    Q = plane.distance_invariant(alg)
    checks.append(make_check("algebra", "distance invariant is central",
                             plane.is_central(Q)))
    f = x * y + alg.gen("y", 0, -1).scale(IH)
    checks.append(_exact("algebra", "star is an involution",
                         plane.star(plane.star(f)) - f))
    rendered = Q.render()
    checks.append(_exact("algebra", "render/parse round trip",
                         plane.parse_element(alg, rendered) - Q))

    rng = random.Random(seed)
    plans = [
        ("plane, 3 copies", plane.PlaneAlgebra(3), ("x", "y"),
         frozenset(("y",)), 7, 2 * nwords // 5),
        ("Uh(sl2)", hopf.UhAlgebra(), ("G", "Jm", "J3", "Jp"),
         frozenset(("G",)), 5, 3 * nwords // 10),
        ("cross product, 2 copies", crossprod.CrossAlgebra(2),
         ("x", "y", "G", "Jm", "J3", "Jp"), frozenset(("y", "G")), 5,
         nwords - 2 * nwords // 5 - 3 * nwords // 10),
    ]
    uh_syms = frozenset(hopf.UhAlgebra.symbols)
    for label, algebra, syms, inv, max_len, count in plans:
        ncopies = getattr(algebra, "ncopies", 1)
        bad = None
        for _ in range(count):
            word = random_word(rng, syms, max_len, ncopies, inv)
            # U_h letters live in a single copy of the cross product
            word = tuple((s, 0 if s in uh_syms else c, e)
                         for s, c, e in word)
            left = algebra.normal_form(word, "left")
            right = algebra.normal_form(word, "right")
            if left != right:
                bad = word
                break
        checks.append(make_check(
            "algebra", f"confluence, {count} random words ({label})",
            bad is None, witness=None if bad is None else repr(bad)))
    return checks


def run_hopf() -> list[dict]:
    checks = []
    for name, ok, witness in hopf.verify_hopf_axioms():
        checks.append(make_check("hopf", name, ok, witness=witness or None))
    for name, lhs, rhs in hopf.fun_relations():
        checks.append(_exact("hopf", f"Fun relation {name}", lhs - rhs))
    checks.append(make_check("hopf", "quantum determinant central",
                             hopf.det_central_check()))
    checks.append(_exact("hopf", "determinant forms agree",
                         hopf.quantum_determinant()
                         - hopf.quantum_determinant_alt()))
    for name, ok in hopf.rmatrix_checks():
        checks.append(make_check("hopf", name, ok))
    for name, ok, witness in hopf.coaction_check_rs():
        checks.append(make_check("hopf", name, ok, witness=witness or None))
    for name, ok in hopf.calculus_relation_checks():
        checks.append(make_check("hopf", name, ok))
    return checks


def run_crossprod(seed: int = 0, corrupt: bool = False) -> list[dict]:
    checks = []
    cross1 = (crossprod.CorruptedCrossAlgebra(1) if corrupt
              else crossprod.CrossAlgebra(1))
    cross2 = (crossprod.CorruptedCrossAlgebra(2) if corrupt
              else crossprod.CrossAlgebra(2))
    for name, ok, witness in crossprod.recombination_check(cross1):
        checks.append(make_check("crossprod", name, ok,
                                 witness=witness or None))
    for name, ok in crossprod.relation_annihilation_check(cross=cross2):
        checks.append(make_check("crossprod", name, ok))
    rng = random.Random(seed)
    samples = [(random_word(rng, ("x", "y"), 3, 1, frozenset(("y",))),
                random_word(rng, ("x", "y"), 3, 1, frozenset(("y",))))
               for _ in range(8)]
    for name, ok in crossprod.verify_module_algebra(samples):
        checks.append(make_check("crossprod", name, ok))
    if not corrupt:
        for name, ok, witness in crossprod.invariance_suite():
            checks.append(make_check("crossprod", name, ok,
                                     witness=witness or None))
    return checks


def run_series(order: int = 8) -> list[dict]:
    cases = [
        (f"plane-wave exchange identity to order {order}",
         series.check_appendix_A(order)),
        (f"plane-wave / y-power commutation to order {order}",
         series.check_comrel(order)),
        (f"e1 eigen-relation on plane waves to order {order}",
         series.check_e1_eigen(order)),
        (f"plane-wave inverse to order {order}",
         series.check_exp_inverse(order)),
    ]
    return [make_check("series", name, ok, witness=msg or None)
            for name, (ok, msg) in cases]


def run_calculus(max_degree: int = 5) -> list[dict]:
    checks = []
    alg = plane.PlaneAlgebra(1)
    worst = None
    for a in range(max_degree + 1):
        for b in range(-max_degree, max_degree + 1):
            if a + abs(b) > max_degree or (a == 0 and b == 0):
                continue
            f = alg.from_word((("x", 0, a),) * (a > 0)
                              + ((("y", 0, b),) if b else ()))
            resid = calculus.laplacian_h(f) - calculus.laplacian_from_forms(f)
            if not resid.is_zero():
                worst = (a, b, resid.render())
                break
    checks.append(make_check(
        "calculus",
        f"Laplacian = -(delta d + d delta) to degree {max_degree}",
        worst is None,
        witness=None if worst is None else
        f"x^{worst[0]} y^{worst[1]}: {worst[2]}"))
    for m in range(-3, 4):
        if m == 0:
            continue
        ym = alg.gen("y", 0, m)
        checks.append(_exact(
            "calculus", f"Laplacian(y^{m}) = ({m} - {m}^2) y^{m}",
            calculus.laplacian_h(ym) - ym.scale(Scalar.rational(m - m * m))))
    x, y = alg.gen("x"), alg.gen("y")
    for label, f in (("x^2 y", x * x * y), ("x y^-1", x * alg.gen("y", 0, -1)),
                     ("x + y^2", x + y * y)):
        dd = calculus.d(calculus.d(calculus.Form.function(f)))
        checks.append(make_check("calculus", f"d^2 = 0 on {label}",
                                 dd.is_zero(),
                                 witness=None if dd.is_zero() else dd.render()))
        form = calculus.Form.one_form(f, y * f)
        dd1 = calculus.d(calculus.d(form))
        checks.append(make_check("calculus", f"d^2 = 0 on one-form from {label}",
                                 dd1.is_zero(),
                                 witness=None if dd1.is_zero()
                                 else dd1.render()))
    hh = calculus.hodge(calculus.hodge(calculus.Form.one_form(x, y)))
    resid = hh - calculus.Form.one_form(-x, -y)
    checks.append(make_check("calculus", "hodge^2 = -1 on one-forms",
                             resid.is_zero(),
                             witness=None if resid.is_zero()
                             else resid.render()))
    return checks


def run_state(seed: int = 0, h_values=(0.05, 0.1, 0.5),
              tol_invariance: float = 1e-9, tol_adjoint: float = 1e-8,
              nsamples: int = 20) -> list[dict]:
    checks = []
    for h in h_values:
        rng = random.Random(seed)
        devs = state.verify_invariance_conditions(rng, h, nsamples)
        worst = max(devs, key=lambda item: item[1])
        checks.append(make_check(
            "state", f"invariance conditions, {nsamples} samples, h={h}",
            worst[1] <= tol_invariance, worst[1],
            witness=None if worst[1] <= tol_invariance else worst[0]))
        rng = random.Random(seed + 1)
        devs = state.stokes_check(rng, h)
        worst = max(devs, key=lambda item: item[1])
        checks.append(make_check(
            "state", f"Stokes check, h={h}", worst[1] <= tol_invariance,
            worst[1], witness=None if worst[1] <= tol_invariance else worst[0]))
        rng = random.Random(seed + 2)
        sectors = (0, 1) if h >= 0.3 else (0,)
        devs = state.verify_action_symmetry(rng, h, sectors=sectors)
        worst = max(devs, key=lambda item: item[1])
        checks.append(make_check(
            "state", f"action adjoint symmetry, h={h}",
            worst[1] <= tol_adjoint, worst[1],
            witness=None if worst[1] <= tol_adjoint else worst[0]))
    rng = random.Random(seed + 3)
    f = state.random_test_function(rng)
    g = state.random_test_function(rng)
    for sector in (0, 1):
        h = 0.5
        lhs = state.inner_product(f, g, sector, h)
        rhs = state.inner_product(g, f, sector, h)
        dev = abs(lhs - rhs.conjugate()) / max(abs(lhs), 1e-30)
        checks.append(make_check(
            "state", f"hermiticity of the sector-{sector} inner product",
            dev <= 1e-10, dev))
        norm = state.inner_product(f, f, sector, h)
        ok = norm.real > 0 and abs(norm.imag) <= 1e-10 * norm.real
        checks.append(make_check(
            "state", f"positivity of the sector-{sector} inner product", ok,
            witness=None if ok else repr(norm)))
    return checks


SUITES = {
    "algebra": lambda cfg: run_algebra(cfg.get("seed", 0)),
    "hopf": lambda cfg: run_hopf(),
    "crossprod": lambda cfg: run_crossprod(cfg.get("seed", 0),
                                           cfg.get("corrupt", False)),
    "series": lambda cfg: run_series(cfg.get("order", 8)),
    "calculus": lambda cfg: run_calculus(),
    "state": lambda cfg: run_state(cfg.get("seed", 0)),
}


def run_suite(name: str, cfg: dict | None = None) -> list[dict]:
    cfg = cfg or {}
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](cfg))
        return out
    return SUITES[name](cfg)


# ---------------------------------------------------------------------------
# serialization


def render_json(checks: list[dict]) -> str:
    return json.dumps(checks, indent=2, sort_keys=True) + "\n"


def render_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore",
                            lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: row.get(k, "") for k in columns})
    return buf.getvalue()


def render_text(checks: list[dict]) -> str:
    lines = []
    for c in checks:
        tag = "PASS" if c["status"] == "pass" else "FAIL"
        line = f"[{tag}] {c['suite']}: {c['check']}"
        if c["max_error"]:
            line += f"  (max_error = {c['max_error']:.3e})"
        if c.get("witness"):
            line += f"\n       witness: {c['witness']}"
        lines.append(line)
    npass = sum(1 for c in checks if c["status"] == "pass")
    lines.append(f"{npass}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"


REPORT_COLUMNS = ["suite", "check", "status", "max_error", "witness"]
PROPAGATOR_COLUMNS = ["sector", "dx", "y", "yprime", "mu", "h", "value",
                      "est_error"]


def render_report(checks: list[dict], fmt: str) -> str:
    if fmt == "json":
        return render_json(checks)
    if fmt == "csv":
        return render_csv(checks, REPORT_COLUMNS)
    return render_text(checks)
