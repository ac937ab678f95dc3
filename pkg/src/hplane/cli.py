"""Command-line entry point.

Subcommands: verify, propagator, invariance, modes, integrate.  Exit codes:
0 = success / all checks pass, 1 = a verification check failed or a
computation failed, 2 = usage or configuration error.  A flat key=value
config file can supply defaults; explicit flags win.  With --figures (and
--out), numeric subcommands also render a PNG next to the delimited output.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import replace

from . import report


def _read_config(path: str) -> dict:
    cfg = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.strip()!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            cfg[key.replace("-", "_")] = value
    return cfg


def _apply_config(args: argparse.Namespace, casts: dict) -> None:
    if not getattr(args, "config", None):
        return
    cfg = _read_config(args.config)
    for key, value in cfg.items():
        if key not in casts:
            raise ValueError(f"unknown config key: {key}")
        if getattr(args, key, None) is None:
            setattr(args, key, casts[key](value))


def _fill(args, **defaults) -> None:
    for key, value in defaults.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)


def _bool(text: str) -> bool:
    return text.strip().lower() in ("1", "true", "yes", "on")


def _floats(text: str) -> list[float]:
    return [float(part) for part in text.split(",")]


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _figure_path(out: str) -> str:
    stem = out.rsplit(".", 1)[0] if "." in out.rsplit("/", 1)[-1] else out
    return stem + ".png"


def _save_figure(fig, out: str) -> str:
    path = _figure_path(out)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    return path


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    casts = {"seed": int, "order": int, "h": float, "tol": float,
             "format": str, "out": str, "corrupt": _bool, "suite": str}
    _apply_config(args, casts)
    _fill(args, seed=0, order=8, format="text", corrupt=False)
    cfg = {"seed": args.seed, "order": args.order, "corrupt": args.corrupt}
    if args.tol is not None:
        cfg["tol"] = args.tol
    checks = report.run_suite(args.suite, cfg)
    _emit(report.render_report(checks, args.format), args.out)
    return 0 if all(c["status"] == "pass" for c in checks) else 1


def _propagator_rows(sectors, dxs, ys, yps, mu, h):
    from .spectral import PropagatorQuery, propagator_all

    rows = []
    for dx in dxs:
        for y in ys:
            for yp in yps:
                res = propagator_all(PropagatorQuery(dx=dx, y=y, yp=yp,
                                                     mu=mu, h=h))
                for sector in sectors:
                    r = res[sector]
                    rows.append({"sector": sector, "dx": dx, "y": y,
                                 "yprime": yp, "mu": mu, "h": h,
                                 "value": r.value, "est_error": r.est_error,
                                 "coshd": r.coshd})
    return rows


def cmd_propagator(args) -> int:
    casts = {"dx": _floats, "y": _floats, "yprime": _floats, "mu": float,
             "h": float, "sector": str, "format": str, "out": str,
             "figures": _bool, "tol": float}
    _apply_config(args, casts)
    _fill(args, dx=[1.0], y=[1.0], yprime=[1.0], mu=1.0, h=0.1,
          sector="extended", format="csv", figures=False)
    sectors = ([0, 1, "extended"] if args.sector == "all"
               else [args.sector if args.sector == "extended"
                     else int(args.sector)])
    try:
        rows = _propagator_rows(sectors, args.dx, args.y, args.yprime,
                                args.mu, args.h)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = report.render_json(rows)
    else:
        payload = report.render_csv(rows, report.PROPAGATOR_COLUMNS)
    _emit(payload, args.out)
    if args.figures and args.out:
        plt = _pyplot()
        fig, ax = plt.subplots()
        for sector in sectors:
            pts = sorted((r["coshd"], r["value"]) for r in rows
                         if r["sector"] == sector)
            ax.plot([p[0] for p in pts], [p[1] for p in pts], "o-",
                    label=f"sector {sector}")
        ax.set_xlabel("cosh d")
        ax.set_ylabel("propagator")
        ax.legend()
        print(_save_figure(fig, args.out), file=sys.stderr)
    return 0


def cmd_invariance(args) -> int:
    from .spectral import equal_distance_queries, propagator, build_plan

    casts = {"coshd": float, "pairs": int, "mu": float, "h": float,
             "sector": str, "format": str, "out": str, "figures": _bool,
             "tol": float}
    _apply_config(args, casts)
    _fill(args, coshd=1.5, pairs=5, mu=1.0, h=0.1, sector="extended",
          format="csv", figures=False)
    sector = args.sector if args.sector == "extended" else int(args.sector)
    rows = []
    plan = None
    try:
        for q in equal_distance_queries(args.coshd, args.pairs, args.mu,
                                        args.h):
            if plan is None:
                plan = build_plan(q)
            res = propagator(replace(q, sector=sector), plan)
            rows.append({"sector": sector, "dx": q.dx, "y": q.y,
                         "yprime": q.yp, "mu": args.mu, "h": args.h,
                         "value": res.value, "est_error": res.est_error})
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    values = [r["value"] for r in rows]
    spread = (max(values) - min(values)) / max(abs(v) for v in values)
    for r in rows:
        r["spread"] = spread
    if args.format == "json":
        payload = report.render_json(rows)
    else:
        payload = report.render_csv(rows, report.PROPAGATOR_COLUMNS
                                    + ["spread"])
    _emit(payload, args.out)
    if args.figures and args.out:
        plt = _pyplot()
        fig, ax = plt.subplots()
        ax.plot(range(len(values)), values, "o")
        ax.set_xlabel(f"equal-distance configuration (cosh d = {args.coshd})")
        ax.set_ylabel(f"sector {sector} propagator")
        ax.set_title(f"relative spread = {spread:.3e}")
        print(_save_figure(fig, args.out), file=sys.stderr)
    return 0


def _parse_grid(spec: str):
    import numpy as np
    if spec == "default":
        return (np.linspace(-2.0, 2.0, 9),
                np.geomspace(0.25, 4.0, 9))
    try:
        xpart, ypart = spec.split(";")
        x0, x1, nx = xpart.split(":")
        y0, y1, ny = ypart.split(":")
        return (np.linspace(float(x0), float(x1), int(nx)),
                np.geomspace(float(y0), float(y1), int(ny)))
    except ValueError as exc:
        raise ValueError(f"bad grid spec {spec!r}; use "
                         "'x0:x1:nx;y0:y1:ny' or 'default'") from exc


def cmd_modes(args) -> int:
    from .spectral import ModeParams, mode

    casts = {"k": float, "kappa": float, "h": float, "sector": int,
             "grid": str, "format": str, "out": str, "figures": _bool}
    _apply_config(args, casts)
    _fill(args, k=0.3, kappa=2.0, h=0.1, sector=0, grid="default",
          format="csv", figures=False)
    xs, ys = _parse_grid(args.grid)
    params = ModeParams(kappa=args.kappa, k=args.k, h=args.h,
                        sector=args.sector)
    import numpy as np
    X, Y = np.meshgrid(xs, ys, indexing="ij")
    values = mode(params, X, Y)
    rows = [{"x": float(X[i, j]), "y": float(Y[i, j]),
             "re": float(values[i, j].real), "im": float(values[i, j].imag)}
            for i in range(X.shape[0]) for j in range(X.shape[1])]
    if args.format == "json":
        payload = report.render_json(rows)
    else:
        payload = report.render_csv(rows, ["x", "y", "re", "im"])
    _emit(payload, args.out)
    if args.figures and args.out:
        plt = _pyplot()
        fig, ax = plt.subplots()
        pcm = ax.pcolormesh(X, Y, np.abs(values), shading="auto")
        fig.colorbar(pcm, ax=ax, label="|mode|")
        ax.set_xlabel("x")
        ax.set_ylabel("y")
        print(_save_figure(fig, args.out), file=sys.stderr)
    return 0


def cmd_integrate(args) -> int:
    from .state import TestFunction, state

    casts = {"xdeg": int, "ydeg": int, "p": float, "c": float, "q": float,
             "r": float, "h": float, "sector": int, "format": str,
             "out": str}
    _apply_config(args, casts)
    _fill(args, xdeg=0, ydeg=0, p=1.0, c=0.0, q=1.0, r=1.0, h=0.1, sector=0,
          format="json")
    f = TestFunction.single(poly={(args.xdeg, args.ydeg): 1.0 + 0j},
                            p=args.p, c=args.c, q=args.q, r=args.r)
    try:
        beta = args.sector * math.pi / args.h
        value = state(f, weight_beta=beta)
    except (OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    row = {"xdeg": args.xdeg, "ydeg": args.ydeg, "p": args.p, "c": args.c,
           "q": args.q, "r": args.r, "sector": args.sector, "h": args.h,
           "re": value.real, "im": value.imag, "method": "closed-form"}
    if args.format == "csv":
        payload = report.render_csv([row], list(row))
    else:
        payload = report.render_json([row])
    _emit(payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hplane",
        description="Verification suites and numerics for the deformed "
                    "half-plane (defaults in brackets).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"),
                       help="output format [text for verify, csv otherwise]")
        p.add_argument("--out", help="output path [stdout]")
        p.add_argument("--config",
                       help="flat key=value config file; flags win")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("algebra", "hopf", "crossprod",
                                     "series", "calculus", "state", "all"))
    p.add_argument("--order", type=int, help="series truncation order [8]")
    p.add_argument("--seed", type=int, help="sampling seed [0]")
    p.add_argument("--h", type=float,
                   help="unused for symbolic suites (h stays symbolic)")
    p.add_argument("--tol", type=float, help="override numeric tolerance")
    p.add_argument("--corrupt", action="store_const", const=True,
                   help="perturb one rewrite rule (harness self-test; "
                        "must fail)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("propagator", help="evaluate sector propagators")
    p.add_argument("--dx", type=_floats, help="comma list [1.0]")
    p.add_argument("--y", type=_floats, help="comma list [1.0]")
    p.add_argument("--yprime", type=_floats, help="comma list [1.0]")
    p.add_argument("--mu", type=float, help="mass [1.0]")
    p.add_argument("--h", type=float, help="deformation parameter [0.1]")
    p.add_argument("--sector", choices=("0", "1", "extended", "all"),
                   help="[extended]")
    p.add_argument("--tol", type=float, help="unused placeholder")
    p.add_argument("--figures", action="store_const", const=True,
                   help="also render a PNG next to --out")
    common(p)
    p.set_defaults(func=cmd_propagator)

    p = sub.add_parser("invariance",
                       help="equal-distance invariance scan")
    p.add_argument("--coshd", type=float, help="cosh of the distance [1.5]")
    p.add_argument("--pairs", type=int, help="number of configurations [5]")
    p.add_argument("--mu", type=float, help="[1.0]")
    p.add_argument("--h", type=float, help="[0.1]")
    p.add_argument("--sector", choices=("0", "1", "extended"),
                   help="[extended]")
    p.add_argument("--tol", type=float, help="unused placeholder")
    p.add_argument("--figures", action="store_const", const=True)
    common(p)
    p.set_defaults(func=cmd_invariance)

    p = sub.add_parser("modes", help="evaluate eigenmodes on a grid")
    p.add_argument("--k", type=float, help="momentum label [0.3]")
    p.add_argument("--kappa", type=float, help="spectral parameter [2.0]")
    p.add_argument("--h", type=float, help="[0.1]")
    p.add_argument("--sector", type=int, choices=(0, 1), help="[0]")
    p.add_argument("--grid", help="'default' or 'x0:x1:nx;y0:y1:ny'")
    p.add_argument("--figures", action="store_const", const=True)
    common(p)
    p.set_defaults(func=cmd_modes)

    p = sub.add_parser("integrate",
                       help="invariant functional of a test function "
                            "x^a y^b exp(-p(x-c)^2 - qy - r/y)")
    p.add_argument("--xdeg", type=int, help="[0]")
    p.add_argument("--ydeg", type=int, help="[0]")
    p.add_argument("--p", type=float, help="Gaussian width [1.0]")
    p.add_argument("--c", type=float, help="Gaussian center [0.0]")
    p.add_argument("--q", type=float, help="[1.0]")
    p.add_argument("--r", type=float, help="[1.0]")
    p.add_argument("--h", type=float, help="[0.1]")
    p.add_argument("--sector", type=int, choices=(0, 1),
                   help="weight e^{sector pi x / h} [0]")
    common(p)
    p.set_defaults(func=cmd_integrate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
