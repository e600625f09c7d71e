"""Command-line front door: one subcommand per public operation.

Output is a table (CSV, default) or a JSON object with "meta" (the full
resolved configuration, seed, version) and "data".  All floats are
printed at 9 significant digits.  Exit codes: 0 success, 1 numerical or
accuracy failure (diagnostic names the failing invariant), 2 usage
error.  A flat key=value config file can preseed any flag; explicit
flags take precedence.
"""

import argparse
import json
import math
import sys

import numpy as np

from . import __version__, _kernels
from .acceptance import run_suite
from .density import (AccuracyError, StableParams, density, density_partial,
                      subordinator_density)
from .extension import extend, qt_kernel, sample_qt_kernel
from .grid import GridSpec, SampledField, grid_norm, translate
from .mc import (NonExitError, PathConfig, green_functional, harmonic_check,
                 jump_martingale_stats, simulate_until_exit)
from .multiplier import (MultiplierProfile, TQuadSpec, apply_T, g_function,
                         pairing_check, symbol_m, symbol_m_truncated)


def _fmt(v):
    if isinstance(v, float):
        return format(v, ".9g")
    return str(v)


def _jsonable(v):
    if isinstance(v, float):
        return float(format(v, ".9g"))
    if isinstance(v, (np.floating,)):
        return float(format(float(v), ".9g"))
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


def emit(rows, columns, fmt, path, meta):
    """Write rows (list of dicts) as CSV or JSON to path ('-' = stdout)."""
    if fmt == "csv":
        lines = [",".join(columns)]
        for row in rows:
            lines.append(",".join(_fmt(row[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    else:
        data = [{c: _jsonable(row[c]) for c in columns} for row in rows]
        text = json.dumps({"meta": {k: _jsonable(v) for k, v in meta.items()},
                           "data": data}, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(path, "w") as fh:
                fh.write(text)
        except OSError as e:
            raise RuntimeError(f"cannot write {path}: {e}") from e


def _add_common(sp):
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", default="-")
    sp.add_argument("--config", default=None,
                    help="flat key=value file; flags take precedence")


def _add_grid(sp):
    sp.add_argument("--grid-n", type=int, default=1024)
    sp.add_argument("--grid-length", type=float, default=64.0)
    sp.add_argument("--bump-width", type=float, default=1.0)
    sp.add_argument("--bump-center", type=float, default=0.0)


def _add_quad(sp):
    sp.add_argument("--t-min", type=float, default=1e-3)
    sp.add_argument("--t-max", type=float, default=30.0)
    sp.add_argument("--n-t", type=int, default=96)
    sp.add_argument("--h-policy", choices=("truncated", "full"), default="full")
    sp.add_argument("--singular-cell", choices=("omit", "taylor_correct"),
                    default="taylor_correct")


def _add_mc(sp):
    sp.add_argument("--a", type=float, default=1.0)
    sp.add_argument("--start-x", type=float, default=0.0)
    sp.add_argument("--dt", type=float, default=1e-3)
    sp.add_argument("--max-steps", type=int, default=50_000)
    sp.add_argument("--n-paths", type=int, default=10_000)
    sp.add_argument("--z-adapt", type=float, default=0.0)


def build_parser():
    ap = argparse.ArgumentParser(prog="stablemult")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def new(name, **kw):
        sp = sub.add_parser(name, **kw)
        _add_common(sp)
        return sp

    sp = new("density", help="stable transition density at a point")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--s", type=float, default=1.0)
    sp.add_argument("--x", type=str, default="0")

    sp = new("derivative", help="partial derivative of the density")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--s", type=float, default=1.0)
    sp.add_argument("--x", type=str, default="0")
    sp.add_argument("--j", type=int, default=1)
    sp.add_argument("--k", type=int, default=1)

    sp = new("subordinator", help="one-sided stable density g_beta(1, s)")
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--s", type=float, required=True)

    sp = new("kernel", help="extension kernel q_t: point value or sampled table")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--t", type=float, default=1.0)
    sp.add_argument("--x", type=str, default=None)
    sp.add_argument("--grid-n", type=int, default=1024)
    sp.add_argument("--grid-length", type=float, default=64.0)

    sp = new("extend", help="harmonic extension Q_t of a bump field")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--t", type=float, default=1.0)
    _add_grid(sp)

    sp = new("apply-t", help="apply the operator T to a bump field")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--r-profile", choices=("constant_one", "exp_decay"),
                    default="exp_decay")
    _add_grid(sp)
    _add_quad(sp)

    sp = new("symbol", help="closed-form multiplier m(xi) table")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--r-profile", choices=("constant_one", "exp_decay"),
                    default="exp_decay")
    sp.add_argument("--xi-max", type=float, default=25.0)
    sp.add_argument("--xi-points", type=int, default=64)

    sp = new("symbol-truncated", help="truncated-policy multiplier table")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--r-profile", choices=("constant_one", "exp_decay"),
                    default="exp_decay")
    sp.add_argument("--xi-max", type=float, default=25.0)
    sp.add_argument("--xi-points", type=int, default=64)
    _add_quad(sp)

    sp = new("gfunction", help="Littlewood-Paley square function of a bump")
    sp.add_argument("--alpha", type=float, required=True)
    _add_grid(sp)
    _add_quad(sp)

    sp = new("pairing", help="bilinear pairing identity on two bumps")
    sp.add_argument("--alpha", type=float, required=True)
    _add_grid(sp)
    sp.add_argument("--bump2-width", type=float, default=1.0)
    sp.add_argument("--bump2-center", type=float, default=2.0)
    _add_quad(sp)

    sp = new("simulate", help="one path of the product process to exit")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--path-index", type=int, default=0)
    _add_mc(sp)

    sp = new("green", help="MC estimate of the vertical Green functional")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--kind", choices=("exp", "indicator"), default="exp")
    sp.add_argument("--indicator-upper", type=float, default=1.0)
    _add_mc(sp)

    sp = new("harmonic", help="MC exit average of a bump vs its extension")
    sp.add_argument("--alpha", type=float, required=True)
    _add_grid(sp)
    _add_mc(sp)

    sp = new("jumps", help="small-jump martingale statistics")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--p", type=float, default=2.0)
    sp.add_argument("--window", type=float, default=None)
    _add_grid(sp)
    _add_mc(sp)

    sp = new("lp-probe", help="||Tf||_p/||f||_p over a bump family")
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--p", type=float, default=2.0)
    sp.add_argument("--r-profile", choices=("constant_one", "exp_decay"),
                    default="exp_decay")
    sp.add_argument("--grid-n", type=int, default=1024)
    sp.add_argument("--grid-length", type=float, default=64.0)
    _add_quad(sp)

    sp = new("verify", help="run the acceptance suite")
    sp.add_argument("--suite", choices=("fast", "full"), default="full")

    return ap


def _apply_config(ap, argv):
    """Load --config key=value pairs as defaults on the chosen subparser."""
    if "--config" not in argv:
        return
    sub_name = next((a for a in argv if not a.startswith("-")), None)
    cfg_path = argv[argv.index("--config") + 1]
    pairs = {}
    with open(cfg_path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line without '=': {line!r}")
            k, v = line.split("=", 1)
            pairs[k.strip()] = v.strip()
    sub_actions = next(a for a in ap._actions
                       if isinstance(a, argparse._SubParsersAction))
    sp = sub_actions.choices.get(sub_name)
    if sp is None:
        return
    defaults = {}
    for action in sp._actions:
        if action.dest in pairs:
            raw = pairs[action.dest]
            defaults[action.dest] = action.type(raw) if action.type else raw
            if action.required:
                action.required = False
    sp.set_defaults(**defaults)


def _point(text):
    return np.array([float(v) for v in text.split(",")])


def _bump(args, width=None, center=None):
    g = GridSpec.centered(args.grid_n, args.grid_length)
    x = g.points()
    w = args.bump_width if width is None else width
    c = args.bump_center if center is None else center
    return SampledField(g, np.exp(-((x - c) ** 2) / (2.0 * w * w)))


def _path_config(args):
    return PathConfig(StableParams(args.alpha), args.start_x, args.a, args.dt,
                      args.max_steps, args.seed, args.z_adapt)


def _run(args):
    name = args.subcommand
    meta = {k: v for k, v in sorted(vars(args).items()) if k != "config"}
    meta["version"] = __version__

    if name == "density":
        p = StableParams(args.alpha, args.d)
        v = density(p, args.s, _point(args.x))
        return [{"s": args.s, "x": args.x, "density": v}], ["s", "x", "density"], meta

    if name == "derivative":
        p = StableParams(args.alpha, args.d)
        v = density_partial(p, args.s, _point(args.x), args.j, args.k)
        return ([{"s": args.s, "x": args.x, "j": args.j, "k": args.k,
                  "derivative": v}],
                ["s", "x", "j", "k", "derivative"], meta)

    if name == "subordinator":
        v = subordinator_density(args.beta, args.s)
        return [{"beta": args.beta, "s": args.s, "g": v}], ["beta", "s", "g"], meta

    if name == "kernel":
        p = StableParams(args.alpha)
        if args.x is not None:
            v = qt_kernel(p, args.t, _point(args.x))
            return [{"x": args.x, "q": v}], ["x", "q"], meta
        g = GridSpec.centered(args.grid_n, args.grid_length)
        f = sample_qt_kernel(p, args.t, g)
        rows = [{"x": float(xx), "q": float(vv)}
                for xx, vv in zip(g.points(), f.values)]
        return rows, ["x", "q"], meta

    if name == "extend":
        p = StableParams(args.alpha)
        f = _bump(args)
        ext = extend(f, p, args.t)
        rows = [{"x": float(xx), "f": float(a), "extension": float(b)}
                for xx, a, b in zip(f.grid.points(), f.values, ext.values)]
        return rows, ["x", "f", "extension"], meta

    if name == "apply-t":
        p = StableParams(args.alpha)
        f = _bump(args)
        quad = TQuadSpec(args.t_min, args.t_max, args.n_t, args.h_policy,
                         args.singular_cell)
        Tf = apply_T(f, MultiplierProfile(args.r_profile), p, quad)
        rows = [{"x": float(xx), "f": float(a), "Tf": float(b)}
                for xx, a, b in zip(f.grid.points(), f.values, Tf.values)]
        return rows, ["x", "f", "Tf"], meta

    if name in ("symbol", "symbol-truncated"):
        p = StableParams(args.alpha)
        r = MultiplierProfile(args.r_profile)
        xi = np.linspace(args.xi_max / args.xi_points, args.xi_max, args.xi_points)
        if name == "symbol":
            m = symbol_m(xi, r, p)
        else:
            quad = TQuadSpec(args.t_min, args.t_max, args.n_t, args.h_policy,
                             args.singular_cell)
            m = symbol_m_truncated(xi, r, p, quad)
        rows = [{"xi": float(a), "m": float(b)} for a, b in zip(xi, np.atleast_1d(m))]
        return rows, ["xi", "m"], meta

    if name == "gfunction":
        p = StableParams(args.alpha)
        f = _bump(args)
        quad = TQuadSpec(args.t_min, args.t_max, args.n_t, args.h_policy,
                         args.singular_cell)
        gf = g_function(f, p, quad)
        rows = [{"x": float(xx), "f": float(a), "g": float(b)}
                for xx, a, b in zip(f.grid.points(), f.values, gf.values)]
        return rows, ["x", "f", "g"], meta

    if name == "pairing":
        p = StableParams(args.alpha)
        f = _bump(args)
        g2 = _bump(args, width=args.bump2_width, center=args.bump2_center)
        quad = TQuadSpec(args.t_min, args.t_max, args.n_t, args.h_policy,
                         args.singular_cell)
        lhs, rhs = pairing_check(f, g2, p, quad)
        gap = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
        return ([{"lhs": lhs, "rhs": rhs, "rel_gap": gap}],
                ["lhs", "rhs", "rel_gap"], meta)

    if name == "simulate":
        rec = simulate_until_exit(_path_config(args), args.path_index)
        n_small = sum(1 for j in rec.jumps if j.classification == "small")
        return ([{"exit_step": rec.exit_step, "exit_time": rec.exit_time,
                  "exit_position": rec.exit_position,
                  "n_jumps": len(rec.jumps), "n_small": n_small,
                  "n_large": len(rec.jumps) - n_small,
                  "u_qv": rec.u_quadratic_variation,
                  "m_qv": rec.m_quadratic_variation}],
                ["exit_step", "exit_time", "exit_position", "n_jumps",
                 "n_small", "n_large", "u_qv", "m_qv"], meta)

    if name == "green":
        cfg = _path_config(args)
        est, missed = green_functional(cfg, n_paths=args.n_paths, kind=args.kind,
                                       indicator_upper=args.indicator_upper)
        if args.kind == "exp":
            ref = 1.0 - math.exp(-args.a)
        else:
            u = args.indicator_upper
            ref = u * u / 2.0 if u <= args.a else args.a * u - args.a ** 2 / 2.0
        return ([{"mean": est.mean, "std_error": est.std_error, "n": est.n,
                  "missed": missed, "reference": ref}],
                ["mean", "std_error", "n", "missed", "reference"], meta)

    if name == "harmonic":
        cfg = _path_config(args)
        f = _bump(args)
        est, analytic = harmonic_check(cfg, f, n_paths=args.n_paths)
        return ([{"mc_mean": est.mean, "std_error": est.std_error,
                  "analytic": analytic, "gap": abs(est.mean - analytic)}],
                ["mc_mean", "std_error", "analytic", "gap"], meta)

    if name == "jumps":
        cfg = _path_config(args)
        f = _bump(args)
        rep = jump_martingale_stats(cfg, f, n_paths=args.n_paths, p=args.p,
                                    window=args.window)
        cols = ["n_paths", "n_exited", "p", "window", "qv_violations",
                "u_qv_max", "m_qv_max", "e_u_p", "f_norm_p", "ratio"]
        return [{c: rep[c] for c in cols}], cols, meta

    if name == "lp-probe":
        p = StableParams(args.alpha)
        r = MultiplierProfile(args.r_profile)
        quad = TQuadSpec(args.t_min, args.t_max, args.n_t, args.h_policy,
                         args.singular_cell)
        g = GridSpec.centered(args.grid_n, args.grid_length)
        x = g.points()
        rows = []
        for w in (0.5, 1.0, 2.0):
            for sh in (0, 37):
                f = SampledField(g, np.exp(-x ** 2 / (2.0 * w * w)))
                if sh:
                    f = translate(f, sh)
                ratio = (grid_norm(apply_T(f, r, p, quad), args.p)
                         / grid_norm(f, args.p))
                rows.append({"width": w, "shift_cells": sh, "ratio": ratio})
        return rows, ["width", "shift_cells", "ratio"], meta

    raise AssertionError(f"unhandled subcommand {name}")


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        _apply_config(ap, argv)
    except (OSError, ValueError) as e:
        sys.stderr.write(f"config error: {e}\n")
        return 2
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.subcommand == "verify":
        text, ok, _ = run_suite(args.suite, args.seed)
        if args.format == "json":
            sys.stdout.write(json.dumps(
                {"meta": {"subcommand": "verify", "suite": args.suite,
                          "seed": args.seed, "version": __version__,
                          "backend": _kernels.BACKEND},
                 "data": {"report": text, "passed": ok}}, indent=2) + "\n")
        else:
            sys.stdout.write(text)
        return 0 if ok else 1

    if args.subcommand == "apply-t" and not 0 < args.alpha < 1:
        sys.stderr.write(
            f"apply-t: alpha={args.alpha:g} rejected; the operator is "
            "well-defined only for alpha in (0, 1)\n")
        return 2

    try:
        rows, columns, meta = _run(args)
    except (ValueError, KeyError) as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    except AccuracyError as e:
        sys.stderr.write(f"accuracy error: {e} (residual {e.residual:.3e})\n")
        return 1
    except NonExitError as e:
        sys.stderr.write(f"simulation error: {e}\n")
        return 1
    except ArithmeticError as e:
        sys.stderr.write(f"numerical error: {e}\n")
        return 1
    try:
        emit(rows, columns, args.format, args.output, meta)
    except RuntimeError as e:
        sys.stderr.write(f"{e}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
