"""Timing comparison of the numba and pure-numpy kernel backends.

Run `python -m stablemult.benchmark` for the active backend, or with
--both to also time the other backend in a subprocess (the backend is
chosen at import time from STABLEMULT_DISABLE_NUMBA).
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(n_paths=20_000, grid_n=1024):
    import warnings
    warnings.simplefilter("ignore")
    from . import _kernels
    from .density import StableParams
    from .grid import GridSpec, SampledField
    from .mc import PathConfig, exit_times, green_functional
    from .multiplier import MultiplierProfile, TQuadSpec, apply_T

    p = StableParams(0.5)
    g = GridSpec.centered(grid_n, 64.0)
    x = g.points()
    f = SampledField(g, np.exp(-x ** 2 / 2.0))
    quad = TQuadSpec(h_policy="full")
    r = MultiplierProfile("exp_decay")
    cfg = PathConfig(StableParams(1.0), 0.0, 1.0, 1e-3, 400_000, 42, z_adapt=6.0)

    apply_T(f, r, p, quad)  # warm: jit compile, caches
    exit_times(cfg, 100)

    rows = [
        ("apply_T n=%d" % grid_n, _time(lambda: apply_T(f, r, p, quad))),
        ("exit_times %d paths" % n_paths, _time(lambda: exit_times(cfg, n_paths), 1)),
        ("green %d paths" % n_paths,
         _time(lambda: green_functional(cfg, n_paths=n_paths, kind="exp"), 1)),
    ]
    print(f"backend={_kernels.BACKEND}")
    for name, dt in rows:
        print(f"  {name:<28s} {dt * 1e3:9.1f} ms")


def main(argv=None):
    ap = argparse.ArgumentParser(prog="stablemult-benchmark")
    ap.add_argument("--n-paths", type=int, default=20_000)
    ap.add_argument("--grid-n", type=int, default=1024)
    ap.add_argument("--both", action="store_true",
                    help="also time the other backend in a subprocess")
    args = ap.parse_args(argv)
    run(args.n_paths, args.grid_n)
    if args.both:
        env = dict(os.environ)
        flipped = "" if env.get("STABLEMULT_DISABLE_NUMBA") in ("1", "true", "yes") else "1"
        env["STABLEMULT_DISABLE_NUMBA"] = flipped
        subprocess.run([sys.executable, "-m", "stablemult.benchmark",
                        "--n-paths", str(args.n_paths),
                        "--grid-n", str(args.grid_n)], env=env, check=False)
    return 0


if __name__ == "__main__":
    sys.exit(main())
