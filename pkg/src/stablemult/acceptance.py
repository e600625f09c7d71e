"""Acceptance suite: oracle- and property-based checks of every module.

Each criterion function runs one numbered check and returns a
CriterionResult with a deterministic one-line detail string; run_suite
assembles the report.  The report text contains no timings or other
run-varying content, so a fixed (suite, seed) pair reproduces it byte
for byte.  Wall-clock limits are enforced by the callers (tests) via
the elapsed field.

The "fast" suite runs every criterion at reduced grid / path counts for
quick iteration; "full" runs the sizes the tolerances were set at.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from .density import (StableParams, density, density_partial, density_via_subordination,
                      envelope, unit_density)
from .extension import exit_cdf, qt_symbol, sample_qt_kernel
from .grid import GridSpec, SampledField, dft, grid_norm, translate
from .mc import (PathConfig, classify_jump, exit_positions, exit_times,
                 green_functional, harmonic_check, jump_martingale_stats)
from .multiplier import (MultiplierProfile, TQuadSpec, apply_T, constant_c,
                         pairing_check, symbol_m, symbol_m_truncated)
from . import _kernels, __version__


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    elapsed: float


def _res(index, name, passed, detail, t0):
    return CriterionResult(index, name, bool(passed), detail, time.time() - t0)


def _ratio_spectrum(f, Tf, n):
    cf = np.fft.fft(f.values)
    ct = np.fft.fft(Tf.values)
    k = np.arange(4, n // 4 + 1)
    return k, (ct[k] / cf[k]).real


def criterion_01_cauchy(seed, fast):
    t0 = time.time()
    p = StableParams(1.0)
    xs = np.linspace(-20.0, 20.0, 27 if fast else 81)
    worst = 0.0
    for s in (0.5, 1.0, 2.0):
        for x in xs:
            ref = s / (math.pi * (s * s + x * x))
            worst = max(worst, abs(density(p, s, [x]) / ref - 1.0))
    return _res(1, "cauchy-oracle", worst < 1e-6,
                f"max_rel_err={worst:.3e} tol=1e-06", t0)


def criterion_02_subordination(seed, fast):
    t0 = time.time()
    xs = np.linspace(0.0, 10.0, 9 if fast else 21)
    worst = 0.0
    for alpha in (0.5, 1.0, 1.5):
        p = StableParams(alpha)
        for x in xs:
            a = unit_density(p, [x])
            b = density_via_subordination(p, [x])
            worst = max(worst, abs(b / a - 1.0))
    return _res(2, "subordination-consistency", worst < 1e-4,
                f"max_rel_err={worst:.3e} tol=1e-04", t0)


def criterion_03_derivatives(seed, fast):
    t0 = time.time()
    fd_worst = 0.0
    ratio_drift = 0.0
    for alpha in (0.5, 1.0):
        p = StableParams(alpha)
        for x in np.geomspace(0.1, 5.0, 5 if fast else 8):
            for k, h in ((1, 1e-4), (2, 1e-3)):
                d = density_partial(p, 1.0, [x], 1, k)
                if k == 1:
                    fd = (density(p, 1.0, [x + h]) - density(p, 1.0, [x - h])) / (2 * h)
                else:
                    fd = (density(p, 1.0, [x + h]) - 2 * density(p, 1.0, [x])
                          + density(p, 1.0, [x - h])) / (h * h)
                fd_worst = max(fd_worst, abs(d / fd - 1.0))

        # fitted bound |d^k p| <= c min(1, |x|^-k) p, stability under 2x refinement
        for k in (1, 2):
            cs = []
            for m in (17, 33):
                grid = np.geomspace(0.1, 5.0, m)
                r = [abs(density_partial(p, 1.0, [x], 1, k))
                     / (min(1.0, x ** -k) * density(p, 1.0, [x])) for x in grid]
                cs.append(max(r))
            ratio_drift = max(ratio_drift, abs(cs[1] / cs[0] - 1.0))
    ok = fd_worst < 1e-4 and ratio_drift < 0.05
    return _res(3, "lifted-derivatives", ok,
                f"max_fd_rel_err={fd_worst:.3e} ratio_bound_drift={ratio_drift:.3e}", t0)


def criterion_04_envelope(seed, fast):
    t0 = time.time()
    worst = 0.0
    for alpha in (0.5, 1.0, 1.5):
        p = StableParams(alpha)
        ratios = []
        for s in (0.1, 0.5, 1.0, 3.0, 10.0):
            for x in np.concatenate(([0.0], np.geomspace(0.1, 100.0, 8 if fast else 15))):
                ratios.append(density(p, s, [x]) / envelope(p, s, [x]))
        worst = max(worst, max(ratios) / min(ratios))
    return _res(4, "envelope-two-sided", worst < 1e3,
                f"max_c2_over_c1={worst:.4e} tol=1e+03", t0)


# period lengths tuned so the kernel's band and tail both sit inside the
# sampling window at each (alpha, t)
_KERNEL_PERIODS = {(0.5, 0.5): 0.05, (0.5, 1.0): 0.8, (1.0, 0.5): 8.0, (1.0, 1.0): 20.0}


def criterion_05_symbol(seed, fast):
    t0 = time.time()
    n = 1024
    worst = 0.0
    for (alpha, t), L in _KERNEL_PERIODS.items():
        p = StableParams(alpha)
        g = GridSpec.centered(n, L)
        f = sample_qt_kernel(p, t, g)
        k = np.arange(4, n // 4 + 1)
        # continuous-transform estimate: spacing and the origin phase
        # e^{-i xi x_0} = (-1)^k for the centered grid
        coeffs = dft(f).coeffs[k] * g.spacing * (-1.0) ** k
        xi = g.frequencies()
        err = np.max(np.abs(coeffs.real - qt_symbol(p, t, xi[k])))
        worst = max(worst, err)
    return _res(5, "kernel-symbol-identity", worst < 1e-3,
                f"max_abs_err={worst:.3e} tol=1e-03", t0)


def _bump_field(n=1024, L=64.0, width=0.25, shift=0.0):
    g = GridSpec.centered(n, L)
    x = g.points()
    return SampledField(g, np.exp(-((x - shift) ** 2) / (2.0 * width * width)))


def criterion_06_multiplier_full(seed, fast):
    t0 = time.time()
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec(h_policy="full")
    f = _bump_field()
    worst = 0.0
    for alpha in (0.5, 0.7):
        p = StableParams(alpha)
        Tf = apply_T(f, r, p, quad)
        k, ratio = _ratio_spectrum(f, Tf, f.grid.n)
        xi = 2.0 * math.pi * k / f.grid.length
        target = symbol_m(xi, r, p)
        worst = max(worst, float(np.max(np.abs(ratio / target - 1.0))))
    return _res(6, "multiplier-closed-form", worst < 0.02,
                f"max_rel_err={worst:.4e} tol=2e-02", t0)


def criterion_07_constant_symbol(seed, fast):
    t0 = time.time()
    r = MultiplierProfile("constant_one")
    quad = TQuadSpec(h_policy="full")
    f = _bump_field()
    flat_worst = 0.0
    level_worst = 0.0
    for alpha in (0.5, 0.7):
        p = StableParams(alpha)
        Tf = apply_T(f, r, p, quad)
        _, ratio = _ratio_spectrum(f, Tf, f.grid.n)
        flat_worst = max(flat_worst, float(ratio.max() / ratio.min() - 1.0))
        level_worst = max(level_worst, float(np.max(np.abs(
            ratio / (constant_c(p) / 4.0) - 1.0))))
    c1 = constant_c(StableParams(1.0))
    c1_err = abs(c1 / (2.0 * math.pi) - 1.0)
    ok = flat_worst < 0.02 and level_worst < 0.02 and c1_err < 0.005
    return _res(7, "constant-symbol", ok,
                f"flatness={flat_worst:.4e} level_err={level_worst:.4e} "
                f"c_alpha1_err={c1_err:.3e}", t0)


def criterion_08_truncated(seed, fast):
    t0 = time.time()
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec(h_policy="truncated")
    f = _bump_field()
    worst = 0.0
    for alpha in (0.5, 0.7):
        p = StableParams(alpha)
        Tf = apply_T(f, r, p, quad)
        k, ratio = _ratio_spectrum(f, Tf, f.grid.n)
        xi = 2.0 * math.pi * k / f.grid.length
        target = symbol_m_truncated(xi, r, p, quad)
        worst = max(worst, float(np.max(np.abs(ratio / target - 1.0))))
    return _res(8, "truncated-multiplier", worst < 0.02,
                f"max_rel_err={worst:.4e} tol=2e-02", t0)


def criterion_09_pairing(seed, fast):
    t0 = time.time()
    p = StableParams(0.5)
    n, L = 512, 64.0
    g = GridSpec.centered(n, L)
    x = g.points()

    def bump(w, sh):
        return SampledField(g, np.exp(-((x - sh) ** 2) / (2.0 * w * w)))

    cases = [
        (bump(0.5, 0.0), bump(0.5, 0.0)),
        (bump(0.5, 0.0), bump(1.0, 2.0)),
        (bump(1.5, -3.0), bump(0.4, -3.0)),
        (bump(0.7, 0.0), SampledField(g, np.exp(-x ** 2 / 2.0) * np.cos(1.5 * x))),
        (bump(0.5, -5.0), bump(0.5, 5.0)),
    ]
    worst = 0.0
    for policy in ("full", "truncated") if not fast else ("full",):
        quad = TQuadSpec(h_policy=policy)
        for f, gg in cases:
            lhs, rhs = pairing_check(f, gg, p, quad)
            worst = max(worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
    return _res(9, "pairing-identity", worst < 0.02,
                f"max_rel_gap={worst:.3e} tol=2e-02", t0)


def _ks_vs_exit_cdf(times, a, n_total):
    ts = np.sort(times[~np.isnan(times)])
    cdf = exit_cdf(a, ts)
    m = ts.size
    hi = np.arange(1, m + 1) / n_total
    lo = np.arange(0, m) / n_total
    return float(max(np.max(np.abs(hi - cdf)), np.max(np.abs(cdf - lo))))


def criterion_10_exit_law(seed, fast):
    t0 = time.time()
    n = 10_000 if fast else 100_000
    worst = 0.0
    for i, a in enumerate((0.5, 1.0)):
        cfg = PathConfig(StableParams(1.0), 0.0, a, 1e-3, 20_000, seed + 100 + i,
                         z_adapt=0.0)
        times = exit_times(cfg, n)
        worst = max(worst, _ks_vs_exit_cdf(times, a, n))
    return _res(10, "exit-law-ks", worst < 0.01,
                f"max_ks={worst:.4f} tol=0.01 n={n}", t0)


def criterion_11_green(seed, fast):
    t0 = time.time()
    n = 5_000 if fast else 100_000
    steps = 400_000
    p = StableParams(1.0)
    cfg = PathConfig(p, 0.0, 1.0, 1e-3, steps, seed + 110, z_adapt=6.0)
    est, miss = green_functional(cfg, n_paths=n, kind="exp")
    ref = 1.0 - math.exp(-1.0)
    z1 = abs(est.mean - ref) / est.std_error
    cfg2 = PathConfig(p, 0.0, 2.0, 1e-3, steps, seed + 111, z_adapt=6.0)
    est2, miss2 = green_functional(cfg2, n_paths=n, kind="indicator",
                                   indicator_upper=1.0)
    z2 = abs(est2.mean - 0.5) / est2.std_error
    ok = z1 <= 3.0 and z2 <= 3.0
    return _res(11, "green-identity", ok,
                f"exp_mean={est.mean:.6f} z={z1:.2f} ind_mean={est2.mean:.6f} "
                f"z={z2:.2f} missed={miss + miss2}", t0)


def criterion_12_harmonic(seed, fast):
    t0 = time.time()
    n = 10_000 if fast else 100_000
    g = GridSpec.centered(1024, 64.0)
    x = g.points()
    f = SampledField(g, np.exp(-x ** 2 / (2.0 * 16.0)))
    cfg = PathConfig(StableParams(1.0), 0.0, 1.0, 5e-3, 100_000, seed + 120,
                     z_adapt=6.0)
    est, analytic = harmonic_check(cfg, f, n_paths=n)
    gap = abs(est.mean - analytic)
    tol = 3.0 * est.std_error + 1e-2
    return _res(12, "harmonic-identity", gap <= tol,
                f"mc={est.mean:.6f} analytic={analytic:.6f} gap={gap:.4e} "
                f"tol={tol:.4e}", t0)


def criterion_13_qv_domination(seed, fast):
    t0 = time.time()
    n = 10_000 if fast else 100_000
    g = GridSpec.centered(512, 32.0)
    x = g.points()
    f = SampledField(g, np.exp(-x ** 2 / (2.0 * 4.0)))
    p = StableParams(1.0)
    cfg = PathConfig(p, 0.0, 0.5, 2e-3, 10_000, seed + 130)
    rep = jump_martingale_stats(cfg, f, n_paths=n, p=2.0)
    ties_ok = (classify_jump(np.array([1.0]), 1.0, p) == "large"
               and classify_jump(np.array([0.5]), 1.0, p) == "small"
               and classify_jump(np.array([1e-9]), 0.0, p) == "large")
    ok = rep["qv_violations"] == 0 and rep["n_exited"] > 0 and ties_ok
    return _res(13, "qv-domination", ok,
                f"violations={rep['qv_violations']} exited={rep['n_exited']}/"
                f"{rep['n_paths']} ratio_p2={rep['ratio']:.4e} ties_ok={ties_ok}", t0)


def criterion_14_lp_probe(seed, fast):
    t0 = time.time()
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec(h_policy="full")
    g = GridSpec.centered(1024, 64.0)
    x = g.points()
    worst_spread = 0.0
    worst_shift = 0.0
    for alpha in (0.5, 0.7):
        p = StableParams(alpha)
        norms = {q: [] for q in (1.5, 2.0, 3.0)}
        for w in (0.5, 1.0, 2.0):
            for sh in (0.0, 37):
                f = SampledField(g, np.exp(-x ** 2 / (2.0 * w * w)))
                if sh:
                    f = translate(f, sh)
                Tf = apply_T(f, r, p, quad)
                for q in norms:
                    norms[q].append(grid_norm(Tf, q) / grid_norm(f, q))
        for q, ratios in norms.items():
            worst_spread = max(worst_spread, max(ratios) / min(ratios))
            for i in range(0, len(ratios), 2):
                pair_gap = abs(ratios[i] - ratios[i + 1]) / max(ratios[i], ratios[i + 1])
                worst_shift = max(worst_shift, pair_gap)
    ok = worst_spread < 5.0 and worst_shift < 1e-6
    return _res(14, "lp-probe", ok,
                f"max_spread={worst_spread:.3f} tol=5.0 "
                f"max_shift_gap={worst_shift:.2e} tol=1e-06", t0)


def criterion_15_determinism(seed, fast):
    t0 = time.time()
    cfg = PathConfig(StableParams(1.0), 0.0, 1.0, 1e-3, 20_000, seed + 150)
    a = exit_times(cfg, 2_000)
    b = exit_times(cfg, 2_000)
    _, pa = exit_positions(cfg, 1_000)
    _, pb = exit_positions(cfg, 1_000)
    same = (a.tobytes() == b.tobytes()) and (pa.tobytes() == pb.tobytes())
    return _res(15, "determinism", same, f"replay_identical={same}", t0)


_CRITERIA = [
    criterion_01_cauchy,
    criterion_02_subordination,
    criterion_03_derivatives,
    criterion_04_envelope,
    criterion_05_symbol,
    criterion_06_multiplier_full,
    criterion_07_constant_symbol,
    criterion_08_truncated,
    criterion_09_pairing,
    criterion_10_exit_law,
    criterion_11_green,
    criterion_12_harmonic,
    criterion_13_qv_domination,
    criterion_14_lp_probe,
    criterion_15_determinism,
]


def run_criterion(index, seed=42, fast=False):
    """Run one numbered criterion (1-based)."""
    if not 1 <= index <= len(_CRITERIA):
        raise ValueError(f"criterion index out of range: {index}")
    return _CRITERIA[index - 1](seed, fast)


def run_suite(suite="full", seed=42):
    """Run the acceptance suite; returns (report_text, all_passed, results)."""
    if suite not in ("fast", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    fast = suite == "fast"
    results = [c(seed, fast) for c in _CRITERIA]
    lines = [
        "stablemult acceptance report",
        f"suite={suite} seed={seed} backend={_kernels.BACKEND} version={__version__}",
    ]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"[{r.index:02d}] {r.name:<24s} {status}  {r.detail}")
    n_pass = sum(r.passed for r in results)
    lines.append(f"passed {n_pass}/{len(results)}")
    return "\n".join(lines) + "\n", n_pass == len(results), results


__all__ = ["CriterionResult", "run_criterion", "run_suite"]
