"""The singular-integral operator T, its Fourier multiplier m, and the
associated square function and bilinear pairing.

T acts on a sampled field f by

    Tf(x) = int_0^inf t r(t) int_h (2 f_2t(x) - f_2t(x+h) - f_2t(x-h))
            |h|^(-1-alpha) dh dt,     f_2t = Q_2t f,

with the h-integral either over |h| < t^(2/alpha) (truncated, as the
operator is defined) or over all h (full, the variant whose multiplier
has the closed form m(xi) = c |xi|^alpha int t r(t) e^(-2t|xi|^(alpha/2)) dt).

Discretization: the h-integral is a cell quadrature with exact
|h|^(-1-alpha) cell weights on a hybrid lag set - lags at multiples of
the refined spacing dx/refine out to kcut cells, then grid multiples out
to the half period - plus a quadratic+quartic fit over the innermost
half cell and an analytic far-field closure proportional to f_2t(x)
itself.  The t-integral is a log-trapezoid over geometric nodes with a
triangle closure below t_min.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import quad as _quad
from scipy.interpolate import CubicSpline

from . import _kernels
from .extension import qt_symbol
from .grid import SampledField, grid_norm, inner_product, translate

_PROFILE_KINDS = ("constant_one", "exp_decay", "tabulated")


@dataclass(frozen=True)
class MultiplierProfile:
    """The bounded weight r(t): a builtin form or a piecewise-linear
    tabulation (zero outside the table range)."""

    kind: str = "constant_one"
    table: Optional[Tuple[np.ndarray, np.ndarray]] = None
    sup_bound: float = 0.0

    def __post_init__(self):
        if self.kind not in _PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.kind == "tabulated":
            if self.table is None:
                raise ValueError("tabulated profile needs a table")
            tt, vv = (np.asarray(a, dtype=float) for a in self.table)
            if tt.ndim != 1 or tt.shape != vv.shape or tt.size < 2:
                raise ValueError("table must be two equal-length 1-d arrays")
            if np.any(np.diff(tt) <= 0) or tt[0] < 0:
                raise ValueError("table t-grid must be increasing and nonnegative")
            object.__setattr__(self, "table", (tt, vv))
            bound = float(np.max(np.abs(vv)))
        else:
            bound = 1.0
        if self.sup_bound == 0.0:
            object.__setattr__(self, "sup_bound", bound)
        elif self.sup_bound < bound:
            raise ValueError("sup_bound smaller than observed |r|")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "constant_one":
            out = np.ones_like(t)
        elif self.kind == "exp_decay":
            out = np.exp(-t)
        else:
            tt, vv = self.table
            out = np.interp(t, tt, vv, left=0.0, right=0.0)
        return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class TQuadSpec:
    """Quadrature layout for the t- and h-integrals of T."""

    t_min: float = 1e-3
    t_max: float = 30.0
    n_t: int = 96
    h_policy: str = "full"
    singular_cell: str = "taylor_correct"
    refine: int = 32
    kcut: int = 16

    def __post_init__(self):
        if not 0 < self.t_min < self.t_max:
            raise ValueError("need 0 < t_min < t_max")
        if self.n_t < 8:
            raise ValueError("n_t must be >= 8")
        if self.h_policy not in ("truncated", "full"):
            raise ValueError(f"unknown h_policy {self.h_policy!r}")
        if self.singular_cell not in ("omit", "taylor_correct"):
            raise ValueError(f"unknown singular_cell {self.singular_cell!r}")
        if self.refine < 1 or self.kcut < 1:
            raise ValueError("refine and kcut must be positive")


def second_difference(f2t, h_cells):
    """2 f(x) - f(x+h) - f(x-h) at h = h_cells grid cells, periodic."""
    h = int(h_cells)
    if not 0 < h < f2t.grid.n // 2:
        raise ValueError(f"h_cells must lie in (0, n/2), got {h_cells}")
    v = 2.0 * f2t.values - translate(f2t, h).values - translate(f2t, -h).values
    return SampledField(f2t.grid, v)


@lru_cache(maxsize=32)
def _constant_c_cached(alpha):
    eps, X, X2 = 1e-3, 50.0, 1e6
    head = eps ** (2 - alpha) / (2 * (2 - alpha)) - eps ** (4 - alpha) / (24 * (4 - alpha))
    mid, _ = _quad(lambda h: (1.0 - math.cos(h)) * h ** (-1 - alpha), eps, X,
                   limit=400, epsrel=1e-12)
    osc, _ = _quad(lambda h: h ** (-1 - alpha), X, X2, weight="cos", wvar=1.0,
                   limit=2000)
    tail = X ** -alpha / alpha - osc
    return 4.0 * (head + mid + tail)


def constant_c(params):
    """c = int_R 4 sin^2(h/2) |h|^(-1-alpha) dh by quadrature, with the
    singular half-cell handled by the Taylor expansion of 1 - cos."""
    if params.d != 1:
        raise ValueError("constant_c implemented for d = 1")
    return _constant_c_cached(params.alpha)


@lru_cache(maxsize=32)
def _sin2_table(alpha):
    """Spline of S(y) = int_0^y sin^2(u/2) u^(-1-alpha) du on a log grid,
    with Taylor head and mean-value tail continuation."""
    y0 = 1e-8
    ys = np.logspace(math.log10(y0), 4.0, 3001)
    head = y0 ** (2 - alpha) / (4 * (2 - alpha)) - y0 ** (4 - alpha) / (48 * (4 - alpha))
    segs = [head]
    for a, b in zip(ys[:-1], ys[1:]):
        v, _ = _quad(lambda u: math.sin(u / 2.0) ** 2 * u ** (-1 - alpha), a, b,
                     limit=200)
        segs.append(v)
    S = np.cumsum(segs)
    spline = CubicSpline(np.log(ys), S)
    y_max, s_max = ys[-1], S[-1]

    def Sfun(y):
        y = np.asarray(y, dtype=float)
        out = np.empty_like(y)
        lo = y < y0
        hi = y > y_max
        mid = ~lo & ~hi
        yl = np.where(lo, y, 1.0)
        out[lo] = (yl[lo] ** (2 - alpha) / (4 * (2 - alpha))
                   - yl[lo] ** (4 - alpha) / (48 * (4 - alpha)))
        out[mid] = spline(np.log(y[mid]))
        out[hi] = s_max + (y_max ** -alpha - y[hi] ** -alpha) / (2 * alpha)
        return out

    return Sfun


def symbol_m(xi, r, params):
    """Closed-form multiplier of the full-policy operator:
    c |xi|^alpha int_0^inf t r(t) e^(-2 t |xi|^(alpha/2)) dt; m(0) := 0."""
    a = params.alpha
    c = constant_c(params)
    xi = np.asarray(xi, dtype=float)
    absxi = np.abs(xi)
    lam = absxi ** (a / 2.0)
    if r.kind == "constant_one":
        out = np.where(xi != 0.0, c / 4.0, 0.0)
    elif r.kind == "exp_decay":
        out = np.where(xi != 0.0, c * absxi ** a / (1.0 + 2.0 * lam) ** 2, 0.0)
    else:
        tt, _ = r.table
        t_hi = tt[-1]
        out = np.zeros_like(lam)
        flat = out.ravel()
        for i, (l, ax) in enumerate(zip(np.ravel(lam), np.ravel(absxi))):
            if l == 0.0:
                continue
            v, _ = _quad(lambda t: t * r(t) * math.exp(-2.0 * t * l), 0.0, t_hi,
                         limit=400)
            flat[i] = c * ax ** a * v
    return float(out) if out.ndim == 0 else out


def symbol_m_truncated(xi, r, params, quad):
    """Multiplier of the truncated-policy operator:
    int_0^t_max t r(t) e^(-2 t |xi|^(alpha/2)) psi(t, xi) dt with
    psi(t, xi) = 8 |xi|^alpha S(|xi| t^(2/alpha)); m(0) := 0."""
    a = params.alpha
    Sfun = _sin2_table(a)
    xi_arr = np.atleast_1d(np.asarray(xi, dtype=float))
    out = np.zeros_like(xi_arr)
    for i, x in enumerate(xi_arr):
        ax = abs(x)
        if ax == 0.0:
            continue
        lam = ax ** (a / 2.0)

        def integrand(t):
            return (t * r(t) * math.exp(-2.0 * t * lam)
                    * 8.0 * ax ** a * float(Sfun(ax * t ** (2.0 / a))))

        v, _ = _quad(integrand, 0.0, quad.t_max, limit=400)
        out[i] = v
    return float(out[0]) if np.ndim(xi) == 0 else out


def _t_nodes(quad):
    """Geometric t-nodes with log-trapezoid weights; the [0, t_min] gap
    is closed by a triangle rule folded into the first weight."""
    t = np.exp(np.linspace(math.log(quad.t_min), math.log(quad.t_max), quad.n_t))
    lt = np.log(t)
    w = np.empty_like(t)
    w[1:-1] = (lt[2:] - lt[:-2]) / 2.0
    w[0] = (lt[1] - lt[0]) / 2.0
    w[-1] = (lt[-1] - lt[-2]) / 2.0
    w = w * t
    w[0] += quad.t_min / 2.0
    return t, w


def _h_cells(alpha, grid, quad, radius):
    """One-sided cell weights int |h|^(-1-alpha) dh over the hybrid lag
    set, clipped to `radius` (None = half period), plus the far-field
    coefficient and the singular half-cell edge."""
    n, L = grid.n, grid.length
    dx = grid.spacing
    dxf = dx / quad.refine
    R = L / 2.0
    a = R if radius is None else min(radius, R)
    nf = quad.kcut * quad.refine
    jf = np.arange(1, nf + 1)
    lo = (jf - 0.5) * dxf
    hi = (jf + 0.5) * dxf
    hi[-1] = quad.kcut * dx
    wf = (np.minimum(lo, a) ** -alpha - np.minimum(hi, a) ** -alpha) / alpha
    kc = np.arange(quad.kcut + 1, n // 2 + 1)
    lo = (kc - 0.5) * dx
    hi = (kc + 0.5) * dx
    lo[0] = quad.kcut * dx
    hi[-1] = R
    wc = (np.minimum(lo, a) ** -alpha - np.minimum(hi, a) ** -alpha) / alpha
    if radius is None:
        gamma = 4.0 * R ** -alpha / alpha
    elif radius > R:
        gamma = 4.0 * (R ** -alpha - radius ** -alpha) / alpha
    else:
        gamma = 0.0
    s_hi = min(dxf / 2.0, a)
    return wf, wc, gamma, dxf, s_hi


def _h_weights_operator(alpha, grid, quad, radius):
    """Doubled weights for the second-difference sum, with the singular
    half cell folded into the two innermost lags via a quadratic+quartic
    fit of the second difference."""
    wf, wc, gamma, dxf, s_hi = _h_cells(alpha, grid, quad, radius)
    wf = 2.0 * wf
    wc = 2.0 * wc
    if quad.singular_cell == "taylor_correct" and s_hi > 0:
        e2 = s_hi ** (2 - alpha) / (2 - alpha)
        e4 = s_hi ** (4 - alpha) / (4 - alpha)
        wf = wf.copy()
        wf[0] += 2.0 * (16.0 * e2 / (12.0 * dxf ** 2) - 4.0 * e4 / (12.0 * dxf ** 4))
        wf[1] += 2.0 * (-e2 / (12.0 * dxf ** 2) + e4 / (12.0 * dxf ** 4))
    return wf, wc, gamma


def _upsampled_extension(field, params, height, refine):
    """Values of Q_height f on the refine-times-finer grid, via spectral
    zero padding (the field's band is preserved exactly)."""
    n = field.grid.n
    N = n * refine
    c = np.fft.fft(field.values) * qt_symbol(params, height, field.grid.frequencies())
    cf = np.zeros(N, dtype=complex)
    cf[: n // 2] = c[: n // 2]
    cf[-(n // 2) + 1:] = c[n // 2 + 1:]
    cf[n // 2] = 0.5 * c[n // 2]
    cf[-(n // 2)] = 0.5 * np.conj(c[n // 2])
    return np.fft.ifft(cf).real * refine


def _check_operator_domain(f, params):
    if not 0 < params.alpha < 1:
        raise ValueError(
            f"operator requires 0 < alpha < 1, got alpha={params.alpha}")
    if params.d != 1:
        raise ValueError("grid evaluation of the operator requires d = 1")


def apply_T(f, r, params, quad):
    """Apply the operator T to a sampled field (d = 1, alpha < 1)."""
    _check_operator_domain(f, params)
    a = params.alpha
    t, wt = _t_nodes(quad)
    rt = r(t)
    n = f.grid.n
    out = np.zeros(n)
    tmp = np.empty(n)
    full_w = None
    for ti, wi, ri in zip(t, wt, rt):
        if wi * ti * ri == 0.0:
            continue
        if quad.h_policy == "truncated":
            radius = ti ** (2.0 / a)
            wf, wc, gamma = _h_weights_operator(a, f.grid, quad, radius)
        else:
            if full_w is None:
                full_w = _h_weights_operator(a, f.grid, quad, None)
            wf, wc, gamma = full_w
        F = _upsampled_extension(f, params, 2.0 * ti, quad.refine)
        _kernels.hsum(F, n, quad.refine, quad.kcut, wf, wc, gamma, tmp)
        out += (wi * ti * ri) * tmp
    return SampledField(f.grid, out)


def g_function(f, params, quad):
    """Square function sqrt(int t int_{|h|<t^(2/alpha)} (f_t(x+h)-f_t(x))^2
    |h|^(-1-alpha) dh dt); the h-ball is intrinsic to the definition and
    is capped at the half period."""
    if params.d != 1:
        raise ValueError("grid evaluation requires d = 1")
    a = params.alpha
    t, wt = _t_nodes(quad)
    n = f.grid.n
    acc = np.zeros(n)
    tmp = np.empty(n)
    for ti, wi in zip(t, wt):
        radius = ti ** (2.0 / a)
        wf, wc, gamma, dxf, s_hi = _h_cells(a, f.grid, quad, radius)
        ws = 2.0 * s_hi ** (2 - a) / (2 - a) if quad.singular_cell == "taylor_correct" else 0.0
        F = _upsampled_extension(f, params, ti, quad.refine)
        _kernels.gsum(F, F, n, quad.refine, quad.kcut, wf, wc, ws, dxf, tmp)
        acc += (wi * ti) * tmp
    return SampledField(f.grid, np.sqrt(np.maximum(acc, 0.0)))


def pairing_check(f, g, params, quad):
    """Bilinear identity <Tf, g> = int dx int t dt int_h (f_t(x+h)-f_t(x))
    (g_t(x+h)-g_t(x)) |h|^(-1-alpha) dh, with r = 1 and matching
    quadrature nodes on both sides; returns (lhs, rhs)."""
    _check_operator_domain(f, params)
    if f.grid != g.grid:
        raise ValueError("grid mismatch")
    a = params.alpha
    r1 = MultiplierProfile("constant_one")
    lhs = inner_product(apply_T(f, r1, params, quad), g)
    t, wt = _t_nodes(quad)
    n = f.grid.n
    tmp = np.empty(n)
    rhs = 0.0
    for ti, wi in zip(t, wt):
        radius = ti ** (2.0 / a) if quad.h_policy == "truncated" else None
        wf, wc, gamma, dxf, s_hi = _h_cells(a, f.grid, quad, radius)
        ws = 2.0 * s_hi ** (2 - a) / (2 - a) if quad.singular_cell == "taylor_correct" else 0.0
        F = _upsampled_extension(f, params, ti, quad.refine)
        G = _upsampled_extension(g, params, ti, quad.refine)
        _kernels.gsum(F, G, n, quad.refine, quad.kcut, wf, wc, ws, dxf, tmp)
        Fc = F[:: quad.refine]
        Gc = G[:: quad.refine]
        rhs += (wi * ti) * (tmp.sum() + gamma * np.sum(Fc * Gc))
    rhs *= f.grid.spacing
    return lhs, rhs


def lp_probe(family, r, params, quad, p):
    """Ratios ||Tf||_p / ||f||_p over a family of fields; an empirical
    probe of L^p boundedness, never an assertion of a constant."""
    if not p > 1:
        raise ValueError(f"p must exceed 1, got {p}")
    ratios = []
    for f in family:
        nf = grid_norm(f, p)
        if nf == 0.0:
            raise ValueError("family members must have nonzero norm")
        ratios.append(grid_norm(apply_T(f, r, params, quad), p) / nf)
    return {"p": p, "ratios": ratios, "max_ratio": max(ratios)}


__all__ = [
    "MultiplierProfile",
    "TQuadSpec",
    "second_difference",
    "apply_T",
    "constant_c",
    "symbol_m",
    "symbol_m_truncated",
    "g_function",
    "pairing_check",
    "lp_probe",
]
