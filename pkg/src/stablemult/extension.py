"""Brownian exit law and the harmonic-extension semigroup Q_t.

The vertical Brownian motion is normalized so that its generator is
d^2/dz^2 (variance 2 per unit time); the first-passage law from height
t then has Laplace transform exp(-t sqrt(lambda)) and density

    mu_t(ds) = (t / (2 sqrt(pi))) exp(-t^2/(4 s)) s^(-3/2) ds.

Mixing the stable transition density against mu_t gives the extension
kernel q_t(x) = int_0^inf p(s, x, 0) mu_t(ds) with Fourier symbol
exp(-t |xi|^(alpha/2)).  Q_t acts on sampled fields spectrally.
"""

import math

import numpy as np
from scipy.integrate import quad
from scipy.special import erfc

from .density import DEFAULT_SPEC, _unit_density_table, unit_density
from .grid import SampledField, apply_symbol


def exit_density(t, s):
    """Density of mu_t at s: (t/(2 sqrt(pi))) exp(-t^2/(4s)) s^(-3/2)."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("s must be positive")
    out = t / (2.0 * math.sqrt(math.pi)) * np.exp(-t * t / (4.0 * s)) * s ** -1.5
    return float(out) if out.ndim == 0 else out


def exit_cdf(t, s):
    """P(exit time <= s) = erfc(t / (2 sqrt(s))); 0 at s = 0."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    s = np.asarray(s, dtype=float)
    if np.any(s < 0):
        raise ValueError("s must be nonnegative")
    out = np.where(s > 0, erfc(t / (2.0 * np.sqrt(np.where(s > 0, s, 1.0)))), 0.0)
    return float(out) if out.ndim == 0 else out


def qt_symbol(params, t, xi):
    """Fourier symbol exp(-t |xi|^(alpha/2)) of the extension kernel."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    xi = np.asarray(xi, dtype=float)
    r = np.abs(xi) if xi.ndim <= 1 else np.linalg.norm(xi, axis=-1)
    out = np.exp(-t * r ** (params.alpha / 2.0))
    return float(out) if out.ndim == 0 else out


# quadrature layout for the u = t^2/(4s) substitution: the weight is
# pi^(-1/2) u^(-1/2) exp(-u) du and the remaining integrand is smooth
# on a log-u grid
_U_LO, _U_HI, _U_PER_DECADE = 1e-12, 45.0, 60


def _u_nodes():
    n = int(math.log10(_U_HI / _U_LO) * _U_PER_DECADE) + 1
    return np.logspace(math.log10(_U_LO), math.log10(_U_HI), n)


def _qt_kernel_grid(params, t, xs):
    """Vectorized q_t at the points xs, d = 1 only."""
    a = params.alpha
    u = _u_nodes()
    s = t * t / (4.0 * u)
    p1 = _unit_density_table(a)
    # p(s, x) = s^(-1/a) p(1, x s^(-1/a)); weight folds mu_t and du
    scale = s ** (-1.0 / a)
    w = u ** -0.5 * np.exp(-u) / math.sqrt(math.pi) * u  # extra u: log-grid measure
    vals = p1(np.abs(np.asarray(xs, dtype=float))[:, None] * scale[None, :])
    integrand = vals * (scale * w)[None, :]
    lnu = np.log(u)
    return np.trapezoid(integrand, lnu, axis=1)


def qt_kernel(params, t, x, spec=DEFAULT_SPEC):
    """q_t(x) by quadrature of the subordination integral."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if x.size != params.d:
        raise ValueError(f"x has {x.size} coordinates, expected d={params.d}")
    if params.d == 1:
        return float(_qt_kernel_grid(params, t, np.array([x[0]]))[0])
    a = params.alpha

    def integrand(u):
        s = t * t / (4.0 * u)
        scale = s ** (-1.0 / a)
        p = s ** (-params.d / a) * unit_density(params, x * scale, spec)
        return u ** -0.5 * math.exp(-u) / math.sqrt(math.pi) * p

    val, _ = quad(integrand, 0.0, np.inf, limit=300, epsrel=spec.rel_tol)
    return val


def sample_qt_kernel(params, t, grid, n_images=64):
    """Periodized samples of q_t on a centered grid (d = 1).

    Sums shifted copies q_t(x + m L) over |m| <= n_images and closes the
    remaining tail analytically: beyond the image window the kernel is in
    its power-law tail, so the leftover periodized mass is spread as the
    flat correction (2/L) * Q(R) with Q(R) = int_R^inf q_t, computed from
    the leading tail term of the alpha/2-stable law.
    """
    if params.d != 1:
        raise ValueError("kernel sampling implemented for d = 1")
    L = grid.length
    x = grid.points()
    pts = (x[None, :] + L * np.arange(-n_images, n_images + 1)[:, None]).ravel()
    vals = _qt_kernel_grid(params, t, pts).reshape(2 * n_images + 1, grid.n).sum(axis=0)
    b = params.alpha / 2.0
    R = (n_images + 0.5) * L
    # integrated tail series of the alpha/2-stable law at time t
    tail_mass = 0.0
    for k in range(1, 40):
        term = ((-1.0) ** (k + 1) * math.gamma(k * b + 1.0) / math.gamma(k + 1.0)
                * math.sin(k * math.pi * b / 2.0) * t ** k * R ** (-k * b)
                / (math.pi * k * b))
        tail_mass += term
        if abs(term) < 1e-16 * abs(tail_mass):
            break
    vals = vals + 2.0 * tail_mass / L
    return SampledField(grid, vals)


def extend(field, params, t):
    """Q_t f computed spectrally: multiply the DFT by qt_symbol."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    return apply_symbol(field, lambda xi: qt_symbol(params, t, xi))


def exit_mean_check(t, lam):
    """Laplace-transform probe int exp(-lam s) mu_t(ds), expected
    exp(-t sqrt(lam)); used as a quadrature oracle."""
    val, _ = quad(lambda s: math.exp(-lam * s) * exit_density(t, s), 0.0, np.inf,
                  limit=200)
    return val


__all__ = [
    "exit_density",
    "exit_cdf",
    "qt_symbol",
    "qt_kernel",
    "sample_qt_kernel",
    "extend",
    "exit_mean_check",
]
