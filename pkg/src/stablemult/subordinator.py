"""One-sided stable subordinator densities.

g_beta(1, s) is the density at time 1 of the increasing beta-stable
subordinator with Laplace transform exp(-lambda^beta), beta in (0, 1).

Evaluation routes:

* beta = 1/2: closed form (1/(2 sqrt(pi))) s^(-3/2) exp(-1/(4 s)).
* moderate s: single-integral representation
    (beta/(1-beta)) (1/pi) s^(-1/(1-beta))
        int_0^pi a(theta) exp(-a(theta) s^(-beta/(1-beta))) dtheta
  with a(theta) = (sin(beta theta)^beta sin((1-beta) theta)^(1-beta)
                   / sin(theta))^(1/(1-beta)).
* large s: convergent tail series
    (1/pi) sum_{k>=1} (-1)^(k+1) Gamma(k beta + 1)/k! sin(k pi beta)
        s^(-k beta - 1).
  The integral route develops an unresolved spike near theta = pi as
  s grows (severe for beta > 1/2), so the series takes over there.
"""

import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.interpolate import CubicSpline
from scipy.special import gammaln

# above this the tail series is both cheap and fully converged for the
# beta range we use (beta = alpha/2 < 1)
_S_SWITCH = 2.0
_SERIES_MAX_TERMS = 400


def _theta_integrand_factory(beta):
    e = 1.0 / (1.0 - beta)

    def a(theta):
        num = math.sin(beta * theta) ** beta * math.sin((1.0 - beta) * theta) ** (1.0 - beta)
        return (num / math.sin(theta)) ** e

    return a


def _density_integral(beta, s):
    a = _theta_integrand_factory(beta)
    z = s ** (-beta / (1.0 - beta))
    val, _ = quad(lambda th: a(th) * math.exp(-a(th) * z), 0.0, math.pi,
                  limit=200, epsabs=1e-14, epsrel=1e-12)
    pref = (beta / (1.0 - beta)) / math.pi * s ** (-1.0 / (1.0 - beta))
    return pref * val


def _density_series(beta, s):
    total = 0.0
    logs = math.log(s)
    for k in range(1, _SERIES_MAX_TERMS + 1):
        sk = math.sin(k * math.pi * beta)
        mag = math.exp(gammaln(k * beta + 1.0) - gammaln(k + 1.0)
                       - (k * beta + 1.0) * logs)
        term = (-1.0) ** (k + 1) * sk * mag
        total += term
        if mag < 1e-17 * max(abs(total), 1e-300):
            break
    return total / math.pi


def subordinator_density(beta, s):
    """g_beta(1, s) for beta in (0, 1), s > 0."""
    if not 0 < beta < 1:
        raise ValueError(f"beta must lie in (0, 1), got {beta}")
    if not s > 0:
        raise ValueError(f"s must be positive, got {s}")
    if beta == 0.5:
        return s ** -1.5 * math.exp(-0.25 / s) / (2.0 * math.sqrt(math.pi))
    if s >= _S_SWITCH:
        return _density_series(beta, s)
    return _density_integral(beta, s)


@lru_cache(maxsize=32)
def _subordinator_interp(beta):
    """Fast scalar evaluator for g_beta(1, s), cached per beta.

    A log-log cubic spline covers the resolvable range; below it the
    density has underflowed, above it the tail series is used directly.
    """
    if beta == 0.5:
        c = 1.0 / (2.0 * math.sqrt(math.pi))

        def g_half(s):
            if s <= 0:
                return 0.0
            return c * s ** -1.5 * math.exp(-0.25 / s)

        return g_half

    n_per_decade = 160
    lo_exp, hi_exp = -12.0, 8.0
    s_grid = np.logspace(lo_exp, hi_exp, int((hi_exp - lo_exp) * n_per_decade) + 1)
    vals = np.array([subordinator_density(beta, s) for s in s_grid])
    keep = vals > 1e-290
    s_keep = s_grid[keep]
    spline = CubicSpline(np.log(s_keep), np.log(vals[keep]))
    s_lo, s_hi = float(s_keep[0]), float(s_keep[-1])

    def g(s):
        if s < s_lo:
            return 0.0
        if s > s_hi:
            return _density_series(beta, s)
        return math.exp(spline(math.log(s)))

    return g


__all__ = ["subordinator_density"]
