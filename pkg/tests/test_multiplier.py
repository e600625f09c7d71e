import math

import numpy as np
import pytest

from stablemult.density import StableParams
from stablemult.grid import GridSpec, SampledField, grid_norm
from stablemult.multiplier import (MultiplierProfile, TQuadSpec, apply_T,
                                   constant_c, g_function, lp_probe,
                                   pairing_check, second_difference, symbol_m,
                                   symbol_m_truncated)


@pytest.fixture
def small_grid():
    return GridSpec.centered(256, 32.0)


def bump(grid, w=0.5, c=0.0):
    x = grid.points()
    return SampledField(grid, np.exp(-((x - c) ** 2) / (2.0 * w * w)))


def test_profile_validation():
    with pytest.raises(ValueError):
        MultiplierProfile("nope")
    with pytest.raises(ValueError):
        MultiplierProfile("tabulated")
    r = MultiplierProfile("tabulated", table=(np.array([0.0, 1.0, 2.0]),
                                              np.array([1.0, 0.5, 0.0])))
    assert r(0.5) == pytest.approx(0.75)
    assert r(5.0) == 0.0
    assert r.sup_bound == 1.0


def test_quadspec_validation():
    with pytest.raises(ValueError):
        TQuadSpec(t_min=2.0, t_max=1.0)
    with pytest.raises(ValueError):
        TQuadSpec(h_policy="sideways")


def test_second_difference_cosine(small_grid):
    k = 7
    xi = 2.0 * math.pi * k / small_grid.length
    x = small_grid.points()
    f = SampledField(small_grid, np.cos(xi * x))
    h = 5
    out = second_difference(f, h).values
    ref = 4.0 * math.sin(xi * h * small_grid.spacing / 2.0) ** 2 * np.cos(xi * x)
    assert np.max(np.abs(out - ref)) < 1e-10
    const = SampledField(small_grid, np.full(small_grid.n, 2.0))
    assert np.max(np.abs(second_difference(const, 3).values)) < 1e-12
    assert abs(out.sum()) < 1e-8
    with pytest.raises(ValueError):
        second_difference(f, small_grid.n)


def test_constant_c_values():
    assert constant_c(StableParams(1.0)) == pytest.approx(2.0 * math.pi, rel=1e-8)
    # closed form 4 Gamma(2-a) cos(pi a / 2) / (a (1 - a)) away from a = 1
    for a in (0.3, 0.6, 1.4):
        ref = 4.0 * math.gamma(2.0 - a) * math.cos(math.pi * a / 2.0) / (a * (1.0 - a))
        assert constant_c(StableParams(a)) == pytest.approx(ref, rel=1e-8)
    # continuity probe
    for a in (0.1, 0.5, 0.9):
        c0 = constant_c(StableParams(a))
        c1 = constant_c(StableParams(a + 1e-3))
        assert abs(c1 - c0) < 0.1 * c0


def test_symbol_m_closed_forms():
    p = StableParams(0.6)
    c = constant_c(p)
    r1 = MultiplierProfile("constant_one")
    assert symbol_m(2.0, r1, p) == pytest.approx(c / 4.0, rel=1e-12)
    assert symbol_m(0.0, r1, p) == 0.0
    re = MultiplierProfile("exp_decay")
    xi = 3.0
    lam = xi ** 0.3
    ref = c * xi ** 0.6 / (1.0 + 2.0 * lam) ** 2
    assert symbol_m(xi, re, p) == pytest.approx(ref, rel=1e-12)
    # boundedness
    xs = np.linspace(0.1, 50.0, 40)
    assert np.max(np.abs(symbol_m(xs, re, p))) <= c / 4.0 * (1.0 + 1e-6)


def test_symbol_m_tabulated_matches_exp():
    p = StableParams(0.6)
    t = np.linspace(0.0, 40.0, 4001)
    r_tab = MultiplierProfile("tabulated", table=(t, np.exp(-t)))
    re = MultiplierProfile("exp_decay")
    for xi in (0.5, 2.0, 8.0):
        assert symbol_m(xi, r_tab, p) == pytest.approx(symbol_m(xi, re, p), rel=1e-4)


def test_symbol_truncated_below_full():
    p = StableParams(0.6)
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec()
    for xi in (0.3, 1.0, 5.0):
        tr = symbol_m_truncated(xi, r, p, quad)
        assert 0.0 < tr < symbol_m(xi, r, p)
    assert symbol_m_truncated(0.0, r, p, quad) == 0.0


def test_apply_t_domain(small_grid):
    f = bump(small_grid)
    r = MultiplierProfile("constant_one")
    with pytest.raises(ValueError):
        apply_T(f, r, StableParams(1.2), TQuadSpec())
    with pytest.raises(ValueError):
        apply_T(f, r, StableParams(0.5, 2), TQuadSpec())


def test_apply_t_linear(small_grid):
    p = StableParams(0.5)
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec()
    f = bump(small_grid, 0.5)
    g = bump(small_grid, 1.0, 3.0)
    comb = SampledField(small_grid, 2.0 * f.values + g.values)
    lhs = apply_T(comb, r, p, quad).values
    rhs = 2.0 * apply_T(f, r, p, quad).values + apply_T(g, r, p, quad).values
    scale = np.max(np.abs(rhs))
    assert np.max(np.abs(lhs - rhs)) < 1e-10 * scale
    zero = SampledField(small_grid, np.zeros(small_grid.n))
    assert np.max(np.abs(apply_T(zero, r, p, quad).values)) == 0.0


def test_apply_t_diagonalizes(small_grid):
    # quick mid-band check of the closed-form symbol on a small grid
    p = StableParams(0.5)
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec(h_policy="full")
    f = bump(small_grid, 0.35)
    Tf = apply_T(f, r, p, quad)
    cf = np.fft.fft(f.values)
    ct = np.fft.fft(Tf.values)
    k = np.arange(4, small_grid.n // 4 + 1)
    ratio = (ct[k] / cf[k]).real
    xi = 2.0 * math.pi * k / small_grid.length
    target = symbol_m(xi, r, p)
    assert np.max(np.abs(ratio / target - 1.0)) < 0.02


def test_g_function_properties(small_grid):
    p = StableParams(0.7)
    quad = TQuadSpec()
    const = SampledField(small_grid, np.full(small_grid.n, 1.5))
    assert np.max(np.abs(g_function(const, p, quad).values)) < 1e-8
    f = bump(small_grid)
    g1 = g_function(f, p, quad).values
    f2 = SampledField(small_grid, 2.0 * f.values)
    g2 = g_function(f2, p, quad).values
    assert np.max(np.abs(g2 - 2.0 * g1)) < 1e-8 * np.max(g2)
    assert np.all(g1 >= 0.0)


def test_pairing_symmetric(small_grid):
    p = StableParams(0.5)
    quad = TQuadSpec()
    f = bump(small_grid, 0.5)
    g = bump(small_grid, 1.0, 2.0)
    _, rhs_fg = pairing_check(f, g, p, quad)
    _, rhs_gf = pairing_check(g, f, p, quad)
    assert rhs_fg == pytest.approx(rhs_gf, rel=1e-10)
    zero = SampledField(small_grid, np.zeros(small_grid.n))
    lhs, rhs = pairing_check(f, zero, p, quad)
    assert lhs == 0.0 and rhs == 0.0


def test_lp_probe_translation_invariant(small_grid):
    from stablemult.grid import translate
    p = StableParams(0.5)
    r = MultiplierProfile("exp_decay")
    quad = TQuadSpec()
    f = bump(small_grid, 0.8)
    fam = [f, translate(f, 17), translate(f, -29)]
    rep = lp_probe(fam, r, p, quad, 2.0)
    ratios = rep["ratios"]
    assert max(ratios) / min(ratios) - 1.0 < 1e-6
    with pytest.raises(ValueError):
        lp_probe(fam, r, p, quad, 1.0)
