import numpy as np
import pytest

from stablemult.grid import (GridSpec, SampledField, Spectrum, SymmetryError,
                             apply_symbol, dft, grid_norm, idft, inner_product,
                             translate)


@pytest.fixture
def grid():
    return GridSpec.centered(64, 16.0)


def test_grid_validation():
    with pytest.raises(ValueError):
        GridSpec(n=48, length=1.0, origin=0.0)  # not a power of two
    with pytest.raises(ValueError):
        GridSpec(n=8, length=1.0, origin=0.0)  # too small
    with pytest.raises(ValueError):
        GridSpec(n=64, length=-1.0, origin=0.0)


def test_frequencies_layout(grid):
    xi = grid.frequencies()
    assert xi[0] == 0.0
    assert xi[1] == pytest.approx(2.0 * np.pi / grid.length)
    assert xi.size == grid.n


def test_dft_constant(grid):
    f = SampledField(grid, np.full(grid.n, 3.0))
    c = dft(f).coeffs
    assert c[0] == pytest.approx(3.0 * grid.n)
    assert np.max(np.abs(c[1:])) < 1e-10


def test_dft_pure_cosine(grid):
    k = 5
    x = grid.points()
    f = SampledField(grid, np.cos(2.0 * np.pi * k * (x - grid.origin) / grid.length))
    c = np.abs(dft(f).coeffs)
    nz = np.nonzero(c > 1e-8)[0]
    assert set(nz) == {k, grid.n - k}


def test_roundtrip(grid):
    rng = np.random.default_rng(0)
    f = SampledField(grid, rng.standard_normal(grid.n))
    g = idft(dft(f))
    assert np.max(np.abs(g.values - f.values)) < 1e-12 * np.max(np.abs(f.values))


def test_idft_rejects_asymmetric(grid):
    c = np.zeros(grid.n, dtype=complex)
    c[3] = 1.0  # no conjugate partner
    with pytest.raises(SymmetryError):
        idft(Spectrum(grid, c))


def test_parseval(grid):
    rng = np.random.default_rng(1)
    f = SampledField(grid, rng.standard_normal(grid.n))
    lhs = grid_norm(f, 2.0) ** 2
    rhs = np.sum(np.abs(dft(f).coeffs) ** 2) / grid.n * grid.spacing
    assert lhs == pytest.approx(rhs, rel=1e-10)


def test_apply_symbol_identity_and_zero(grid):
    rng = np.random.default_rng(2)
    f = SampledField(grid, rng.standard_normal(grid.n))
    same = apply_symbol(f, lambda xi: np.ones_like(xi))
    assert np.max(np.abs(same.values - f.values)) < 1e-12
    zero = apply_symbol(f, lambda xi: np.zeros_like(xi))
    assert np.max(np.abs(zero.values)) < 1e-12


def test_apply_symbol_linear(grid):
    rng = np.random.default_rng(3)
    f = SampledField(grid, rng.standard_normal(grid.n))
    g = SampledField(grid, rng.standard_normal(grid.n))
    sym = lambda xi: np.exp(-np.abs(xi))
    lhs = apply_symbol(SampledField(grid, 2.5 * f.values + g.values), sym)
    rhs = 2.5 * apply_symbol(f, sym).values + apply_symbol(g, sym).values
    assert np.max(np.abs(lhs.values - rhs)) < 1e-10


def test_translate(grid):
    rng = np.random.default_rng(4)
    f = SampledField(grid, rng.standard_normal(grid.n))
    assert np.array_equal(translate(f, 0).values, f.values)
    assert np.array_equal(translate(f, grid.n).values, f.values)
    assert np.array_equal(translate(translate(f, 7), -7).values, f.values)


def test_translate_symbol_commute(grid):
    rng = np.random.default_rng(5)
    f = SampledField(grid, rng.standard_normal(grid.n))
    sym = lambda xi: 1.0 / (1.0 + np.abs(xi))
    a = apply_symbol(translate(f, 11), sym).values
    b = translate(apply_symbol(f, sym), 11).values
    assert np.max(np.abs(a - b)) < 1e-10


def test_norms_and_inner_product(grid):
    f = SampledField(grid, np.ones(grid.n))
    assert grid_norm(f, 1.0) == pytest.approx(grid.length)
    assert grid_norm(f, np.inf) == pytest.approx(1.0)
    g = SampledField(grid, 2.0 * np.ones(grid.n))
    assert inner_product(f, g) == pytest.approx(2.0 * grid.length)
