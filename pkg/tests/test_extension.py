import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import erfc

from stablemult.density import StableParams
from stablemult.extension import (exit_cdf, exit_density, extend, qt_kernel,
                                  qt_symbol, sample_qt_kernel)
from stablemult.grid import GridSpec, SampledField


def test_exit_density_value():
    ref = math.exp(-0.5) * 2.0 ** 1.5 / (2.0 * math.sqrt(math.pi))
    assert exit_density(1.0, 0.5) == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_exit_density_mass(t):
    val, _ = quad(lambda s: exit_density(t, s), 0.0, np.inf, limit=300)
    assert val == pytest.approx(1.0, abs=1e-8)


def test_exit_cdf_values():
    assert exit_cdf(1.0, 1.0) == pytest.approx(erfc(0.5), rel=1e-12)
    assert exit_cdf(2.0, 1.0) == pytest.approx(erfc(1.0), rel=1e-12)
    assert exit_cdf(1.0, 0.0) == 0.0
    assert exit_cdf(1.0, 1e12) > 1.0 - 1e-5


def test_cdf_matches_density():
    h = 1e-5
    for s in np.linspace(0.1, 10.0, 25):
        fd = (exit_cdf(1.0, s + h) - exit_cdf(1.0, s - h)) / (2.0 * h)
        assert fd == pytest.approx(exit_density(1.0, s), abs=1e-6)


def test_qt_symbol():
    p = StableParams(1.0)
    assert qt_symbol(p, 0.0, 3.0) == 1.0
    assert qt_symbol(p, 5.0, 0.0) == 1.0
    assert qt_symbol(p, 1.0, 4.0) == pytest.approx(math.exp(-2.0), rel=1e-12)


def test_qt_kernel_monotone_and_mass():
    p = StableParams(1.0)
    g = GridSpec.centered(1024, 20.0)
    f = sample_qt_kernel(p, 1.0, g)
    assert f.values.sum() * g.spacing == pytest.approx(1.0, abs=1e-3)
    x = g.points()
    half = np.argsort(np.abs(x))
    ordered = f.values[half]
    assert np.all(np.diff(ordered) <= 1e-9 * ordered.max())


def test_qt_kernel_point_positive():
    p = StableParams(0.6)
    assert qt_kernel(p, 1.0, [0.3]) > 0.0
    with pytest.raises(ValueError):
        qt_kernel(p, -1.0, [0.0])


def test_extend_basics():
    p = StableParams(1.0)
    g = GridSpec.centered(256, 32.0)
    ones = SampledField(g, np.ones(g.n))
    out = extend(ones, p, 2.0)
    assert np.max(np.abs(out.values - 1.0)) < 1e-12
    x = g.points()
    f = SampledField(g, np.exp(-x * x))
    assert np.max(np.abs(extend(f, p, 0.0).values - f.values)) < 1e-12
    # mass conservation
    assert extend(f, p, 1.0).values.sum() == pytest.approx(f.values.sum(), rel=1e-9)


def test_extend_semigroup_and_contraction():
    p = StableParams(0.8)
    g = GridSpec.centered(256, 32.0)
    x = g.points()
    f = SampledField(g, np.exp(-x * x / 2.0))
    a = extend(extend(f, p, 0.7), p, 0.4).values
    b = extend(f, p, 1.1).values
    assert np.max(np.abs(a - b)) <= 1e-10 * np.max(np.abs(f.values))
    assert np.max(np.abs(extend(f, p, 3.0).values)) <= np.max(np.abs(f.values)) + 1e-10


def test_extend_matches_kernel_convolution():
    # spectral route vs direct circular convolution with the sampled kernel
    p = StableParams(1.0)
    g = GridSpec.centered(512, 40.0)
    x = g.points()
    f = SampledField(g, np.exp(-x * x))
    spectral = extend(f, p, 1.0).values
    q = sample_qt_kernel(p, 1.0, g).values
    conv = np.fft.ifft(np.fft.fft(f.values) * np.fft.fft(np.fft.ifftshift(q))).real
    conv *= g.spacing
    assert np.max(np.abs(spectral - conv)) < 1e-2
