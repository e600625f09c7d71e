import math

import numpy as np
import pytest

from stablemult.density import (DensityEvalSpec, StableParams, density,
                                density_partial, density_via_subordination,
                                envelope, tail_mass_bound, unit_density,
                                unit_density_partial)


CAUCHY = StableParams(1.0)


def cauchy(s, x):
    return s / (math.pi * (s * s + x * x))


def test_params_validation():
    with pytest.raises(ValueError):
        StableParams(0.0)
    with pytest.raises(ValueError):
        StableParams(2.0)
    with pytest.raises(ValueError):
        StableParams(1.0, 0)


def test_cauchy_point_values():
    assert density(CAUCHY, 1.0, [0.0]) == pytest.approx(1.0 / math.pi, rel=1e-8)
    assert density(CAUCHY, 2.0, [1.0]) == pytest.approx(2.0 / (5.0 * math.pi), rel=1e-8)


def test_symmetry():
    for alpha in (0.5, 1.3):
        p = StableParams(alpha)
        for x in (0.3, 1.7, 6.0):
            assert density(p, 1.0, [x]) == pytest.approx(density(p, 1.0, [-x]), rel=1e-12)


def test_scaling_at_origin():
    p = StableParams(0.7)
    p0 = density(p, 1.0, [0.0])
    for s in (0.5, 2.0, 5.0):
        assert density(p, s, [0.0]) == pytest.approx(s ** (-1.0 / 0.7) * p0, rel=1e-10)


def test_subordination_route_matches():
    for alpha in (0.5, 1.0, 1.5):
        p = StableParams(alpha)
        for x in (0.0, 0.5, 3.0):
            a = unit_density(p, [x])
            b = density_via_subordination(p, [x])
            assert b == pytest.approx(a, rel=1e-6)


def test_large_x_routes_through_subordination():
    # beyond the cutoff the two public entry points coincide by construction
    p = StableParams(1.5)
    spec = DensityEvalSpec()
    x = spec.cutoff + 10.0
    assert unit_density(p, [x]) == pytest.approx(
        density_via_subordination(p, [x]), rel=1e-12)


def test_derivative_closed_form():
    # d/dx of the Cauchy density at x=1 is -2/(4 pi)
    got = unit_density_partial(CAUCHY, [1.0], j=1, k=1)
    assert got == pytest.approx(-1.0 / (2.0 * math.pi), rel=1e-6)
    assert abs(unit_density_partial(CAUCHY, [0.0], j=1, k=1)) < 1e-9


def test_second_derivative_closed_form():
    # d2/dx2 of 1/(pi(1+x^2)) at 0 is -2/pi
    got = unit_density_partial(CAUCHY, [0.0], j=1, k=2)
    assert got == pytest.approx(-2.0 / math.pi, rel=1e-6)


def test_derivative_scaling():
    p = StableParams(0.8)
    s = 2.0
    direct = density_partial(p, s, [1.0], 1, 1)
    scale = s ** (-1.0 / 0.8)
    ref = s ** (-2.0 / 0.8) * unit_density_partial(p, [scale], 1, 1)
    assert direct == pytest.approx(ref, rel=1e-12)


def test_derivative_domain_errors():
    with pytest.raises(ValueError):
        unit_density_partial(CAUCHY, [1.0], j=1, k=3)
    with pytest.raises(ValueError):
        unit_density_partial(CAUCHY, [1.0], j=2, k=1)
    with pytest.raises(ValueError):
        density(CAUCHY, -1.0, [0.0])


def test_envelope_values():
    assert envelope(CAUCHY, 1.0, [0.0]) == pytest.approx(1.0)
    assert envelope(CAUCHY, 1.0, [10.0]) == pytest.approx(0.01)
    assert envelope(StableParams(0.5), 2.0, [1.0]) == pytest.approx(0.25)


def test_normalization_with_tail_bound():
    for alpha in (0.5, 1.0, 1.5):
        p = StableParams(alpha)
        xs = np.linspace(0.0, 50.0, 2001)
        vals = np.array([unit_density(p, [x]) for x in xs])
        mass = 2.0 * np.trapezoid(vals, xs) - vals[0] * 0.0
        total = mass + tail_mass_bound(p, 1.0, 50.0)
        assert total > 0.999
