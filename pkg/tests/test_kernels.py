"""Wendland weight functions, the level shape rule, and custom profiles."""

import math

import numpy as np
import pytest

import oracles
from wenoshep.kernels import (
    custom_kernel,
    kernel_for_level,
    make_kernel,
    shape_parameter_for_level,
    wendland_c2,
    wendland_c4,
)
from wenoshep.points import PointSet
from wenoshep.shepard import shepard_weights


def test_hand_values_at_unit_shape():
    assert wendland_c2(0.0, 1.0) == 1.0
    assert wendland_c2(0.5, 1.0) == 0.1875
    assert wendland_c2(1.0, 1.0) == 0.0
    assert wendland_c2(2.0, 1.0) == 0.0
    assert wendland_c4(0.0, 1.0) == 3.0
    assert wendland_c4(0.5, 1.0) == 0.32421875
    assert wendland_c4(1.0, 1.0) == 0.0


def test_negative_distance_is_rejected():
    for fn in (wendland_c2, wendland_c4):
        with pytest.raises(ValueError):
            fn(-0.1, 1.0)
        with pytest.raises(ValueError):
            fn(np.array([0.2, -0.3]), 1.0)


def test_nonpositive_shape_is_rejected():
    with pytest.raises(ValueError):
        wendland_c2(0.5, 0.0)
    with pytest.raises(ValueError):
        make_kernel("w2", -2.0)


def test_shape_parameter_level_rule():
    assert shape_parameter_for_level(1) == 1 / math.sqrt(2)
    assert shape_parameter_for_level(4) == 8 / math.sqrt(2)
    for level in range(1, 9):
        assert shape_parameter_for_level(level) == 2 ** (level - 1) / math.sqrt(2)
    with pytest.raises(ValueError):
        shape_parameter_for_level(0)


def test_support_edge_is_an_exact_zero():
    # includes a shape whose 1/eps rounds so that r*eps lands below 1
    for eps in (1.0, 3.7, shape_parameter_for_level(4), 1 / 0.6):
        kern = make_kernel("w2", eps)
        edge = kern.support_radius
        assert kern(edge) == 0.0
        assert kern(edge * 1.5) == 0.0
        assert kern(edge * 0.999999) > 0.0
        k4 = make_kernel("w4", eps)
        assert k4(edge) == 0.0
        assert k4(np.array([0.0, edge, 2 * edge]))[1:].tolist() == [0.0, 0.0]


def test_profiles_match_scalar_oracle():
    rng = np.random.default_rng(11)
    for family, fn in (("w2", wendland_c2), ("w4", wendland_c4)):
        for _ in range(200):
            eps = float(rng.uniform(0.5, 8.0))
            r = float(rng.uniform(0.0, 1.5 / eps))
            assert fn(r, eps) == oracles.kernel_scalar(family, r, eps)


def test_monotone_decreasing_inside_support():
    rng = np.random.default_rng(5)
    for fn in (wendland_c2, wendland_c4):
        eps = 2.0
        for _ in range(500):
            r1, r2 = np.sort(rng.uniform(0.0, 1.0 / eps, size=2))
            w1, w2 = fn(r1, eps), fn(r2, eps)
            assert w1 >= w2
            if r2 < 1.0 / eps and r1 < r2:
                assert w1 > w2


def test_boundary_smoothness_by_central_differences():
    # W2 vanishes to 4th order and W4 to 6th at the cutoff, so divided
    # differences across the edge shrink accordingly as the step does
    eps = 2.0
    edge = 0.5
    for fn, k in ((wendland_c2, 4), (wendland_c4, 6)):
        for step in (1e-3, 1e-4, 1e-5, 1e-6):
            inner = fn(edge - step, eps)
            d1 = abs(fn(edge + step, eps) - inner) / (2 * step)
            d2 = abs(fn(edge + step, eps) - 2 * fn(edge, eps) + inner) / step**2
            bound = 80.0 * (eps * step) ** k
            assert d1 <= bound / step
            assert d2 <= bound / step**2
            assert d1 <= 1e-2 and d2 <= 1e-1  # visibly flat at the edge


def test_custom_profile_runs_through_the_weighting_path():
    def hat(r, eps):
        arr = np.asarray(r, dtype=np.float64)
        if np.any(arr < 0):
            raise ValueError("negative distance")
        out = np.maximum(0.0, 1.0 - eps * arr)
        return float(out) if np.isscalar(r) else out

    kern = custom_kernel("hat", hat, eps_shape=1.0)
    nodes = np.array([[0.0, 0.0], [0.5, 0.0]])
    ps = PointSet(nodes, np.array([1.0, 3.0]))
    wv = shepard_weights(ps, kern, np.array([0.25, 0.0]))
    # both hats give 0.75 at the midpoint, so the weights split evenly
    assert wv.weights.tolist() == [0.5, 0.5]


def test_make_kernel_rejects_unknown_family():
    with pytest.raises(ValueError, match="unknown kernel family"):
        make_kernel("w6", 1.0)


def test_kernel_for_level_combines_rule_and_family():
    kern = kernel_for_level("w4", 4)
    assert kern.family == "w4"
    assert kern.eps_shape == 8 / math.sqrt(2)
    assert kern.support_radius == pytest.approx(math.sqrt(2) / 8)
