"""Session fixtures for the expensive studies shared across test modules."""

from __future__ import annotations

import time

import numpy as np
import pytest

from wenoshep import (
    ExperimentConfig,
    convergence_study,
    discontinuity_experiment,
    fill_distance,
    regular_grid,
)
from wenoshep.fields import franke, make_field
from wenoshep.kernels import kernel_for_level
from wenoshep.smoothness import StencilRule, all_indicators


@pytest.fixture(scope="session")
def grid_w2_study():
    """Default study (W2, grid, Franke, levels 4..7) plus its wall time."""
    start = time.perf_counter()
    report = convergence_study(ExperimentConfig())
    return report, time.perf_counter() - start


@pytest.fixture(scope="session")
def grid_w4_study():
    return convergence_study(ExperimentConfig(kernel="w4"))


@pytest.fixture(scope="session")
def halton_w2_study():
    return convergence_study(ExperimentConfig(points="halton"))


@pytest.fixture(scope="session")
def halton_w4_study():
    return convergence_study(ExperimentConfig(points="halton", kernel="w4"))


@pytest.fixture(scope="session")
def line_jump_fields():
    """Unit-jump reconstructions across the diagonal interface, levels 5..7."""
    out = {}
    for level in (5, 6, 7):
        cfg = ExperimentConfig(levels=(level,), field="piecewise", gamma="line")
        out[level] = discontinuity_experiment(cfg, level)
    return out


@pytest.fixture(scope="session")
def jump_grids():
    """(point set, h, indicators, kernel) per level for the unit-jump field."""

    def sampler(x, y):
        return np.where(1.0 - x - y >= 0.0, 1.0, 0.0)

    out = {}
    for level in (4, 5, 6, 7):
        ps = regular_grid(level, sampler)
        h = fill_distance(ps).h
        iv = all_indicators(ps, StencilRule(), h=h)
        out[level] = (ps, h, iv, kernel_for_level("w2", level))
    return out


@pytest.fixture(scope="session")
def franke_indicator_grids():
    """(point set, h, indicators) on the smooth field at levels 6 and 7."""
    out = {}
    for level in (6, 7):
        ps = regular_grid(level, franke)
        h = fill_distance(ps).h
        out[level] = (ps, h, all_indicators(ps, StencilRule(), h=h))
    return out
