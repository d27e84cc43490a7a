"""Benchmark fields: Franke's surface and unit-jump variants of it."""

from __future__ import annotations

import numpy as np

GEOMETRIES = ("line", "circle", "square")

CONSTANT_VALUE = 7.0


def franke(x, y):
    """Franke's bivariate test surface on the unit square."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    t1 = 0.75 * np.exp(-((9 * x - 2) ** 2 + (9 * y - 2) ** 2) / 4)
    t2 = 0.75 * np.exp(-((9 * x + 1) ** 2) / 49 - (9 * y + 1) / 10)
    t3 = 0.5 * np.exp(-((9 * x - 7) ** 2 + (9 * y - 3) ** 2) / 4)
    t4 = -0.2 * np.exp(-((9 * x - 4) ** 2) - (9 * y - 7) ** 2)
    out = t1 + t2 + t3 + t4
    return float(out) if np.isscalar(x) and np.isscalar(y) else out


def gamma_value(geometry: str, x, y):
    """Level function of the interface curve; the plus region is {gamma >= 0}."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if geometry == "line":
        out = 1.0 - x - y
    elif geometry == "circle":
        out = 0.0625 - x * x - y * y
    elif geometry == "square":
        out = np.where((x >= 0.5) & (y >= 0.5), 1.0, -1.0)
    else:
        raise ValueError(f"unknown geometry {geometry!r}; expected one of {GEOMETRIES}")
    return float(out) if np.isscalar(out) or out.ndim == 0 else out


def piecewise_tilde_f(geometry: str, x, y):
    """Franke's surface lifted by exactly 1 on the plus side of the interface."""
    base = franke(x, y)
    jump = np.where(np.asarray(gamma_value(geometry, x, y)) >= 0.0, 1.0, 0.0)
    out = base + jump
    return float(out) if np.isscalar(base) else out


def distance_to_gamma(geometry: str, x, y):
    """Exact Euclidean distance from (x, y) to the interface curve."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if geometry == "line":
        out = np.abs(1.0 - x - y) / np.sqrt(2.0)
    elif geometry == "circle":
        out = np.abs(np.hypot(x, y) - 0.25)
    elif geometry == "square":
        # boundary of [0.5, 1]^2: clamp-to-edge outside, nearest side inside
        dx = np.maximum(np.maximum(0.5 - x, x - 1.0), 0.0)
        dy = np.maximum(np.maximum(0.5 - y, y - 1.0), 0.0)
        outside = np.hypot(dx, dy)
        inside = np.minimum(
            np.minimum(x - 0.5, 1.0 - x), np.minimum(y - 0.5, 1.0 - y)
        )
        on_rect = (dx == 0.0) & (dy == 0.0)
        out = np.where(on_rect, np.maximum(inside, 0.0), outside)
    else:
        raise ValueError(f"unknown geometry {geometry!r}; expected one of {GEOMETRIES}")
    return float(out) if np.isscalar(out) or out.ndim == 0 else out


def make_field(kind: str, geometry: str = "line"):
    """Field sampler by name: franke, piecewise (needs a geometry), constant."""
    if kind == "franke":
        return franke
    if kind == "piecewise":
        if geometry not in GEOMETRIES:
            raise ValueError(f"unknown geometry {geometry!r}; expected one of {GEOMETRIES}")
        return lambda x, y: piecewise_tilde_f(geometry, x, y)
    if kind == "constant":
        return lambda x, y: np.full_like(np.asarray(x, dtype=np.float64), CONSTANT_VALUE)
    raise ValueError(f"unknown field {kind!r}; expected franke, piecewise or constant")
