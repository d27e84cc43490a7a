"""Independent reference implementations used only to cross-check the library.

Everything here deliberately avoids the package's code paths: plain
double loops instead of spatial indexing, normal equations instead of
an orthogonal solve, digit strings with exact rationals instead of
floating accumulation, and arbitrary precision for the benchmark field.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import numpy as np

from wenoshep.smoothness import linear_lsq_fit


def brute_force_neighbors(nodes: np.ndarray, center, radius: float) -> list[int]:
    """All indices with distance strictly below radius, by scalar loop."""
    cx, cy = float(center[0]), float(center[1])
    out = []
    for i, (x, y) in enumerate(nodes):
        if (x - cx) ** 2 + (y - cy) ** 2 < radius * radius:
            out.append(i)
    return out


def radical_inverse_exact(k: int, base: int) -> float:
    """Radical inverse via digit reversal in exact rational arithmetic."""
    digits = []
    while k > 0:
        digits.append(k % base)
        k //= base
    value = Fraction(0)
    for j, d in enumerate(digits, start=1):
        value += Fraction(d, base**j)
    return float(value)


def kernel_scalar(family: str, r: float, eps: float) -> float:
    """Wendland values by direct scalar arithmetic; zero at and past support."""
    if r < 0:
        raise ValueError("negative distance")
    s = r * eps
    if s >= 1.0 or r >= 1.0 / eps:
        return 0.0
    if family == "w2":
        return (1.0 - s) ** 4 * (4.0 * s + 1.0)
    if family == "w4":
        return (1.0 - s) ** 6 * (35.0 * s * s + 18.0 * s + 3.0)
    raise ValueError(family)


def naive_shepard_value(nodes, values, x, family: str, eps: float):
    """Full O(N) loop: weight every node, normalize, accumulate. None if uncovered."""
    num = 0.0
    den = 0.0
    for (px, py), f in zip(nodes, values):
        r = math.sqrt((px - x[0]) ** 2 + (py - x[1]) ** 2)
        w = kernel_scalar(family, r, eps)
        num += w * f
        den += w
    if den == 0.0:
        return None
    return num / den


def naive_weno_value(nodes, values, indicators, x, family, eps, weno_eps, t):
    """Same loop with indicator damping applied to every nonzero weight."""
    num = 0.0
    den = 0.0
    for (px, py), f, ind in zip(nodes, values, indicators):
        r = math.sqrt((px - x[0]) ** 2 + (py - x[1]) ** 2)
        w = kernel_scalar(family, r, eps)
        if w == 0.0:
            continue
        alpha = w / (weno_eps + ind) ** t
        num += alpha * f
        den += alpha
    if den == 0.0:
        return None
    return num / den


def naive_stencil_members(nodes, i: int, c: float, h: float, min_size, growth=1.5):
    """Ball stencil with radius growth, by brute-force distance filtering."""
    n = len(nodes)
    target = max(3, min(min_size if min_size is not None else 6, n))
    radius = c * h
    members = brute_force_neighbors(nodes, nodes[i], radius)
    while len(members) < target:
        radius *= growth
        members = brute_force_neighbors(nodes, nodes[i], radius)
    return members


def naive_indicators(nodes, values, c, h, min_size=None):
    """Per-node mean absolute plane-fit residuals over brute-force stencils.

    The fit itself is shared with the library so that stencil membership
    is the only thing this oracle exercises differently.
    """
    out = np.empty(len(nodes))
    for i in range(len(nodes)):
        members = naive_stencil_members(nodes, i, c, h, min_size)
        pts = nodes[members] - nodes[i]
        out[i] = linear_lsq_fit(pts, values[members]).mean_abs_residual
    return out


def plane_fit_normal_equations(points, values):
    """Degree-1 least squares through explicit normal equations.

    Returns (coeffs, mean abs residual). Distinct algorithm from the
    library's orthogonal solve, so agreement is meaningful.
    """
    pts = np.asarray(points, dtype=np.float64)
    vals = np.asarray(values, dtype=np.float64)
    design = np.column_stack([np.ones(len(pts)), pts])
    gram = design.T @ design
    rhs = design.T @ vals
    coeffs = np.linalg.solve(gram, rhs)
    resid = vals - design @ coeffs
    return coeffs, float(np.abs(resid).mean())


def franke_highprec(x: float, y: float) -> float:
    """Franke's surface evaluated term by term at 50 digits."""
    with mpmath.workdps(50):
        X = mpmath.mpf(repr(float(x)))
        Y = mpmath.mpf(repr(float(y)))
        t1 = mpmath.mpf(3) / 4 * mpmath.exp(-((9 * X - 2) ** 2 + (9 * Y - 2) ** 2) / 4)
        t2 = mpmath.mpf(3) / 4 * mpmath.exp(-((9 * X + 1) ** 2) / 49 - (9 * Y + 1) / 10)
        t3 = mpmath.mpf(1) / 2 * mpmath.exp(-((9 * X - 7) ** 2 + (9 * Y - 3) ** 2) / 4)
        t4 = -mpmath.mpf(1) / 5 * mpmath.exp(-((9 * X - 4) ** 2) - (9 * Y - 7) ** 2)
        return float(t1 + t2 + t3 + t4)


def sampled_gamma_distance(geometry: str, x: float, y: float, samples: int = 20001) -> float:
    """Distance to the interface by dense sampling of its parameterization."""
    t = np.linspace(0.0, 1.0, samples)
    if geometry == "line":
        gx, gy = t, 1.0 - t
    elif geometry == "circle":
        theta = t * (math.pi / 2)
        gx, gy = 0.25 * np.cos(theta), 0.25 * np.sin(theta)
    elif geometry == "square":
        quarter = np.linspace(0.0, 1.0, samples)
        side = 0.5 + 0.5 * quarter
        gx = np.concatenate([side, side, np.full(samples, 0.5), np.full(samples, 1.0)])
        gy = np.concatenate([np.full(samples, 0.5), np.full(samples, 1.0), side, side])
    else:
        raise ValueError(geometry)
    return float(np.min(np.hypot(gx - x, gy - y)))
