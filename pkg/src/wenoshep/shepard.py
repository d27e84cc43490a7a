"""Shepard weights: normalized compact kernels over a node cloud."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import WeightKernel
from .points import PointSet


class EmptySupportError(ValueError):
    """No node carries weight at the query point."""

    def __init__(self, point):
        self.point = np.asarray(point, dtype=np.float64)
        super().__init__(
            f"no nodes within kernel support at ({self.point[0]:g}, {self.point[1]:g})"
        )


@dataclass(frozen=True)
class WeightVector:
    """Sparse convex weights at one query point, indices ascending."""

    indices: np.ndarray
    weights: np.ndarray
    point: np.ndarray

    def __len__(self) -> int:
        return self.indices.size


def shepard_weights(ps: PointSet, kernel: WeightKernel, x) -> WeightVector:
    """Normalized kernel weights W_i = w_i / sum_j w_j at x.

    Only nodes with strictly positive kernel value appear; if none do,
    the point is uncovered and EmptySupportError is raised.
    """
    x = np.asarray(x, dtype=np.float64)
    idx = ps.neighbors_within(x, kernel.support_radius)
    if idx.size == 0:
        raise EmptySupportError(x)
    dist = np.sqrt(np.sum((ps.nodes[idx] - x) ** 2, axis=1))
    raw = np.asarray(kernel(dist), dtype=np.float64)
    positive = raw > 0.0
    if not np.any(positive):
        raise EmptySupportError(x)
    idx = idx[positive]
    raw = raw[positive]
    return WeightVector(indices=idx, weights=raw / raw.sum(), point=x)


def eval_shepard(ps: PointSet, kernel: WeightKernel, x) -> float:
    """Linear Shepard value sum_i W_i f_i at x, summed in ascending index order."""
    wv = shepard_weights(ps, kernel, x)
    return float(np.dot(wv.weights, ps.values[wv.indices]))
