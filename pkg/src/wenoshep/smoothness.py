"""Per-node oscillation indicators from local degree-1 least-squares fits."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .points import PointSet, fill_distance


@dataclass(frozen=True)
class StencilRule:
    """Ball-stencil sizing: radius c*h, grown by `growth` until the fit is sized.

    min_size of None means 2*(dim+1) members; the target is capped by the
    cloud size, so tiny clouds use every node. A degree-1 fit needs at
    least dim+1 points no matter what.
    """

    c: float = 2.5
    min_size: int | None = None
    growth: float = 1.5

    def target_size(self, dim: int, n_nodes: int) -> int:
        wanted = 2 * (dim + 1) if self.min_size is None else self.min_size
        return max(dim + 1, min(wanted, n_nodes))


@dataclass(frozen=True)
class Stencil:
    center: int
    members: np.ndarray
    radius: float
    enlargements: int


@dataclass(frozen=True)
class LinearFit:
    """Least-squares plane p(x) = coeffs[0] + coeffs[1:] . x and its residual size."""

    coeffs: np.ndarray
    mean_abs_residual: float
    rank: int


@dataclass(frozen=True)
class IndicatorVector:
    """All node indicators for one cloud, with the sizing they were built under."""

    values: np.ndarray
    rule: StencilRule
    h: float


def build_stencil(ps: PointSet, i: int, h: float, rule: StencilRule = StencilRule()) -> Stencil:
    """Nodes within c*h of node i, enlarged by the growth factor until sized."""
    n = len(ps)
    target = rule.target_size(ps.dim, n)
    if n < ps.dim + 1:
        raise ValueError(f"point set of size {n} cannot support a degree-1 fit")
    radius = rule.c * h
    if radius <= 0.0:
        raise ValueError(f"stencil radius must be positive, got {radius}")
    center = ps.nodes[i]
    enlargements = 0
    members = ps.neighbors_within(center, radius)
    while members.size < target:
        radius *= rule.growth
        enlargements += 1
        members = ps.neighbors_within(center, radius)
    return Stencil(center=i, members=members, radius=radius, enlargements=enlargements)


def linear_lsq_fit(points: np.ndarray, values: np.ndarray) -> LinearFit:
    """Fit p(x) = a + b . x by least squares in the coordinates given.

    One iterative-refinement step sharpens the residual; on rank-deficient
    geometry (collinear stencils) the fit falls back to the constant mean.
    """
    pts = np.asarray(points, dtype=np.float64)
    vals = np.asarray(values, dtype=np.float64)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-D array")
    n, dim = pts.shape
    if n < dim + 1:
        raise ValueError(f"need at least {dim + 1} points for a degree-1 fit, got {n}")
    design = np.column_stack([np.ones(n), pts])
    coeffs, _, rank, _ = np.linalg.lstsq(design, vals, rcond=None)
    if rank < dim + 1:
        mean = vals.mean()
        coeffs = np.zeros(dim + 1)
        coeffs[0] = mean
        residual = vals - mean
    else:
        correction, _, _, _ = np.linalg.lstsq(design, vals - design @ coeffs, rcond=None)
        coeffs = coeffs + correction
        residual = vals - design @ coeffs
    return LinearFit(
        coeffs=coeffs,
        mean_abs_residual=float(np.abs(residual).mean()),
        rank=int(rank),
    )


def smoothness_indicator(
    ps: PointSet, i: int, h: float, rule: StencilRule = StencilRule()
) -> float:
    """Mean absolute residual of the local plane fit around node i.

    Coordinates are centered at node i before fitting; the indicator does
    not depend on any evaluation point.
    """
    st = build_stencil(ps, i, h, rule)
    centered = ps.nodes[st.members] - ps.nodes[i]
    fit = linear_lsq_fit(centered, ps.values[st.members])
    return fit.mean_abs_residual


def all_indicators(
    ps: PointSet,
    rule: StencilRule = StencilRule(),
    h: float | None = None,
    probe_resolution: int = 512,
) -> IndicatorVector:
    """Indicators for every node, in node index order.

    Each entry depends only on its own stencil, so the computation order
    is immaterial; results are deterministic either way.
    """
    if h is None:
        h = fill_distance(ps, probe_resolution).h
    values = np.empty(len(ps), dtype=np.float64)
    for i in range(len(ps)):
        values[i] = smoothness_indicator(ps, i, h, rule)
    return IndicatorVector(values=values, rule=rule, h=h)


def write_indicators_csv(path, ps: PointSet, iv: IndicatorVector) -> None:
    """Dump per-node indicators as i,x,y,I rows."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("i,x,y,I\n")
        for i, ((x, y), ind) in enumerate(zip(ps.nodes, iv.values)):
            fh.write(f"{i},{x:.17g},{y:.17g},{ind:.17g}\n")
