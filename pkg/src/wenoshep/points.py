"""Point clouds on the unit square: generators, radius queries, fill distance."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree


@dataclass(frozen=True)
class FillDistanceEstimate:
    """Probe-grid estimate of sup_x min_i ||x - x_i|| over the unit square."""

    h: float
    probe_resolution: int


class _BucketGrid:
    """Uniform-bucket spatial index with cell size tied to one query radius."""

    def __init__(self, nodes: np.ndarray, cell: float):
        self.cell = cell
        self.origin = nodes.min(axis=0)
        keys = np.floor((nodes - self.origin) / cell).astype(np.int64)
        table: dict[tuple[int, ...], list[int]] = {}
        for i, key in enumerate(map(tuple, keys)):
            table.setdefault(key, []).append(i)
        self.table = {k: np.asarray(v, dtype=np.intp) for k, v in table.items()}

    def candidates(self, center: np.ndarray, radius: float) -> np.ndarray:
        lo = np.floor((center - radius - self.origin) / self.cell).astype(np.int64)
        hi = np.floor((center + radius - self.origin) / self.cell).astype(np.int64)
        found = []
        for kx in range(lo[0], hi[0] + 1):
            for ky in range(lo[1], hi[1] + 1):
                hit = self.table.get((kx, ky))
                if hit is not None:
                    found.append(hit)
        if not found:
            return np.empty(0, dtype=np.intp)
        return np.concatenate(found)


class PointSet:
    """Immutable 2-D node cloud with aligned scalar values.

    Radius queries go through a bucket index whose cell size matches the
    query radius; one index is cached per distinct radius.
    """

    def __init__(self, nodes: np.ndarray, values: np.ndarray):
        nodes = np.ascontiguousarray(np.asarray(nodes, dtype=np.float64))
        values = np.asarray(values, dtype=np.float64)
        if nodes.ndim != 2 or nodes.shape[1] != 2:
            raise ValueError(f"nodes must have shape (N, 2), got {nodes.shape}")
        if values.shape != (nodes.shape[0],):
            raise ValueError(
                f"values length {values.shape} does not match {nodes.shape[0]} nodes"
            )
        self.nodes = nodes
        self.values = values
        self._buckets: dict[float, _BucketGrid] = {}

    def __len__(self) -> int:
        return self.nodes.shape[0]

    @property
    def dim(self) -> int:
        return self.nodes.shape[1]

    def neighbors_within(self, center, radius: float) -> np.ndarray:
        """Indices of nodes with ||node - center|| < radius, ascending.

        Strict inequality: a node exactly on the sphere is excluded.
        """
        center = np.asarray(center, dtype=np.float64)
        if radius <= 0.0:
            return np.empty(0, dtype=np.intp)
        grid = self._buckets.get(radius)
        if grid is None:
            grid = _BucketGrid(self.nodes, radius)
            self._buckets[radius] = grid
        cand = grid.candidates(center, radius)
        if cand.size == 0:
            return cand
        d2 = np.sum((self.nodes[cand] - center) ** 2, axis=1)
        keep = cand[d2 < radius * radius]
        keep.sort()
        return keep


def regular_grid(level: int, field=None) -> PointSet:
    """Nodes (i/2^l, j/2^l) for i, j in 0..2^l, row-major from (0,0) to (1,1)."""
    if level < 1:
        raise ValueError(f"grid level must be >= 1, got {level}")
    n = 2**level + 1
    coords = np.arange(n, dtype=np.float64) / 2**level
    xx, yy = np.meshgrid(coords, coords, indexing="xy")
    nodes = np.column_stack([xx.ravel(), yy.ravel()])
    return PointSet(nodes, _sample(field, nodes))


def radical_inverse(k: int, base: int) -> float:
    """Van der Corput radical inverse of k in the given base; k = 0 maps to 0."""
    if k < 0:
        raise ValueError(f"index must be >= 0, got {k}")
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    inv = 0.0
    digit_weight = 1.0 / base
    while k > 0:
        inv += (k % base) * digit_weight
        k //= base
        digit_weight /= base
    return inv


def halton_points(count: int, field=None, start: int = 1) -> PointSet:
    """First `count` Halton points in bases (2, 3), starting at index 1."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    nodes = np.empty((count, 2), dtype=np.float64)
    for row, k in enumerate(range(start, start + count)):
        nodes[row, 0] = radical_inverse(k, 2)
        nodes[row, 1] = radical_inverse(k, 3)
    return PointSet(nodes, _sample(field, nodes))


def fill_distance(ps: PointSet, probe_resolution: int = 512) -> FillDistanceEstimate:
    """Estimate the fill distance of ps on a probe grid spanning [0,1]^2.

    Probes include the domain corners, so a lone interior node reports the
    corner distance. The estimate is a lower bound on the true sup and is
    within one probe-cell diagonal of it. The axis steps by 1/(r-1), which
    is incommensurate with dyadic node lattices, so their worst cell
    centers are approached closely instead of being straddled.
    """
    if probe_resolution < 2:
        raise ValueError(f"probe_resolution must be >= 2, got {probe_resolution}")
    r = probe_resolution
    axis = np.linspace(0.0, 1.0, r)
    px, py = np.meshgrid(axis, axis, indexing="xy")
    probes = np.column_stack([px.ravel(), py.ravel()])
    dist, _ = cKDTree(ps.nodes).query(probes, k=1)
    return FillDistanceEstimate(h=float(dist.max()), probe_resolution=r)


def _sample(field, nodes: np.ndarray) -> np.ndarray:
    if field is None:
        return np.zeros(nodes.shape[0], dtype=np.float64)
    out = np.asarray(field(nodes[:, 0], nodes[:, 1]), dtype=np.float64)
    return np.broadcast_to(out, (nodes.shape[0],)).copy()


def write_points_csv(path, ps: PointSet) -> None:
    """Emit the node cloud as x,y,f rows with 17 significant digits, LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y,f\n")
        for (x, y), v in zip(ps.nodes, ps.values):
            fh.write(f"{x:.17g},{y:.17g},{v:.17g}\n")


def read_points_csv(path) -> PointSet:
    """Parse an x,y,f node file; raises ValueError on schema violations."""
    rows = _read_csv_rows(path, ("x", "y", "f"))
    arr = np.asarray(rows, dtype=np.float64)
    return PointSet(arr[:, :2], arr[:, 2])


def read_query_csv(path) -> np.ndarray:
    """Parse evaluation points from an x,y file (a trailing f column is ignored)."""
    with open(path, "r", encoding="utf-8") as fh:
        header = [c.strip() for c in fh.readline().strip().split(",")]
    # pick the schema from the header alone so data errors keep their own message
    columns = ("x", "y", "f") if header == ["x", "y", "f"] else ("x", "y")
    rows = _read_csv_rows(path, columns)
    return np.asarray(rows, dtype=np.float64)[:, :2].reshape(-1, 2)


def _read_csv_rows(path, columns) -> list[list[float]]:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if [c.strip() for c in header.split(",")] != list(columns):
            raise ValueError(
                f"{path}: expected header {','.join(columns)!r}, got {header!r}"
            )
        rows = []
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != len(columns):
                raise ValueError(f"{path}:{lineno}: expected {len(columns)} fields")
            try:
                rows.append([float(p) for p in parts])
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from None
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return rows
