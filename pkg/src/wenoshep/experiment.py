"""Convergence studies, discontinuity reconstructions, and report emission."""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .fields import GEOMETRIES, distance_to_gamma, make_field
from .kernels import make_kernel, shape_parameter_for_level
from .points import PointSet, fill_distance, halton_points, read_points_csv, regular_grid
from .smoothness import StencilRule, all_indicators
from .weno import MODES, Interpolant, WenoConfig, eval_batch

FIELD_KINDS = ("franke", "piecewise", "constant")
POINT_SOURCES = ("grid", "halton")


@dataclass
class ExperimentConfig:
    """Everything one study run depends on; the JSON report mirrors it."""

    levels: tuple[int, ...] = (4, 5, 6, 7)
    kernel: str = "w2"
    points: str = "grid"
    field: str = "franke"
    gamma: str = "line"
    modes: tuple[str, ...] = ("linear", "weno")
    eval_grid_n: int = 101
    stencil_c: float = 2.5
    stencil_min_size: int | None = None
    weno_epsilon: float = 1e-14
    weno_t: int = 4
    eps_shape: float | None = None
    probe_resolution: int = 512
    allow_uncovered: bool = False

    def validate(self) -> None:
        if not self.levels:
            raise ValueError("levels must be nonempty")
        if list(self.levels) != sorted(set(self.levels)):
            raise ValueError(f"levels must be strictly ascending, got {self.levels}")
        if self.eval_grid_n < 2:
            raise ValueError(f"eval_grid_n must be >= 2, got {self.eval_grid_n}")
        if self.field not in FIELD_KINDS:
            raise ValueError(f"unknown field {self.field!r}; expected one of {FIELD_KINDS}")
        if self.gamma not in GEOMETRIES:
            raise ValueError(f"unknown geometry {self.gamma!r}; expected one of {GEOMETRIES}")
        bad = [m for m in self.modes if m not in MODES]
        if bad or not self.modes:
            raise ValueError(f"modes must be a nonempty subset of {MODES}, got {self.modes}")
        if self.points not in POINT_SOURCES and not self.points.endswith(".csv"):
            raise ValueError(
                f"points must be grid, halton, or a .csv path, got {self.points!r}"
            )
        if self.points.endswith(".csv") and self.eps_shape is None:
            raise ValueError("a csv point source needs an explicit eps_shape")

    def stencil_rule(self) -> StencilRule:
        return StencilRule(c=self.stencil_c, min_size=self.stencil_min_size)

    def weno_config(self) -> WenoConfig:
        return WenoConfig(epsilon=self.weno_epsilon, t=self.weno_t)


@dataclass(frozen=True)
class ReportRow:
    level: int
    h: float
    mae: float
    rate_inf: float | str | None
    rmse: float
    rate_2: float | str | None
    method: str


@dataclass
class ConvergenceReport:
    config: ExperimentConfig
    rows: list[ReportRow]
    n_nodes: dict[int, int] = field(default_factory=dict)
    uncovered: dict[str, int] = field(default_factory=dict)


@dataclass
class ErrorField:
    """Reconstruction and pointwise errors on the evaluation grid, per mode."""

    config: ExperimentConfig
    level: int
    h: float
    n_nodes: int
    points: np.ndarray
    truth: np.ndarray
    values: dict[str, np.ndarray]
    errors: dict[str, np.ndarray]
    dist_gamma: np.ndarray


def error_metrics(errors) -> tuple[float, float]:
    """(MAE, RMSE) = (max |e_i|, sqrt(mean e_i^2)) of a nonempty error list."""
    arr = np.asarray(errors, dtype=np.float64)
    if arr.size == 0:
        raise ValueError("error_metrics needs at least one error")
    return float(np.abs(arr).max()), float(np.sqrt(np.mean(arr * arr)))


EXACT_FLOOR = 1e-12


def convergence_rate(prev: tuple[float, float], curr: tuple[float, float]):
    """log(e_prev/e_curr) / log(h_prev/h_curr); 'exact' when an error vanishes.

    Errors at or below EXACT_FLOOR count as exact reproduction: a field
    reproduced to partition-of-unity roundoff has no meaningful rate.
    """
    h_prev, e_prev = prev
    h_curr, e_curr = curr
    if h_prev <= 0.0 or h_curr <= 0.0 or h_prev <= h_curr:
        raise ValueError(f"fill distances must be positive and decreasing, got {h_prev}, {h_curr}")
    if e_prev <= EXACT_FLOOR or e_curr <= EXACT_FLOOR:
        return "exact"
    return math.log(e_prev / e_curr) / math.log(h_prev / h_curr)


def eval_grid(n: int) -> np.ndarray:
    """Uniform n x n evaluation points offset half a cell from the lattice."""
    axis = (np.arange(n, dtype=np.float64) + 0.5) / n
    xx, yy = np.meshgrid(axis, axis, indexing="xy")
    return np.column_stack([xx.ravel(), yy.ravel()])


def _nodes_for_level(cfg: ExperimentConfig, level: int, sampler) -> PointSet:
    if cfg.points == "grid":
        return regular_grid(level, sampler)
    if cfg.points == "halton":
        return halton_points((2**level + 1) ** 2, sampler)
    return read_points_csv(cfg.points)


def _level_setup(cfg: ExperimentConfig, level: int, sampler):
    ps = _nodes_for_level(cfg, level, sampler)
    eps = cfg.eps_shape if cfg.eps_shape is not None else shape_parameter_for_level(level)
    kern = make_kernel(cfg.kernel, eps)
    h = fill_distance(ps, cfg.probe_resolution).h
    indicators = None
    if "weno" in cfg.modes:
        indicators = all_indicators(ps, cfg.stencil_rule(), h=h)
    return ps, kern, h, indicators


def _mode_values(cfg, ps, kern, indicators, mode, pts):
    interp = Interpolant(
        points=ps,
        kernel=kern,
        mode=mode,
        indicators=indicators if mode == "weno" else None,
        weno=cfg.weno_config(),
    )
    return eval_batch(interp, pts, allow_uncovered=cfg.allow_uncovered)


def convergence_study(cfg: ExperimentConfig) -> ConvergenceReport:
    """Per-level MAE/RMSE and rates for each requested mode.

    Uncovered evaluation points abort unless the config allows them, in
    which case they are dropped from the metrics and counted.
    """
    cfg.validate()
    sampler = make_field(cfg.field, cfg.gamma)
    pts = eval_grid(cfg.eval_grid_n)
    truth = np.asarray(sampler(pts[:, 0], pts[:, 1]), dtype=np.float64)

    per_mode: dict[str, list[ReportRow]] = {m: [] for m in cfg.modes}
    n_nodes: dict[int, int] = {}
    uncovered: dict[str, int] = {}
    for level in cfg.levels:
        ps, kern, h, indicators = _level_setup(cfg, level, sampler)
        n_nodes[level] = len(ps)
        for mode in cfg.modes:
            vals = _mode_values(cfg, ps, kern, indicators, mode, pts)
            mask = np.isfinite(vals)
            dropped = int((~mask).sum())
            if dropped:
                uncovered[f"{mode}@{level}"] = dropped
            mae, rmse = error_metrics(np.abs(vals[mask] - truth[mask]))
            prev = per_mode[mode][-1] if per_mode[mode] else None
            rate_inf = None if prev is None else convergence_rate((prev.h, prev.mae), (h, mae))
            rate_2 = None if prev is None else convergence_rate((prev.h, prev.rmse), (h, rmse))
            per_mode[mode].append(
                ReportRow(level, h, mae, rate_inf, rmse, rate_2, mode)
            )
    rows = [row for mode in cfg.modes for row in per_mode[mode]]
    return ConvergenceReport(config=cfg, rows=rows, n_nodes=n_nodes, uncovered=uncovered)


def discontinuity_experiment(cfg: ExperimentConfig, level: int | None = None) -> ErrorField:
    """Reconstruct the jump field at one level and attach distances to the interface."""
    cfg.validate()
    if cfg.field != "piecewise":
        raise ValueError("discontinuity_experiment needs field='piecewise'")
    if level is None:
        level = cfg.levels[-1]
    sampler = make_field(cfg.field, cfg.gamma)
    pts = eval_grid(cfg.eval_grid_n)
    truth = np.asarray(sampler(pts[:, 0], pts[:, 1]), dtype=np.float64)
    ps, kern, h, indicators = _level_setup(cfg, level, sampler)
    values: dict[str, np.ndarray] = {}
    errors: dict[str, np.ndarray] = {}
    for mode in cfg.modes:
        vals = _mode_values(cfg, ps, kern, indicators, mode, pts)
        values[mode] = vals
        errors[mode] = np.abs(vals - truth)
    return ErrorField(
        config=cfg,
        level=level,
        h=h,
        n_nodes=len(ps),
        points=pts,
        truth=truth,
        values=values,
        errors=errors,
        dist_gamma=np.asarray(distance_to_gamma(cfg.gamma, pts[:, 0], pts[:, 1])),
    )


def diffusion_width(ef: ErrorField, mode: str, threshold: float) -> float:
    """Largest distance to the interface with error above threshold, in h units."""
    if not 0.0 < threshold:
        raise ValueError(f"threshold must be positive, got {threshold}")
    err = ef.errors[mode]
    over = np.asarray(err > threshold)  # NaN entries compare False and drop out
    if not np.any(over):
        return 0.0
    return float(ef.dist_gamma[over].max() / ef.h)


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.17g}"


def _config_dict(cfg: ExperimentConfig) -> dict:
    out = dataclasses.asdict(cfg)
    out["levels"] = list(cfg.levels)
    out["modes"] = list(cfg.modes)
    return out


def _rate_json(v):
    return v if (v is None or isinstance(v, str)) else float(v)


def emit_report(report, format: str, path, mode: str | None = None) -> None:
    """Write one report file; csv for the tables, json for the config mirror.

    ErrorField CSV holds a single method's columns, so `mode` picks one
    when the experiment ran both.
    """
    if format not in ("csv", "json"):
        raise ValueError(f"format must be csv or json, got {format!r}")
    try:
        if isinstance(report, ConvergenceReport):
            if format == "csv":
                _write_convergence_csv(report, path)
            else:
                _write_convergence_json(report, path)
        elif isinstance(report, ErrorField):
            if format == "csv":
                _write_error_field_csv(report, path, mode)
            else:
                _write_error_field_json(report, path)
        else:
            raise TypeError(f"cannot emit a report of type {type(report).__name__}")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc}") from exc


def _write_convergence_csv(report: ConvergenceReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("l,h,MAE,rate_inf,RMSE,rate_2,method\n")
        for r in report.rows:
            fh.write(
                f"{r.level},{_fmt(r.h)},{_fmt(r.mae)},{_fmt(r.rate_inf)},"
                f"{_fmt(r.rmse)},{_fmt(r.rate_2)},{r.method}\n"
            )


def _write_convergence_json(report: ConvergenceReport, path) -> None:
    doc = {
        "config": _config_dict(report.config),
        "n_nodes": {str(k): v for k, v in report.n_nodes.items()},
        "uncovered": report.uncovered,
        "rows": [
            {
                "l": r.level,
                "h": r.h,
                "MAE": r.mae,
                "rate_inf": _rate_json(r.rate_inf),
                "RMSE": r.rmse,
                "rate_2": _rate_json(r.rate_2),
                "method": r.method,
            }
            for r in report.rows
        ],
    }
    _dump_json(doc, path)


def _write_error_field_csv(ef: ErrorField, path, mode: str | None) -> None:
    if mode is None:
        if len(ef.values) != 1:
            raise ValueError(f"ErrorField holds modes {sorted(ef.values)}; pick one")
        mode = next(iter(ef.values))
    vals = ef.values[mode]
    errs = ef.errors[mode]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y,value,error,dist_gamma\n")
        for (x, y), v, e, d in zip(ef.points, vals, errs, ef.dist_gamma):
            fh.write(f"{_fmt(x)},{_fmt(y)},{_fmt(v)},{_fmt(e)},{_fmt(d)}\n")


def _write_error_field_json(ef: ErrorField, path) -> None:
    metrics = {}
    for mode, errs in ef.errors.items():
        finite = errs[np.isfinite(errs)]
        mae, rmse = error_metrics(finite)
        metrics[mode] = {
            "MAE": mae,
            "RMSE": rmse,
            "diffusion_width_h": diffusion_width(ef, mode, 0.1),
        }
    doc = {
        "config": _config_dict(ef.config),
        "level": ef.level,
        "h": ef.h,
        "n_nodes": ef.n_nodes,
        "diffusion_threshold": 0.1,
        "metrics": metrics,
    }
    _dump_json(doc, path)


def _dump_json(doc: dict, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")
