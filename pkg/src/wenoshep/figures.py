"""Render study reports to PNG: convergence curves and error heat maps."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import LogNorm

from .experiment import ConvergenceReport, ErrorField

_STYLES = {"linear": ("tab:blue", "o"), "weno": ("tab:red", "s")}


def render_convergence(report: ConvergenceReport, path) -> None:
    """Log-log error-vs-h curves, one pair of lines per method."""
    fig, ax = plt.subplots(figsize=(6.0, 4.5))
    for mode in report.config.modes:
        rows = [r for r in report.rows if r.method == mode]
        hs = [r.h for r in rows]
        color, marker = _STYLES.get(mode, ("tab:gray", "x"))
        ax.loglog(hs, [r.rmse for r in rows], color=color, marker=marker, label=f"{mode} RMSE")
        ax.loglog(
            hs,
            [r.mae for r in rows],
            color=color,
            marker=marker,
            linestyle="--",
            alpha=0.6,
            label=f"{mode} MAE",
        )
    ax.set_xlabel("fill distance h")
    ax.set_ylabel("error")
    cfg = report.config
    ax.set_title(f"{cfg.field} on {cfg.points} nodes, kernel {cfg.kernel}")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_error_field(ef: ErrorField, path) -> None:
    """Reconstruction and |error| panels for each mode of one experiment."""
    n = ef.config.eval_grid_n
    modes = list(ef.values)
    fig, axes = plt.subplots(2, len(modes), figsize=(5.0 * len(modes), 8.0), squeeze=False)
    for col, mode in enumerate(modes):
        vals = ef.values[mode].reshape(n, n)
        errs = np.maximum(ef.errors[mode].reshape(n, n), 1e-16)
        top = axes[0][col]
        im = top.imshow(vals, origin="lower", extent=(0, 1, 0, 1), cmap="viridis")
        top.set_title(f"{mode} reconstruction, level {ef.level}")
        fig.colorbar(im, ax=top, shrink=0.85)
        bot = axes[1][col]
        im = bot.imshow(
            errs,
            origin="lower",
            extent=(0, 1, 0, 1),
            cmap="magma",
            norm=LogNorm(vmin=1e-16, vmax=max(float(np.nanmax(errs)), 1e-15)),
        )
        bot.set_title(f"{mode} absolute error")
        fig.colorbar(im, ax=bot, shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
