"""Command line driver: convergence studies, jump reconstructions, raw evaluation."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .experiment import (
    ExperimentConfig,
    convergence_study,
    diffusion_width,
    discontinuity_experiment,
    emit_report,
)
from .fields import GEOMETRIES, make_field
from .kernels import make_kernel
from .points import fill_distance, read_points_csv, read_query_csv
from .smoothness import StencilRule, all_indicators, write_indicators_csv
from .weno import UncoveredPointsError, build_interpolant, eval_batch

_BOOL_TRUE = {"true", "1", "yes", "on"}
_BOOL_FALSE = {"false", "0", "no", "off"}


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the contract reserves 2 for
    uncovered points, so malformed command lines map to 3 instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _parse_levels(text: str) -> tuple[int, ...]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(part) for part in text.split(","))


def _parse_modes(text: str) -> tuple[str, ...]:
    if text == "both":
        return ("linear", "weno")
    return tuple(part.strip() for part in text.split(","))


def _add_common(parser: _Parser, eval_grid: bool = True) -> None:
    parser.add_argument("--config", help="key=value file mirroring the flags; flags win")
    parser.add_argument("--kernel", choices=("w2", "w4"), default="w2")
    parser.add_argument("--stencil-c", type=float, default=2.5)
    parser.add_argument("--stencil-min-size", type=int, default=None)
    parser.add_argument("--weno-epsilon", type=float, default=1e-14)
    parser.add_argument("--weno-t", type=int, default=4)
    parser.add_argument("--eps-shape", type=float, default=None,
                        help="override the level-based shape parameter")
    parser.add_argument("--probe-resolution", type=int, default=512)
    parser.add_argument("--allow-uncovered", action="store_true")
    if eval_grid:
        parser.add_argument("--eval-grid-n", type=int, default=101)
        parser.add_argument("--no-figures", dest="figures", action="store_false")
        parser.add_argument("--dump-indicators", action="store_true")


def _build_parser() -> _Parser:
    parser = _Parser(prog="wenoshep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    conv = sub.add_parser("converge", help="multi-level error table on a smooth field")
    conv.add_argument("--points", default="grid",
                      help="grid | halton | path to an x,y,f csv")
    conv.add_argument("--levels", default="4..7", help="e.g. 4..7 or 4,5,6")
    conv.add_argument("--field", choices=("franke", "piecewise", "constant"),
                      default="franke")
    conv.add_argument("--gamma", choices=GEOMETRIES, default="line")
    conv.add_argument("--modes", default="both", help="linear | weno | both")
    conv.add_argument("--out", required=True, help="output directory")
    _add_common(conv)
    conv.set_defaults(run=_run_converge)

    disc = sub.add_parser("discont", help="reconstruct a unit jump at one level")
    disc.add_argument("--points", default="grid")
    disc.add_argument("--gamma", choices=GEOMETRIES, required=True)
    disc.add_argument("--level", type=int, required=True)
    disc.add_argument("--mode", choices=("linear", "weno", "both"), default="both")
    disc.add_argument("--out", required=True, help="output directory")
    _add_common(disc)
    disc.set_defaults(run=_run_discont)

    ev = sub.add_parser("eval", help="evaluate a csv node cloud at query points")
    ev.add_argument("--data", required=True, help="x,y,f node csv")
    ev.add_argument("--query", required=True, help="x,y query csv")
    ev.add_argument("--mode", choices=("linear", "weno"), default="weno")
    ev.add_argument("--out", required=True, help="results csv path")
    _add_common(ev, eval_grid=False)
    ev.set_defaults(run=_run_eval)

    return parser


def _load_config_file(path: str) -> dict[str, str]:
    entries: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, value = line.split("=", 1)
            entries[key.strip()] = value.strip()
    return entries


def _config_tokens(entries: dict[str, str]) -> list[str]:
    """Translate key=value entries to flag tokens injected before the real flags."""
    tokens: list[str] = []
    for key, value in entries.items():
        flag = "--" + key.replace("_", "-")
        lowered = value.lower()
        if lowered in _BOOL_TRUE or lowered in _BOOL_FALSE:
            truthy = lowered in _BOOL_TRUE
            if key == "figures":
                if not truthy:
                    tokens.append("--no-figures")
            elif truthy:
                tokens.append(flag)
            continue
        tokens.extend([flag, value])
    return tokens


def _inject_config(argv: list[str]) -> list[str]:
    if not argv or argv[0].startswith("-"):
        return argv
    rest = argv[1:]
    path = None
    for i, tok in enumerate(rest):
        if tok == "--config" and i + 1 < len(rest):
            path = rest[i + 1]
        elif tok.startswith("--config="):
            path = tok.split("=", 1)[1]
    if path is None:
        return argv
    # injected tokens come first, so explicit flags override them
    return [argv[0], *_config_tokens(_load_config_file(path)), *rest]


def _experiment_config(args, levels, modes) -> ExperimentConfig:
    return ExperimentConfig(
        levels=levels,
        kernel=args.kernel,
        points=args.points,
        field=args.field,
        gamma=args.gamma,
        modes=modes,
        eval_grid_n=args.eval_grid_n,
        stencil_c=args.stencil_c,
        stencil_min_size=args.stencil_min_size,
        weno_epsilon=args.weno_epsilon,
        weno_t=args.weno_t,
        eps_shape=args.eps_shape,
        probe_resolution=args.probe_resolution,
        allow_uncovered=args.allow_uncovered,
    )


def _dump_indicators(cfg: ExperimentConfig, out: Path) -> None:
    from .experiment import _level_setup  # reuse the study's node construction

    sampler = make_field(cfg.field, cfg.gamma)
    for level in cfg.levels:
        ps, _, h, _ = _level_setup(
            ExperimentConfig(**{**cfg.__dict__, "modes": ("linear",)}), level, sampler
        )
        iv = all_indicators(ps, cfg.stencil_rule(), h=h)
        write_indicators_csv(out / f"indicators_l{level}.csv", ps, iv)


def _run_converge(args) -> int:
    cfg = _experiment_config(args, _parse_levels(args.levels), _parse_modes(args.modes))
    report = convergence_study(cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    emit_report(report, "csv", out / "convergence.csv")
    emit_report(report, "json", out / "convergence.json")
    print(f"wrote {out / 'convergence.csv'}")
    print(f"wrote {out / 'convergence.json'}")
    if args.figures:
        from .figures import render_convergence

        render_convergence(report, out / "convergence.png")
        print(f"wrote {out / 'convergence.png'}")
    if args.dump_indicators:
        _dump_indicators(cfg, out)
    for row in report.rows:
        print(
            f"{row.method} l={row.level} h={row.h:.6g} "
            f"MAE={row.mae:.6g} RMSE={row.rmse:.6g}"
        )
    return 0


def _run_discont(args) -> int:
    args.field = "piecewise"
    cfg = _experiment_config(args, (args.level,), _parse_modes(args.mode))
    ef = discontinuity_experiment(cfg, args.level)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for mode in cfg.modes:
        path = out / f"error_field_{mode}.csv"
        emit_report(ef, "csv", path, mode=mode)
        print(f"wrote {path}")
    emit_report(ef, "json", out / "discont.json")
    print(f"wrote {out / 'discont.json'}")
    if args.figures:
        from .figures import render_error_field

        render_error_field(ef, out / "error_field.png")
        print(f"wrote {out / 'error_field.png'}")
    if args.dump_indicators:
        _dump_indicators(cfg, out)
    for mode in cfg.modes:
        width = diffusion_width(ef, mode, 0.1)
        print(f"{mode} diffusion width (threshold 0.1): {width:.4g} h")
    return 0


def _run_eval(args) -> int:
    ps = read_points_csv(args.data)
    queries = read_query_csv(args.query)
    eps = args.eps_shape
    if eps is None:
        # mirror the grid rule's support of four fill distances
        h = fill_distance(ps, args.probe_resolution).h
        eps = 1.0 / (4.0 * h)
    kern = make_kernel(args.kernel, eps)
    rule = StencilRule(c=args.stencil_c, min_size=args.stencil_min_size)
    interp = build_interpolant(
        ps, kern, mode=args.mode, rule=rule, probe_resolution=args.probe_resolution
    )
    values = eval_batch(interp, queries, allow_uncovered=args.allow_uncovered)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y,value\n")
        for (x, y), v in zip(queries, values):
            fh.write(f"{x:.17g},{y:.17g},{v:.17g}\n")
    print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _inject_config(argv)
        parser = _build_parser()
        args = parser.parse_args(argv)
        return args.run(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 3
    except UncoveredPointsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
