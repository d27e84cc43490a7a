"""Shepard interpolation with oscillation-damped nonlinear weights."""

from .experiment import (
    ConvergenceReport,
    ErrorField,
    ExperimentConfig,
    ReportRow,
    convergence_rate,
    convergence_study,
    diffusion_width,
    discontinuity_experiment,
    emit_report,
    error_metrics,
    eval_grid,
)
from .fields import distance_to_gamma, franke, gamma_value, make_field, piecewise_tilde_f
from .kernels import (
    WeightKernel,
    custom_kernel,
    kernel_for_level,
    make_kernel,
    shape_parameter_for_level,
    wendland_c2,
    wendland_c4,
)
from .points import (
    FillDistanceEstimate,
    PointSet,
    fill_distance,
    halton_points,
    radical_inverse,
    read_points_csv,
    regular_grid,
    write_points_csv,
)
from .shepard import EmptySupportError, WeightVector, eval_shepard, shepard_weights
from .smoothness import (
    IndicatorVector,
    LinearFit,
    Stencil,
    StencilRule,
    all_indicators,
    build_stencil,
    linear_lsq_fit,
    smoothness_indicator,
)
from .weno import (
    Interpolant,
    UncoveredPointsError,
    WenoConfig,
    build_interpolant,
    eval_batch,
    eval_point,
    nonlinear_weights,
)

__version__ = "0.1.0"
