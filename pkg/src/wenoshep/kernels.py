"""Compactly supported Wendland weight functions and the level shape rule."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


def _scaled(r, eps_shape: float) -> tuple[np.ndarray, np.ndarray]:
    """Scaled distances clamped to [0, 1] plus the mask of points inside support.

    The mask compares r against 1/eps_shape as well: rounding in r*eps can
    land one ulp below 1 right at the cutoff, and the support edge must be
    an exact zero.
    """
    if eps_shape <= 0.0:
        raise ValueError(f"shape parameter must be positive, got {eps_shape}")
    arr = np.asarray(r, dtype=np.float64)
    if np.any(arr < 0.0):
        raise ValueError("negative distance passed to a weight function")
    s = arr * eps_shape
    inside = (s < 1.0) & (arr < 1.0 / eps_shape)
    return np.minimum(s, 1.0), inside


def wendland_c2(r, eps_shape: float = 1.0):
    """C^2 Wendland function (1 - er)_+^4 (4er + 1) on direct distances."""
    s, inside = _scaled(r, eps_shape)
    out = np.where(inside, (1.0 - s) ** 4 * (4.0 * s + 1.0), 0.0)
    return float(out) if np.isscalar(r) else out


def wendland_c4(r, eps_shape: float = 1.0):
    """C^4 Wendland function (1 - er)_+^6 (35(er)^2 + 18er + 3), unnormalized."""
    s, inside = _scaled(r, eps_shape)
    out = np.where(inside, (1.0 - s) ** 6 * (35.0 * s * s + 18.0 * s + 3.0), 0.0)
    return float(out) if np.isscalar(r) else out


def shape_parameter_for_level(level: int) -> float:
    """Shape parameter floor((2^l + 1) / 2) / sqrt(2) tied to grid level l."""
    if level < 1:
        raise ValueError(f"level must be >= 1, got {level}")
    return ((2**level + 1) // 2) / math.sqrt(2.0)


_FAMILIES: dict[str, Callable] = {"w2": wendland_c2, "w4": wendland_c4}


@dataclass(frozen=True)
class WeightKernel:
    """A weight profile bound to one shape parameter.

    `profile(r, eps_shape)` must vanish for r >= 1/eps_shape and be
    nonnegative inside; both Wendland families qualify, and custom
    profiles plug into the same evaluation path.
    """

    family: str
    eps_shape: float
    profile: Callable = wendland_c2

    def __post_init__(self):
        if self.eps_shape <= 0.0:
            raise ValueError(f"shape parameter must be positive, got {self.eps_shape}")

    @property
    def support_radius(self) -> float:
        return 1.0 / self.eps_shape

    def __call__(self, r):
        return self.profile(r, self.eps_shape)


def make_kernel(family: str, eps_shape: float) -> WeightKernel:
    """Build a named kernel; families: w2, w4."""
    try:
        profile = _FAMILIES[family]
    except KeyError:
        raise ValueError(
            f"unknown kernel family {family!r}; expected one of {sorted(_FAMILIES)}"
        ) from None
    return WeightKernel(family=family, eps_shape=eps_shape, profile=profile)


def custom_kernel(name: str, profile: Callable, eps_shape: float) -> WeightKernel:
    """Wrap a user profile (r, eps_shape) -> weights as a WeightKernel."""
    return WeightKernel(family=name, eps_shape=eps_shape, profile=profile)


def kernel_for_level(family: str, level: int) -> WeightKernel:
    """Named kernel with the level-l shape parameter."""
    return make_kernel(family, shape_parameter_for_level(level))
