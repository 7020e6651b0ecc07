"""Brute-force reference minimizers, independent of the solver operators.

These deliberately avoid the fixed-point updates so that agreement between a
solver limit and an oracle minimum is evidence rather than circularity:
golden-section search on the two-point simplex, a scan-and-refine grid for
2x2 product problems, and projected gradient descent for small convex cases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .measures import probability_vector

__all__ = [
    "OracleResult",
    "golden_section_d2",
    "grid_refine_2x2",
    "projected_gradient_reference",
    "project_to_simplex",
]

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass
class OracleResult:
    """Reference argmin and minimum with the resolution it was located at."""

    argmin: object
    min_value: float
    resolution: float

    def __post_init__(self):
        if not math.isfinite(self.min_value):
            raise ValueError("oracle minimum must be finite")
        if not self.resolution > 0:
            raise ValueError("resolution must be positive")


def _checked(objective: Callable[..., float], *args) -> float:
    value = float(objective(*args))
    if not math.isfinite(value):
        raise ValueError(f"objective is not finite at {args}")
    return value


def golden_section_d2(
    objective: Callable[[float], float],
    bracket: tuple[float, float] = (1e-9, 1.0 - 1e-9),
    width: float = 1e-10,
) -> OracleResult:
    """Golden-section search for a unimodal objective of ``s = x(1)``.

    Returns the located minimizer as the two-point simplex element
    ``(s, 1-s)``; the bracket is narrowed until it is shorter than ``width``.
    """
    a, b = bracket
    if not (a < b):
        raise ValueError("bracket must be a nonempty interval")
    if not width > 0:
        raise ValueError("width must be positive")
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = _checked(objective, c)
    fd = _checked(objective, d)
    while b - a > width:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = _checked(objective, c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = _checked(objective, d)
    s = 0.5 * (a + b)
    return OracleResult(
        argmin=np.array([s, 1.0 - s]),
        min_value=_checked(objective, s),
        resolution=b - a,
    )


def grid_refine_2x2(
    objective: Callable[[float, float], float],
    coarse_step: float = 1e-2,
    refinements: int = 6,
) -> OracleResult:
    """Global grid scan over ``(s, t) in (0,1)^2`` with local refinement.

    Each refinement rescans a window of one old step around the incumbent at
    a quarter of the step, so the final resolution is
    ``coarse_step / 4**refinements``.
    """
    if not (0.0 < coarse_step < 0.5):
        raise ValueError("coarse_step must lie in (0, 0.5)")
    if refinements < 1:
        raise ValueError("refinements must be at least 1")

    lo = 1e-9
    hi = 1.0 - 1e-9

    def scan(s_lo, s_hi, t_lo, t_hi, step):
        best = (math.inf, None, None)
        s_values = np.arange(max(s_lo, lo), min(s_hi, hi) + step / 2, step)
        t_values = np.arange(max(t_lo, lo), min(t_hi, hi) + step / 2, step)
        for s in s_values:
            for t in t_values:
                value = float(objective(float(s), float(t)))
                if value < best[0]:
                    best = (value, float(s), float(t))
        return best

    step = coarse_step
    value, s, t = scan(step, 1.0 - step / 2, step, 1.0 - step / 2, step)
    for _ in range(refinements):
        new_step = step / 4.0
        value, s, t = scan(s - step, s + step, t - step, t + step, new_step)
        step = new_step
    return OracleResult(
        argmin=(np.array([s, 1.0 - s]), np.array([t, 1.0 - t])),
        min_value=value,
        resolution=step,
    )


def project_to_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto the probability simplex (sort and threshold)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    cumulative = np.cumsum(u) - 1.0
    indices = np.arange(1, v.shape[0] + 1)
    rho = np.max(indices[u - cumulative / indices > 0])
    theta = cumulative[rho - 1] / rho
    return np.maximum(v - theta, 0.0)


def projected_gradient_reference(
    objective: Callable[[np.ndarray], float],
    gradient: Callable[[np.ndarray], np.ndarray],
    x1,
    steps: int = 2000,
) -> OracleResult:
    """Projected gradient descent with step ``c / sqrt(t)``, ``c`` tuned by
    backtracking on the first step; returns the best iterate seen.

    Gradients are evaluated after nudging the point 1e-12 inward so boundary
    iterates cannot break the evaluation.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    x = probability_vector(x1)

    def inward(p: np.ndarray) -> np.ndarray:
        nudged = np.maximum(p, 1e-12)
        return nudged / nudged.sum()

    best_x = x
    best_value = _checked(objective, x)

    g = gradient(inward(x))
    c = 1.0
    while c > 1e-12:
        trial = project_to_simplex(x - c * g)
        if float(objective(trial)) <= best_value:
            break
        c /= 2.0
    for t in range(1, steps + 1):
        g = gradient(inward(x))
        x = project_to_simplex(x - (c / math.sqrt(t)) * g)
        value = float(objective(x))
        if value < best_value:
            best_value = value
            best_x = x
    return OracleResult(argmin=best_x, min_value=best_value, resolution=c / math.sqrt(steps))
