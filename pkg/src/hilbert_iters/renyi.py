"""Alternating fixed-point iteration for the Renyi measure of dependence.

Each half-step pushes one marginal through the entrywise power of the joint:
``x <- normalize((p^a y^(1-a))^(1/a))`` and symmetrically for ``y`` with the
transpose.  Both half-steps are ``|1 - 1/a|``-Lipschitz in the projective
metric; for a strictly positive joint the constant improves by the Birkhoff
coefficient of ``p^a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import birkhoff_coefficient, hilbert_distance
from .measures import JointMatrix, check_order, is_interior, probability_vector, renyi_objective
from .sampling import interior_pair, rng_for
from .trace import BOUNDARY_FLOOR, IterationTrace

__all__ = [
    "RenyiRun",
    "RenyiRates",
    "renyi_update_x",
    "renyi_update_y",
    "solve_renyi",
    "renyi_rate_bounds",
    "renyi_empirical_lipschitz",
    "OperatorRatios",
]


def _half_update(power: np.ndarray, v: np.ndarray, alpha: float, side: str) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape[0] != power.shape[1]:
        raise ValueError("marginal dimension does not match the joint")
    if v.min() <= 0:
        raise ValueError("update requires an interior marginal")
    image = power @ v ** (1.0 - alpha)
    if (image <= 0).any():
        index = int(np.argmin(image))
        raise ValueError(f"{side} {index} of the joint is zero")
    out = image ** (1.0 / alpha)
    return out / out.sum()


def renyi_update_x(joint: JointMatrix, y, alpha: float) -> np.ndarray:
    """Row-side marginal update ``normalize((p^a y^(1-a))^(1/a))``."""
    alpha = check_order(alpha)
    return _half_update(joint.entries**alpha, y, alpha, "row")


def renyi_update_y(joint: JointMatrix, x, alpha: float) -> np.ndarray:
    """Column-side marginal update, the row update of the transposed joint."""
    alpha = check_order(alpha)
    return _half_update(joint.entries.T**alpha, x, alpha, "column")


@dataclass
class RenyiRates:
    """Lipschitz bounds for the half-steps: ``gamma_prime = |1 - 1/a|`` always,
    and the Birkhoff-improved product only for strictly positive joints."""

    gamma_prime: float
    gamma_double_prime: float | None

    @property
    def effective(self) -> float:
        return self.gamma_double_prime if self.gamma_double_prime is not None else self.gamma_prime


def renyi_rate_bounds(joint: JointMatrix, alpha: float) -> RenyiRates:
    alpha = check_order(alpha)
    gamma_prime = abs(1.0 - 1.0 / alpha)
    gamma_double_prime = None
    if joint.full_support:
        gamma_double_prime = gamma_prime * birkhoff_coefficient(joint.entries**alpha)
    return RenyiRates(gamma_prime, gamma_double_prime)


@dataclass
class RenyiRun:
    """Inputs of one alternating run; the initial row marginal must be interior.

    Orders in [1/2, 1) or above 1 run in guaranteed mode; smaller orders make
    the underlying problem non-convex and are solved in exploratory mode with
    no optimality or rate claim.
    """

    alpha: float
    joint: JointMatrix
    initial_x: np.ndarray
    tolerance: float = 1e-12
    max_iterations: int = 100_000

    def __post_init__(self):
        self.alpha = check_order(self.alpha)
        self.initial_x = probability_vector(self.initial_x)
        if self.initial_x.shape[0] != self.joint.shape[0]:
            raise ValueError("initial marginal dimension differs from the joint")
        if not is_interior(self.initial_x):
            raise ValueError("initial marginal must be interior")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")

    @property
    def guaranteed(self) -> bool:
        return self.alpha >= 0.5


def solve_renyi(
    run: RenyiRun,
    reference_x: np.ndarray | None = None,
    reference_y: np.ndarray | None = None,
) -> tuple[IterationTrace, IterationTrace]:
    """Alternate the two half-steps until both projective steps fall below
    tolerance; returns the row-side and column-side traces.

    The row iterate produced at each step equals ``renyi_update_x`` applied
    to the previous column iterate bit for bit; the joint's entrywise power
    is computed once per run.
    """
    power = run.joint.entries**run.alpha
    power_t = run.joint.entries.T**run.alpha
    alpha = run.alpha

    x = run.initial_x
    y = _half_update(power_t, x, alpha, "column")
    xs = [x]
    ys = [y]
    objectives = [renyi_objective(run.joint, x, y, alpha)]
    steps_x: list[float] = []
    steps_y: list[float] = []
    converged = False
    boundary = False
    for _ in range(run.max_iterations):
        x_next = _half_update(power, y, alpha, "row")
        y_next = _half_update(power_t, x_next, alpha, "column")
        if min(x_next.min(), y_next.min()) < BOUNDARY_FLOOR:
            xs.append(x_next)
            ys.append(y_next)
            steps_x.append(math.inf)
            steps_y.append(math.inf)
            objectives.append(renyi_objective(run.joint, x_next, y_next, alpha))
            boundary = True
            break
        step_x = hilbert_distance(x_next, x)
        step_y = hilbert_distance(y_next, y)
        xs.append(x_next)
        ys.append(y_next)
        steps_x.append(step_x)
        steps_y.append(step_y)
        objectives.append(renyi_objective(run.joint, x_next, y_next, alpha))
        x, y = x_next, y_next
        if max(step_x, step_y) <= run.tolerance:
            converged = True
            break

    def _trace(points, steps, ref):
        return IterationTrace(
            iterates=points,
            step_distances=steps,
            objectives=list(objectives),
            converged=converged,
            iterations_used=len(points) - 1,
            boundary_attracted=boundary,
            to_reference=None if ref is None else [hilbert_distance(p, ref) for p in points],
        )

    return _trace(xs, steps_x, reference_x), _trace(ys, steps_y, reference_y)


@dataclass
class OperatorRatios:
    """Largest observed contraction ratios of the two half-steps."""

    x_update_max: float
    y_update_max: float


def renyi_empirical_lipschitz(
    joint: JointMatrix, alpha: float, n_pairs: int, seed: int
) -> OperatorRatios:
    """Sampled contraction ratios for both half-steps, deterministic given seed."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be at least 1")
    alpha = check_order(alpha)
    rng = rng_for(seed)
    m, n = joint.shape
    worst_x = 0.0
    worst_y = 0.0
    for _ in range(n_pairs):
        y, y2 = interior_pair(rng, n)
        worst_x = max(
            worst_x,
            hilbert_distance(renyi_update_x(joint, y, alpha), renyi_update_x(joint, y2, alpha))
            / hilbert_distance(y, y2),
        )
        x, x2 = interior_pair(rng, m)
        worst_y = max(
            worst_y,
            hilbert_distance(renyi_update_y(joint, x, alpha), renyi_update_y(joint, x2, alpha))
            / hilbert_distance(x, x2),
        )
    return OperatorRatios(worst_x, worst_y)
