"""Per-run iteration records shared by the three fixed-point solvers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cone import hilbert_distance

__all__ = ["IterationTrace", "iterate_to_fixed_point"]

# Entries below this are treated as boundary collapse; the run is flagged
# and no rate claim is made for it.
BOUNDARY_FLOOR = 1e-300


@dataclass
class IterationTrace:
    """History of one fixed-point run.

    ``iterates[0]`` is the initial point; ``step_distances[t]`` is the
    projective distance between iterates t+1 and t, so it has one entry less
    than ``iterates``.  ``to_reference`` is filled only when the run was given
    a reference point.
    """

    iterates: list[np.ndarray]
    step_distances: list[float]
    objectives: list[float]
    converged: bool
    iterations_used: int
    boundary_attracted: bool = False
    to_reference: list[float] | None = None

    def __post_init__(self):
        if len(self.iterates) != len(self.step_distances) + 1:
            raise ValueError("need exactly one step distance between consecutive iterates")
        if len(self.objectives) != len(self.iterates):
            raise ValueError("need one objective value per iterate")
        if self.to_reference is not None and len(self.to_reference) != len(self.iterates):
            raise ValueError("need one reference distance per iterate")
        if self.iterations_used != len(self.iterates) - 1:
            raise ValueError("iterations_used must count operator applications")

    @property
    def final(self) -> np.ndarray:
        return self.iterates[-1]

    @property
    def final_objective(self) -> float:
        return self.objectives[-1]

    @property
    def final_step(self) -> float:
        return self.step_distances[-1] if self.step_distances else 0.0

    def step_ratios(self) -> list[float | None]:
        """Consecutive step-distance ratios, the empirical contraction record."""
        out: list[float | None] = []
        for prev, cur in zip(self.step_distances, self.step_distances[1:]):
            out.append(cur / prev if prev > 0 and math.isfinite(prev) else None)
        return out


def iterate_to_fixed_point(
    update: Callable[[np.ndarray], np.ndarray],
    objective: Callable[[np.ndarray], float],
    initial: np.ndarray,
    tolerance: float,
    max_iterations: int,
    reference: np.ndarray | None = None,
) -> IterationTrace:
    """Drive ``x <- update(x)`` until the projective step falls below tolerance.

    The iterate is renormalized to sum one after every update (the metric is
    scale invariant, so this only cancels floating-point drift).  A run whose
    iterate collapses toward the boundary is flagged and stopped; no rate
    claim holds for it.
    """
    x = np.asarray(initial, dtype=float)
    iterates = [x]
    objectives = [objective(x)]
    steps: list[float] = []
    converged = False
    boundary = False
    for _ in range(max_iterations):
        nxt = update(x)
        nxt = nxt / nxt.sum()
        if nxt.min() < BOUNDARY_FLOOR:
            iterates.append(nxt)
            steps.append(math.inf)
            objectives.append(objective(nxt))
            boundary = True
            break
        step = hilbert_distance(nxt, x)
        iterates.append(nxt)
        steps.append(step)
        objectives.append(objective(nxt))
        x = nxt
        if step <= tolerance:
            converged = True
            break
    to_reference = None
    if reference is not None:
        to_reference = [hilbert_distance(it, reference) for it in iterates]
    return IterationTrace(
        iterates=iterates,
        step_distances=steps,
        objectives=objectives,
        converged=converged,
        iterations_used=len(iterates) - 1,
        boundary_attracted=boundary,
        to_reference=to_reference,
    )
