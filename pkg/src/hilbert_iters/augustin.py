"""Augustin's fixed-point iteration and its contraction certificates.

One update step averages the tilted distributions ``p^a (.) x^(1-a)`` over
the prior.  The step is Lipschitz under the projective metric with constant
``2|1-a|`` in general and ``|1-a|`` on the two-point simplex, which yields a
geometric convergence rate whenever that constant is below one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import hilbert_distance
from .measures import (
    FinitePrior,
    augustin_objective,
    check_order,
    is_interior,
    probability_vector,
)
from .sampling import interior_pair, rng_for
from .trace import IterationTrace, iterate_to_fixed_point

__all__ = [
    "AugustinRun",
    "augustin_update_single",
    "augustin_update",
    "solve_augustin",
    "augustin_rate_bound",
    "augustin_empirical_lipschitz",
    "two_point_metric",
    "level_curve",
]


def augustin_update_single(p, x, alpha: float) -> np.ndarray:
    """Normalized tilted distribution ``p^a (.) x^(1-a)`` for one atom.

    Requires an interior ``x``: for alpha above one the negative power would
    blow up on a zero entry, so zeros are rejected for every order.
    """
    alpha = check_order(alpha)
    p = np.asarray(p, dtype=float)
    x = np.asarray(x, dtype=float)
    if p.shape != x.shape:
        raise ValueError("atom and point dimensions differ")
    if x.min() <= 0:
        raise ValueError("update requires an interior point")
    tilted = p**alpha * x ** (1.0 - alpha)
    return tilted / tilted.sum()


def augustin_update(prior: FinitePrior, x, alpha: float) -> np.ndarray:
    """Prior-weighted average of the single-atom updates.

    Coincides entrywise with ``x (.) (-grad objective)``, the classical form
    of the iteration.
    """
    alpha = check_order(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape[0] != prior.dimension:
        raise ValueError("dimension mismatch between prior and point")
    if x.min() <= 0:
        raise ValueError("update requires an interior point")
    tilted = prior.atoms**alpha * x[None, :] ** (1.0 - alpha)
    denoms = tilted.sum(axis=1)
    return (prior.weights / denoms) @ tilted


@dataclass
class AugustinRun:
    """Inputs of one solver run; the initial point must be interior."""

    alpha: float
    prior: FinitePrior
    initial: np.ndarray
    tolerance: float = 1e-12
    max_iterations: int = 100_000

    def __post_init__(self):
        self.alpha = check_order(self.alpha)
        self.initial = probability_vector(self.initial)
        if self.initial.shape[0] != self.prior.dimension:
            raise ValueError("initial point dimension differs from the prior")
        if not is_interior(self.initial):
            raise ValueError("initial point must be interior")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


def solve_augustin(run: AugustinRun, reference: np.ndarray | None = None) -> IterationTrace:
    """Iterate the averaged update until the projective step is below tolerance.

    On convergence at tolerance tau the fixed-point residual
    ``d_H(x_final, update(x_final))`` is at most ``2 tau`` for orders with a
    contraction factor of at most two.
    """
    return iterate_to_fixed_point(
        update=lambda x: augustin_update(run.prior, x, run.alpha),
        objective=lambda x: augustin_objective(run.prior, x, run.alpha),
        initial=run.initial,
        tolerance=run.tolerance,
        max_iterations=run.max_iterations,
        reference=reference,
    )


def augustin_rate_bound(alpha: float, d: int) -> float:
    """Proved Lipschitz constant of the averaged update: ``|1-a|`` when d = 2,
    otherwise ``2|1-a|``.  Values of one or more carry no guarantee."""
    alpha = check_order(alpha)
    if d < 2:
        raise ValueError("dimension must be at least 2")
    factor = abs(1.0 - alpha)
    return factor if d == 2 else 2.0 * factor


def augustin_empirical_lipschitz(
    prior: FinitePrior, alpha: float, n_pairs: int, seed: int
) -> float:
    """Largest observed contraction ratio of the averaged update over sampled
    interior pairs.  Deterministic given the seed."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be at least 1")
    rng = rng_for(seed)
    worst = 0.0
    for _ in range(n_pairs):
        x, y = interior_pair(rng, prior.dimension)
        num = hilbert_distance(
            augustin_update(prior, x, alpha), augustin_update(prior, y, alpha)
        )
        worst = max(worst, num / hilbert_distance(x, y))
    return worst


def two_point_metric(s: float, t: float) -> float:
    """Projective distance between ``(s, 1-s)`` and ``(t, 1-t)``."""
    if not (0.0 <= s <= 1.0 and 0.0 <= t <= 1.0):
        raise ValueError("arguments must lie in [0, 1]")
    return hilbert_distance(
        np.array([s, 1.0 - s]), np.array([t, 1.0 - t])
    )


def level_curve(beta: float, s) -> np.ndarray | float:
    """Boundary curve ``s / (s + e^beta (1-s))`` of the metric's level sets.

    Convex on [0, 1] for beta >= 0 and concave for beta <= 0; the region
    between the curves for +beta and -beta is exactly the set of pairs at
    two-point distance at most beta.
    """
    s = np.asarray(s, dtype=float)
    out = s / (s + math.exp(beta) * (1.0 - s))
    return out if out.ndim else float(out)
