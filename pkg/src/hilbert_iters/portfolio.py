"""Cover's fixed-point iteration for the log-optimal portfolio.

The update reinvests each coordinate proportionally to its expected
contribution: ``x <- E[a (.) x / <a, x>]``.  The map is not a contraction in
the projective metric (the probe below exhibits ratios arbitrarily close to
one), but near an interior optimum the contraction ratio is bounded by the
largest off-diagonal entry of the objective's Hessian, which is below one on
the two-asset simplex whenever the return ratio is not constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cone import hilbert_distance
from .measures import PortfolioInstance, is_interior, portfolio_objective, probability_vector
from .trace import IterationTrace, iterate_to_fixed_point

__all__ = [
    "PortfolioRun",
    "portfolio_update",
    "portfolio_gradient",
    "portfolio_hessian",
    "solve_portfolio",
    "contraction_ratio_bound",
    "noncontractivity_probe",
    "ProbeResult",
]


def _positive_returns(inst: PortfolioInstance, x: np.ndarray) -> np.ndarray:
    returns = inst.atoms @ x
    if (returns <= 0).any():
        index = int(np.argmin(returns))
        raise ValueError(f"atom {index} is orthogonal to the support of x")
    return returns


def portfolio_update(inst: PortfolioInstance, x) -> np.ndarray:
    """Expected rebalance ``E[a (.) x / <a, x>]``.

    Scale invariant, so any strictly positive vector is accepted; on the
    simplex each summand is itself a probability vector, hence so is the
    output up to roundoff.
    """
    x = np.asarray(x, dtype=float)
    returns = _positive_returns(inst, x)
    return ((inst.weights / returns)[:, None] * inst.atoms * x[None, :]).sum(axis=0)


def portfolio_gradient(inst: PortfolioInstance, x) -> np.ndarray:
    """Gradient of the expected negative log return; entry i is
    ``-E[a(i) / <a, x>]``.  Equals -1 in every coordinate at an interior
    optimum."""
    x = np.asarray(x, dtype=float)
    returns = _positive_returns(inst, x)
    return -(inst.weights / returns) @ inst.atoms


def portfolio_hessian(inst: PortfolioInstance, x) -> np.ndarray:
    """Hessian ``E[a a^T / <a, x>^2]`` of the objective."""
    x = np.asarray(x, dtype=float)
    returns = _positive_returns(inst, x)
    scaled = inst.atoms * (np.sqrt(inst.weights) / returns)[:, None]
    return scaled.T @ scaled


def contraction_ratio_bound(inst: PortfolioInstance, x) -> float:
    """Largest off-diagonal Hessian entry at ``x``; evaluated at the converged
    iterate it bounds the asymptotic contraction ratio of the update."""
    h = portfolio_hessian(inst, x)
    off = h[~np.eye(h.shape[0], dtype=bool)]
    return float(off.max())


@dataclass
class PortfolioRun:
    """Inputs of one solver run; the initial point must be interior."""

    instance: PortfolioInstance
    initial: np.ndarray
    tolerance: float = 1e-12
    max_iterations: int = 100_000

    def __post_init__(self):
        self.initial = probability_vector(self.initial)
        if self.initial.shape[0] != self.instance.dimension:
            raise ValueError("initial point dimension differs from the instance")
        if not is_interior(self.initial):
            raise ValueError("initial point must be interior")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


def solve_portfolio(run: PortfolioRun, reference: np.ndarray | None = None) -> IterationTrace:
    """Iterate the rebalance update; the objective never increases along the
    trace, and an interior limit satisfies the unit-gradient optimality
    condition."""
    return iterate_to_fixed_point(
        update=lambda x: portfolio_update(run.instance, x),
        objective=lambda x: portfolio_objective(run.instance, x),
        initial=run.initial,
        tolerance=run.tolerance,
        max_iterations=run.max_iterations,
        reference=reference,
    )


@dataclass
class ProbeResult:
    """Outcome of the non-contractivity probe."""

    empirical_ratio: float
    phi_prime_zero: float


def noncontractivity_probe(inst: PortfolioInstance, eps: float, t: float) -> ProbeResult:
    """Contraction ratio of the rebalance update along the witness curve.

    The curve starts at ``x0 = (1, eps, ..., eps)`` and moves the first
    coordinate to ``e^t``, which is at projective distance exactly ``t`` from
    the start.  ``phi_prime_zero`` is the closed-form derivative of the
    log-ratio of the first two updated coordinates at t = 0; as eps shrinks
    it approaches one, witnessing that no global contraction factor below one
    exists.
    """
    if eps <= 0 or t <= 0:
        raise ValueError("eps and t must be positive")
    d = inst.dimension
    x0 = np.full(d, eps)
    x0[0] = 1.0
    xt = x0.copy()
    xt[0] = math.exp(t)

    # the metric is projective, so the unnormalized curve is used directly
    moved = hilbert_distance(portfolio_update(inst, xt), portfolio_update(inst, x0))
    empirical = moved / t

    a1 = inst.atoms[:, 0]
    a2 = inst.atoms[:, 1]
    returns = inst.atoms @ x0
    w = inst.weights
    e_cross = float(np.sum(w * a1 * a2 / returns**2))
    e_second = float(np.sum(w * a2 / returns))
    e_first_sq = float(np.sum(w * a1**2 / returns**2))
    e_first = float(np.sum(w * a1 / returns))
    phi_prime = 1.0 + e_cross / e_second - e_first_sq / e_first
    return ProbeResult(empirical_ratio=empirical, phi_prime_zero=phi_prime)
