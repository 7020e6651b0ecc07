"""Canonical small instances shipped with the package.

These are the fixtures used by the certification suite: closed-form
portfolio problems, a two-atom prior whose optimum a one-dimensional search
can locate, a non-product 2x2 joint, and the strictly positive three-asset
instance driving the non-contractivity probe.
"""

from __future__ import annotations

import numpy as np

from .measures import FinitePrior, JointMatrix, PortfolioInstance

__all__ = [
    "kelly_portfolio",
    "horse_race_portfolio",
    "probe_portfolio",
    "mixed_portfolio_d4",
    "two_atom_prior",
    "tilted_joint_2x2",
    "small_portfolios",
]


def kelly_portfolio() -> PortfolioInstance:
    """Two disjoint bets; the optimal split equals the win probabilities."""
    return PortfolioInstance(np.array([[3.0, 0.0], [0.0, 3.0]]), np.array([0.6, 0.4]))


def horse_race_portfolio(
    weights=(0.5, 0.3, 0.2), odds=(2.0, 3.0, 6.0)
) -> PortfolioInstance:
    """Scaled basis-vector atoms; the optimal portfolio is the weight vector."""
    weights = np.asarray(weights, dtype=float)
    odds = np.asarray(odds, dtype=float)
    atoms = np.diag(odds)
    return PortfolioInstance(atoms, weights)


def probe_portfolio() -> PortfolioInstance:
    """Strictly positive three-asset instance for the non-contractivity probe.

    The last two coordinates of every atom coincide, so the probe's moving
    direction is exactly the dominant coordinate pair.
    """
    atoms = np.array(
        [
            [2.0, 1.0, 1.0],
            [1.0, 3.0, 3.0],
            [5.0, 2.0, 2.0],
        ]
    )
    return PortfolioInstance(atoms, np.array([0.3, 0.4, 0.3]))


def mixed_portfolio_d4() -> PortfolioInstance:
    """Four assets with overlapping supports and an interior optimum."""
    atoms = np.array(
        [
            [1.8, 0.6, 1.0, 0.9],
            [0.7, 2.1, 0.8, 1.1],
            [1.0, 0.9, 1.7, 0.6],
            [0.8, 1.2, 0.7, 1.9],
            [1.1, 1.0, 1.0, 1.0],
        ]
    )
    return PortfolioInstance(atoms, np.array([0.25, 0.2, 0.2, 0.2, 0.15]))


def two_atom_prior() -> FinitePrior:
    """Two-point prior on the two-point simplex, the golden-section fixture."""
    return FinitePrior(
        np.array([[0.9, 0.1], [0.2, 0.8]]),
        np.array([0.5, 0.5]),
    )


def tilted_joint_2x2() -> JointMatrix:
    """Strictly positive non-product joint with visibly dependent marginals."""
    return JointMatrix(np.array([[0.4, 0.1], [0.2, 0.3]]))


def small_portfolios() -> list[PortfolioInstance]:
    """The bundled instances with closed-form or oracle-checkable optima."""
    return [kelly_portfolio(), horse_race_portfolio(), mixed_portfolio_d4()]
