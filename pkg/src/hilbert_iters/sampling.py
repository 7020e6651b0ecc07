"""Deterministic instance and point samplers for the experiment harness.

Every sampler takes a ``numpy.random.Generator``; reproducibility across a
sweep comes from ``rng_for``, which mixes the master seed with the trial key
through ``numpy.random.SeedSequence``.
"""

from __future__ import annotations

import numpy as np

from .cone import hilbert_distance
from .measures import FinitePrior, JointMatrix, PortfolioInstance

__all__ = [
    "rng_for",
    "random_interior_point",
    "interior_pair",
    "random_positive_matrix",
    "random_prior",
    "random_joint",
    "random_joint_with_zeros",
    "random_portfolio",
    "random_two_asset_portfolio",
    "generate_instance",
]

# Keeps sampled points away from the boundary so every pairwise Hilbert
# distance in a sweep stays finite.
MIN_ENTRY = 1e-6


def rng_for(seed: int, *key: int) -> np.random.Generator:
    """Generator for one trial, split deterministically from the master seed."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def random_interior_point(rng: np.random.Generator, d: int, floor: float = MIN_ENTRY) -> np.ndarray:
    """Uniform simplex point (normalized exponentials) floored away from zero."""
    x = rng.exponential(size=d)
    x /= x.sum()
    x = np.maximum(x, floor)
    return x / x.sum()


def interior_pair(
    rng: np.random.Generator, d: int, floor: float = MIN_ENTRY
) -> tuple[np.ndarray, np.ndarray]:
    """Two interior points at positive distance; degenerate draws are resampled."""
    while True:
        x = random_interior_point(rng, d, floor)
        y = random_interior_point(rng, d, floor)
        if hilbert_distance(x, y) > 1e-9:
            return x, y


def random_positive_matrix(
    rng: np.random.Generator, m: int, n: int, spread: float = 1.5
) -> np.ndarray:
    """Strictly positive matrix, exponentials of uniform variates."""
    return np.exp(rng.uniform(-spread, spread, size=(m, n)))


def random_prior(rng: np.random.Generator, d: int, atoms: int) -> FinitePrior:
    points = np.stack([random_interior_point(rng, d) for _ in range(atoms)])
    weights = random_interior_point(rng, atoms, floor=1e-3)
    return FinitePrior(points, weights)


def random_joint(rng: np.random.Generator, m: int, n: int) -> JointMatrix:
    a = random_positive_matrix(rng, m, n)
    a /= a.sum()
    a = np.maximum(a, MIN_ENTRY)
    return JointMatrix(a / a.sum())


def random_joint_with_zeros(
    rng: np.random.Generator, m: int, n: int, zeros: int = 1
) -> JointMatrix:
    """Joint with some zero entries but no zero row or column."""
    a = random_positive_matrix(rng, m, n)
    flat = [(i, j) for i in range(m) for j in range(n)]
    rng.shuffle(flat)
    placed = 0
    for i, j in flat:
        if placed == zeros:
            break
        a[i, j] = 0.0
        if (a[i] > 0).any() and (a[:, j] > 0).any():
            placed += 1
        else:
            a[i, j] = 1.0
    return JointMatrix(a / a.sum())


def random_portfolio(rng: np.random.Generator, d: int, atoms: int) -> PortfolioInstance:
    returns = np.exp(rng.uniform(-1.0, 1.0, size=(atoms, d)))
    weights = random_interior_point(rng, atoms, floor=1e-3)
    return PortfolioInstance(returns, weights)


def random_two_asset_portfolio(rng: np.random.Generator, atoms: int) -> PortfolioInstance:
    """Two-asset instance with an interior optimum and non-constant return ratio.

    Interior optimum holds iff both corner conditions E[a1/a2] > 1 and
    E[a2/a1] > 1 do; draws failing either (with a small margin) are rejected.
    """
    while True:
        inst = random_portfolio(rng, 2, atoms)
        first, second = inst.atoms[:, 0], inst.atoms[:, 1]
        ratios = first / second
        if ratios.max() - ratios.min() < 1e-6:
            continue
        if (inst.weights @ ratios) > 1.05 and (inst.weights @ (1.0 / ratios)) > 1.05:
            return inst


def generate_instance(kind: str, dim, richness: int = 4, seed: int = 0):
    """Deterministic problem instance for one (kind, dim, seed) cell.

    ``dim`` is an int for the Augustin and portfolio kinds and either an int
    (square) or an (m, n) pair for the Renyi kind.  ``richness`` is the atom
    count where atoms apply.
    """
    rng = rng_for(seed)
    if kind == "augustin":
        return random_prior(rng, int(dim), max(1, richness))
    if kind == "renyi":
        if isinstance(dim, (tuple, list)):
            m, n = (int(dim[0]), int(dim[1]))
        else:
            m = n = int(dim)
        return random_joint(rng, m, n)
    if kind == "portfolio":
        # two-asset draws are conditioned on an interior optimum, the regime
        # the asymptotic-rate certificate covers
        if int(dim) == 2:
            return random_two_asset_portfolio(rng, max(1, richness))
        return random_portfolio(rng, int(dim), max(1, richness))
    raise ValueError(f"unknown instance kind {kind!r}")
