"""Probability-simplex containers and the objective functions.

Holds the validated problem inputs (finitely supported priors over the
simplex, joint matrices, random return vectors) together with the Renyi
divergence and the three objectives minimized by the solver modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "probability_vector",
    "is_interior",
    "FinitePrior",
    "JointMatrix",
    "PortfolioInstance",
    "check_order",
    "renyi_divergence",
    "augustin_objective",
    "augustin_gradient",
    "renyi_objective",
    "portfolio_objective",
]

# Constructors renormalize sums off by at most this much and reject worse,
# so file round-trips cannot silently drift.
_RENORMALIZE_TOL = 1e-9


def probability_vector(entries) -> np.ndarray:
    """Validate and renormalize a point of the probability simplex.

    Accepts nonnegative entries whose sum is within 1e-9 of one and returns
    them divided by their exact sum; larger deviations are rejected.
    """
    x = np.asarray(entries, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise ValueError("expected a nonempty one-dimensional vector")
    if np.isnan(x).any():
        raise ValueError("NaN entry")
    if (x < 0).any():
        raise ValueError("negative entry in probability vector")
    total = float(x.sum())
    if abs(total - 1.0) > _RENORMALIZE_TOL:
        raise ValueError(f"entries sum to {total}, not 1")
    return x / total


def is_interior(x) -> bool:
    """True when every entry is strictly positive (relative interior)."""
    x = np.asarray(x, dtype=float)
    return bool(x.min() > 0)


def check_order(alpha: float) -> float:
    """Reject orders outside (0, inf) or equal to 1 (the KL limit)."""
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha <= 0 or alpha == 1.0:
        raise ValueError(f"order must lie in (0, inf) and differ from 1, got {alpha}")
    return alpha


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass
class FinitePrior:
    """Finitely supported distribution over the simplex: atoms plus weights."""

    atoms: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        atoms = np.asarray(self.atoms, dtype=float)
        if atoms.ndim != 2 or atoms.shape[0] < 1:
            raise ValueError("expected at least one atom, shaped (k, d)")
        self.atoms = _readonly(np.stack([probability_vector(row) for row in atoms]))
        self.weights = _readonly(probability_vector(self.weights))
        if self.weights.shape[0] != self.atoms.shape[0]:
            raise ValueError("one weight per atom required")
        if (self.weights <= 0).any():
            raise ValueError("weights must be strictly positive")

    @property
    def dimension(self) -> int:
        return self.atoms.shape[1]

    @property
    def size(self) -> int:
        return self.atoms.shape[0]

    @property
    def mean_atom(self) -> np.ndarray:
        return self.weights @ self.atoms


@dataclass
class JointMatrix:
    """Joint distribution on [m] x [n] stored as a nonnegative matrix summing to 1."""

    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=float)
        if a.ndim != 2 or a.size == 0:
            raise ValueError("expected a nonempty matrix")
        if np.isnan(a).any() or (a < 0).any():
            raise ValueError("entries must be nonnegative reals")
        total = float(a.sum())
        if abs(total - 1.0) > _RENORMALIZE_TOL:
            raise ValueError(f"entries sum to {total}, not 1")
        self.entries = _readonly(a / total)

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def full_support(self) -> bool:
        return bool(self.entries.min() > 0)


@dataclass
class PortfolioInstance:
    """Finitely supported random return vector: nonzero atoms in R_+^d."""

    atoms: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        atoms = np.asarray(self.atoms, dtype=float)
        if atoms.ndim != 2 or atoms.shape[1] < 2:
            raise ValueError("atoms must share a dimension d >= 2")
        if np.isnan(atoms).any() or (atoms < 0).any():
            raise ValueError("atom entries must be nonnegative")
        if not (atoms > 0).any(axis=1).all():
            raise ValueError("every atom must be nonzero")
        self.atoms = _readonly(atoms)
        self.weights = _readonly(probability_vector(self.weights))
        if self.weights.shape[0] != atoms.shape[0]:
            raise ValueError("one weight per atom required")
        if (self.weights <= 0).any():
            raise ValueError("weights must be strictly positive")

    @property
    def dimension(self) -> int:
        return self.atoms.shape[1]

    @property
    def size(self) -> int:
        return self.atoms.shape[0]


def renyi_divergence(p, q, alpha: float) -> float:
    """Order-alpha Renyi divergence ``log(sum p^a q^(1-a)) / (a - 1)``.

    Terms with ``p(s) = 0`` vanish (``0^a = 0``); for ``alpha > 1`` any
    ``q(s) = 0 < p(s)`` makes the divergence infinite.  Accumulation uses
    compensated summation so downstream 1e-10 tolerances stay meaningful.
    """
    alpha = check_order(alpha)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError(f"dimension mismatch: {p.shape} != {q.shape}")
    support = p > 0
    if alpha > 1 and (q[support] == 0).any():
        return math.inf
    terms = p[support] ** alpha * q[support] ** (1.0 - alpha)
    total = math.fsum(terms.tolist())
    if total == 0.0:
        return math.inf
    return math.log(total) / (alpha - 1.0)


def augustin_objective(prior: FinitePrior, x, alpha: float) -> float:
    """Prior-averaged Renyi divergence from the atoms to ``x``."""
    x = np.asarray(x, dtype=float)
    values = [
        w * renyi_divergence(atom, x, alpha)
        for atom, w in zip(prior.atoms, prior.weights)
    ]
    if any(math.isinf(v) for v in values):
        return math.inf
    return math.fsum(values)


def augustin_gradient(prior: FinitePrior, x, alpha: float) -> np.ndarray:
    """Gradient of the Augustin objective at an interior point.

    Entry j is ``-sum_i w_i p_i(j)^a x(j)^(-a) / <p_i^a, x^(1-a)>``.
    """
    alpha = check_order(alpha)
    x = np.asarray(x, dtype=float)
    if x.shape[0] != prior.dimension:
        raise ValueError("dimension mismatch between prior and point")
    if x.min() <= 0:
        raise ValueError("gradient requires an interior point")
    powers = prior.atoms**alpha
    tilted = powers * x[None, :] ** (1.0 - alpha)
    denoms = tilted.sum(axis=1)
    scaled = powers * x[None, :] ** (-alpha)
    return -(prior.weights / denoms) @ scaled


def renyi_objective(joint: JointMatrix, x, y, alpha: float) -> float:
    """Renyi divergence between the joint and the product ``x (x) y``."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    m, n = joint.shape
    if x.shape[0] != m or y.shape[0] != n:
        raise ValueError("marginal dimensions do not match the joint")
    return renyi_divergence(joint.entries.ravel(), np.outer(x, y).ravel(), alpha)


def portfolio_objective(inst: PortfolioInstance, x) -> float:
    """Expected negative log return ``-E[log <a, x>]``; inf on zero returns."""
    x = np.asarray(x, dtype=float)
    if x.shape[0] != inst.dimension:
        raise ValueError("dimension mismatch between instance and point")
    returns = inst.atoms @ x
    if (returns <= 0).any():
        return math.inf
    return -math.fsum((inst.weights * np.log(returns)).tolist())
