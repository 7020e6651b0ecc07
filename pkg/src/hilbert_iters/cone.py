"""Hilbert's projective metric on the nonnegative orthant.

The metric lives on rays: ``hilbert_distance(x, y) = log(M(x/y) * M(y/x))``
where ``M(x/y) = max_i x(i)/y(i)`` is the smallest factor beta with
``x <= beta * y`` entrywise.  Strictly positive linear maps contract this
metric by Birkhoff's coefficient ``tanh(diameter/4)``.

Conventions: a 0/0 entry contributes ratio 1, any positive/0 entry makes the
ratio infinite, and ``log(inf) = inf``.  No operation here produces NaN;
inputs that would are rejected.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "max_ratio",
    "hilbert_distance",
    "projective_diameter",
    "birkhoff_coefficient",
]


def _checked_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or y.ndim != 1:
        raise ValueError("expected one-dimensional vectors")
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape[0]} != {y.shape[0]}")
    if x.size == 0:
        raise ValueError("empty vector")
    if np.isnan(x).any() or np.isnan(y).any():
        raise ValueError("NaN entry in input vector")
    if (x < 0).any() or (y < 0).any():
        raise ValueError("entries must be nonnegative")
    if not (x > 0).any() or not (y > 0).any():
        raise ValueError("zero vector is outside the projective domain")
    return x, y


def max_ratio(x, y) -> float:
    """Largest entrywise ratio ``max_i x(i)/y(i)``.

    A 0/0 entry contributes ratio 1; the result is ``inf`` when some
    ``y(i) = 0 < x(i)``.  Both vectors must be nonnegative and nonzero.
    """
    x, y = _checked_pair(x, y)
    if ((y == 0) & (x > 0)).any():
        return math.inf
    ratios = np.ones_like(x)
    pos = y > 0
    ratios[pos] = x[pos] / y[pos]
    return float(ratios.max())


def hilbert_distance(x, y) -> float:
    """Projective distance ``log(M(x/y) * M(y/x))`` between two rays.

    Computed as a spread of log-ratios when both vectors are strictly
    positive, which stays finite for entries spanning hundreds of orders of
    magnitude.  Scale invariant; ``inf`` on support mismatch.
    """
    x, y = _checked_pair(x, y)
    if x.min() > 0 and y.min() > 0:
        delta = np.log(x) - np.log(y)
        return float(delta.max() - delta.min())
    forward = max_ratio(x, y)
    backward = max_ratio(y, x)
    if math.isinf(forward) or math.isinf(backward):
        return math.inf
    return math.log(forward) + math.log(backward)


def projective_diameter(a) -> float:
    """Log of the largest cross-ratio ``A(i,j)A(i',j') / (A(i',j)A(i,j'))``.

    Zero iff the matrix is rank one; ``inf`` when some entry is zero.  The
    maximum runs over every pair of rows and pair of columns.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.size == 0:
        raise ValueError("expected a nonempty matrix")
    if np.isnan(a).any():
        raise ValueError("NaN entry in matrix")
    if (a < 0).any():
        raise ValueError("entries must be nonnegative")
    if a.min() <= 0:
        return math.inf
    logs = np.log(a)
    worst = 0.0
    for i in range(logs.shape[0]):
        # max over columns j, j' of (L[i,j]-L[k,j]) - (L[i,j']-L[k,j'])
        diff = logs[i][None, :] - logs
        spread = diff.max(axis=1) - diff.min(axis=1)
        worst = max(worst, float(spread.max()))
    return worst


def birkhoff_coefficient(a) -> float:
    """Contraction coefficient ``tanh(projective_diameter(a) / 4)``.

    Strictly below 1 for strictly positive matrices; exactly 1 (the vacuous
    bound) when the diameter is infinite.
    """
    delta = projective_diameter(a)
    if math.isinf(delta):
        return 1.0
    return math.tanh(delta / 4.0)
