"""Seeded invariant sweeps over every module's proved properties.

Each check samples its own instances from a seed, evaluates one inequality
family, and reports how many cases were run, how many violated the bound,
and the worst signed violation (negative values mean margin to spare).  The
acceptance suite calls these with its own case counts; the ``verify`` command
runs them all at default scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .augustin import (
    AugustinRun,
    augustin_empirical_lipschitz,
    augustin_rate_bound,
    augustin_update,
    augustin_update_single,
    level_curve,
    solve_augustin,
    two_point_metric,
)
from .bundled import (
    kelly_portfolio,
    mixed_portfolio_d4,
    probe_portfolio,
    tilted_joint_2x2,
    two_atom_prior,
)
from .cone import birkhoff_coefficient, hilbert_distance, max_ratio
from .measures import (
    FinitePrior,
    augustin_gradient,
    augustin_objective,
    portfolio_objective,
    renyi_divergence,
    renyi_objective,
)
from .oracle import golden_section_d2, grid_refine_2x2, projected_gradient_reference
from .portfolio import (
    PortfolioRun,
    contraction_ratio_bound,
    noncontractivity_probe,
    portfolio_gradient,
    portfolio_hessian,
    portfolio_update,
    solve_portfolio,
)
from .renyi import (
    RenyiRun,
    renyi_empirical_lipschitz,
    renyi_rate_bounds,
    renyi_update_x,
    renyi_update_y,
    solve_renyi,
)
from .sampling import (
    interior_pair,
    random_interior_point,
    random_joint,
    random_joint_with_zeros,
    random_portfolio,
    random_positive_matrix,
    random_prior,
    random_two_asset_portfolio,
    rng_for,
)

__all__ = ["CheckResult", "VerificationReport", "run_verification", "ALL_CHECKS"]

AUGUSTIN_ALPHAS = (0.6, 0.75, 0.9, 1.1, 1.25, 1.4)
RENYI_ALPHAS = (0.5, 0.6, 2.0, 4.0)


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: int
    worst: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerificationReport:
    seed: int
    checks: list[CheckResult]
    passed: bool
    total_cases: int
    total_failures: int


class _Tally:
    """Accumulates signed violations; anything above zero is a failure."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.failures = 0
        self.worst = -math.inf

    def record(self, violation: float) -> None:
        self.cases += 1
        if violation > 0:
            self.failures += 1
        if violation > self.worst:
            self.worst = violation

    def result(self) -> CheckResult:
        worst = self.worst if self.cases else 0.0
        return CheckResult(self.name, self.cases, self.failures, worst)


def check_power_rule(seed: int = 0, cases: int = 200) -> CheckResult:
    """d_H(x^r, y^r) <= |r| d_H(x, y), with equality on the two-point simplex."""
    tally = _Tally("power_rule")
    rng = rng_for(seed, 1)
    powers = (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0)
    for _ in range(cases):
        d = int(rng.integers(2, 9))
        x, y = interior_pair(rng, d)
        base = hilbert_distance(x, y)
        for r in powers:
            lhs = hilbert_distance(x**r, y**r)
            tally.record(lhs - abs(r) * base - 1e-10)
            if d == 2:
                tally.record(abs(lhs - abs(r) * base) - 1e-10)
    return tally.result()


def check_product_rule(seed: int = 0, cases: int = 200) -> CheckResult:
    """d_H(v (.) x, v (.) y) equals d_H(x, y) for strictly positive v."""
    tally = _Tally("entrywise_product_rule")
    rng = rng_for(seed, 2)
    for _ in range(cases):
        d = int(rng.integers(2, 9))
        x, y = interior_pair(rng, d)
        v = np.exp(rng.uniform(-2, 2, size=d))
        gap = abs(hilbert_distance(v * x, v * y) - hilbert_distance(x, y))
        tally.record(gap - 1e-10)
    return tally.result()


def check_matrix_nonexpansion(seed: int = 0, cases: int = 200) -> CheckResult:
    """d_H(Ax, Ay) <= d_H(x, y) for nonnegative A without zero rows."""
    tally = _Tally("matrix_nonexpansion")
    rng = rng_for(seed, 3)
    for _ in range(cases):
        m = int(rng.integers(2, 7))
        n = int(rng.integers(2, 7))
        a = rng.uniform(size=(m, n))
        a[rng.uniform(size=(m, n)) < 0.3] = 0.0
        a[a.sum(axis=1) == 0, 0] = 1.0
        x, y = interior_pair(rng, n)
        tally.record(hilbert_distance(a @ x, a @ y) - hilbert_distance(x, y) - 1e-10)
    return tally.result()


def check_birkhoff_contraction(seed: int = 0, cases: int = 500) -> CheckResult:
    """d_H(Ax, Ay) <= tanh(diameter/4) d_H(x, y) for strictly positive A."""
    tally = _Tally("birkhoff_contraction")
    rng = rng_for(seed, 4)
    for _ in range(cases):
        m = int(rng.integers(2, 9))
        n = int(rng.integers(2, 9))
        a = random_positive_matrix(rng, m, n)
        coefficient = birkhoff_coefficient(a)
        x, y = interior_pair(rng, n)
        lhs = hilbert_distance(a @ x, a @ y)
        tally.record(lhs - coefficient * hilbert_distance(x, y) - 1e-10)
    return tally.result()


def _random_family(rng, d, size):
    xs = np.stack([random_interior_point(rng, d) for _ in range(size)])
    ys = np.stack([random_interior_point(rng, d) for _ in range(size)])
    w = random_interior_point(rng, size, floor=1e-3)
    return xs, ys, w


def check_expectation_ratio(seed: int = 0, cases: int = 1000) -> CheckResult:
    """M(E[X]/E[Y]) <= sup M(X/Y) for finite mixtures, in log space."""
    tally = _Tally("expectation_ratio_bound")
    rng = rng_for(seed, 5)
    for _ in range(cases):
        d = int(rng.integers(2, 7))
        size = int(rng.integers(2, 6))
        xs, ys, w = _random_family(rng, d, size)
        lhs = math.log(max_ratio(w @ xs, w @ ys))
        rhs = max(math.log(max_ratio(x, y)) for x, y in zip(xs, ys))
        tally.record(lhs - rhs - 1e-12)
    return tally.result()


def check_expectation_distance(seed: int = 0, cases: int = 1000) -> CheckResult:
    """d_H(E[X], E[Y]) <= 2 sup d_H(X, Y) for finite mixtures."""
    tally = _Tally("expectation_distance_factor2")
    rng = rng_for(seed, 6)
    for _ in range(cases):
        d = int(rng.integers(2, 7))
        size = int(rng.integers(2, 6))
        xs, ys, w = _random_family(rng, d, size)
        lhs = hilbert_distance(w @ xs, w @ ys)
        rhs = max(hilbert_distance(x, y) for x, y in zip(xs, ys))
        tally.record(lhs - 2.0 * rhs - 1e-12)
    return tally.result()


def check_expectation_distance_d2(seed: int = 0, cases: int = 1000) -> CheckResult:
    """On the two-point simplex the mixture bound holds without the factor 2."""
    tally = _Tally("expectation_distance_d2_factor1")
    rng = rng_for(seed, 7)
    for _ in range(cases):
        size = int(rng.integers(2, 6))
        xs, ys, w = _random_family(rng, 2, size)
        lhs = hilbert_distance(w @ xs, w @ ys)
        rhs = max(hilbert_distance(x, y) for x, y in zip(xs, ys))
        tally.record(lhs - rhs - 1e-12)
    return tally.result()


def check_metric_axioms(seed: int = 0, cases: int = 200) -> CheckResult:
    """Symmetry, triangle inequality, and the projective identity of zero."""
    tally = _Tally("metric_axioms")
    rng = rng_for(seed, 8)
    for _ in range(cases):
        d = int(rng.integers(2, 7))
        x = random_interior_point(rng, d)
        y = random_interior_point(rng, d)
        z = random_interior_point(rng, d)
        tally.record(abs(hilbert_distance(x, y) - hilbert_distance(y, x)) - 1e-12)
        tally.record(
            hilbert_distance(x, z) - hilbert_distance(x, y) - hilbert_distance(y, z) - 1e-12
        )
        tally.record(hilbert_distance(x, x) - 0.0)
        scale = float(rng.uniform(0.25, 4.0))
        tally.record(hilbert_distance(x, scale * x) - 1e-12)
    return tally.result()


def check_divergence_properties(seed: int = 0, cases: int = 200) -> CheckResult:
    """Nonnegativity of the divergence and zero exactly on equal arguments."""
    tally = _Tally("renyi_divergence_properties")
    rng = rng_for(seed, 9)
    for _ in range(cases):
        d = int(rng.integers(2, 7))
        p = random_interior_point(rng, d)
        q = random_interior_point(rng, d)
        for alpha in (0.5, 0.75, 1.5, 2.0):
            tally.record(-renyi_divergence(p, q, alpha) - 1e-12)
            tally.record(abs(renyi_divergence(p, p, alpha)) - 1e-12)
    return tally.result()


def check_gradient_fd(seed: int = 0, cases: int = 100) -> CheckResult:
    """Central differences of the Augustin objective match the gradient."""
    tally = _Tally("augustin_gradient_fd")
    rng = rng_for(seed, 10)
    h = 1e-6
    for _ in range(cases):
        d = int(rng.integers(2, 6))
        prior = random_prior(rng, d, int(rng.integers(2, 5)))
        alpha = float(rng.choice(AUGUSTIN_ALPHAS))
        x = random_interior_point(rng, d, floor=1e-2)
        grad = augustin_gradient(prior, x, alpha)
        for j in range(d):
            bump = np.zeros(d)
            bump[j] = h
            fd = (
                augustin_objective(prior, x + bump, alpha)
                - augustin_objective(prior, x - bump, alpha)
            ) / (2 * h)
            rel = abs(fd - grad[j]) / max(abs(grad[j]), 1e-8)
            tally.record(rel - 1e-5)
    return tally.result()


def check_cover_consistency(seed: int = 0, cases: int = 100) -> CheckResult:
    """The averaged update equals x (.) (-gradient) entrywise."""
    tally = _Tally("gradient_consistency")
    rng = rng_for(seed, 11)
    for _ in range(cases):
        d = int(rng.integers(2, 8))
        prior = random_prior(rng, d, int(rng.integers(1, 6)))
        alpha = float(rng.choice(AUGUSTIN_ALPHAS))
        x = random_interior_point(rng, d)
        lhs = x * (-augustin_gradient(prior, x, alpha))
        rhs = augustin_update(prior, x, alpha)
        tally.record(float(np.max(np.abs(lhs - rhs))) - 1e-12)
    return tally.result()


def check_augustin_operator_contraction(
    seed: int = 0, instances: int = 200, pairs_per_instance: int = 5
) -> CheckResult:
    """Averaged update is 2|1-a| Lipschitz, |1-a| on the two-point simplex."""
    tally = _Tally("augustin_operator_contraction")
    rng = rng_for(seed, 12)
    for index in range(instances):
        d = int(rng.integers(2, 11))
        prior = random_prior(rng, d, int(rng.integers(2, 9)))
        alpha = AUGUSTIN_ALPHAS[index % len(AUGUSTIN_ALPHAS)]
        bound = augustin_rate_bound(alpha, d)
        for _ in range(pairs_per_instance):
            x, y = interior_pair(rng, d)
            lhs = hilbert_distance(
                augustin_update(prior, x, alpha), augustin_update(prior, y, alpha)
            )
            tally.record(lhs - bound * hilbert_distance(x, y) - 1e-10)
    return tally.result()


def check_single_atom_contraction(seed: int = 0, cases: int = 1000) -> CheckResult:
    """Each single-atom update is |1-a| Lipschitz."""
    tally = _Tally("single_atom_contraction")
    rng = rng_for(seed, 13)
    for _ in range(cases):
        d = int(rng.integers(2, 9))
        p = random_interior_point(rng, d)
        alpha = float(rng.choice(AUGUSTIN_ALPHAS))
        x, y = interior_pair(rng, d)
        lhs = hilbert_distance(
            augustin_update_single(p, x, alpha), augustin_update_single(p, y, alpha)
        )
        tally.record(lhs - abs(1.0 - alpha) * hilbert_distance(x, y) - 1e-10)
    return tally.result()


def check_tilted_ratio_bounds(seed: int = 0, cases: int = 200) -> CheckResult:
    """Unnormalized tilted map: M(T q / T q') <= M(q/q')^(1-a) for a in (0,1)
    and <= M(q'/q)^(a-1) for a in (1,2), in log space."""
    tally = _Tally("tilted_ratio_bounds")
    rng = rng_for(seed, 14)
    for _ in range(cases):
        d = int(rng.integers(2, 9))
        p = random_interior_point(rng, d)
        q, q2 = interior_pair(rng, d)
        for alpha in (0.3, 0.6, 0.9, 1.1, 1.5, 1.9):
            tilted = p**alpha * q ** (1.0 - alpha)
            tilted2 = p**alpha * q2 ** (1.0 - alpha)
            lhs = math.log(max_ratio(tilted, tilted2))
            if alpha < 1:
                rhs = (1.0 - alpha) * math.log(max_ratio(q, q2))
            else:
                rhs = (alpha - 1.0) * math.log(max_ratio(q2, q))
            tally.record(lhs - rhs - 1e-12)
    return tally.result()


def check_quasiconvex_midpoint(seed: int = 0, cases: int = 10_000) -> CheckResult:
    """Level sets of the two-point metric are convex: midpoints stay inside."""
    tally = _Tally("quasiconvex_midpoint")
    rng = rng_for(seed, 15)
    for _ in range(cases):
        s1, t1, s2, t2 = rng.uniform(size=4)
        cap = max(two_point_metric(s1, t1), two_point_metric(s2, t2))
        mid = two_point_metric(0.5 * (s1 + s2), 0.5 * (t1 + t2))
        if math.isinf(cap):
            tally.record(-1.0)
            continue
        tally.record(mid - cap - 1e-12)
    return tally.result()


def check_level_curve_curvature(seed: int = 0, betas=(0.5, 1.0, 2.0), grid: int = 1001) -> CheckResult:
    """Level curves are convex for positive beta and concave for negative.

    Tested through the sign of raw second central differences on a uniform
    grid; the seed is unused but kept for a uniform check signature.
    """
    tally = _Tally("level_curve_curvature")
    s = np.linspace(0.0, 1.0, grid)
    for beta in betas:
        for sign in (1.0, -1.0):
            g = level_curve(sign * beta, s)
            second = g[2:] - 2.0 * g[1:-1] + g[:-2]
            for value in -sign * second:
                tally.record(float(value) - 1e-9)
    return tally.result()


def check_augustin_fixed_point(seed: int = 0, cases: int = 10) -> CheckResult:
    """Residual d_H(x_final, update(x_final)) <= 2 tau after convergence."""
    tally = _Tally("augustin_fixed_point_residual")
    rng = rng_for(seed, 16)
    tolerance = 1e-12
    for index in range(cases):
        d = int(rng.integers(2, 8))
        prior = random_prior(rng, d, int(rng.integers(2, 6)))
        alpha = AUGUSTIN_ALPHAS[index % len(AUGUSTIN_ALPHAS)]
        run = AugustinRun(alpha, prior, random_interior_point(rng, d), tolerance=tolerance)
        trace = solve_augustin(run)
        if not trace.converged:
            tally.record(1.0)
            continue
        residual = hilbert_distance(
            trace.final, augustin_update(prior, trace.final, alpha)
        )
        tally.record(residual - 2.0 * tolerance)
    return tally.result()


def check_renyi_operator_contraction(seed: int = 0, instances: int = 40) -> CheckResult:
    """Half-step ratios stay below |1-1/a| (Birkhoff-improved when positive)."""
    tally = _Tally("renyi_operator_contraction")
    rng = rng_for(seed, 17)
    for index in range(instances):
        m = int(rng.integers(2, 9))
        n = int(rng.integers(2, 9))
        alpha = RENYI_ALPHAS[index % len(RENYI_ALPHAS)]
        joint = random_joint(rng, m, n)
        rates = renyi_rate_bounds(joint, alpha)
        ratios = renyi_empirical_lipschitz(joint, alpha, n_pairs=25, seed=int(rng.integers(2**32)))
        bound = rates.gamma_double_prime
        tally.record(ratios.x_update_max - bound - 1e-9)
        tally.record(ratios.y_update_max - bound - 1e-9)
        sparse = random_joint_with_zeros(rng, m, n, zeros=2)
        sparse_ratios = renyi_empirical_lipschitz(
            sparse, alpha, n_pairs=25, seed=int(rng.integers(2**32))
        )
        tally.record(sparse_ratios.x_update_max - rates.gamma_prime - 1e-9)
        tally.record(sparse_ratios.y_update_max - rates.gamma_prime - 1e-9)
    return tally.result()


def check_renyi_fixed_point(seed: int = 0, cases: int = 8) -> CheckResult:
    """Fixed-point residuals, minimizer positivity, and the alternation identity."""
    tally = _Tally("renyi_fixed_point")
    rng = rng_for(seed, 18)
    tolerance = 1e-12
    for index in range(cases):
        m = int(rng.integers(2, 6))
        n = int(rng.integers(2, 6))
        alpha = RENYI_ALPHAS[index % len(RENYI_ALPHAS)]
        joint = random_joint(rng, m, n)
        run = RenyiRun(alpha, joint, random_interior_point(rng, m), tolerance=tolerance)
        x_trace, y_trace = solve_renyi(run)
        if not x_trace.converged:
            tally.record(1.0)
            continue
        x_final, y_final = x_trace.final, y_trace.final
        tally.record(
            hilbert_distance(x_final, renyi_update_x(joint, y_final, alpha)) - 2 * tolerance
        )
        tally.record(
            hilbert_distance(y_final, renyi_update_y(joint, x_final, alpha)) - 2 * tolerance
        )
        tally.record(1e-12 - float(min(x_final.min(), y_final.min())))
        # bit-for-bit alternation identity on a middle step
        middle = len(x_trace.iterates) // 2
        if middle >= 1:
            recomputed = renyi_update_x(joint, y_trace.iterates[middle - 1], alpha)
            identical = np.array_equal(recomputed, x_trace.iterates[middle])
            tally.record(0.0 if identical else 1.0)
    return tally.result()


def check_portfolio_invariants(seed: int = 0, cases: int = 10) -> CheckResult:
    """Objective descent, simplex preservation, and the unit-gradient limit."""
    tally = _Tally("portfolio_invariants")
    rng = rng_for(seed, 19)
    for index in range(cases):
        d = int(rng.integers(2, 5))
        inst = (
            random_two_asset_portfolio(rng, int(rng.integers(3, 7)))
            if d == 2
            else random_portfolio(rng, d, int(rng.integers(3, 7)))
        )
        x = random_interior_point(rng, d)
        tally.record(abs(float(portfolio_update(inst, x).sum()) - 1.0) - 1e-12)
        run = PortfolioRun(inst, x, tolerance=1e-12)
        trace = solve_portfolio(run)
        for prev, cur in zip(trace.objectives, trace.objectives[1:]):
            tally.record(cur - prev - 1e-12)
        if trace.converged and not trace.boundary_attracted and trace.final.min() > 1e-9:
            gradient = portfolio_gradient(inst, trace.final)
            tally.record(float(np.max(np.abs(gradient + 1.0))) - 1e-8)
    return tally.result()


def check_portfolio_hessian_fd(seed: int = 0, cases: int = 20) -> CheckResult:
    """Hessian off-diagonals match second central differences."""
    tally = _Tally("portfolio_hessian_fd")
    rng = rng_for(seed, 20)
    h = 1e-4
    for _ in range(cases):
        d = int(rng.integers(2, 5))
        inst = random_portfolio(rng, d, int(rng.integers(3, 7)))
        x = random_interior_point(rng, d, floor=1e-2)
        hess = portfolio_hessian(inst, x)
        for i in range(d):
            for j in range(i + 1, d):
                ei = np.zeros(d)
                ej = np.zeros(d)
                ei[i] = h
                ej[j] = h
                fd = (
                    portfolio_objective(inst, x + ei + ej)
                    - portfolio_objective(inst, x + ei - ej)
                    - portfolio_objective(inst, x - ei + ej)
                    + portfolio_objective(inst, x - ei - ej)
                ) / (4 * h * h)
                rel = abs(fd - hess[i, j]) / max(abs(hess[i, j]), 1e-8)
                tally.record(rel - 1e-4)
    return tally.result()


def check_noncontractivity_witness(seed: int = 0) -> CheckResult:
    """The shipped three-asset instance exhibits a ratio arbitrarily near one.

    Deterministic; the seed is unused but kept for a uniform signature.
    """
    tally = _Tally("noncontractivity_witness")
    probe = noncontractivity_probe(probe_portfolio(), eps=1e-8, t=1e-6)
    tally.record(0.99 - probe.empirical_ratio)
    tally.record(abs(probe.empirical_ratio - probe.phi_prime_zero) - 1e-4)
    tally.record(0.99 - probe.phi_prime_zero)
    return tally.result()


def check_portfolio_d2_rate(seed: int = 0, cases: int = 10) -> CheckResult:
    """Two-asset asymptotic ratio stays below the off-diagonal Hessian bound."""
    tally = _Tally("portfolio_d2_rate")
    rng = rng_for(seed, 21)
    for _ in range(cases):
        inst = random_two_asset_portfolio(rng, int(rng.integers(3, 7)))
        run = PortfolioRun(inst, np.array([0.5, 0.5]), tolerance=1e-14)
        trace = solve_portfolio(run)
        if not trace.converged or trace.final.min() <= 1e-9:
            tally.record(1.0)
            continue
        star = trace.final
        bound = contraction_ratio_bound(inst, star)
        tally.record(bound - 1.0 + 1e-9)
        for offset in (1e-4, 3e-4, 1e-3, -1e-4, -3e-4, -1e-3):
            s = star[0] * math.exp(offset)
            x = np.array([s, 1.0 - s])
            base = hilbert_distance(x, star)
            if not 0 < base <= 1e-3:
                continue
            moved = hilbert_distance(portfolio_update(inst, x), star)
            tally.record(moved / base - bound - 0.01)
    return tally.result()


def check_oracle_agreement(seed: int = 0) -> CheckResult:
    """Solver limits against the independent reference minimizers."""
    tally = _Tally("oracle_agreement")
    prior = two_atom_prior()
    run = AugustinRun(0.75, prior, np.array([0.5, 0.5]), tolerance=1e-13)
    trace = solve_augustin(run)
    reference = golden_section_d2(
        lambda s: augustin_objective(prior, np.array([s, 1.0 - s]), 0.75)
    )
    tally.record(abs(trace.final_objective - reference.min_value) - 1e-6)
    tally.record(hilbert_distance(trace.final, reference.argmin) - 1e-6)

    joint = tilted_joint_2x2()
    for alpha in (0.5, 0.75, 2.0):
        x_trace, _ = solve_renyi(RenyiRun(alpha, joint, np.array([0.5, 0.5]), tolerance=1e-13))
        grid = grid_refine_2x2(
            lambda s, t: renyi_objective(
                joint, np.array([s, 1.0 - s]), np.array([t, 1.0 - t]), alpha
            ),
            coarse_step=0.01,
            refinements=6,
        )
        tally.record(abs(x_trace.final_objective - grid.min_value) - 1e-6)

    kelly = kelly_portfolio()
    kelly_trace = solve_portfolio(PortfolioRun(kelly, np.array([0.3, 0.7])))
    tally.record(float(np.max(np.abs(kelly_trace.iterates[1] - np.array([0.6, 0.4])))) - 1e-12)
    pgd = projected_gradient_reference(
        lambda x: portfolio_objective(kelly, x),
        lambda x: portfolio_gradient(kelly, x),
        np.array([0.5, 0.5]),
        steps=4000,
    )
    tally.record(float(np.max(np.abs(pgd.argmin - np.array([0.6, 0.4])))) - 1e-4)

    mixed = mixed_portfolio_d4()
    mixed_trace = solve_portfolio(PortfolioRun(mixed, np.full(4, 0.25)))
    mixed_pgd = projected_gradient_reference(
        lambda x: portfolio_objective(mixed, x),
        lambda x: portfolio_gradient(mixed, x),
        np.full(4, 0.25),
        steps=4000,
    )
    tally.record(abs(mixed_trace.final_objective - mixed_pgd.min_value) - 1e-6)
    return tally.result()


def check_augustin_linear_rate(seed: int = 0, dims=(2, 3, 5, 7, 10), trials: int = 2) -> CheckResult:
    """Per-step corollary: d_H(x_{t+1}, ref) <= 0.5^t d_H(x_1, ref) (1 + 1e-6)."""
    tally = _Tally("augustin_linear_rate")
    alpha = 0.75
    rng = rng_for(seed, 22)
    for d in dims:
        for _ in range(trials):
            prior = random_prior(rng, d, int(rng.integers(2, 6)))
            initial = random_interior_point(rng, d)
            reference = solve_augustin(
                AugustinRun(alpha, prior, initial, tolerance=1e-14, max_iterations=200_000)
            ).final
            trace = solve_augustin(
                AugustinRun(alpha, prior, initial, tolerance=1e-10), reference=reference
            )
            start = trace.to_reference[0]
            for t, distance in enumerate(trace.to_reference):
                tally.record(distance - 0.5**t * start * (1.0 + 1e-6))
    return tally.result()


def check_renyi_linear_rate(seed: int = 0, trials: int = 3) -> CheckResult:
    """Two-sided corollary on strictly positive 3x4 joints at order 2."""
    tally = _Tally("renyi_linear_rate")
    alpha = 2.0
    rng = rng_for(seed, 23)
    for _ in range(trials):
        joint = random_joint(rng, 3, 4)
        initial = random_interior_point(rng, 3)
        rate = renyi_rate_bounds(joint, alpha).gamma_double_prime
        ref_x, ref_y = solve_renyi(
            RenyiRun(alpha, joint, initial, tolerance=1e-14, max_iterations=200_000)
        )
        x_trace, y_trace = solve_renyi(
            RenyiRun(alpha, joint, initial, tolerance=1e-10),
            reference_x=ref_x.final,
            reference_y=ref_y.final,
        )
        start = x_trace.to_reference[0]
        for t, distance in enumerate(x_trace.to_reference):
            tally.record(distance - rate ** (2 * t) * start * (1.0 + 1e-6))
        for t, distance in enumerate(y_trace.to_reference):
            tally.record(distance - rate ** (2 * t + 1) * start * (1.0 + 1e-6))
    return tally.result()


def check_augustin_empirical_rates(seed: int = 0, instances: int = 12) -> CheckResult:
    """Sampled operator Lipschitz never exceeds the proved bound."""
    tally = _Tally("augustin_empirical_rates")
    rng = rng_for(seed, 24)
    for index in range(instances):
        d = int(rng.integers(2, 9))
        prior = random_prior(rng, d, int(rng.integers(2, 7)))
        alpha = AUGUSTIN_ALPHAS[index % len(AUGUSTIN_ALPHAS)]
        empirical = augustin_empirical_lipschitz(
            prior, alpha, n_pairs=40, seed=int(rng.integers(2**32))
        )
        tally.record(empirical - augustin_rate_bound(alpha, d) - 1e-9)
    return tally.result()


ALL_CHECKS = (
    check_power_rule,
    check_product_rule,
    check_matrix_nonexpansion,
    check_birkhoff_contraction,
    check_expectation_ratio,
    check_expectation_distance,
    check_expectation_distance_d2,
    check_metric_axioms,
    check_divergence_properties,
    check_gradient_fd,
    check_cover_consistency,
    check_augustin_operator_contraction,
    check_single_atom_contraction,
    check_tilted_ratio_bounds,
    check_quasiconvex_midpoint,
    check_level_curve_curvature,
    check_augustin_fixed_point,
    check_augustin_empirical_rates,
    check_augustin_linear_rate,
    check_renyi_operator_contraction,
    check_renyi_fixed_point,
    check_renyi_linear_rate,
    check_portfolio_invariants,
    check_portfolio_hessian_fd,
    check_noncontractivity_witness,
    check_portfolio_d2_rate,
    check_oracle_agreement,
)


def run_verification(seed: int = 0) -> VerificationReport:
    """Run every invariant sweep at default scale and aggregate the counts."""
    checks = [check(seed) for check in ALL_CHECKS]
    return VerificationReport(
        seed=seed,
        checks=checks,
        passed=all(c.passed for c in checks),
        total_cases=sum(c.cases for c in checks),
        total_failures=sum(c.failures for c in checks),
    )
