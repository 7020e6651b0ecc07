"""Experiment sweeps: instance generation, solver runs, rate certification.

A sweep runs every (alpha, dimension, trial) cell of its configuration,
derives one deterministic child seed per cell from the master seed, and
aggregates a rate report whose pass rule is: sampled operator Lipschitz at
most the proved bound (plus 1e-9) wherever a proof applies.  The two-asset
portfolio records certify the asymptotic Hessian bound with its own slack
instead.  File emission is separate so a thin client can write outputs from
wire data.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from .augustin import AugustinRun, augustin_empirical_lipschitz, augustin_rate_bound, augustin_update, solve_augustin
from .bundled import kelly_portfolio, mixed_portfolio_d4, tilted_joint_2x2, two_atom_prior
from .cone import hilbert_distance
from .measures import FinitePrior, JointMatrix, PortfolioInstance
from .portfolio import PortfolioRun, contraction_ratio_bound, portfolio_gradient, portfolio_update, solve_portfolio
from .renyi import RenyiRun, renyi_empirical_lipschitz, renyi_rate_bounds, renyi_update_x, renyi_update_y, solve_renyi
from .reporting import (
    RateRecord,
    RateReport,
    TrialSummary,
    fitted_rate,
    report_to_json,
    trace_columns,
    write_convergence_svg,
    write_trace_csv,
)
from .sampling import generate_instance, random_interior_point, rng_for
from .verification import VerificationReport, run_verification

__all__ = [
    "ExperimentConfig",
    "LabeledTrace",
    "ExperimentResult",
    "run_experiment",
    "write_experiment_outputs",
    "run_bench",
    "THREADS_ENV",
]

THREADS_ENV = "HILBERT_ITERS_THREADS"
KINDS = ("augustin", "renyi", "portfolio", "verify")

# Slack of the pass rules: proved operator bounds are sharp up to roundoff,
# the two-asset portfolio bound is asymptotic only.
OPERATOR_SLACK = 1e-9
PORTFOLIO_SLACK = 1e-2
REFERENCE_TOLERANCE = 1e-14


@dataclass
class ExperimentConfig:
    """One sweep: which solver, which orders and dimensions, how many trials."""

    kind: str
    alphas: list = field(default_factory=list)
    dims: list = field(default_factory=list)
    trials: int = 3
    seed: int = 0
    tolerance: float = 1e-12
    max_iterations: int = 100_000
    richness: int = 4
    n_pairs: int = 50
    output_dir: str | None = None
    emit_svg: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"config field 'kind' must be one of {KINDS}, got {self.kind!r}")
        if self.trials < 1:
            raise ValueError("config field 'trials' must be at least 1")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("config field 'seed' must be an unsigned 64-bit value")
        if not self.tolerance > 0:
            raise ValueError("config field 'tolerance' must be positive")
        if self.max_iterations < 1:
            raise ValueError("config field 'max_iterations' must be at least 1")
        if self.richness < 1:
            raise ValueError("config field 'richness' must be at least 1")
        if self.n_pairs < 1:
            raise ValueError("config field 'n_pairs' must be at least 1")
        for alpha in self.alphas:
            if not (alpha > 0 and alpha != 1.0 and math.isfinite(alpha)):
                raise ValueError(
                    f"config field 'alpha' entries must lie in (0, inf) minus 1, got {alpha}"
                )
        if self.kind in ("augustin", "renyi") and not self.alphas:
            raise ValueError(f"config field 'alpha' must be nonempty for kind {self.kind!r}")
        if self.kind != "verify" and not self.dims:
            raise ValueError("config field 'dim' must be nonempty")
        for dim in self.dims:
            entries = dim if isinstance(dim, (tuple, list)) else (dim,)
            if any(int(v) < 2 for v in entries):
                raise ValueError(f"config field 'dim' entries must be at least 2, got {dim}")
            if len(entries) == 2 and self.kind != "renyi":
                raise ValueError("pair dimensions only apply to the renyi kind")


@dataclass
class LabeledTrace:
    """One trace of a sweep cell plus everything needed to plot or store it."""

    kind: str
    alpha: float | None
    dim: object
    trial: int
    role: str  # "x" for the primary iterate, "y" for the Renyi column side
    columns: dict
    guide_rate: float | None

    @property
    def stem(self) -> str:
        dim = self.dim
        dim_token = f"{dim[0]}x{dim[1]}" if isinstance(dim, (tuple, list)) else str(dim)
        alpha_token = "" if self.alpha is None else f"_a{self.alpha:g}"
        role_token = "" if self.role == "x" else f"_{self.role}"
        return f"{self.kind}{alpha_token}_d{dim_token}_t{self.trial}{role_token}"


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    report: RateReport | None
    verification: VerificationReport | None
    traces: list[LabeledTrace]

    @property
    def passed(self) -> bool:
        if self.report is not None:
            return self.report.passed
        if self.verification is not None:
            return self.verification.passed
        return False


def _child_seed(master: int, *key: int) -> int:
    """Fixed splitting rule mixing the master seed with the cell indices."""
    state = np.random.SeedSequence(master, spawn_key=tuple(key)).generate_state(1, dtype=np.uint64)
    return int(state[0])


def _worker_count(total: int) -> int:
    try:
        requested = int(os.environ.get(THREADS_ENV, "1"))
    except ValueError:
        requested = 1
    return max(1, min(requested, total))


def _run_augustin_cell(config, alpha, dim, a_idx, d_idx, trial):
    instance_seed = _child_seed(config.seed, a_idx, d_idx, trial, 0)
    extra_seed = _child_seed(config.seed, a_idx, d_idx, trial, 1)
    prior: FinitePrior = generate_instance("augustin", dim, config.richness, instance_seed)
    initial = random_interior_point(rng_for(extra_seed, 0), int(dim))
    reference = solve_augustin(
        AugustinRun(alpha, prior, initial, REFERENCE_TOLERANCE, max(config.max_iterations, 200_000))
    )
    trace = solve_augustin(
        AugustinRun(alpha, prior, initial, config.tolerance, config.max_iterations),
        reference=reference.final,
    )
    residual = (
        hilbert_distance(trace.final, augustin_update(prior, trace.final, alpha))
        if not trace.boundary_attracted
        else math.inf
    )
    empirical = augustin_empirical_lipschitz(prior, alpha, config.n_pairs, extra_seed)
    summary = TrialSummary(
        trial=trial,
        iterations=trace.iterations_used,
        converged=trace.converged,
        boundary_attracted=trace.boundary_attracted,
        final_step=trace.final_step,
        final_residual=residual,
        final_objective=trace.final_objective,
        fitted_rate=fitted_rate(trace.to_reference),
    )
    guide = augustin_rate_bound(alpha, int(dim))
    labeled = [
        LabeledTrace("augustin", alpha, dim, trial, "x", trace_columns(trace), guide)
    ]
    warnings = [] if reference.converged else [
        f"augustin a={alpha} d={dim} t={trial}: reference run hit the iteration cap"
    ]
    return empirical, summary, labeled, warnings


def _run_renyi_cell(config, alpha, dim, a_idx, d_idx, trial):
    instance_seed = _child_seed(config.seed, a_idx, d_idx, trial, 0)
    extra_seed = _child_seed(config.seed, a_idx, d_idx, trial, 1)
    joint: JointMatrix = generate_instance("renyi", dim, config.richness, instance_seed)
    m = joint.shape[0]
    initial = random_interior_point(rng_for(extra_seed, 0), m)
    rates = renyi_rate_bounds(joint, alpha)
    ref_x, ref_y = solve_renyi(
        RenyiRun(alpha, joint, initial, REFERENCE_TOLERANCE, max(config.max_iterations, 200_000))
    )
    x_trace, y_trace = solve_renyi(
        RenyiRun(alpha, joint, initial, config.tolerance, config.max_iterations),
        reference_x=ref_x.final,
        reference_y=ref_y.final,
    )
    if x_trace.boundary_attracted:
        residual = math.inf
    else:
        residual = max(
            hilbert_distance(x_trace.final, renyi_update_x(joint, y_trace.final, alpha)),
            hilbert_distance(y_trace.final, renyi_update_y(joint, x_trace.final, alpha)),
        )
    ratios = renyi_empirical_lipschitz(joint, alpha, config.n_pairs, extra_seed)
    empirical = max(ratios.x_update_max, ratios.y_update_max)
    summary = TrialSummary(
        trial=trial,
        iterations=x_trace.iterations_used,
        converged=x_trace.converged,
        boundary_attracted=x_trace.boundary_attracted,
        final_step=max(x_trace.final_step, y_trace.final_step),
        final_residual=residual,
        final_objective=x_trace.final_objective,
        fitted_rate=fitted_rate(x_trace.to_reference),
    )
    guide = rates.effective**2  # the x iterate advances two half-steps per round
    labeled = [
        LabeledTrace("renyi", alpha, dim, trial, "x", trace_columns(x_trace), guide),
        LabeledTrace("renyi", alpha, dim, trial, "y", trace_columns(y_trace), guide),
    ]
    warnings = [] if ref_x.converged else [
        f"renyi a={alpha} d={dim} t={trial}: reference run hit the iteration cap"
    ]
    return empirical, summary, labeled, warnings, rates


def _run_portfolio_cell(config, dim, d_idx, trial):
    instance_seed = _child_seed(config.seed, 0, d_idx, trial, 0)
    extra_seed = _child_seed(config.seed, 0, d_idx, trial, 1)
    inst: PortfolioInstance = generate_instance("portfolio", dim, config.richness, instance_seed)
    initial = random_interior_point(rng_for(extra_seed, 0), int(dim))
    reference = solve_portfolio(
        PortfolioRun(inst, initial, REFERENCE_TOLERANCE, max(config.max_iterations, 200_000))
    )
    trace = solve_portfolio(
        PortfolioRun(inst, initial, config.tolerance, config.max_iterations),
        reference=reference.final,
    )
    interior_limit = not trace.boundary_attracted and trace.final.min() > 1e-9
    residual = (
        float(np.max(np.abs(portfolio_gradient(inst, trace.final) + 1.0)))
        if interior_limit
        else math.inf
    )
    bound = contraction_ratio_bound(inst, trace.final) if interior_limit else math.inf
    empirical = 0.0
    if interior_limit:
        star = trace.final
        perturb_rng = rng_for(extra_seed, 1)
        for offset in (-1e-3, -3e-4, -1e-4, 1e-4, 3e-4, 1e-3):
            x = star * np.exp(offset * perturb_rng.uniform(0.5, 1.0, star.shape[0]))
            x = x / x.sum()
            base = hilbert_distance(x, star)
            if not 0 < base <= 1e-3:
                continue
            empirical = max(
                empirical, hilbert_distance(portfolio_update(inst, x), star) / base
            )
    summary = TrialSummary(
        trial=trial,
        iterations=trace.iterations_used,
        converged=trace.converged,
        boundary_attracted=trace.boundary_attracted,
        final_step=trace.final_step,
        final_residual=residual,
        final_objective=trace.final_objective,
        fitted_rate=fitted_rate(trace.to_reference),
    )
    guide = bound if math.isfinite(bound) else None
    labeled = [
        LabeledTrace("portfolio", None, dim, trial, "x", trace_columns(trace), guide)
    ]
    warnings = []
    if not interior_limit:
        warnings.append(
            f"portfolio d={dim} t={trial}: limit is not interior, no rate claim"
        )
    return empirical, summary, labeled, warnings, bound


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute the sweep and aggregate the rate report.

    Trials may run in parallel (capped by ``HILBERT_ITERS_THREADS``); results
    are assembled in sorted (alpha, dim, trial) order so the report and
    emitted files do not depend on scheduling.
    """
    if config.kind == "verify":
        return ExperimentResult(config, None, run_verification(config.seed), [])

    alphas = config.alphas if config.kind != "portfolio" else [None]
    cells = [
        (a_idx, alpha, d_idx, dim)
        for a_idx, alpha in enumerate(alphas)
        for d_idx, dim in enumerate(config.dims)
    ]
    tasks = [
        (a_idx, alpha, d_idx, dim, trial)
        for a_idx, alpha, d_idx, dim in cells
        for trial in range(config.trials)
    ]

    def run_task(task):
        a_idx, alpha, d_idx, dim, trial = task
        if config.kind == "augustin":
            return _run_augustin_cell(config, alpha, dim, a_idx, d_idx, trial)
        if config.kind == "renyi":
            return _run_renyi_cell(config, alpha, dim, a_idx, d_idx, trial)
        return _run_portfolio_cell(config, dim, d_idx, trial)

    workers = _worker_count(len(tasks))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = dict(zip(tasks, pool.map(run_task, tasks)))
    else:
        outcomes = {task: run_task(task) for task in tasks}

    records: list[RateRecord] = []
    traces: list[LabeledTrace] = []
    for a_idx, alpha, d_idx, dim in cells:
        cell_outcomes = [
            outcomes[(a_idx, alpha, d_idx, dim, trial)] for trial in range(config.trials)
        ]
        summaries = [outcome[1] for outcome in cell_outcomes]
        warnings = [w for outcome in cell_outcomes for w in outcome[3]]
        for outcome in cell_outcomes:
            traces.extend(outcome[2])
        empirical = max(outcome[0] for outcome in cell_outcomes)

        if config.kind == "augustin":
            theoretical = augustin_rate_bound(alpha, int(dim))
            guaranteed = theoretical < 1.0
            slack = OPERATOR_SLACK
            details = {}
        elif config.kind == "renyi":
            rates = [outcome[4] for outcome in cell_outcomes]
            theoretical = max(r.effective for r in rates)
            guaranteed = theoretical < 1.0
            slack = OPERATOR_SLACK
            details = {
                "gamma_prime": max(r.gamma_prime for r in rates),
                "gamma_double_prime": max(
                    (r.gamma_double_prime for r in rates if r.gamma_double_prime is not None),
                    default=None,
                ),
            }
        else:
            bounds = [outcome[4] for outcome in cell_outcomes]
            finite = [b for b in bounds if math.isfinite(b)]
            theoretical = max(finite) if finite else math.inf
            guaranteed = (
                int(dim) == 2 and bool(finite) and all(b < 1.0 for b in bounds)
            )
            slack = PORTFOLIO_SLACK
            details = {"hessian_bounds": [b if math.isfinite(b) else None for b in bounds]}

        if not guaranteed:
            passed = True
            if empirical >= 1.0:
                warnings.append(
                    f"{config.kind} a={alpha} d={dim}: no contraction observed in exploratory mode"
                )
        elif config.kind == "portfolio":
            # per-trial: measured near-limit ratio against that trial's bound
            passed = all(
                outcome[0] <= outcome[4] + slack for outcome in cell_outcomes
            )
        else:
            passed = empirical <= theoretical + slack

        records.append(
            RateRecord(
                kind=config.kind,
                alpha=alpha,
                dim=list(dim) if isinstance(dim, (tuple, list)) else dim,
                theoretical=theoretical,
                empirical=empirical,
                guaranteed=guaranteed,
                slack=slack,
                passed=passed,
                trials=summaries,
                details=details,
                warnings=warnings,
            )
        )

    report = RateReport(
        kind=config.kind,
        seed=config.seed,
        records=records,
        passed=all(r.passed for r in records),
        warnings=[w for r in records for w in r.warnings],
    )
    return ExperimentResult(config, report, None, traces)


def write_experiment_outputs(result: ExperimentResult, out_dir, emit_svg: bool = False) -> list[str]:
    """Write trace CSVs, the report JSON, and optionally one SVG per cell."""
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []
    for labeled in result.traces:
        path = os.path.join(out_dir, labeled.stem + ".csv")
        write_trace_csv(labeled.columns, path)
        written.append(path)

    if result.verification is not None:
        path = os.path.join(out_dir, "verification.json")
        with open(path, "w", newline="\n") as handle:
            json.dump(asdict(result.verification), handle, indent=2)
            handle.write("\n")
        written.append(path)
    if result.report is not None:
        path = os.path.join(out_dir, "report.json")
        with open(path, "w", newline="\n") as handle:
            handle.write(report_to_json(result.report))
        written.append(path)

    if emit_svg and result.traces:
        groups: dict[str, list[LabeledTrace]] = {}
        for labeled in result.traces:
            key = labeled.stem.rsplit("_t", 1)[0]
            groups.setdefault(key, []).append(labeled)
        for key, members in sorted(groups.items()):
            series = [
                (f"t{member.trial}" + ("" if member.role == "x" else f" {member.role}"),
                 member.columns["dh_to_ref"])
                for member in members
            ]
            rates = [m.guide_rate for m in members if m.guide_rate is not None]
            path = os.path.join(out_dir, key + ".svg")
            write_convergence_svg(series, path, guide_rate=max(rates) if rates else None)
            written.append(path)
    return written


def run_bench(seed: int = 0, tolerance: float = 1e-12) -> dict:
    """Wall-clock timings of the three solvers on bundled and generated instances."""
    results: dict[str, list] = {"augustin": [], "renyi": [], "portfolio": []}

    def timed(label, dim, solve):
        start = time.perf_counter()
        trace = solve()
        elapsed = time.perf_counter() - start
        iterations = trace.iterations_used
        return {
            "instance": label,
            "dim": dim,
            "iterations": iterations,
            "seconds": elapsed,
            "seconds_per_iteration": elapsed / max(iterations, 1),
            "converged": trace.converged,
        }

    prior = two_atom_prior()
    results["augustin"].append(
        timed("two_atom_prior", 2, lambda: solve_augustin(AugustinRun(0.75, prior, np.array([0.5, 0.5]), tolerance)))
    )
    big_prior = generate_instance("augustin", 16, 8, _child_seed(seed, 100))
    start16 = random_interior_point(rng_for(seed, 101), 16)
    results["augustin"].append(
        timed("generated_d16", 16, lambda: solve_augustin(AugustinRun(0.75, big_prior, start16, tolerance)))
    )
    joint = tilted_joint_2x2()
    results["renyi"].append(
        timed("tilted_joint_2x2", [2, 2], lambda: solve_renyi(RenyiRun(2.0, joint, np.array([0.5, 0.5]), tolerance))[0])
    )
    big_joint = generate_instance("renyi", (12, 10), 0, _child_seed(seed, 102))
    start12 = random_interior_point(rng_for(seed, 103), 12)
    results["renyi"].append(
        timed("generated_12x10", [12, 10], lambda: solve_renyi(RenyiRun(2.0, big_joint, start12, tolerance))[0])
    )
    results["portfolio"].append(
        timed("kelly", 2, lambda: solve_portfolio(PortfolioRun(kelly_portfolio(), np.array([0.5, 0.5]), tolerance)))
    )
    results["portfolio"].append(
        timed("mixed_d4", 4, lambda: solve_portfolio(PortfolioRun(mixed_portfolio_d4(), np.full(4, 0.25), tolerance)))
    )
    return results
