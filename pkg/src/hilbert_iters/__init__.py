"""Fixed-point solvers for Augustin and Renyi information measures and the
log-optimal portfolio, certified under Hilbert's projective metric."""

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
from .cone import birkhoff_coefficient, hilbert_distance, max_ratio, projective_diameter
from .measures import (
    FinitePrior,
    JointMatrix,
    PortfolioInstance,
    augustin_gradient,
    augustin_objective,
    is_interior,
    portfolio_objective,
    probability_vector,
    renyi_divergence,
    renyi_objective,
)
from .oracle import (
    OracleResult,
    golden_section_d2,
    grid_refine_2x2,
    project_to_simplex,
    projected_gradient_reference,
)
from .portfolio import (
    PortfolioRun,
    ProbeResult,
    contraction_ratio_bound,
    noncontractivity_probe,
    portfolio_gradient,
    portfolio_hessian,
    portfolio_update,
    solve_portfolio,
)
from .renyi import (
    OperatorRatios,
    RenyiRates,
    RenyiRun,
    renyi_empirical_lipschitz,
    renyi_rate_bounds,
    renyi_update_x,
    renyi_update_y,
    solve_renyi,
)
from .sampling import generate_instance, rng_for
from .trace import IterationTrace

__version__ = "0.1.0"
