"""Greedy Riesz/Leja energy sequences on the unit circle.

Construction of greedy energy sequences (exact bit-reversal representative
and direct numerical minimization), closed-form roots-of-unity energies and
midpoint potentials, the binary-digit machinery indexing the limit points of
the normalized extremal values, the catalog of theoretical limit constants,
and a verification harness for the first- and second-order asymptotics.
"""

from .binary import (
    BinaryExpansion,
    ThetaVector,
    decompose,
    enumerate_theta,
    g_value,
    lambda_value,
    search_g_extremes,
    search_lambda,
    tau_b,
    theta_from_odd,
)
from .circle import (
    BudgetExceededError,
    CirclePoint,
    CoincidentPointsError,
    Configuration,
    RieszParameter,
    chord_distance,
    classify_regime,
    energy,
    kernel,
    leja_sup_norm_log,
    midpoint_potential,
    potential,
    roots_energy,
)
from .analysis import (
    DiscrepancyReport,
    LimitPointCheck,
    NormalizedSeries,
    VerificationReport,
    extremal_first_order_series,
    extremal_second_order_series,
    limit_point_check,
    normalized_series,
    star_discrepancy,
    theta_limit_prediction,
    uniform_distribution_report,
    verify_all,
)
from .sequences import (
    GreedyRun,
    canonical_structural,
    energy_series_from_extremal,
    extremal_values_structural,
    greedy_numerical,
)
from .special import (
    EULER_GAMMA,
    ConstantsCatalog,
    continuous_energy,
    gamma_fn,
    limit_catalog,
    zeta,
)

__version__ = "0.1.0"
