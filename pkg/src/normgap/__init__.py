"""Sharp uniform distance between the standard normal law and the class of
zero-mean unit-variance distributions.

The package solves for the constants (x_phi, c_phi), builds the two-point
distribution attaining the bound, computes exact Kolmogorov distances of
finite discrete laws to the normal CDF, and certifies every claimed
inequality by exact computation and seeded randomized search.
"""

__version__ = "0.1.0"

from .errors import (
    ArgumentError,
    DomainError,
    InconsistencyError,
    InternalError,
    NormGapError,
    PreconditionError,
    RangeError,
)
from .specfun import AccuracySpec, DEFAULT_ACCURACY, normal_cdf, normal_pdf, normal_sf
from .extremal import (
    CRITICAL_TARGET,
    ExtremalConstants,
    constants,
    critical_ratio,
    critical_ratio_log_derivative,
    solve_constants,
    tail_gap,
    tail_gap_derivative,
)
from .distributions import (
    DiscreteDistribution,
    MomentSummary,
    cdf_at,
    cdf_left_limit,
    extremal_distribution,
    is_standardized,
    make_two_point,
    mirror,
    moments,
    standardize,
)
from .metrics import (
    CantelliReport,
    ComparisonReport,
    DistanceReport,
    GridDistance,
    cantelli_check,
    compare_berry_esseen,
    grid_distance,
    kolmogorov_distance,
)
from .verify import (
    CampaignResult,
    CurveDump,
    SweepResult,
    dump_curves,
    random_campaign,
    sweep_two_point,
)

__all__ = [
    "AccuracySpec",
    "ArgumentError",
    "CampaignResult",
    "CantelliReport",
    "ComparisonReport",
    "CRITICAL_TARGET",
    "CurveDump",
    "DEFAULT_ACCURACY",
    "DiscreteDistribution",
    "DistanceReport",
    "DomainError",
    "ExtremalConstants",
    "GridDistance",
    "InconsistencyError",
    "InternalError",
    "MomentSummary",
    "NormGapError",
    "PreconditionError",
    "RangeError",
    "SweepResult",
    "cantelli_check",
    "cdf_at",
    "cdf_left_limit",
    "compare_berry_esseen",
    "constants",
    "critical_ratio",
    "critical_ratio_log_derivative",
    "dump_curves",
    "extremal_distribution",
    "grid_distance",
    "is_standardized",
    "kolmogorov_distance",
    "make_two_point",
    "mirror",
    "moments",
    "normal_cdf",
    "normal_pdf",
    "normal_sf",
    "random_campaign",
    "solve_constants",
    "standardize",
    "sweep_two_point",
    "tail_gap",
    "tail_gap_derivative",
]
