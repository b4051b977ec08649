"""Two-cluster split-point estimation for stationary weakly dependent data.

The split point of a univariate distribution is where the cross-over
criterion T changes sign; its sample version is computed exactly from the
order statistics, and the estimator obeys a CLT whose variance is the
long-run variance of an influence series over the squared criterion slope.
"""

from ._kernels import BACKEND, available_backends
from .crossover import (
    CrossoverCurve,
    SplitEstimate,
    SplitOutcome,
    build_crossover_curve,
    crossover_G,
    sample_crossover_eval,
    sample_split_point,
    split_function,
    theoretical_crossover,
    theoretical_crossover_derivative,
)
from .distributions import DistributionModel, StandardNormalModel, standard_normal_model
from .errors import (
    CrossplitError,
    DegenerateSampleError,
    DomainError,
    IntegrationError,
)
from .experiment import (
    ExperimentConfig,
    ExperimentReport,
    SizeSummary,
    normality_diagnostic,
    run_experiment,
)
from .generators import GeneratorKind, GeneratorSpec, generate
from .sample import EmpiricalCdf, Sample, empirical_cdf_eval, load_sample_csv
from .variance import (
    InfluenceSeries,
    SplitInference,
    analytic_sigma_mdependent,
    default_bandwidth,
    estimate_crossover_slope,
    influence_values,
    long_run_variance,
    split_confidence_interval,
    split_point_variance,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "available_backends",
    "CrossoverCurve",
    "SplitEstimate",
    "SplitOutcome",
    "build_crossover_curve",
    "crossover_G",
    "sample_crossover_eval",
    "sample_split_point",
    "split_function",
    "theoretical_crossover",
    "theoretical_crossover_derivative",
    "DistributionModel",
    "StandardNormalModel",
    "standard_normal_model",
    "CrossplitError",
    "DegenerateSampleError",
    "DomainError",
    "IntegrationError",
    "ExperimentConfig",
    "ExperimentReport",
    "SizeSummary",
    "normality_diagnostic",
    "run_experiment",
    "GeneratorKind",
    "GeneratorSpec",
    "generate",
    "EmpiricalCdf",
    "Sample",
    "empirical_cdf_eval",
    "load_sample_csv",
    "InfluenceSeries",
    "SplitInference",
    "analytic_sigma_mdependent",
    "default_bandwidth",
    "estimate_crossover_slope",
    "influence_values",
    "long_run_variance",
    "split_confidence_interval",
    "split_point_variance",
    "__version__",
]
