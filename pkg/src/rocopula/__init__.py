"""ROC analysis for two correlated diagnostic tests under triage rules.

The package models a two-test protocol (a screening Test A whose
threshold rules cases out, in, or both, and a follow-up Test B) with
parametric marginals coupled by a bivariate copula per disease class.
It computes the resulting joint ROC curves and partial AUCs, fits the
pieces from score data, verifies the monotone dependence theorems, and
cross-checks everything against seeded Monte Carlo simulation.
"""

__version__ = "0.1.0"

from .copulas import (
    ClaytonCopula,
    Copula,
    FrankCopula,
    GaussianCopula,
    GumbelCopula,
    IndependenceCopula,
    bivariate_normal_cdf,
    copula_cdf,
    copula_from_dict,
    joint_survival,
)
from .dependence import (
    DependenceMeasure,
    debye1,
    sample_kendall,
    sample_pearson,
    sample_spearman,
    spearman_from_copula,
    tau_from_theta,
    theta_from_tau,
)
from .exceptions import (
    DegenerateDataError,
    FitError,
    NumericError,
    ParameterError,
    ValidationError,
)
from .fitting import (
    AnalysisConfig,
    AnalysisReport,
    BinormalFit,
    ScoreDataset,
    analyze,
    empirical_roc,
    fit_binormal_deming,
    fit_from_point_and_ratio,
    mean_to_sigma_ratio,
    project_operating_points,
)
from .jointroc import (
    JointDiagnosticModel,
    OperatingPoint,
    RocCurve,
    auc,
    combined_point,
    curve,
    interp_tpf,
    pauc,
    rulein_point,
    ruleout_point,
    univariate_curve,
    workload_ruled_out,
)
from .marginals import (
    Exponential,
    MarginalModel,
    Normal,
    marginal_from_dict,
    standard_normal_cdf,
    standard_normal_quantile,
)
from .modelspec import ModelSpec, SweepDef, load_model_spec, parse_model_spec
from .simulate import (
    OracleEstimate,
    SimulationConfig,
    oracle_survival,
    sample_copula_uniforms,
    sample_pairs,
    synth_dataset,
)
from .theorems import SweepResult, pauc_window, swept_model, theorem_sweep

__all__ = [
    "__version__",
    # marginals
    "MarginalModel",
    "Normal",
    "Exponential",
    "marginal_from_dict",
    "standard_normal_cdf",
    "standard_normal_quantile",
    # copulas
    "Copula",
    "GaussianCopula",
    "GumbelCopula",
    "ClaytonCopula",
    "FrankCopula",
    "IndependenceCopula",
    "bivariate_normal_cdf",
    "copula_cdf",
    "copula_from_dict",
    "joint_survival",
    # dependence
    "DependenceMeasure",
    "debye1",
    "tau_from_theta",
    "theta_from_tau",
    "spearman_from_copula",
    "sample_pearson",
    "sample_kendall",
    "sample_spearman",
    # jointroc
    "JointDiagnosticModel",
    "OperatingPoint",
    "RocCurve",
    "univariate_curve",
    "ruleout_point",
    "rulein_point",
    "combined_point",
    "curve",
    "auc",
    "pauc",
    "interp_tpf",
    "workload_ruled_out",
    # fitting
    "ScoreDataset",
    "BinormalFit",
    "AnalysisConfig",
    "AnalysisReport",
    "empirical_roc",
    "fit_binormal_deming",
    "fit_from_point_and_ratio",
    "mean_to_sigma_ratio",
    "project_operating_points",
    "analyze",
    # simulate
    "SimulationConfig",
    "OracleEstimate",
    "sample_copula_uniforms",
    "sample_pairs",
    "oracle_survival",
    "synth_dataset",
    # theorems
    "SweepResult",
    "theorem_sweep",
    "pauc_window",
    "swept_model",
    # model specs
    "ModelSpec",
    "SweepDef",
    "parse_model_spec",
    "load_model_spec",
    # errors
    "ParameterError",
    "ValidationError",
    "DegenerateDataError",
    "FitError",
    "NumericError",
]
