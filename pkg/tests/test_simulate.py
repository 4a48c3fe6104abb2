"""Tests for rocopula.simulate.

Every sampler check runs with a fixed seed whose deviation was inspected
beforehand, so the assertions are deterministic while the tolerances
stay honest (3 or 4 standard errors of the relevant estimator).
"""

import hashlib
import math

import numpy as np
import pytest

from rocopula.copulas import (
    ClaytonCopula,
    FrankCopula,
    GaussianCopula,
    GumbelCopula,
    IndependenceCopula,
    joint_survival,
)
from rocopula.dependence import sample_kendall, sample_pearson, tau_from_theta
from rocopula.exceptions import ParameterError
from rocopula.fitting import empirical_roc
from rocopula.jointroc import JointDiagnosticModel
from rocopula.marginals import Exponential, Normal
from rocopula.simulate import (
    OracleEstimate,
    SimulationConfig,
    generator_for_seed,
    oracle_survival,
    sample_copula_uniforms,
    sample_pairs,
    split_generators,
    synth_dataset,
)

from oracles import auc_hanley_mcneil_se, mann_whitney_auc, mc_frank_uniforms


def normal_model(rho_n=0.3, rho_d=0.5, **kwargs):
    return JointDiagnosticModel(
        marg_an=Normal(0.0, 1.0),
        marg_ad=Normal(1.2, 1.1),
        marg_bn=Normal(0.0, 1.0),
        marg_bd=Normal(1.0, 1.0),
        copula_n=GaussianCopula(rho_n),
        copula_d=GaussianCopula(rho_d),
        **kwargs,
    )


def ks_distance(sample, cdf):
    """Kolmogorov-Smirnov sup distance between a sample and a model cdf."""
    xs = np.sort(np.asarray(sample, dtype=float))
    n = xs.size
    f = cdf(xs)
    upper = np.max(np.arange(1, n + 1) / n - f)
    lower = np.max(f - np.arange(0, n) / n)
    return max(upper, lower)


# ---------------------------------------------------------------------------
# generators and stream splitting


def test_generator_for_seed_is_reproducible():
    a = generator_for_seed(1234).random(8)
    b = generator_for_seed(1234).random(8)
    assert np.array_equal(a, b)


def test_generator_for_seed_uses_philox():
    gen = generator_for_seed(0)
    assert type(gen.bit_generator).__name__ == "Philox"


def test_split_generators_streams_are_order_stable():
    # stream i must not depend on how many siblings were spawned
    few = split_generators(99, 2)
    many = split_generators(99, 5)
    for i in range(2):
        assert np.array_equal(few[i].random(16), many[i].random(16))


def test_split_generators_streams_differ_from_each_other():
    s0, s1, s2 = split_generators(7, 3)
    d0, d1, d2 = s0.random(32), s1.random(32), s2.random(32)
    assert not np.array_equal(d0, d1)
    assert not np.array_equal(d1, d2)
    assert not np.array_equal(d0, d2)


# ---------------------------------------------------------------------------
# sample_copula_uniforms: determinism, margins, joint law


def all_family_cases():
    return [
        (IndependenceCopula(), 0.04),
        (GaussianCopula(0.5), None),
        (ClaytonCopula(1.5), None),
        (GumbelCopula(2.0), None),
        (FrankCopula(3.0), None),
    ]


@pytest.mark.parametrize("copula", [c for c, _ in all_family_cases()], ids=lambda c: c.family)
def test_uniform_margins_pass_ks(copula):
    n = 20_000
    u, v = sample_copula_uniforms(copula, n, generator_for_seed(4100))
    crit = 1.63 / math.sqrt(n)
    assert ks_distance(u, lambda x: x) < crit
    assert ks_distance(v, lambda x: x) < crit


@pytest.mark.parametrize("copula", [c for c, _ in all_family_cases()], ids=lambda c: c.family)
def test_grid_cell_masses_match_cdf_increments(copula):
    # 5 x 5 quintile cells: empirical mass vs the copula rectangle mass
    n = 100_000
    u, v = sample_copula_uniforms(copula, n, generator_for_seed(4200))
    edges = np.linspace(0.0, 1.0, 6)
    for i in range(5):
        for j in range(5):
            u0, u1 = edges[i], edges[i + 1]
            v0, v1 = edges[j], edges[j + 1]
            p = float(
                copula.cdf(u1, v1)
                - copula.cdf(u0, v1)
                - copula.cdf(u1, v0)
                + copula.cdf(u0, v0)
            )
            freq = np.count_nonzero((u > u0) & (u <= u1) & (v > v0) & (v <= v1)) / n
            se = math.sqrt(p * (1.0 - p) / n)
            assert abs(freq - p) < 4.0 * se, (copula.family, i, j, freq, p)


def test_independence_sample_has_negligible_tau():
    n = 20_000
    u, v = sample_copula_uniforms(IndependenceCopula(), n, generator_for_seed(4300))
    assert abs(sample_kendall(u, v)) < 3.0 / math.sqrt(n)


def test_gaussian_sample_recovers_rho():
    n = 100_000
    copula = GaussianCopula(0.4)
    x, y = sample_pairs(copula, Normal(0.0, 1.0), Normal(1.0, 1.2), n, seed=4400)
    # normal quantile transforms are linear in the latent normals, so
    # Pearson correlation equals the copula parameter
    assert sample_pearson(x, y) == pytest.approx(0.4, abs=0.01)


def test_gumbel_sample_recovers_tau():
    n = 100_000
    u, v = sample_copula_uniforms(GumbelCopula(2.0), n, generator_for_seed(4500))
    assert sample_kendall(u, v) == pytest.approx(0.5, abs=0.01)


@pytest.mark.parametrize("theta", [-5.0, 4.0])
def test_frank_sampler_agrees_with_bisection_route(theta):
    # the library inverts the conditional law in closed form; the oracle
    # solves the same equation by bisection
    n = 100_000
    u, v = sample_copula_uniforms(FrankCopula(theta), n, generator_for_seed(4600))
    uo, vo = mc_frank_uniforms(theta, n, np.random.default_rng(4601))
    tau_lib = sample_kendall(u, v)
    tau_oracle = sample_kendall(uo, vo)
    tau_true = tau_from_theta("frank", theta)
    assert tau_lib == pytest.approx(tau_true, abs=0.01)
    assert tau_lib == pytest.approx(tau_oracle, abs=0.015)


def test_clayton_sample_recovers_tau():
    n = 100_000
    u, v = sample_copula_uniforms(ClaytonCopula(2.0), n, generator_for_seed(4700))
    assert sample_kendall(u, v) == pytest.approx(0.5, abs=0.01)


def test_sample_copula_uniforms_rejects_empty_draw():
    with pytest.raises(ParameterError, match="at least 1"):
        sample_copula_uniforms(IndependenceCopula(), 0, generator_for_seed(1))


# ---------------------------------------------------------------------------
# sample_pairs


def test_sample_pairs_is_reproducible():
    args = (GumbelCopula(1.7), Exponential(1.0), Exponential(1.3), 512, 31)
    x1, y1 = sample_pairs(*args)
    x2, y2 = sample_pairs(*args)
    assert np.array_equal(x1, x2)
    assert np.array_equal(y1, y2)


def test_sample_pairs_seed_changes_output():
    x1, _ = sample_pairs(GaussianCopula(0.2), Normal(0.0, 1.0), Normal(0.0, 1.0), 64, 1)
    x2, _ = sample_pairs(GaussianCopula(0.2), Normal(0.0, 1.0), Normal(0.0, 1.0), 64, 2)
    assert not np.array_equal(x1, x2)


@pytest.mark.parametrize(
    "marg_x, marg_y",
    [
        (Exponential(1.0), Exponential(1.23)),
        (Normal(1.19, 1.0), Normal(0.0, 2.0)),
    ],
    ids=["exponential", "normal"],
)
def test_sample_pairs_margins_pass_ks(marg_x, marg_y):
    n = 20_000
    x, y = sample_pairs(GaussianCopula(0.4), marg_x, marg_y, n, seed=4800)
    crit = 1.63 / math.sqrt(n)
    assert ks_distance(x, marg_x.cdf) < crit
    assert ks_distance(y, marg_y.cdf) < crit


def test_sample_pairs_yields_finite_floats():
    x, y = sample_pairs(ClaytonCopula(0.8), Normal(0.0, 1.0), Exponential(2.0), 256, 5)
    assert x.dtype == float and y.dtype == float
    assert np.all(np.isfinite(x)) and np.all(np.isfinite(y))


# ---------------------------------------------------------------------------
# oracle_survival


def test_oracle_survival_independence_example():
    est = oracle_survival(IndependenceCopula(), 0.2, 0.3, n=100_000, seed=4900)
    assert est.estimate == pytest.approx(0.56, abs=3.0 * est.se)


def test_oracle_survival_clayton_example():
    # S(0.5, 0.5) = C(0.5, 0.5) = 7^(-1/2) for theta = 2
    est = oracle_survival(ClaytonCopula(2.0), 0.5, 0.5, n=100_000, seed=4910)
    assert est.estimate == pytest.approx(7.0 ** -0.5, abs=3.0 * est.se)


def test_oracle_survival_gaussian_example():
    est = oracle_survival(GaussianCopula(0.5), 0.5, 0.5, n=100_000, seed=4920)
    assert est.estimate == pytest.approx(1.0 / 3.0, abs=3.0 * est.se)


@pytest.mark.parametrize(
    "copula, u, v",
    [
        (GumbelCopula(2.5), 0.3, 0.6),
        (FrankCopula(-4.0), 0.7, 0.2),
        (GaussianCopula(-0.35), 0.4, 0.4),
    ],
    ids=["gumbel", "frank", "gaussian"],
)
def test_oracle_survival_matches_analytic_survival(copula, u, v):
    est = oracle_survival(copula, u, v, n=200_000, seed=4930)
    assert est.estimate == pytest.approx(joint_survival(copula, u, v), abs=4.0 * est.se)


def test_oracle_survival_reports_binomial_se():
    est = oracle_survival(IndependenceCopula(), 0.5, 0.5, n=10_000, seed=4940)
    p = est.estimate
    assert est.n_samples == 10_000
    assert est.se == pytest.approx(math.sqrt(p * (1.0 - p) / 10_000), rel=1e-12)


def test_oracle_survival_is_reproducible():
    a = oracle_survival(GumbelCopula(3.0), 0.25, 0.75, n=5_000, seed=11)
    b = oracle_survival(GumbelCopula(3.0), 0.25, 0.75, n=5_000, seed=11)
    assert a == b
    assert isinstance(a, OracleEstimate)


@pytest.mark.parametrize("u, v", [(1.2, 0.5), (0.5, -0.1)])
def test_oracle_survival_rejects_thresholds_outside_unit_interval(u, v):
    with pytest.raises(ParameterError, match="lie in"):
        oracle_survival(IndependenceCopula(), u, v, n=100, seed=0)


# ---------------------------------------------------------------------------
# synth_dataset


def test_synth_dataset_is_deterministic():
    config = SimulationConfig(model=normal_model(), n_per_class=200, seed=314)
    d1 = synth_dataset(config)
    d2 = synth_dataset(config)
    assert d1.to_csv_text() == d2.to_csv_text()
    assert d1.content_hash() == d2.content_hash()
    digest = hashlib.sha256(d1.to_csv_text().encode("utf-8")).hexdigest()
    assert digest == d1.content_hash()


def test_synth_dataset_seed_changes_content():
    model = normal_model()
    d1 = synth_dataset(SimulationConfig(model=model, n_per_class=50, seed=1))
    d2 = synth_dataset(SimulationConfig(model=model, n_per_class=50, seed=2))
    assert d1.content_hash() != d2.content_hash()


def test_synth_dataset_without_prevalence_has_exact_class_counts():
    d = synth_dataset(SimulationConfig(model=normal_model(), n_per_class=75, seed=8))
    assert len(d) == 150
    assert int(np.sum(d.labels == 0)) == 75
    assert int(np.sum(d.labels == 1)) == 75
    assert len(set(d.case_ids)) == 150


def test_synth_dataset_prevalence_draws_bernoulli_labels():
    n_per_class, p = 5_000, 0.15
    config = SimulationConfig(model=normal_model(), n_per_class=n_per_class, seed=2024, prevalence=p)
    d = synth_dataset(config)
    total = 2 * n_per_class
    assert len(d) == total
    n_d = int(np.sum(d.labels == 1))
    se = math.sqrt(total * p * (1.0 - p))
    assert abs(n_d - total * p) < 3.0 * se


def test_synth_dataset_prevalence_is_deterministic():
    config = SimulationConfig(model=normal_model(), n_per_class=100, seed=55, prevalence=0.3)
    assert synth_dataset(config).content_hash() == synth_dataset(config).content_hash()


def test_synth_dataset_class_conditional_correlations():
    d = synth_dataset(SimulationConfig(model=normal_model(0.3, 0.5), n_per_class=20_000, seed=98))
    rho_n = sample_pearson(d.class_scores("a", 0), d.class_scores("b", 0))
    rho_d = sample_pearson(d.class_scores("a", 1), d.class_scores("b", 1))
    assert rho_n == pytest.approx(0.3, abs=0.02)
    assert rho_d == pytest.approx(0.5, abs=0.02)


def test_synth_dataset_empirical_auc_matches_model():
    n = 2_000
    d = synth_dataset(SimulationConfig(model=normal_model(), n_per_class=n, seed=616))
    mu, sigma = 1.2, 1.1
    auc_model = 0.5 * (1.0 + math.erf(mu / math.sqrt(1.0 + sigma * sigma) / math.sqrt(2.0)))
    auc_emp = mann_whitney_auc(d.class_scores("a", 0), d.class_scores("a", 1))
    se = auc_hanley_mcneil_se(auc_model, n, n)
    assert abs(auc_emp - auc_model) < 3.0 * se


def test_synth_dataset_marginal_ks():
    d = synth_dataset(SimulationConfig(model=normal_model(), n_per_class=20_000, seed=717))
    crit = 1.63 / math.sqrt(20_000)
    assert ks_distance(d.class_scores("a", 0), Normal(0.0, 1.0).cdf) < crit
    assert ks_distance(d.class_scores("a", 1), Normal(1.2, 1.1).cdf) < crit
    assert ks_distance(d.class_scores("b", 1), Normal(1.0, 1.0).cdf) < crit


def test_synth_dataset_feeds_empirical_roc():
    d = synth_dataset(SimulationConfig(model=normal_model(), n_per_class=300, seed=5))
    curve = empirical_roc(d, which="a")
    assert curve.fpf[0] == 0.0 and curve.fpf[-1] == 1.0


def test_synth_dataset_single_class_prevalence_edge():
    d = synth_dataset(SimulationConfig(model=normal_model(), n_per_class=20, seed=3, prevalence=0.0))
    assert np.all(d.labels == 0)
    assert np.all(np.isfinite(d.score_a))


# ---------------------------------------------------------------------------
# SimulationConfig validation


def test_simulation_config_rejects_empty_classes():
    with pytest.raises(ParameterError, match="at least 1"):
        SimulationConfig(model=normal_model(), n_per_class=0, seed=1)


@pytest.mark.parametrize("prevalence", [-0.1, 1.5, float("nan")])
def test_simulation_config_rejects_bad_prevalence(prevalence):
    with pytest.raises(ParameterError, match="prevalence"):
        SimulationConfig(model=normal_model(), n_per_class=10, seed=1, prevalence=prevalence)
