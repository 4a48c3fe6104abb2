"""Seeded Monte Carlo sampling from every copula/marginal combination.

This module is the brute-force counterpart of the analytic formulas: it
samples pairs exactly from each copula family and pushes them through
marginal quantile transforms, so joint survival probabilities, rank
correlations and whole curves can be checked against simple frequencies.

Samplers (all exact, no rejection loops):

* Gaussian: correlated standard normals via the two-variable Cholesky
  step z2 = rho z1 + sqrt(1 - rho^2) z, mapped through the normal CDF.
* Clayton: gamma(1/theta) frailty mixture.
* Gumbel: positive-stable frailty (Marshall-Olkin construction) with
  the Chambers-Mallows-Stuck stable generator.
* Frank: conditional-distribution inversion, which solves in closed
  form after an expm1/log1p rearrangement.
* Independence: two uniforms.

Randomness comes from numpy's counter-based Philox generator.  Streams
are split with SeedSequence.spawn, so substreams (for classes, blocks or
threads) are reproducible regardless of scheduling order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import special

from .copulas import (
    FRANK_INDEPENDENCE_EPS,
    ClaytonCopula,
    Copula,
    FrankCopula,
    GaussianCopula,
    GumbelCopula,
    IndependenceCopula,
)
from .exceptions import ParameterError
from .fitting import ScoreDataset
from .jointroc import JointDiagnosticModel
from .marginals import MarginalModel

__all__ = [
    "SimulationConfig",
    "OracleEstimate",
    "generator_for_seed",
    "split_generators",
    "sample_copula_uniforms",
    "sample_pairs",
    "oracle_survival",
    "synth_dataset",
]

#: keep uniforms strictly inside (0, 1) before quantile transforms
_UNIT_EPS = 2.0**-53


@dataclass(frozen=True)
class SimulationConfig:
    """What to sample: a model, a size, a seed, optionally a prevalence.

    Without a prevalence, synth_dataset draws exactly n_per_class cases
    from each class.  With one, it draws 2 * n_per_class cases whose
    labels are Bernoulli(prevalence), mimicking a screening cohort.
    """

    model: JointDiagnosticModel
    n_per_class: int
    seed: int
    prevalence: Optional[float] = None

    def __post_init__(self):
        if int(self.n_per_class) < 1:
            raise ParameterError("n_per_class must be at least 1")
        if self.prevalence is not None and not 0.0 <= float(self.prevalence) <= 1.0:
            raise ParameterError("prevalence must lie in [0, 1]")


@dataclass(frozen=True)
class OracleEstimate:
    """A Monte Carlo frequency with its binomial standard error."""

    estimate: float
    se: float
    n_samples: int


def generator_for_seed(seed: int) -> np.random.Generator:
    """Philox generator for a 64-bit seed."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed))))


def split_generators(seed: int, n_streams: int) -> list[np.random.Generator]:
    """Independent, order-stable substreams derived from one seed.

    SeedSequence.spawn gives each substream its own entropy path, so
    stream i is the same no matter how many siblings exist or in which
    order they are consumed.
    """
    children = np.random.SeedSequence(int(seed)).spawn(int(n_streams))
    return [np.random.Generator(np.random.Philox(c)) for c in children]


def _interior(u: np.ndarray) -> np.ndarray:
    return np.clip(u, _UNIT_EPS, 1.0 - _UNIT_EPS)


def _stable_positive(alpha: float, rng: np.random.Generator, n: int) -> np.ndarray:
    """Positive alpha-stable draws with Laplace transform exp(-t^alpha)."""
    theta = rng.uniform(0.0, np.pi, n)
    theta = np.clip(theta, 1e-12, np.pi - 1e-12)
    w = rng.standard_exponential(n)
    a = np.sin(alpha * theta) / np.sin(theta) ** (1.0 / alpha)
    b = np.sin((1.0 - alpha) * theta) / w
    return a * b ** ((1.0 - alpha) / alpha)


def sample_copula_uniforms(
    copula: Copula, n: int, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """n exact draws (U, V) from the copula, on the uniform scale."""
    n = int(n)
    if n < 1:
        raise ParameterError("sample size must be at least 1")
    if isinstance(copula, IndependenceCopula):
        return rng.random(n), rng.random(n)
    if isinstance(copula, GaussianCopula):
        rho = copula.rho
        z1 = rng.standard_normal(n)
        z2 = rho * z1 + np.sqrt(1.0 - rho * rho) * rng.standard_normal(n)
        return special.ndtr(z1), special.ndtr(z2)
    if isinstance(copula, ClaytonCopula):
        theta = copula.theta
        w = rng.standard_gamma(1.0 / theta, n)
        e1 = rng.standard_exponential(n)
        e2 = rng.standard_exponential(n)
        u = (1.0 + e1 / w) ** (-1.0 / theta)
        v = (1.0 + e2 / w) ** (-1.0 / theta)
        return u, v
    if isinstance(copula, GumbelCopula):
        theta = copula.theta
        if theta == 1.0:
            return rng.random(n), rng.random(n)
        alpha = 1.0 / theta
        s = _stable_positive(alpha, rng, n)
        e1 = rng.standard_exponential(n)
        e2 = rng.standard_exponential(n)
        u = np.exp(-((e1 / s) ** alpha))
        v = np.exp(-((e2 / s) ** alpha))
        return u, v
    if isinstance(copula, FrankCopula):
        theta = copula.theta
        u = rng.random(n)
        p = rng.random(n)
        if abs(theta) < FRANK_INDEPENDENCE_EPS:
            return u, p
        # conditional CDF of V given U = u inverts in closed form:
        # v = -log1p(p D / (A (1 - p) + p)) / theta with A = exp(-theta u)
        d = np.expm1(-theta)
        a = np.exp(-theta * _interior(u))
        arg = p * d / (a * (1.0 - p) + p)
        v = np.where(arg > -1.0, -np.log1p(np.maximum(arg, -1.0 + 1e-300)) / theta, u)
        return u, np.clip(v, 0.0, 1.0)
    raise ParameterError(f"no sampler for copula family {copula.family!r}")


def sample_pairs(
    copula: Copula,
    marg_x: MarginalModel,
    marg_y: MarginalModel,
    n: int,
    seed: int,
) -> tuple[np.ndarray, np.ndarray]:
    """n score pairs with the given marginals coupled by the copula.

    Reproducible: a fixed (copula, marginals, n, seed) always yields the
    same arrays.
    """
    rng = generator_for_seed(seed)
    u, v = sample_copula_uniforms(copula, n, rng)
    x = marg_x.quantile(_interior(u))
    y = marg_y.quantile(_interior(v))
    return np.asarray(x, dtype=float), np.asarray(y, dtype=float)


def oracle_survival(copula: Copula, u: float, v: float, n: int, seed: int) -> OracleEstimate:
    """Monte Carlo estimate of the joint survival P(U > u, V > v).

    The returned standard error is the plain binomial sqrt(p(1-p)/n).
    """
    u = float(u)
    v = float(v)
    if not (0.0 <= u <= 1.0 and 0.0 <= v <= 1.0):
        raise ParameterError("oracle_survival thresholds must lie in [0, 1]")
    rng = generator_for_seed(seed)
    us, vs = sample_copula_uniforms(copula, n, rng)
    hits = np.count_nonzero((us > u) & (vs > v))
    p = hits / float(n)
    return OracleEstimate(estimate=p, se=float(np.sqrt(p * (1.0 - p) / n)), n_samples=int(n))


def synth_dataset(config: SimulationConfig) -> ScoreDataset:
    """Labeled synthetic scores drawn from a JointDiagnosticModel.

    Stream 0 of the seed drives the non-diseased class, stream 1 the
    diseased class, and stream 2 the Bernoulli labels when a prevalence
    is given, so the label stream never perturbs the score streams.
    """
    model = config.model
    rng_n, rng_d, rng_labels = split_generators(config.seed, 3)

    if config.prevalence is None:
        n_d = n_n = int(config.n_per_class)
        labels = np.concatenate([np.zeros(n_n, dtype=int), np.ones(n_d, dtype=int)])
    else:
        total = 2 * int(config.n_per_class)
        labels = (rng_labels.random(total) < float(config.prevalence)).astype(int)
        n_d = int(labels.sum())
        n_n = total - n_d

    def draw(rng, copula, marg_a, marg_b, count):
        if count == 0:
            return np.empty(0), np.empty(0)
        u, v = sample_copula_uniforms(copula, count, rng)
        return marg_a.quantile(_interior(u)), marg_b.quantile(_interior(v))

    a_n, b_n = draw(rng_n, model.copula_n, model.marg_an, model.marg_bn, n_n)
    a_d, b_d = draw(rng_d, model.copula_d, model.marg_ad, model.marg_bd, n_d)

    score_a = np.empty(labels.size, dtype=float)
    score_b = np.empty(labels.size, dtype=float)
    score_a[labels == 0] = a_n
    score_b[labels == 0] = b_n
    score_a[labels == 1] = a_d
    score_b[labels == 1] = b_d

    ids = [f"case-{i + 1:06d}" for i in range(labels.size)]
    return ScoreDataset(ids, labels, score_a, score_b)
