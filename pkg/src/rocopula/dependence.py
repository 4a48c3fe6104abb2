"""Dependence measures and parameter conversions for the copula families.

Model-side quantities:

* ``tau_from_theta`` / ``theta_from_tau`` translate between a family's
  dependence parameter and the population Kendall tau it implies, using
  the closed forms for Gumbel and Clayton and the first Debye function
  for Frank.
* ``spearman_from_copula`` integrates 12 * Int C(u, v) du dv - 3 for any
  copula by tensor Gauss-Legendre quadrature.

Sample-side estimators (``sample_pearson``, ``sample_kendall``,
``sample_spearman``) operate on paired score arrays; Kendall is the
tie-adjusted tau-b.  Degenerate inputs (a constant column) raise instead
of returning NaN.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize, stats

from .copulas import Copula
from .exceptions import DegenerateDataError, ParameterError

__all__ = [
    "DependenceMeasure",
    "debye1",
    "tau_from_theta",
    "theta_from_tau",
    "spearman_from_copula",
    "sample_pearson",
    "sample_kendall",
    "sample_spearman",
    "dependence_summary",
]

#: search bracket for inverting the Frank tau curve
FRANK_THETA_BRACKET = (1e-6, 50.0)

_SPEARMAN_NODES = 128


@dataclass(frozen=True)
class DependenceMeasure:
    """A named rank or linear correlation in [-1, 1]."""

    kind: str  # "pearson" | "kendall" | "spearman"
    value: float

    def __post_init__(self):
        if self.kind not in ("pearson", "kendall", "spearman"):
            raise ParameterError(f"unknown dependence measure kind: {self.kind!r}")
        if not np.isfinite(self.value) or abs(self.value) > 1.0 + 1e-12:
            raise ParameterError("dependence measure value must lie in [-1, 1]")


def debye1(theta: float) -> float:
    """First Debye function D1(theta) = (1/theta) * Int_0^theta t/(e^t - 1) dt.

    Defined here for theta > 0; the Frank conversions handle negative
    parameters through the oddness of tau.
    """
    theta = float(theta)
    if not np.isfinite(theta) or theta <= 0.0:
        raise ParameterError("debye1 requires theta > 0")

    def integrand(t: float) -> float:
        if t < 1e-12:
            return 1.0 - t / 2.0  # series limit of t / (e^t - 1)
        return t / np.expm1(t)

    value, _ = integrate.quad(integrand, 0.0, theta, epsabs=1e-14, epsrel=1e-13, limit=200)
    return value / theta


def tau_from_theta(family: str, theta: float) -> float:
    """Population Kendall tau implied by a family's parameter.

    Gumbel: 1 - 1/theta.  Clayton: theta / (theta + 2).  Frank:
    1 + 4 (D1(theta) - 1) / theta, extended to negative theta by
    oddness, with tau(0) = 0 as the independence limit.
    """
    theta = float(theta)
    if family == "gumbel":
        if not np.isfinite(theta) or theta < 1.0:
            raise ParameterError("gumbel theta must lie in [1, inf)")
        return 1.0 - 1.0 / theta
    if family == "clayton":
        if not np.isfinite(theta) or theta <= 0.0:
            raise ParameterError("clayton theta must lie in (0, inf)")
        return theta / (theta + 2.0)
    if family == "frank":
        if not np.isfinite(theta):
            raise ParameterError("frank theta must be finite")
        if theta == 0.0:
            return 0.0
        sign = 1.0 if theta > 0 else -1.0
        t = abs(theta)
        return sign * (1.0 + 4.0 * (debye1(t) - 1.0) / t)
    raise ParameterError(f"no tau formula for family {family!r}")


def theta_from_tau(family: str, tau: float) -> float:
    """Parameter of a family matching a target Kendall tau in (0, 1).

    Gumbel and Clayton invert in closed form.  Frank is solved by
    bracketed root finding on FRANK_THETA_BRACKET, whose upper end
    corresponds to tau of about 0.9226; stronger dependence is rejected.
    """
    tau = float(tau)
    if not np.isfinite(tau) or tau <= 0.0 or tau >= 1.0:
        raise ParameterError("target tau must lie strictly in (0, 1)")
    if family == "gumbel":
        return 1.0 / (1.0 - tau)
    if family == "clayton":
        return 2.0 * tau / (1.0 - tau)
    if family == "frank":
        lo, hi = FRANK_THETA_BRACKET
        tau_lo = tau_from_theta("frank", lo)
        tau_hi = tau_from_theta("frank", hi)
        if tau <= tau_lo or tau >= tau_hi:
            raise ParameterError(
                f"frank tau must lie in ({tau_lo:.3g}, {tau_hi:.6g}) "
                f"for theta bracket [{lo:g}, {hi:g}]"
            )
        theta = optimize.brentq(
            lambda t: tau_from_theta("frank", t) - tau, lo, hi, xtol=1e-12, rtol=1e-14
        )
        return float(theta)
    raise ParameterError(f"no theta inversion for family {family!r}")


def spearman_from_copula(copula: Copula) -> float:
    """Population Spearman rho, 12 * Int_0^1 Int_0^1 C(u, v) du dv - 3.

    Evaluated by a tensor-product Gauss-Legendre rule; the integrand is
    the copula CDF itself, so no densities are required.
    """
    nodes, weights = np.polynomial.legendre.leggauss(_SPEARMAN_NODES)
    u = 0.5 * (nodes + 1.0)
    w = 0.5 * weights
    uu, vv = np.meshgrid(u, u, indexing="ij")
    c = copula.cdf(uu.ravel(), vv.ravel()).reshape(uu.shape)
    integral = w @ c @ w
    rho = 12.0 * integral - 3.0
    return float(np.clip(rho, -1.0, 1.0))


def _paired(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.ndim != 1 or y.ndim != 1 or x.shape != y.shape:
        raise ParameterError("paired samples must be one-dimensional and equally long")
    if x.size < 2:
        raise DegenerateDataError("need at least two pairs to estimate dependence")
    if np.any(~np.isfinite(x)) or np.any(~np.isfinite(y)):
        raise ParameterError("paired samples must be finite")
    return x, y


def sample_pearson(x, y) -> float:
    """Sample Pearson correlation; constant columns are an error."""
    x, y = _paired(x, y)
    sx = x.std()
    sy = y.std()
    if sx == 0.0 or sy == 0.0:
        raise DegenerateDataError("pearson correlation undefined for a constant column")
    r = np.mean((x - x.mean()) * (y - y.mean())) / (sx * sy)
    return float(np.clip(r, -1.0, 1.0))


def sample_kendall(x, y) -> float:
    """Tie-adjusted Kendall tau-b of a paired sample."""
    x, y = _paired(x, y)
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateDataError("kendall tau undefined for a constant column")
    tau = stats.kendalltau(x, y, variant="b").statistic
    if not np.isfinite(tau):
        raise DegenerateDataError("kendall tau undefined for this sample")
    return float(tau)


def sample_spearman(x, y) -> float:
    """Sample Spearman rank correlation."""
    x, y = _paired(x, y)
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateDataError("spearman rho undefined for a constant column")
    rho = stats.spearmanr(x, y).statistic
    if not np.isfinite(rho):
        raise DegenerateDataError("spearman rho undefined for this sample")
    return float(rho)


def dependence_summary(x, y) -> dict[str, DependenceMeasure]:
    """All three sample correlations of one paired sample."""
    return {
        "pearson": DependenceMeasure("pearson", sample_pearson(x, y)),
        "kendall": DependenceMeasure("kendall", sample_kendall(x, y)),
        "spearman": DependenceMeasure("spearman", sample_spearman(x, y)),
    }
