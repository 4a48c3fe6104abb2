"""Bivariate copulas and the joint survival function built on them.

A copula C(u, v) couples the two test scores within one class.  Five
families are provided:

* Gaussian     C(u, v) = Psi2(z(u), z(v); rho),   rho in (-1, 1)
* Gumbel       C(u, v) = exp(-((-ln u)^t + (-ln v)^t)^(1/t)),   t >= 1
* Clayton      C(u, v) = max(u^-t + v^-t - 1, 0)^(-1/t),        t > 0
* Frank        C(u, v) = -ln(1 + (e^(-tu)-1)(e^(-tv)-1)/(e^(-t)-1)) / t
* Independence C(u, v) = u v

where z is the standard normal quantile and Psi2 the standard bivariate
normal CDF.  Every family reduces CDF evaluation to closed forms or, for
the Gaussian, to a single one-dimensional integral; no rejection sampling
or two-dimensional quadrature is involved.

The joint survival S(u, v) = 1 - u - v + C(u, v) is the probability that
both uniform scores exceed their thresholds; it is what the rule-out
operating points are made of.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np
from scipy import special

from ._util import as_float_array, clamp_unit
from .exceptions import ParameterError, ValidationError
from .marginals import numeric

__all__ = [
    "bivariate_normal_cdf",
    "Copula",
    "GaussianCopula",
    "GumbelCopula",
    "ClaytonCopula",
    "FrankCopula",
    "IndependenceCopula",
    "copula_from_dict",
    "copula_cdf",
    "joint_survival",
]

# Gauss-Legendre rule reused by every Gaussian CDF call.  The integrand
# below is analytic on the whole (bounded) interval, so 96 nodes push the
# quadrature error well below 1e-15.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(96)

#: Frank parameters this close to zero are treated as exact independence
FRANK_INDEPENDENCE_EPS = 1e-6


def bivariate_normal_cdf(x: numeric, y: numeric, rho: float) -> numeric:
    """Standard bivariate normal CDF Psi2(x, y; rho).

    Uses the single-integral identity

        Psi2(x, y; rho) = Phi(x) Phi(y)
            + (1/2pi) * Int_0^rho (1-t^2)^(-1/2)
                exp(-(x^2 - 2 t x y + y^2) / (2 (1-t^2))) dt,

    after the substitution t = sin(s), which removes the endpoint
    singularity and leaves an analytic integrand on [0, arcsin(rho)]:

        (1/2pi) * Int_0^arcsin(rho)
            exp(-(x^2 - 2 x y sin(s) + y^2) / (2 cos(s)^2)) ds.

    A fixed Gauss-Legendre rule then evaluates it to near machine
    precision for any rho in (-1, 1).

    Parameters
    ----------
    x, y : float or ndarray
        Evaluation points; broadcast against each other.  Infinities are
        handled by their limits.
    rho : float
        Correlation, strictly between -1 and 1.

    Returns
    -------
    float or ndarray
        P(X <= x, Y <= y) for (X, Y) standard bivariate normal.
    """
    rho = float(rho)
    if not np.isfinite(rho) or abs(rho) >= 1.0:
        raise ParameterError("bivariate normal correlation must lie in (-1, 1)")
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0
    x, y = np.broadcast_arrays(as_float_array(x), as_float_array(y))
    x = np.atleast_1d(x)
    y = np.atleast_1d(y)

    out = special.ndtr(x) * special.ndtr(y)
    if rho != 0.0:
        # infinite arguments already carry the correct product limit: +inf
        # leaves the other factor, -inf forces 0, and the correlation
        # correction vanishes in both cases
        finite = np.isfinite(x) & np.isfinite(y)
        if np.any(finite):
            a = float(np.arcsin(rho))
            s = 0.5 * a * (_GL_NODES + 1.0)
            cos2 = np.cos(s) ** 2
            sin_s = np.sin(s)
            xf = x[finite]
            yf = y[finite]
            expo = -(
                xf[..., None] ** 2
                - 2.0 * xf[..., None] * yf[..., None] * sin_s
                + yf[..., None] ** 2
            ) / (2.0 * cos2)
            integral = 0.5 * a * (np.exp(expo) @ _GL_WEIGHTS)
            out[finite] += integral / (2.0 * np.pi)
    out = clamp_unit(out, "bivariate normal cdf")
    if scalar:
        return float(out[0])
    return out


class Copula(ABC):
    """Common interface for bivariate copulas on [0, 1]^2."""

    family: str

    @property
    def param(self) -> Optional[float]:
        """The scalar dependence parameter, or None for independence."""
        return None

    def with_param(self, value: float) -> "Copula":
        """A copula of the same family with a new dependence parameter."""
        raise ParameterError(f"{self.family} copula has no free parameter")

    @abstractmethod
    def _cdf_interior(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """CDF on points with 0 < u < 1 and 0 < v < 1."""

    @abstractmethod
    def to_dict(self) -> dict:
        """JSON-ready description of the copula."""

    def cdf(self, u: numeric, v: numeric) -> numeric:
        """C(u, v) with exact boundary behaviour.

        The grounded/uniform-margin identities C(u, 0) = C(0, v) = 0,
        C(u, 1) = u and C(1, v) = v are applied exactly so that curve
        endpoints never inherit quadrature noise.
        """
        scalar = np.ndim(u) == 0 and np.ndim(v) == 0
        u, v = np.broadcast_arrays(as_float_array(u), as_float_array(v))
        if np.any(~np.isfinite(u)) or np.any(~np.isfinite(v)):
            raise ParameterError("copula arguments must be finite")
        if np.any((u < 0.0) | (u > 1.0) | (v < 0.0) | (v > 1.0)):
            raise ParameterError("copula arguments must lie in [0, 1]")
        u = np.atleast_1d(u)
        v = np.atleast_1d(v)

        out = np.empty(u.shape, dtype=float)
        zero = (u == 0.0) | (v == 0.0)
        top_u = (u == 1.0) & ~zero
        top_v = (v == 1.0) & ~zero & ~top_u
        interior = ~(zero | top_u | top_v)
        out[zero] = 0.0
        out[top_u] = v[top_u]
        out[top_v] = u[top_v]
        if np.any(interior):
            out[interior] = self._cdf_interior(u[interior], v[interior])
        out = clamp_unit(out, f"{self.family} copula cdf")
        if scalar:
            return float(out[0])
        return out

    def survival(self, u: numeric, v: numeric) -> numeric:
        """Joint survival S(u, v) = 1 - u - v + C(u, v)."""
        scalar = np.ndim(u) == 0 and np.ndim(v) == 0
        u, v = np.broadcast_arrays(as_float_array(u), as_float_array(v))
        s = 1.0 - u - v + self.cdf(u, v)
        s = clamp_unit(s, f"{self.family} joint survival")
        if scalar:
            return float(np.atleast_1d(s)[0])
        return s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Copula):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self) -> str:
        if self.param is None:
            return f"{type(self).__name__}()"
        return f"{type(self).__name__}({self.param!r})"


class GaussianCopula(Copula):
    """Gaussian copula with correlation rho in (-1, 1).

    rho = 0 short-circuits to the product copula, so the independence
    special case is exact rather than quadrature-approximate.
    """

    family = "gaussian"

    def __init__(self, rho: float):
        rho = float(rho)
        if not np.isfinite(rho) or abs(rho) >= 1.0:
            raise ParameterError("gaussian copula rho must lie in (-1, 1)")
        self.rho = rho

    @property
    def param(self) -> float:
        return self.rho

    def with_param(self, value: float) -> "GaussianCopula":
        return GaussianCopula(value)

    def _cdf_interior(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        if self.rho == 0.0:
            return u * v
        x = special.ndtri(u)
        y = special.ndtri(v)
        return np.atleast_1d(bivariate_normal_cdf(x, y, self.rho))

    def to_dict(self) -> dict:
        return {"family": "gaussian", "rho": self.rho}


class GumbelCopula(Copula):
    """Gumbel copula with theta in [1, inf); theta = 1 is independence.

    The generator sum is evaluated as m * (1 + r^theta)^(1/theta) with
    m = max(a, b), r = min(a, b)/m and a = -ln u, b = -ln v, which cannot
    overflow even for extreme theta or arguments deep in the tails.
    """

    family = "gumbel"

    def __init__(self, theta: float):
        theta = float(theta)
        if not np.isfinite(theta) or theta < 1.0:
            raise ParameterError("gumbel copula theta must lie in [1, inf)")
        self.theta = theta

    @property
    def param(self) -> float:
        return self.theta

    def with_param(self, value: float) -> "GumbelCopula":
        return GumbelCopula(value)

    def _cdf_interior(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        a = -np.log(u)
        b = -np.log(v)
        m = np.maximum(a, b)
        r = np.minimum(a, b) / m
        s = m * np.exp(np.log1p(r**self.theta) / self.theta)
        return np.exp(-s)

    def to_dict(self) -> dict:
        return {"family": "gumbel", "theta": self.theta}


class ClaytonCopula(Copula):
    """Clayton copula with theta in (0, inf).

    The kernel u^-theta + v^-theta - 1 is evaluated in log space, so
    large theta cannot overflow the direct powers and the independence
    limit theta -> 0 keeps full precision.
    """

    family = "clayton"

    def __init__(self, theta: float):
        theta = float(theta)
        if not np.isfinite(theta) or theta <= 0.0:
            raise ParameterError("clayton copula theta must lie in (0, inf)")
        self.theta = theta

    @property
    def param(self) -> float:
        return self.theta

    def with_param(self, value: float) -> "ClaytonCopula":
        return ClaytonCopula(value)

    def _cdf_interior(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        t = self.theta
        a = -t * np.log(u)
        b = -t * np.log(v)
        big = np.maximum(a, b)
        small = np.minimum(a, b)
        # log(e^a + e^b - 1) factored at the dominant exponent; the
        # inner product stays in (0, 1] for every theta > 0
        log_kernel = big + np.log1p(np.exp(small - big) * -np.expm1(-small))
        return np.exp(-log_kernel / t)

    def to_dict(self) -> dict:
        return {"family": "clayton", "theta": self.theta}


class FrankCopula(Copula):
    """Frank copula with theta != 0; negative theta gives negative dependence.

    Evaluation uses expm1/log1p throughout to dodge the catastrophic
    cancellation the naive exponential form suffers near theta = 0, and
    |theta| below FRANK_INDEPENDENCE_EPS is routed to the product copula,
    its analytic limit.
    """

    family = "frank"

    def __init__(self, theta: float):
        theta = float(theta)
        if not np.isfinite(theta) or theta == 0.0:
            raise ParameterError("frank copula theta must be finite and nonzero")
        self.theta = theta

    @property
    def param(self) -> float:
        return self.theta

    def with_param(self, value: float) -> "FrankCopula":
        return FrankCopula(value)

    def _cdf_interior(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        t = self.theta
        if abs(t) < FRANK_INDEPENDENCE_EPS:
            return u * v
        if t < 0.0:
            # reflection: if (U, V) has the theta copula then (U, 1 - V)
            # has the -theta copula, so negative theta reuses the
            # positive branch below
            return u - FrankCopula(-t)._cdf_interior(u, 1.0 - v)
        a = np.expm1(-t * u)
        b = np.expm1(-t * v)
        d = np.expm1(-t)
        arg = a * b / d
        out = np.empty_like(u)
        shallow = arg > -0.5
        out[shallow] = -np.log1p(arg[shallow]) / t
        deep = ~shallow
        if np.any(deep):
            # near the comonotone corner 1 + arg is a difference of
            # values close to 1 and loses relative precision; rewrite it
            # as a sum of positive terms factored at the dominant
            # exponential scale:
            #   1 + arg = exp(-t lo) p / (1 - exp(-t)),
            #   p = (1 - e^{-t (1 - lo)}) + e^{-t (hi - lo)} (1 - e^{-t lo})
            lo = np.minimum(u[deep], v[deep])
            hi = np.maximum(u[deep], v[deep])
            p = -np.expm1(-t * (1.0 - lo)) + np.exp(-t * (hi - lo)) * -np.expm1(-t * lo)
            out[deep] = lo + (np.log1p(-np.exp(-t)) - np.log(p)) / t
        return out

    def to_dict(self) -> dict:
        return {"family": "frank", "theta": self.theta}


class IndependenceCopula(Copula):
    """The product copula C(u, v) = u v."""

    family = "independence"

    def _cdf_interior(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return u * v

    def to_dict(self) -> dict:
        return {"family": "independence"}


_COPULA_CLASSES = {
    "gaussian": GaussianCopula,
    "gumbel": GumbelCopula,
    "clayton": ClaytonCopula,
    "frank": FrankCopula,
    "independence": IndependenceCopula,
}


def copula_from_dict(spec: dict) -> Copula:
    """Build a copula from its JSON description.

    ``{"family": "gaussian", "rho": 0.4}``, ``{"family": "frank",
    "theta": 5.0}`` (likewise gumbel/clayton) or ``{"family":
    "independence"}``.  Unknown families or stray keys are rejected.
    """
    if not isinstance(spec, dict):
        raise ValidationError("copula spec must be a JSON object")
    family = spec.get("family")
    if family == "gaussian":
        if set(spec) != {"family", "rho"}:
            raise ValidationError("gaussian copula spec must have keys ['family', 'rho']")
        return GaussianCopula(spec["rho"])
    if family in ("gumbel", "clayton", "frank"):
        if set(spec) != {"family", "theta"}:
            raise ValidationError(f"{family} copula spec must have keys ['family', 'theta']")
        return _COPULA_CLASSES[family](spec["theta"])
    if family == "independence":
        if set(spec) != {"family"}:
            raise ValidationError("independence copula spec must have keys ['family']")
        return IndependenceCopula()
    raise ValidationError(f"unknown copula family: {family!r}")


def copula_cdf(copula: Copula, u: numeric, v: numeric) -> numeric:
    """Functional alias for ``copula.cdf(u, v)``."""
    return copula.cdf(u, v)


def joint_survival(copula: Copula, u: numeric, v: numeric) -> numeric:
    """Functional alias for ``copula.survival(u, v)``."""
    return copula.survival(u, v)
