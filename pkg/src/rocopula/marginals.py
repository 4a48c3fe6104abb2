"""Parametric score distributions for a single test arm.

A marginal model describes the continuous score of one diagnostic test in
one class (diseased or non-diseased).  Two families are supported, Normal
and Exponential, which is enough to express binormal ROC models and the
exponential configurations used throughout the joint-ROC machinery.

All operations accept scalars or arrays and broadcast elementwise.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Union

import numpy as np
from scipy import special

from .exceptions import ParameterError, ValidationError

numeric = Union[float, np.ndarray]

__all__ = [
    "MarginalModel",
    "Normal",
    "Exponential",
    "marginal_from_dict",
    "standard_normal_cdf",
    "standard_normal_quantile",
]


def standard_normal_cdf(x: numeric) -> numeric:
    """Standard normal CDF, accurate to machine precision in both tails."""
    return special.ndtr(np.asarray(x, dtype=float))


def standard_normal_quantile(p: numeric) -> numeric:
    """Inverse standard normal CDF for p strictly inside (0, 1).

    Parameters
    ----------
    p : float or ndarray
        Probabilities; every element must satisfy 0 < p < 1.

    Returns
    -------
    float or ndarray
        z such that ``standard_normal_cdf(z) == p``.

    Raises
    ------
    ParameterError
        If any element of p lies outside the open unit interval.
    """
    p = np.asarray(p, dtype=float)
    if np.any(~np.isfinite(p)) or np.any(p <= 0.0) or np.any(p >= 1.0):
        raise ParameterError("quantile probability must lie strictly in (0, 1)")
    return special.ndtri(p)


class MarginalModel(ABC):
    """Common interface for one-dimensional score distributions."""

    family: str

    @abstractmethod
    def cdf(self, x: numeric) -> numeric:
        """P(X <= x)."""

    @abstractmethod
    def survival(self, x: numeric) -> numeric:
        """P(X > x), computed directly for tail accuracy."""

    @abstractmethod
    def quantile(self, p: numeric) -> numeric:
        """Inverse CDF for p in (0, 1)."""

    @abstractmethod
    def to_dict(self) -> dict:
        """JSON-ready description of the model."""

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MarginalModel):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.to_dict().items())))

    def __repr__(self) -> str:
        params = {k: v for k, v in self.to_dict().items() if k != "family"}
        inner = ", ".join(f"{k}={v!r}" for k, v in params.items())
        return f"{type(self).__name__}({inner})"


class Normal(MarginalModel):
    """Normal(mu, sigma) scores.

    Parameters
    ----------
    mu : float
        Location.
    sigma : float
        Scale, strictly positive.
    """

    family = "normal"

    def __init__(self, mu: float = 0.0, sigma: float = 1.0):
        mu = float(mu)
        sigma = float(sigma)
        if not np.isfinite(mu):
            raise ParameterError("normal mu must be finite")
        if not np.isfinite(sigma) or sigma <= 0.0:
            raise ParameterError("normal sigma must be finite and > 0")
        self.mu = mu
        self.sigma = sigma

    def cdf(self, x: numeric) -> numeric:
        z = (np.asarray(x, dtype=float) - self.mu) / self.sigma
        return special.ndtr(z)

    def survival(self, x: numeric) -> numeric:
        # ndtr(-z) keeps full precision where 1 - cdf would cancel
        z = (np.asarray(x, dtype=float) - self.mu) / self.sigma
        return special.ndtr(-z)

    def quantile(self, p: numeric) -> numeric:
        return self.mu + self.sigma * standard_normal_quantile(p)

    def to_dict(self) -> dict:
        return {"family": "normal", "mu": self.mu, "sigma": self.sigma}


class Exponential(MarginalModel):
    """Exponential(rate) scores supported on [0, inf).

    The rate is the usual lambda parameter: cdf(x) = 1 - exp(-rate * x).
    """

    family = "exponential"

    def __init__(self, rate: float):
        rate = float(rate)
        if not np.isfinite(rate) or rate <= 0.0:
            raise ParameterError("exponential rate must be finite and > 0")
        self.rate = rate

    def cdf(self, x: numeric) -> numeric:
        x = np.asarray(x, dtype=float)
        return np.where(x > 0.0, -np.expm1(-self.rate * x), 0.0)

    def survival(self, x: numeric) -> numeric:
        x = np.asarray(x, dtype=float)
        return np.where(x > 0.0, np.exp(-self.rate * x), 1.0)

    def quantile(self, p: numeric) -> numeric:
        p = np.asarray(p, dtype=float)
        if np.any(~np.isfinite(p)) or np.any(p <= 0.0) or np.any(p >= 1.0):
            raise ParameterError("quantile probability must lie strictly in (0, 1)")
        return -np.log1p(-p) / self.rate

    def to_dict(self) -> dict:
        return {"family": "exponential", "lambda": self.rate}


def marginal_from_dict(spec: dict) -> MarginalModel:
    """Build a marginal model from its JSON description.

    Accepts exactly the shapes produced by ``to_dict``:
    ``{"family": "normal", "mu": ..., "sigma": ...}`` or
    ``{"family": "exponential", "lambda": ...}``.  Unknown families and
    unknown or missing keys are rejected.
    """
    if not isinstance(spec, dict):
        raise ValidationError("marginal spec must be a JSON object")
    family = spec.get("family")
    if family == "normal":
        expected = {"family", "mu", "sigma"}
        if set(spec) != expected:
            raise ValidationError(
                f"normal marginal spec must have keys {sorted(expected)}, got {sorted(spec)}"
            )
        return Normal(mu=spec["mu"], sigma=spec["sigma"])
    if family == "exponential":
        expected = {"family", "lambda"}
        if set(spec) != expected:
            raise ValidationError(
                f"exponential marginal spec must have keys {sorted(expected)}, got {sorted(spec)}"
            )
        return Exponential(rate=spec["lambda"])
    raise ValidationError(f"unknown marginal family: {family!r}")
