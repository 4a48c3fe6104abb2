"""Monotone-dependence sweeps for the rule-out and rule-in theorems.

The claims under test: with everything else fixed, the rule-out pAUC
over the FPF window between the Test-A thresholds increases strictly in
the diseased-class dependence and decreases strictly in the
non-diseased-class dependence; the rule-in pAUC shows exactly the
reversed ordering.  A sweep evaluates the pAUC along a parameter grid
and checks strict monotonicity in the expected direction with a margin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .copulas import ClaytonCopula, FrankCopula, GaussianCopula, GumbelCopula
from .dependence import theta_from_tau
from .exceptions import ParameterError, ValidationError
from .jointroc import DEFAULT_N_POINTS, JointDiagnosticModel, curve, pauc

__all__ = ["SweepResult", "theorem_sweep", "pauc_window", "swept_model", "SWEEP_PARAMETERS"]

#: minimum pAUC increment for a strict-monotonicity PASS
MONOTONE_MARGIN = 1e-4

SWEEP_PARAMETERS = ("rho_n", "rho_d", "theta_n", "theta_d", "tau_n", "tau_d")


@dataclass(frozen=True)
class SweepResult:
    """Outcome of one monotonicity sweep."""

    which: str  # "ruleout" | "rulein"
    parameter: str
    family: str
    values: tuple
    paucs: tuple
    expected: str  # "increasing" | "decreasing"
    passed: bool
    min_margin: float
    window: tuple

    def rows(self) -> list[dict]:
        return [
            {"parameter": self.parameter, "value": v, "pauc": p}
            for v, p in zip(self.values, self.paucs)
        ]

    def to_dict(self) -> dict:
        return {
            "which": self.which,
            "parameter": self.parameter,
            "family": self.family,
            "expected": self.expected,
            "window": [self.window[0], self.window[1]],
            "values": list(self.values),
            "pauc": list(self.paucs),
            "min_margin": self.min_margin,
            "verdict": "PASS" if self.passed else "FAIL",
        }


def pauc_window(model: JointDiagnosticModel, which: str) -> tuple[float, float]:
    """FPF window for the scenario's pAUC.

    Rule-out: between the Test-A FPF values of the two thresholds when
    both exist, else [0, FPF_A(t_ro)].  Rule-in: [FPF_A(t_ri), 1].
    """
    if which == "ruleout":
        if model.t_a_ro is None:
            raise ValidationError("rule-out sweep needs t_a_ro")
        hi = model.fpf_a(model.t_a_ro)
        lo = model.fpf_a(model.t_a_ri) if model.t_a_ri is not None else 0.0
        return (lo, hi)
    if which == "rulein":
        if model.t_a_ri is None:
            raise ValidationError("rule-in sweep needs t_a_ri")
        return (model.fpf_a(model.t_a_ri), 1.0)
    raise ValidationError(f"theorem sweeps cover 'ruleout' and 'rulein', not {which!r}")


def swept_model(model: JointDiagnosticModel, parameter: str, value: float) -> JointDiagnosticModel:
    """Copy of the model with one dependence parameter replaced.

    The parameter names the side (_n or _d) and the scale: rho for the
    gaussian copula, theta for an archimedean one, tau for an
    archimedean one reparameterized through its Kendall tau.
    """
    side = parameter.rsplit("_", 1)[1]
    attr = "copula_n" if side == "n" else "copula_d"
    copula = getattr(model, attr)
    if parameter.startswith("rho"):
        if not isinstance(copula, GaussianCopula):
            raise ParameterError(f"{parameter} sweep requires a gaussian {attr}")
        new = copula.with_param(float(value))
    elif parameter.startswith("theta"):
        if not isinstance(copula, (GumbelCopula, ClaytonCopula, FrankCopula)):
            raise ParameterError(f"{parameter} sweep requires an archimedean {attr}")
        new = copula.with_param(float(value))
    elif parameter.startswith("tau"):
        if not isinstance(copula, (GumbelCopula, ClaytonCopula, FrankCopula)):
            raise ParameterError(f"{parameter} sweep requires an archimedean {attr}")
        new = copula.with_param(theta_from_tau(copula.family, float(value)))
    else:
        raise ParameterError(f"unknown sweep parameter {parameter!r}")
    return model.replace(**{attr: new})


def theorem_sweep(
    model: JointDiagnosticModel,
    which: str,
    parameter: str,
    grid,
    n_points: int = DEFAULT_N_POINTS,
    margin: float = MONOTONE_MARGIN,
) -> SweepResult:
    """Evaluate pAUC along a dependence-parameter grid and give a verdict.

    The expected direction follows the theorems: diseased-side
    dependence helps rule-out and hurts rule-in; non-diseased-side
    dependence does the opposite.  PASS requires every increment to move
    the expected way by more than ``margin``.
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ParameterError(
            f"sweep parameter must be one of {', '.join(SWEEP_PARAMETERS)}; got {parameter!r}"
        )
    values = [float(v) for v in grid]
    if len(values) < 2:
        raise ValidationError("sweep grid needs at least two values")
    if np.any(np.diff(values) <= 0.0):
        raise ValidationError("sweep grid must be strictly increasing")

    side = parameter.rsplit("_", 1)[1]
    if which == "ruleout":
        expected = "increasing" if side == "d" else "decreasing"
    elif which == "rulein":
        expected = "decreasing" if side == "d" else "increasing"
    else:
        raise ValidationError(f"theorem sweeps cover 'ruleout' and 'rulein', not {which!r}")

    window = pauc_window(model, which)
    paucs = []
    family = None
    for v in values:
        m = swept_model(model, parameter, v)
        family = getattr(m, "copula_n" if side == "n" else "copula_d").family
        c = curve(m, which, n_points)
        paucs.append(pauc(c, window[0], window[1]))

    steps = np.diff(paucs)
    if expected == "decreasing":
        steps = -steps
    min_margin = float(np.min(steps))
    passed = bool(min_margin > margin)
    return SweepResult(
        which=which,
        parameter=parameter,
        family=family,
        values=tuple(values),
        paucs=tuple(float(p) for p in paucs),
        expected=expected,
        passed=passed,
        min_margin=min_margin,
        window=window,
    )
