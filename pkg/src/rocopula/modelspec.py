"""Loading and validating JSON model-spec files.

A model spec describes a JointDiagnosticModel plus optional sweep
definitions:

    {
      "marginals": {
        "a_n": {"family": "exponential", "lambda": 1.0},
        "a_d": {"family": "exponential", "lambda": 0.23},
        "b_n": {"family": "exponential", "lambda": 1.0},
        "b_d": {"family": "exponential", "lambda": 0.17}
      },
      "copulas": {
        "n": {"family": "gaussian", "rho": 0.4},
        "d": {"family": "gaussian", "rho": 0.4}
      },
      "thresholds": {"ruleout_fpf_a": 0.55, "rulein_fpf_a": 0.05},
      "sweeps": [{"parameter": "rho_d", "grid": [0.0, 0.2, 0.4, 0.6, 0.8]}]
    }

Thresholds may be given as target Test-A FPF values (``*_fpf_a``) or as
raw scores (``*_score_a``), one form per threshold.  Unknown fields
anywhere in the document are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .copulas import copula_from_dict
from .exceptions import ValidationError
from .jointroc import JointDiagnosticModel
from .marginals import marginal_from_dict
from .theorems import SWEEP_PARAMETERS

__all__ = ["ModelSpec", "SweepDef", "load_model_spec", "parse_model_spec"]


@dataclass(frozen=True)
class SweepDef:
    parameter: str
    grid: tuple

    def to_dict(self) -> dict:
        return {"parameter": self.parameter, "grid": list(self.grid)}


@dataclass(frozen=True)
class ModelSpec:
    model: JointDiagnosticModel
    sweeps: tuple

    def to_dict(self) -> dict:
        out = self.model.to_dict()
        if self.sweeps:
            out["sweeps"] = [s.to_dict() for s in self.sweeps]
        return out


def _check_keys(obj: dict, allowed: set, required: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise ValidationError(f"{where}: unknown fields {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ValidationError(f"{where}: missing required fields {sorted(missing)}")


def _threshold(thresholds: dict, stem: str, marg_an) -> Optional[float]:
    fpf_key = f"{stem}_fpf_a"
    score_key = f"{stem}_score_a"
    if fpf_key in thresholds and score_key in thresholds:
        raise ValidationError(f"thresholds: give {fpf_key} or {score_key}, not both")
    if score_key in thresholds:
        value = thresholds[score_key]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError(f"thresholds.{score_key} must be a number")
        return float(value)
    if fpf_key in thresholds:
        value = thresholds[fpf_key]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValidationError(f"thresholds.{fpf_key} must be a number")
        if not 0.0 < float(value) < 1.0:
            raise ValidationError(f"thresholds.{fpf_key} must lie strictly in (0, 1)")
        return float(marg_an.quantile(1.0 - float(value)))
    return None


def parse_model_spec(doc: dict) -> ModelSpec:
    """Validate a parsed JSON document and build the model it describes."""
    _check_keys(doc, {"marginals", "copulas", "thresholds", "sweeps"}, {"marginals", "copulas"}, "model spec")
    _check_keys(doc["marginals"], {"a_n", "a_d", "b_n", "b_d"}, {"a_n", "a_d", "b_n", "b_d"}, "marginals")
    _check_keys(doc["copulas"], {"n", "d"}, {"n", "d"}, "copulas")

    marg = {key: marginal_from_dict(doc["marginals"][key]) for key in ("a_n", "a_d", "b_n", "b_d")}
    cop_n = copula_from_dict(doc["copulas"]["n"])
    cop_d = copula_from_dict(doc["copulas"]["d"])

    thresholds = doc.get("thresholds", {})
    _check_keys(
        thresholds,
        {"ruleout_fpf_a", "ruleout_score_a", "rulein_fpf_a", "rulein_score_a"},
        set(),
        "thresholds",
    )
    t_ro = _threshold(thresholds, "ruleout", marg["a_n"])
    t_ri = _threshold(thresholds, "rulein", marg["a_n"])

    model = JointDiagnosticModel(
        marg_an=marg["a_n"],
        marg_ad=marg["a_d"],
        marg_bn=marg["b_n"],
        marg_bd=marg["b_d"],
        copula_n=cop_n,
        copula_d=cop_d,
        t_a_ro=t_ro,
        t_a_ri=t_ri,
    )

    sweeps = []
    raw_sweeps = doc.get("sweeps", [])
    if not isinstance(raw_sweeps, list):
        raise ValidationError("sweeps must be a JSON array")
    for i, s in enumerate(raw_sweeps):
        _check_keys(s, {"parameter", "grid"}, {"parameter", "grid"}, f"sweeps[{i}]")
        parameter = s["parameter"]
        if parameter not in SWEEP_PARAMETERS:
            raise ValidationError(
                f"sweeps[{i}].parameter must be one of {', '.join(SWEEP_PARAMETERS)}"
            )
        grid = s["grid"]
        if (
            not isinstance(grid, list)
            or len(grid) < 2
            or any(isinstance(g, bool) or not isinstance(g, (int, float)) for g in grid)
        ):
            raise ValidationError(f"sweeps[{i}].grid must be a list of at least two numbers")
        sweeps.append(SweepDef(parameter=parameter, grid=tuple(float(g) for g in grid)))

    return ModelSpec(model=model, sweeps=tuple(sweeps))


def load_model_spec(path: str) -> ModelSpec:
    """Read, parse, and validate a model-spec JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except FileNotFoundError:
        raise ValidationError(f"model spec not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"model spec is not valid JSON: {exc}") from None
    return parse_model_spec(doc)
