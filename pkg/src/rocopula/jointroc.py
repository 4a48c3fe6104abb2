"""Joint ROC curves for a two-test protocol with triage thresholds.

The protocol: Test A screens every case.  Under rule-out, cases with
Test-A score below t_a_ro are called negative and never see Test B, so a
case is positive only if both tests fire.  Under rule-in, cases above
t_a_ri are called positive outright, and a case is positive if either
test fires.  The combined scenario applies both thresholds and lets
Test B decide the middle band.

Sweeping the Test-B threshold x while holding the Test-A thresholds
fixed traces an ROC curve.  Rule-out and rule-in curves are improper:
they cover only part of the FPF axis, which is why partial AUC over a
stated FPF window is the figure of merit here.

With F the class-conditional score CDFs and C the class copula, the
operating points are

    rule-out:  FPF(x) = S_N(F_BN(x), F_AN(t_ro))        (both exceed)
    rule-in:   FPF(x) = 1 - C_N(F_BN(x), F_AN(t_ri))    (either exceeds)
    combined:  FPF(x) = (1 - F_AN(t_ri))
               + S_N(F_BN(x), F_AN(t_ro)) - S_N(F_BN(x), F_AN(t_ri))

where S(u, v) = 1 - u - v + C(u, v); TPF uses the diseased marginals and
copula.  The rule-in form is algebraically the inclusion-exclusion
identity FPF_ri = (1-F_B) + (1-F_A) - S.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ._util import as_float_array, clamp_unit
from .copulas import Copula
from .exceptions import ParameterError, ValidationError
from .marginals import MarginalModel, numeric

__all__ = [
    "OperatingPoint",
    "RocCurve",
    "JointDiagnosticModel",
    "univariate_curve",
    "ruleout_point",
    "rulein_point",
    "combined_point",
    "curve",
    "auc",
    "pauc",
    "interp_tpf",
    "workload_ruled_out",
    "CURVE_KINDS",
]

CURVE_KINDS = ("univariate", "ruleout", "rulein", "combined", "empirical")

#: tolerance for the RocCurve ordering and range invariants
CURVE_TOL = 1e-9

DEFAULT_N_POINTS = 512


@dataclass(frozen=True)
class OperatingPoint:
    """One (FPF, TPF) pair realized by fixed thresholds."""

    fpf: float
    tpf: float

    def __post_init__(self):
        for name, value in (("fpf", self.fpf), ("tpf", self.tpf)):
            if not np.isfinite(value) or value < -CURVE_TOL or value > 1.0 + CURVE_TOL:
                raise ValidationError(f"operating point {name} must lie in [0, 1], got {value!r}")


class RocCurve:
    """An ROC curve as an ordered point set plus its FPF support.

    Parameters
    ----------
    fpf, tpf : array_like
        Coordinates of the swept operating points.  Points are stored
        sorted by (fpf, tpf); tpf must be nondecreasing along the sorted
        curve within a 1e-9 tolerance.
    kind : str
        One of "univariate", "ruleout", "rulein", "combined",
        "empirical".
    fpf_range : (float, float), optional
        The FPF support [lo, hi].  Defaults to the data range.  Points
        may overshoot the stamped range by at most 1e-9 and are clipped
        onto it.
    """

    def __init__(self, fpf, tpf, kind: str, fpf_range: Optional[tuple] = None):
        if kind not in CURVE_KINDS:
            raise ValidationError(f"unknown curve kind: {kind!r}")
        fpf = as_float_array(fpf).ravel()
        tpf = as_float_array(tpf).ravel()
        if fpf.size != tpf.size or fpf.size < 2:
            raise ValidationError("a curve needs equally many fpf and tpf values, at least two")
        if np.any(~np.isfinite(fpf)) or np.any(~np.isfinite(tpf)):
            raise ValidationError("curve coordinates must be finite")
        order = np.lexsort((tpf, fpf))
        fpf = fpf[order]
        tpf = tpf[order]
        if np.any(np.diff(tpf) < -CURVE_TOL):
            raise ValidationError("tpf must be nondecreasing along the curve")
        if fpf_range is None:
            fpf_range = (float(fpf[0]), float(fpf[-1]))
        lo, hi = float(fpf_range[0]), float(fpf_range[1])
        if not (0.0 <= lo <= hi <= 1.0):
            raise ValidationError("fpf_range must be an ordered subinterval of [0, 1]")
        if fpf[0] < lo - CURVE_TOL or fpf[-1] > hi + CURVE_TOL:
            raise ValidationError("curve points fall outside the stamped fpf_range")
        self._fpf = np.clip(clamp_unit(fpf, "curve fpf"), lo, hi)
        self._tpf = clamp_unit(tpf, "curve tpf")
        self.kind = kind
        self.fpf_range = (lo, hi)

    @property
    def fpf(self) -> np.ndarray:
        return self._fpf

    @property
    def tpf(self) -> np.ndarray:
        return self._tpf

    @property
    def points(self) -> list[OperatingPoint]:
        return [OperatingPoint(float(f), float(t)) for f, t in zip(self._fpf, self._tpf)]

    def __len__(self) -> int:
        return self._fpf.size

    def __repr__(self) -> str:
        lo, hi = self.fpf_range
        return (
            f"RocCurve(kind={self.kind!r}, n={len(self)}, "
            f"fpf_range=({lo:.6g}, {hi:.6g}))"
        )

    def to_dict(self, model: Optional[dict] = None) -> dict:
        """JSON-ready form: kind, fpf_range, points, optional model spec."""
        out = {
            "kind": self.kind,
            "fpf_range": [self.fpf_range[0], self.fpf_range[1]],
            "points": [{"fpf": float(f), "tpf": float(t)} for f, t in zip(self._fpf, self._tpf)],
        }
        if model is not None:
            out["model"] = model
        return out


@dataclass(frozen=True)
class JointDiagnosticModel:
    """Two tests, their class-conditional marginals, copulas, thresholds.

    Fields
    ------
    marg_an, marg_ad : MarginalModel
        Test-A score distribution among non-diseased / diseased cases.
    marg_bn, marg_bd : MarginalModel
        The same for Test B.
    copula_n, copula_d : Copula
        Dependence between the two scores within each class.
    t_a_ro, t_a_ri : float, optional
        Test-A rule-out and rule-in thresholds on the raw score scale.
        When both are present t_a_ro < t_a_ri must hold, so the rule-out
        band sits below the rule-in band.
    """

    marg_an: MarginalModel
    marg_ad: MarginalModel
    marg_bn: MarginalModel
    marg_bd: MarginalModel
    copula_n: Copula
    copula_d: Copula
    t_a_ro: Optional[float] = None
    t_a_ri: Optional[float] = None

    def __post_init__(self):
        for name in ("marg_an", "marg_ad", "marg_bn", "marg_bd"):
            if not isinstance(getattr(self, name), MarginalModel):
                raise ValidationError(f"{name} must be a MarginalModel")
        for name in ("copula_n", "copula_d"):
            if not isinstance(getattr(self, name), Copula):
                raise ValidationError(f"{name} must be a Copula")
        for name in ("t_a_ro", "t_a_ri"):
            value = getattr(self, name)
            if value is not None and not np.isfinite(float(value)):
                raise ValidationError(f"{name} must be finite when set")
        if self.t_a_ro is not None and self.t_a_ri is not None:
            if not float(self.t_a_ro) < float(self.t_a_ri):
                raise ValidationError(
                    "rule-out threshold must lie strictly below the rule-in threshold"
                )

    @classmethod
    def with_fpf_thresholds(
        cls,
        marg_an: MarginalModel,
        marg_ad: MarginalModel,
        marg_bn: MarginalModel,
        marg_bd: MarginalModel,
        copula_n: Copula,
        copula_d: Copula,
        ruleout_fpf_a: Optional[float] = None,
        rulein_fpf_a: Optional[float] = None,
    ) -> "JointDiagnosticModel":
        """Build a model with thresholds given as target Test-A FPF values.

        A target FPF f maps to the score threshold t with
        marg_an.survival(t) = f, i.e. t = quantile(1 - f).  Because FPF
        falls as the threshold rises, the rule-out FPF must exceed the
        rule-in FPF.
        """

        def convert(f: Optional[float]) -> Optional[float]:
            if f is None:
                return None
            f = float(f)
            if not 0.0 < f < 1.0:
                raise ValidationError("target Test-A FPF must lie strictly in (0, 1)")
            return float(marg_an.quantile(1.0 - f))

        return cls(
            marg_an,
            marg_ad,
            marg_bn,
            marg_bd,
            copula_n,
            copula_d,
            t_a_ro=convert(ruleout_fpf_a),
            t_a_ri=convert(rulein_fpf_a),
        )

    def replace(self, **changes) -> "JointDiagnosticModel":
        """Copy with fields swapped out; invariants are re-checked."""
        return replace(self, **changes)

    def fpf_a(self, t: float) -> float:
        """Test-A-alone FPF at threshold t."""
        return float(self.marg_an.survival(t))

    def tpf_a(self, t: float) -> float:
        """Test-A-alone TPF at threshold t."""
        return float(self.marg_ad.survival(t))

    def to_dict(self) -> dict:
        out = {
            "marginals": {
                "a_n": self.marg_an.to_dict(),
                "a_d": self.marg_ad.to_dict(),
                "b_n": self.marg_bn.to_dict(),
                "b_d": self.marg_bd.to_dict(),
            },
            "copulas": {"n": self.copula_n.to_dict(), "d": self.copula_d.to_dict()},
        }
        thresholds = {}
        if self.t_a_ro is not None:
            thresholds["ruleout_score_a"] = float(self.t_a_ro)
        if self.t_a_ri is not None:
            thresholds["rulein_score_a"] = float(self.t_a_ri)
        if thresholds:
            out["thresholds"] = thresholds
        return out


def _require_threshold(model: JointDiagnosticModel, name: str) -> float:
    value = getattr(model, name)
    if value is None:
        which = "rule-out" if name == "t_a_ro" else "rule-in"
        raise ValidationError(f"model has no {which} threshold set")
    return float(value)


def _ruleout_arrays(model: JointDiagnosticModel, x: np.ndarray, t_a: float):
    fpf = model.copula_n.survival(model.marg_bn.cdf(x), model.marg_an.cdf(t_a))
    tpf = model.copula_d.survival(model.marg_bd.cdf(x), model.marg_ad.cdf(t_a))
    return np.atleast_1d(fpf), np.atleast_1d(tpf)


def _rulein_arrays(model: JointDiagnosticModel, x: np.ndarray, t_a: float):
    # "either test fires" = 1 - P(both below threshold) = 1 - C(u, w);
    # written this way the inclusion-exclusion identity is exact
    fpf = 1.0 - np.atleast_1d(model.copula_n.cdf(model.marg_bn.cdf(x), model.marg_an.cdf(t_a)))
    tpf = 1.0 - np.atleast_1d(model.copula_d.cdf(model.marg_bd.cdf(x), model.marg_ad.cdf(t_a)))
    return fpf, tpf


def _combined_arrays(model: JointDiagnosticModel, x: np.ndarray, t_ro: float, t_ri: float):
    u_n = model.marg_bn.cdf(x)
    w_n_ro = model.marg_an.cdf(t_ro)
    w_n_ri = model.marg_an.cdf(t_ri)
    fpf = (
        (1.0 - w_n_ri)
        + model.copula_n.survival(u_n, w_n_ro)
        - model.copula_n.survival(u_n, w_n_ri)
    )
    u_d = model.marg_bd.cdf(x)
    w_d_ro = model.marg_ad.cdf(t_ro)
    w_d_ri = model.marg_ad.cdf(t_ri)
    tpf = (
        (1.0 - w_d_ri)
        + model.copula_d.survival(u_d, w_d_ro)
        - model.copula_d.survival(u_d, w_d_ri)
    )
    fpf = clamp_unit(np.atleast_1d(fpf), "combined fpf")
    tpf = clamp_unit(np.atleast_1d(tpf), "combined tpf")
    return fpf, tpf


def ruleout_point(model: JointDiagnosticModel, x: float) -> OperatingPoint:
    """Operating point of the rule-out protocol at Test-B threshold x.

    A case is positive only when Test A exceeds the rule-out threshold
    and Test B exceeds x, so both coordinates are joint survivals.
    """
    t_a = _require_threshold(model, "t_a_ro")
    fpf, tpf = _ruleout_arrays(model, as_float_array(x), t_a)
    return OperatingPoint(float(fpf[0]), float(tpf[0]))


def rulein_point(model: JointDiagnosticModel, x: float) -> OperatingPoint:
    """Operating point of the rule-in protocol at Test-B threshold x.

    A case is positive when either test exceeds its threshold.
    """
    t_a = _require_threshold(model, "t_a_ri")
    fpf, tpf = _rulein_arrays(model, as_float_array(x), t_a)
    return OperatingPoint(float(fpf[0]), float(tpf[0]))


def combined_point(model: JointDiagnosticModel, x: float) -> OperatingPoint:
    """Operating point of the two-threshold combined protocol.

    Cases above t_a_ri are positive outright, cases below t_a_ro are
    negative outright, and in between Test B decides.  Equivalently the
    positive probability is the rule-in mass at t_a_ri plus the part of
    the Test-B-and-A band between the two Test-A thresholds, which gives
    FPF = (1 - F_AN(t_ri)) + S_N(x; t_ro) - S_N(x; t_ri).
    """
    t_ro = _require_threshold(model, "t_a_ro")
    t_ri = _require_threshold(model, "t_a_ri")
    fpf, tpf = _combined_arrays(model, as_float_array(x), t_ro, t_ri)
    return OperatingPoint(float(fpf[0]), float(tpf[0]))


def _mixture_quantiles(marg_n: MarginalModel, marg_d: MarginalModel, p: np.ndarray) -> np.ndarray:
    """Quantiles of the equal-weight mixture of two marginals, by bisection."""
    qn = np.atleast_1d(as_float_array(marg_n.quantile(p)))
    qd = np.atleast_1d(as_float_array(marg_d.quantile(p)))
    lo = np.minimum(qn, qd)
    hi = np.maximum(qn, qd)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f = 0.5 * (marg_n.cdf(mid) + marg_d.cdf(mid))
        below = f < p
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if np.all(hi - lo <= 1e-14 * np.maximum(1.0, np.abs(mid))):
            break
    return 0.5 * (lo + hi)


def _threshold_grid(marg_n: MarginalModel, marg_d: MarginalModel, n_points: int) -> np.ndarray:
    """n_points mixture quantiles bracketed by -inf and +inf."""
    p = np.linspace(0.0, 1.0, n_points + 2)[1:-1]
    xs = _mixture_quantiles(marg_n, marg_d, p)
    return np.concatenate(([-np.inf], xs, [np.inf]))


def univariate_curve(
    marg_n: MarginalModel, marg_d: MarginalModel, n_points: int = DEFAULT_N_POINTS
) -> RocCurve:
    """Single-test ROC curve FPF(t) = 1 - F_N(t), TPF(t) = 1 - F_D(t).

    The threshold grid takes n_points equally spaced quantiles of the
    half-half mixture of the two marginals, plus the +-inf limits that
    pin the (0, 0) and (1, 1) endpoints exactly.
    """
    if int(n_points) < 2:
        raise ValidationError("n_points must be at least 2")
    xs = _threshold_grid(marg_n, marg_d, int(n_points))
    fpf = np.atleast_1d(marg_n.survival(xs))[::-1]
    tpf = np.atleast_1d(marg_d.survival(xs))[::-1]
    return RocCurve(fpf, tpf, kind="univariate", fpf_range=(0.0, 1.0))


def curve(
    model: JointDiagnosticModel, kind: str, n_points: int = DEFAULT_N_POINTS
) -> RocCurve:
    """ROC curve of one protocol, swept over the Test-B threshold.

    kind "univariate" gives the Test-B-alone curve; "ruleout",
    "rulein" and "combined" give the joint protocols and require the
    corresponding Test-A thresholds.  The grid is n_points equally
    spaced quantiles of the mixture of the two Test-B marginals plus the
    +-inf limits, so improper curves carry their exact endpoints.
    """
    if int(n_points) < 2:
        raise ValidationError("n_points must be at least 2")
    if kind == "univariate":
        return univariate_curve(model.marg_bn, model.marg_bd, n_points)
    xs = _threshold_grid(model.marg_bn, model.marg_bd, int(n_points))
    if kind == "ruleout":
        t_a = _require_threshold(model, "t_a_ro")
        fpf, tpf = _ruleout_arrays(model, xs, t_a)
        rng = (0.0, model.fpf_a(t_a))
    elif kind == "rulein":
        t_a = _require_threshold(model, "t_a_ri")
        fpf, tpf = _rulein_arrays(model, xs, t_a)
        rng = (model.fpf_a(t_a), 1.0)
    elif kind == "combined":
        t_ro = _require_threshold(model, "t_a_ro")
        t_ri = _require_threshold(model, "t_a_ri")
        fpf, tpf = _combined_arrays(model, xs, t_ro, t_ri)
        rng = (model.fpf_a(t_ri), model.fpf_a(t_ro))
    else:
        raise ValidationError(f"cannot sweep a curve of kind {kind!r}")
    # threshold up means fewer positives, so reverse into ascending fpf
    return RocCurve(fpf[::-1], tpf[::-1], kind=kind, fpf_range=rng)


def _strict_pairs(curve_: RocCurve) -> tuple[np.ndarray, np.ndarray]:
    """Curve points with duplicate fpf collapsed for interpolation."""
    fpf = curve_.fpf
    tpf = curve_.tpf
    keep = np.concatenate(([True], np.diff(fpf) > 0.0))
    return fpf[keep], tpf[keep]


def interp_tpf(curve_: RocCurve, fpf: numeric) -> numeric:
    """TPF of the curve at given FPF values, by linear interpolation.

    Queries must lie within the curve's fpf_range.  Where an empirical
    curve is vertical, the lower corner is used.
    """
    lo, hi = curve_.fpf_range
    q = as_float_array(fpf)
    if np.any(q < lo - CURVE_TOL) or np.any(q > hi + CURVE_TOL):
        raise ValidationError("fpf query outside the curve's fpf_range")
    xs, ys = _strict_pairs(curve_)
    return np.interp(np.clip(q, xs[0], xs[-1]), xs, ys)


def auc(curve_: RocCurve) -> float:
    """Area under the stored points by the trapezoid rule."""
    return float(np.trapezoid(curve_.tpf, curve_.fpf))


def pauc(curve_: RocCurve, fpf_lo: float, fpf_hi: float) -> float:
    """Partial AUC, the trapezoidal integral of TPF over [fpf_lo, fpf_hi].

    The window must sit inside the curve's fpf_range (1e-9 slack).  On a
    proper curve pauc(0, 1) equals auc; a perfect window contributes at
    most its own width.
    """
    fpf_lo = float(fpf_lo)
    fpf_hi = float(fpf_hi)
    lo, hi = curve_.fpf_range
    if not fpf_lo < fpf_hi:
        raise ValidationError("pauc needs fpf_lo < fpf_hi")
    if fpf_lo < lo - CURVE_TOL or fpf_hi > hi + CURVE_TOL:
        raise ValidationError(
            f"pauc window [{fpf_lo:g}, {fpf_hi:g}] outside curve support [{lo:g}, {hi:g}]"
        )
    fpf_lo = max(fpf_lo, lo)
    fpf_hi = min(fpf_hi, hi)
    xs, ys = _strict_pairs(curve_)
    inside = (xs > fpf_lo) & (xs < fpf_hi)
    gx = np.concatenate(([fpf_lo], xs[inside], [fpf_hi]))
    gy = np.interp(gx, xs, ys)
    return float(np.trapezoid(gy, gx))


def workload_ruled_out(p: float, fpf_a: float, tpf_a: float) -> float:
    """Fraction of cases the rule-out threshold removes from review.

    Negatives below the threshold leave the workload, so the saving is
    (1-p)(1-FPF) + p(1-TPF) at prevalence p.
    """
    for name, value in (("p", p), ("fpf_a", fpf_a), ("tpf_a", tpf_a)):
        value = float(value)
        if not 0.0 <= value <= 1.0:
            raise ParameterError(f"{name} must lie in [0, 1]")
    p = float(p)
    return (1.0 - p) * (1.0 - float(fpf_a)) + p * (1.0 - float(tpf_a))
