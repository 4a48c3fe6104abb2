"""Empirical ROC curves, binormal fits, and threshold projection.

The data side of the package: score/label records come in, empirical
step curves, binormal parameter fits, calibrated copula models and
projected triage operating points come out.

The binormal convention is Normal(0, 1) for non-diseased scores and
Normal(mu, sigma^2) for diseased ones, so a fitted test is the pair
(mu, sigma) with AUC = Phi(mu / sqrt(1 + sigma^2)).  Fitting runs on
inverse-normal-transformed operating points, where a binormal curve is
the straight line z_D = (mu + z_N) / sigma; Deming regression handles
the noise in both coordinates, and a single operating point plus a
mean-to-sigma ratio constraint pins the curve when only one interior
point exists (coarse or binary Test-B scores).
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from scipy import special

from ._util import fmt17
from .copulas import (
    ClaytonCopula,
    Copula,
    FrankCopula,
    GaussianCopula,
    GumbelCopula,
    IndependenceCopula,
)
from .dependence import dependence_summary, theta_from_tau
from .exceptions import (
    DegenerateDataError,
    FitError,
    ParameterError,
    ValidationError,
)
from .jointroc import (
    JointDiagnosticModel,
    OperatingPoint,
    RocCurve,
    auc as curve_auc,
    curve as model_curve,
    pauc,
    univariate_curve,
    workload_ruled_out,
)
from .marginals import Normal, standard_normal_quantile

__all__ = [
    "ScoreDataset",
    "BinormalFit",
    "AnalysisConfig",
    "AnalysisReport",
    "FamilyResult",
    "TestResult",
    "empirical_roc",
    "fit_binormal_deming",
    "fit_from_point_and_ratio",
    "mean_to_sigma_ratio",
    "project_operating_points",
    "analyze",
]

CSV_HEADER = ("case_id", "label", "score_a", "score_b")

#: admissible sigma window for the single-point fit
SIGMA_WINDOW = (0.05, 20.0)


class ScoreDataset:
    """Immutable table of (case_id, label, score_a, score_b) records.

    Labels are 0 (non-diseased) and 1 (diseased).  Scores may be missing
    (stored as NaN); operations that need a column reject missing values
    rather than impute them.
    """

    def __init__(self, case_ids: Sequence[str], labels, score_a, score_b):
        self.case_ids = [str(c) for c in case_ids]
        self.labels = np.asarray(labels, dtype=int)
        self.score_a = np.asarray(score_a, dtype=float)
        self.score_b = np.asarray(score_b, dtype=float)
        n = len(self.case_ids)
        if not (self.labels.shape == self.score_a.shape == self.score_b.shape == (n,)):
            raise ValidationError("dataset columns must have equal length")
        if n == 0:
            raise ValidationError("dataset must contain at least one record")
        if len(set(self.case_ids)) != n:
            raise ValidationError("case_id values must be unique")
        bad = ~np.isin(self.labels, (0, 1))
        if np.any(bad):
            raise ValidationError(f"labels must be 0 or 1; first bad row {int(np.where(bad)[0][0]) + 1}")
        for name, col in (("score_a", self.score_a), ("score_b", self.score_b)):
            if np.any(np.isinf(col)):
                raise ValidationError(f"{name} contains non-finite values")

    def __len__(self) -> int:
        return len(self.case_ids)

    @property
    def n_diseased(self) -> int:
        return int(np.count_nonzero(self.labels == 1))

    @property
    def n_nondiseased(self) -> int:
        return int(np.count_nonzero(self.labels == 0))

    def scores(self, which: str) -> np.ndarray:
        if which == "a":
            return self.score_a
        if which == "b":
            return self.score_b
        raise ParameterError("which must be 'a' or 'b'")

    def class_scores(self, which: str, label: int) -> np.ndarray:
        return self.scores(which)[self.labels == int(label)]

    @classmethod
    def from_csv(cls, source: Union[str, "io.TextIOBase"]) -> "ScoreDataset":
        """Parse the canonical CSV schema.

        Header must be exactly ``case_id,label,score_a,score_b``; label
        is 0 or 1 (1 = diseased); empty score fields denote missing
        values.  Errors carry the offending row number.
        """
        close = False
        if isinstance(source, str):
            handle = open(source, "r", encoding="utf-8", newline="")
            close = True
        else:
            handle = source
        try:
            reader = csv.reader(handle)
            try:
                header = next(reader)
            except StopIteration:
                raise ValidationError("empty CSV: missing header") from None
            if tuple(h.strip() for h in header) != CSV_HEADER:
                raise ValidationError(
                    f"CSV header must be {','.join(CSV_HEADER)!r}, got {','.join(header)!r}"
                )
            ids, labels, sa, sb = [], [], [], []
            for i, row in enumerate(reader, start=2):
                if not row:
                    continue
                if len(row) != 4:
                    raise ValidationError(f"row {i}: expected 4 fields, got {len(row)}")
                cid, lab, a, b = (f.strip() for f in row)
                if not cid:
                    raise ValidationError(f"row {i}: empty case_id")
                if lab not in ("0", "1"):
                    raise ValidationError(f"row {i}: label must be 0 or 1, got {lab!r}")
                ids.append(cid)
                labels.append(int(lab))
                for text, dest, name in ((a, sa, "score_a"), (b, sb, "score_b")):
                    if text == "":
                        dest.append(np.nan)
                    else:
                        try:
                            dest.append(float(text))
                        except ValueError:
                            raise ValidationError(
                                f"row {i}: {name} is not a number: {text!r}"
                            ) from None
            if not ids:
                raise ValidationError("CSV contains a header but no records")
            return cls(ids, labels, sa, sb)
        finally:
            if close:
                handle.close()

    def to_csv_text(self) -> str:
        """Canonical CSV serialization; floats at 17 significant digits."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_HEADER)

        def fmt(x: float) -> str:
            return "" if np.isnan(x) else fmt17(x)

        for cid, lab, a, b in zip(self.case_ids, self.labels, self.score_a, self.score_b):
            writer.writerow([cid, int(lab), fmt(a), fmt(b)])
        return out.getvalue()

    def to_csv(self, path: str) -> None:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(self.to_csv_text())

    def content_hash(self) -> str:
        """SHA-256 of the canonical CSV text, for provenance stamps."""
        return hashlib.sha256(self.to_csv_text().encode("utf-8")).hexdigest()


def _require_classes(data: ScoreDataset) -> None:
    if data.n_diseased == 0 or data.n_nondiseased == 0:
        raise ValidationError("need at least one diseased and one non-diseased record")


def _require_complete(data: ScoreDataset, which: str) -> np.ndarray:
    s = data.scores(which)
    missing = np.isnan(s)
    if np.all(missing):
        raise ValidationError(f"score_{which} is entirely missing")
    if np.any(missing):
        raise ValidationError(
            f"score_{which} has {int(missing.sum())} missing values; "
            "missing scores are rejected, not imputed"
        )
    return s


def _step_points(scores: np.ndarray, labels: np.ndarray, positive: Optional[np.ndarray] = None):
    """Cumulative class fractions as a threshold sweeps down the scores.

    Thresholds sit at midpoints between distinct values (plus the two
    extremes); positivity is strict (score > threshold), so each distinct
    value joins the positive set as the threshold passes below it.
    """
    n_n = np.count_nonzero(labels == 0)
    n_d = np.count_nonzero(labels == 1)
    values = np.unique(scores)
    idx = np.searchsorted(values, scores)
    k = values.size
    mask = np.ones(scores.size, dtype=bool) if positive is None else positive
    cnt_n = np.bincount(idx[(labels == 0) & mask], minlength=k)
    cnt_d = np.bincount(idx[(labels == 1) & mask], minlength=k)
    cum_n = np.concatenate(([0], np.cumsum(cnt_n[::-1])))
    cum_d = np.concatenate(([0], np.cumsum(cnt_d[::-1])))
    return cum_n / n_n, cum_d / n_d


def empirical_roc(data: ScoreDataset, which: str) -> RocCurve:
    """Empirical step-curve ROC of one test.

    Sweeps thresholds across all distinct observed scores (midpoint
    placement, strict > positivity), grouping ties, and always includes
    the (0, 0) and (1, 1) endpoints.
    """
    _require_classes(data)
    s = _require_complete(data, which)
    fpf, tpf = _step_points(s, data.labels)
    return RocCurve(fpf, tpf, kind="empirical", fpf_range=(0.0, 1.0))


@dataclass(frozen=True)
class BinormalFit:
    """Binormal parameters: non-diseased Normal(0,1), diseased Normal(mu, sigma^2)."""

    mu: float
    sigma: float
    source: str  # "deming" | "point_ratio"
    degenerate: bool = False

    def __post_init__(self):
        if self.source not in ("deming", "point_ratio"):
            raise ParameterError(f"unknown fit source {self.source!r}")
        if not np.isfinite(self.mu):
            raise ParameterError("fitted mu must be finite")
        if not np.isfinite(self.sigma) or self.sigma <= 0.0:
            raise ParameterError("fitted sigma must be positive and finite")

    @property
    def auc(self) -> float:
        """Implied area under the curve, Phi(mu / sqrt(1 + sigma^2))."""
        return float(special.ndtr(self.mu / np.sqrt(1.0 + self.sigma**2)))

    def operating_point(self, fpf: float) -> OperatingPoint:
        """The fitted curve's TPF at a given FPF."""
        z_n = float(standard_normal_quantile(fpf))
        return OperatingPoint(float(fpf), float(special.ndtr((self.mu + z_n) / self.sigma)))

    def curve(self, n_points: int = 512) -> RocCurve:
        """The fitted curve as a swept RocCurve."""
        return univariate_curve(Normal(0.0, 1.0), Normal(self.mu, self.sigma), n_points)

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "sigma": self.sigma,
            "source": self.source,
            "degenerate": self.degenerate,
            "auc": self.auc,
        }


def _interior_z(points: Iterable) -> tuple[np.ndarray, np.ndarray]:
    """Inverse-normal coordinates of the strictly interior points."""
    fpf, tpf = [], []
    for p in points:
        f, t = (p.fpf, p.tpf) if isinstance(p, OperatingPoint) else (float(p[0]), float(p[1]))
        if 0.0 < f < 1.0 and 0.0 < t < 1.0:
            fpf.append(f)
            tpf.append(t)
    z_n = special.ndtri(np.asarray(fpf))
    z_d = special.ndtri(np.asarray(tpf))
    return z_n, z_d


def fit_binormal_deming(points: Iterable, delta: float = 1.0) -> BinormalFit:
    """Binormal fit by Deming regression on inverse-normal coordinates.

    Boundary points (FPF or TPF in {0, 1}) are dropped first, since the
    transform diverges there; at least two distinct interior points must
    remain.  delta is the error-variance ratio; the default 1 is
    orthogonal regression.

    A cloud lying exactly on the diagonal has mu = 0 but carries no
    information about sigma; that returns (0, 1) flagged degenerate.
    """
    delta = float(delta)
    if not np.isfinite(delta) or delta <= 0.0:
        raise ParameterError("deming delta must be positive and finite")
    z_n, z_d = _interior_z(points)
    pairs = np.unique(np.column_stack([z_n, z_d]), axis=0)
    if pairs.shape[0] < 2:
        raise FitError("need at least 2 distinct interior operating points")
    x = pairs[:, 0]
    y = pairs[:, 1]
    if np.max(np.abs(y - x)) < 1e-12:
        return BinormalFit(mu=0.0, sigma=1.0, source="deming", degenerate=True)
    sxx = float(np.sum((x - x.mean()) ** 2))
    syy = float(np.sum((y - y.mean()) ** 2))
    sxy = float(np.sum((x - x.mean()) * (y - y.mean())))
    if sxy <= 0.0:
        raise FitError("operating points do not define an increasing curve")
    diff = syy - delta * sxx
    slope = (diff + np.sqrt(diff * diff + 4.0 * delta * sxy * sxy)) / (2.0 * sxy)
    if not np.isfinite(slope) or slope <= 0.0:
        raise FitError("deming slope is not positive; fit is degenerate")
    intercept = float(y.mean() - slope * x.mean())
    sigma = 1.0 / slope
    mu = intercept * sigma
    return BinormalFit(mu=float(mu), sigma=float(sigma), source="deming")


def fit_from_point_and_ratio(op: OperatingPoint, ratio: float) -> BinormalFit:
    """Binormal fit from one interior point plus a mean-to-sigma ratio.

    In z coordinates the curve constraint is sigma z_D = mu + z_N and the
    shape constraint is mu = ratio (sigma - 1); together they are linear
    in (mu, sigma) with the unique solution

        sigma = (ratio - z_N) / (ratio - z_D),   mu = sigma z_D - z_N.

    Solutions with sigma outside SIGMA_WINDOW are rejected as fit
    failures, mirroring a bracketed search over that window.
    """
    ratio = float(ratio)
    if not np.isfinite(ratio) or ratio == 0.0:
        raise ParameterError("ratio must be finite and nonzero")
    if not (0.0 < op.fpf < 1.0 and 0.0 < op.tpf < 1.0):
        raise ValidationError("operating point must be strictly interior")
    z_n = float(special.ndtri(op.fpf))
    z_d = float(special.ndtri(op.tpf))
    denom = ratio - z_d
    if denom == 0.0:
        raise FitError(f"no admissible sigma in ({SIGMA_WINDOW[0]}, {SIGMA_WINDOW[1]})")
    sigma = (ratio - z_n) / denom
    if not (SIGMA_WINDOW[0] < sigma < SIGMA_WINDOW[1]):
        raise FitError(
            f"no admissible sigma in ({SIGMA_WINDOW[0]}, {SIGMA_WINDOW[1]}): got {sigma:.6g}"
        )
    mu = sigma * z_d - z_n
    return BinormalFit(mu=float(mu), sigma=float(sigma), source="point_ratio")


def mean_to_sigma_ratio(fit: BinormalFit) -> float:
    """The shape ratio mu / (sigma - 1); undefined at sigma = 1."""
    if abs(fit.sigma - 1.0) <= 1e-9:
        raise ParameterError("mean-to-sigma ratio undefined for sigma = 1")
    return fit.mu / (fit.sigma - 1.0)


def project_operating_points(
    data: ScoreDataset,
    t_a_ro: Optional[float] = None,
    t_a_ri: Optional[float] = None,
) -> RocCurve:
    """Empirical joint curve after applying Test-A triage thresholds.

    A case is called positive iff

        score_a > t_a_ri   OR   (score_a > t_a_ro AND score_b > t_b)

    as the Test-B threshold t_b sweeps the observed scores.  Omitting
    t_a_ro disables rule-out (everyone reaches Test B); omitting t_a_ri
    disables rule-in.  With both omitted this is exactly the Test-B
    empirical curve.
    """
    _require_classes(data)
    a = _require_complete(data, "a")
    b = _require_complete(data, "b")
    if t_a_ro is not None and t_a_ri is not None and not float(t_a_ro) < float(t_a_ri):
        raise ValidationError("rule-out threshold must lie strictly below the rule-in threshold")
    ro = -np.inf if t_a_ro is None else float(t_a_ro)
    ri = np.inf if t_a_ri is None else float(t_a_ri)

    always = a > ri
    gated = (a > ro) & ~always
    labels = data.labels
    n_n = data.n_nondiseased
    n_d = data.n_diseased
    base_n = np.count_nonzero(always & (labels == 0)) / n_n
    base_d = np.count_nonzero(always & (labels == 1)) / n_d
    gate_n, gate_d = _step_points(b, labels, positive=gated)
    fpf = base_n + gate_n
    tpf = base_d + gate_d
    return RocCurve(fpf, tpf, kind="empirical")


@dataclass(frozen=True)
class AnalysisConfig:
    """Settings for the end-to-end analysis pipeline.

    families lists the copulas to calibrate; the independence baseline
    is always included.  Thresholds are target Test-A FPF values (the
    model and raw-score scales differ, so FPF targets are the common
    currency).  b_threshold_fpf marks the projected operating point at
    the matching Test-B threshold.
    """

    families: tuple = ("gaussian", "frank", "clayton", "independence")
    ruleout_fpf_a: Optional[float] = 0.5
    rulein_fpf_a: Optional[float] = None
    prevalence: float = 0.01
    deming_delta: float = 1.0
    n_points: int = 512
    b_threshold_fpf: Optional[float] = None

    def __post_init__(self):
        known = {"gaussian", "gumbel", "clayton", "frank", "independence"}
        fams = tuple(dict.fromkeys(tuple(self.families) + ("independence",)))
        for f in fams:
            if f not in known:
                raise ValidationError(f"unknown copula family: {f!r}")
        object.__setattr__(self, "families", fams)
        for name in ("ruleout_fpf_a", "rulein_fpf_a", "b_threshold_fpf"):
            v = getattr(self, name)
            if v is not None and not 0.0 < float(v) < 1.0:
                raise ValidationError(f"{name} must lie strictly in (0, 1)")
        if self.ruleout_fpf_a is None and self.rulein_fpf_a is None:
            raise ValidationError("at least one of ruleout_fpf_a / rulein_fpf_a is required")
        if (
            self.ruleout_fpf_a is not None
            and self.rulein_fpf_a is not None
            and not self.rulein_fpf_a < self.ruleout_fpf_a
        ):
            raise ValidationError("rulein_fpf_a must be smaller than ruleout_fpf_a")
        if not 0.0 <= float(self.prevalence) <= 1.0:
            raise ValidationError("prevalence must lie in [0, 1]")
        if int(self.n_points) < 2:
            raise ValidationError("n_points must be at least 2")

    def to_dict(self) -> dict:
        return {
            "families": list(self.families),
            "ruleout_fpf_a": self.ruleout_fpf_a,
            "rulein_fpf_a": self.rulein_fpf_a,
            "prevalence": self.prevalence,
            "deming_delta": self.deming_delta,
            "n_points": self.n_points,
            "b_threshold_fpf": self.b_threshold_fpf,
        }


@dataclass
class TestResult:
    """Empirical and fitted description of one test."""

    name: str
    empirical: RocCurve
    empirical_auc: float
    fit: BinormalFit

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "empirical_auc": self.empirical_auc,
            "fit": self.fit.to_dict(),
            "empirical_curve": self.empirical.to_dict(),
        }


@dataclass
class FamilyResult:
    """Calibrated copulas and the model curves they imply."""

    family: str
    param_n: Optional[float]
    param_d: Optional[float]
    model: JointDiagnosticModel
    curves: dict
    pauc: dict

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "param_n": self.param_n,
            "param_d": self.param_d,
            "curves": {k: c.to_dict() for k, c in self.curves.items()},
            "pauc": dict(self.pauc),
        }


@dataclass
class AnalysisReport:
    """Everything the analysis pipeline produced, JSON-serializable."""

    test_a: TestResult
    test_b: TestResult
    correlations: dict
    families: list
    projected: dict
    projected_points: dict
    thresholds: dict
    workload: list
    provenance: dict

    def to_dict(self) -> dict:
        return {
            "test_a": self.test_a.to_dict(),
            "test_b": self.test_b.to_dict(),
            "correlations": self.correlations,
            "families": [f.to_dict() for f in self.families],
            "projected": {k: c.to_dict() for k, c in self.projected.items()},
            "projected_points": {
                k: {"fpf": p.fpf, "tpf": p.tpf} for k, p in self.projected_points.items()
            },
            "thresholds": self.thresholds,
            "workload": self.workload,
            "provenance": self.provenance,
        }


def _fit_test(curve_: RocCurve, delta: float, ratio_source: Optional[BinormalFit]) -> BinormalFit:
    """Deming when the curve has >= 2 interior points, else point+ratio."""
    interior = [p for p in curve_.points if 0.0 < p.fpf < 1.0 and 0.0 < p.tpf < 1.0]
    distinct = sorted({(p.fpf, p.tpf) for p in interior})
    if len(distinct) >= 2:
        return fit_binormal_deming(interior, delta=delta)
    if not distinct:
        raise FitError("no interior operating points to fit")
    if ratio_source is None:
        raise FitError("single interior point and no reference fit for the ratio constraint")
    ratio = mean_to_sigma_ratio(ratio_source)
    f, t = distinct[0]
    return fit_from_point_and_ratio(OperatingPoint(f, t), ratio)


def _calibrate(family: str, corr: dict) -> tuple[Optional[float], Optional[float], Copula, Copula]:
    """Per-class copulas from sample correlations.

    Gaussian uses the class Pearson correlation as rho (the latent
    correlation convention); Archimedean families convert the class
    Kendall tau-b through theta_from_tau.
    """
    if family == "independence":
        return None, None, IndependenceCopula(), IndependenceCopula()
    if family == "gaussian":
        rho_n = corr["n"]["pearson"]
        rho_d = corr["d"]["pearson"]
        if max(abs(rho_n), abs(rho_d)) >= 1.0 - 1e-9:
            raise DegenerateDataError("sample correlation too close to 1 for a gaussian copula")
        return rho_n, rho_d, GaussianCopula(rho_n), GaussianCopula(rho_d)
    makers = {"gumbel": GumbelCopula, "clayton": ClaytonCopula, "frank": FrankCopula}
    tau_n = corr["n"]["kendall"]
    tau_d = corr["d"]["kendall"]
    for cls, tau in (("non-diseased", tau_n), ("diseased", tau_d)):
        if tau <= 0.0:
            raise DegenerateDataError(
                f"{family} copula needs positive Kendall tau; {cls} class has tau = {tau:.4f}"
            )
    th_n = theta_from_tau(family, tau_n)
    th_d = theta_from_tau(family, tau_d)
    return th_n, th_d, makers[family](th_n), makers[family](th_d)


def _scenario_windows(cfg: AnalysisConfig) -> dict:
    """pAUC window per scenario, in FPF coordinates."""
    windows = {}
    if cfg.ruleout_fpf_a is not None:
        lo = cfg.rulein_fpf_a if cfg.rulein_fpf_a is not None else 0.0
        windows["ruleout"] = (lo, cfg.ruleout_fpf_a)
    if cfg.rulein_fpf_a is not None:
        windows["rulein"] = (cfg.rulein_fpf_a, 1.0)
    if cfg.ruleout_fpf_a is not None and cfg.rulein_fpf_a is not None:
        windows["combined"] = (cfg.rulein_fpf_a, cfg.ruleout_fpf_a)
    return windows


def _raw_threshold(scores_n: np.ndarray, target_fpf: float) -> float:
    """Raw-score threshold whose empirical FPF approximates the target."""
    return float(np.quantile(scores_n, 1.0 - target_fpf))


def analyze(data: ScoreDataset, config: Optional[AnalysisConfig] = None) -> AnalysisReport:
    """End-to-end pipeline: empirical curves, fits, copulas, projections.

    Requires complete score columns.  Produces, per requested family,
    the calibrated class copulas and the model rule-out / rule-in /
    combined curves for the configured thresholds, alongside the
    projected empirical curves at matching raw-score thresholds, pAUC
    values over the scenario windows, and workload rows at the
    configured prevalence.
    """
    cfg = config if config is not None else AnalysisConfig()
    _require_classes(data)
    a = _require_complete(data, "a")
    b = _require_complete(data, "b")

    emp_a = empirical_roc(data, "a")
    emp_b = empirical_roc(data, "b")
    fit_a = _fit_test(emp_a, cfg.deming_delta, None)
    ratio_source = fit_a if abs(fit_a.sigma - 1.0) > 1e-9 else None
    fit_b = _fit_test(emp_b, cfg.deming_delta, ratio_source)
    test_a = TestResult("a", emp_a, curve_auc(emp_a), fit_a)
    test_b = TestResult("b", emp_b, curve_auc(emp_b), fit_b)

    mask_n = data.labels == 0
    mask_d = data.labels == 1
    corr = {
        "n": {k: m.value for k, m in dependence_summary(a[mask_n], b[mask_n]).items()},
        "d": {k: m.value for k, m in dependence_summary(a[mask_d], b[mask_d]).items()},
    }

    marg = dict(
        marg_an=Normal(0.0, 1.0),
        marg_ad=Normal(fit_a.mu, fit_a.sigma),
        marg_bn=Normal(0.0, 1.0),
        marg_bd=Normal(fit_b.mu, fit_b.sigma),
    )
    windows = _scenario_windows(cfg)

    families = []
    for family in cfg.families:
        p_n, p_d, cop_n, cop_d = _calibrate(family, corr)
        model = JointDiagnosticModel.with_fpf_thresholds(
            **marg,
            copula_n=cop_n,
            copula_d=cop_d,
            ruleout_fpf_a=cfg.ruleout_fpf_a,
            rulein_fpf_a=cfg.rulein_fpf_a,
        )
        curves = {}
        paucs = {}
        for scenario, window in windows.items():
            c = model_curve(model, scenario, cfg.n_points)
            curves[scenario] = c
            paucs[scenario] = pauc(c, window[0], window[1])
        families.append(FamilyResult(family, p_n, p_d, model, curves, paucs))

    # raw-score thresholds matching the FPF targets on the observed data
    a_n = a[mask_n]
    b_n = b[mask_n]
    t_ro_raw = None if cfg.ruleout_fpf_a is None else _raw_threshold(a_n, cfg.ruleout_fpf_a)
    t_ri_raw = None if cfg.rulein_fpf_a is None else _raw_threshold(a_n, cfg.rulein_fpf_a)

    projected = {}
    if t_ro_raw is not None:
        projected["ruleout"] = project_operating_points(data, t_a_ro=t_ro_raw)
    if t_ri_raw is not None:
        projected["rulein"] = project_operating_points(data, t_a_ri=t_ri_raw)
    if t_ro_raw is not None and t_ri_raw is not None:
        projected["combined"] = project_operating_points(
            data, t_a_ro=t_ro_raw, t_a_ri=t_ri_raw
        )

    projected_points = {}
    if cfg.b_threshold_fpf is not None:
        t_b_raw = _raw_threshold(b_n, cfg.b_threshold_fpf)
        for scenario in projected:
            ro = t_ro_raw if scenario in ("ruleout", "combined") else None
            ri = t_ri_raw if scenario in ("rulein", "combined") else None
            pos = np.zeros(len(data), dtype=bool)
            if ri is not None:
                pos |= a > ri
            gate = np.ones(len(data), dtype=bool) if ro is None else (a > ro)
            pos |= gate & (b > t_b_raw)
            projected_points[scenario] = OperatingPoint(
                float(np.count_nonzero(pos & mask_n) / data.n_nondiseased),
                float(np.count_nonzero(pos & mask_d) / data.n_diseased),
            )

    thresholds = {
        "ruleout_fpf_a": cfg.ruleout_fpf_a,
        "rulein_fpf_a": cfg.rulein_fpf_a,
        "ruleout_score_a_model": None
        if cfg.ruleout_fpf_a is None
        else float(standard_normal_quantile(1.0 - cfg.ruleout_fpf_a)),
        "rulein_score_a_model": None
        if cfg.rulein_fpf_a is None
        else float(standard_normal_quantile(1.0 - cfg.rulein_fpf_a)),
        "ruleout_score_a_raw": t_ro_raw,
        "rulein_score_a_raw": t_ri_raw,
        "b_threshold_fpf": cfg.b_threshold_fpf,
    }

    workload = []
    if cfg.ruleout_fpf_a is not None:
        fpf_model = cfg.ruleout_fpf_a
        tpf_model = fit_a.operating_point(fpf_model).tpf
        workload.append(
            {
                "basis": "model",
                "prevalence": cfg.prevalence,
                "fpf_a": fpf_model,
                "tpf_a": tpf_model,
                "ruled_out": workload_ruled_out(cfg.prevalence, fpf_model, tpf_model),
            }
        )
        fpf_emp = float(np.count_nonzero(a_n > t_ro_raw) / a_n.size)
        a_d = a[mask_d]
        tpf_emp = float(np.count_nonzero(a_d > t_ro_raw) / a_d.size)
        workload.append(
            {
                "basis": "empirical",
                "prevalence": cfg.prevalence,
                "fpf_a": fpf_emp,
                "tpf_a": tpf_emp,
                "ruled_out": workload_ruled_out(cfg.prevalence, fpf_emp, tpf_emp),
            }
        )

    from . import __version__

    provenance = {
        "input_sha256": data.content_hash(),
        "tool_version": __version__,
        "config": cfg.to_dict(),
    }
    return AnalysisReport(
        test_a=test_a,
        test_b=test_b,
        correlations=corr,
        families=families,
        projected=projected,
        projected_points=projected_points,
        thresholds=thresholds,
        workload=workload,
        provenance=provenance,
    )
