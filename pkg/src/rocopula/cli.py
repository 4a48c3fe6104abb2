"""Command-line interface: curves, theorem sweeps, analysis, simulation.

Subcommands map one-to-one onto the library's activities:

* ``curve``          model-implied ROC curves from a model-spec file
* ``theorem-check``  monotonicity sweeps of pAUC in a dependence parameter
* ``analyze``        end-to-end pipeline on a score CSV
* ``simulate``       synthetic score datasets from a model-spec file
* ``dependence``     population dependence measures of one copula

All outputs are deterministic functions of (inputs, flags, seed): no
timestamps, no locale, no dict-ordering surprises.  Numbers in CSV and
JSON files are serialized at 17 significant digits, which round-trips
64-bit floats exactly.

Exit codes: 0 success, 1 theorem-check verdict FAIL, 2 input or
validation error, 3 numeric failure.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Optional

import numpy as np

from . import __version__
from ._util import fmt17
from .copulas import (
    ClaytonCopula,
    FrankCopula,
    GaussianCopula,
    GumbelCopula,
    IndependenceCopula,
)
from .dependence import spearman_from_copula, tau_from_theta, theta_from_tau
from .exceptions import (
    DegenerateDataError,
    FitError,
    NumericError,
    ParameterError,
    ValidationError,
)
from .fitting import AnalysisConfig, ScoreDataset, analyze, empirical_roc
from .jointroc import RocCurve, auc, curve, univariate_curve
from .modelspec import SweepDef, load_model_spec
from .simulate import SimulationConfig, synth_dataset
from .svg import PALETTE, render_roc_svg
from .theorems import SWEEP_PARAMETERS, swept_model, theorem_sweep

__all__ = ["main"]

EXIT_OK = 0
EXIT_THEOREM_FAIL = 1
EXIT_VALIDATION = 2
EXIT_NUMERIC = 3

FORMATS = ("csv", "json", "svg")
CURVE_KINDS_CLI = ("univariate-a", "univariate-b", "ruleout", "rulein", "combined")

THREADS_ENV = "ROC_COPULA_THREADS"


# ---------------------------------------------------------------------------
# serialization


def _jnum(v: float) -> str:
    v = float(v)
    if not math.isfinite(v):
        raise NumericError("non-finite number in JSON output")
    s = fmt17(v)
    # keep the value a float on the way back in
    if "." not in s and "e" not in s and "E" not in s:
        s += ".0"
    return s


def dump_json(obj) -> str:
    """Deterministic JSON with floats at 17 significant digits.

    The stock encoder hard-wires repr for floats, so this walks the
    (dict / list / scalar) tree itself.  Key order is preserved as
    built, which the library keeps deterministic.
    """

    def walk(node, level: int) -> str:
        pad = "  " * level
        inner = "  " * (level + 1)
        if node is None:
            return "null"
        if isinstance(node, (bool, np.bool_)):
            return "true" if node else "false"
        if isinstance(node, (int, np.integer)):
            return str(int(node))
        if isinstance(node, (float, np.floating)):
            return _jnum(node)
        if isinstance(node, str):
            return json.dumps(node)
        if isinstance(node, dict):
            if not node:
                return "{}"
            items = (
                f"{inner}{json.dumps(str(k))}: {walk(v, level + 1)}" for k, v in node.items()
            )
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(node, (list, tuple, np.ndarray)):
            seq = list(node)
            if not seq:
                return "[]"
            items = (f"{inner}{walk(v, level + 1)}" for v in seq)
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        raise ValidationError(f"cannot serialize {type(node).__name__} to JSON")

    return walk(obj, 0) + "\n"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "1" if v else "0"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt17(v)
    return str(v)


def csv_text(header, rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return out.getvalue()


# ---------------------------------------------------------------------------
# shared plumbing


def _formats(args) -> tuple:
    tokens = tuple(dict.fromkeys(t.strip() for t in args.format.split(",") if t.strip()))
    if not tokens:
        raise ValidationError("--format needs at least one of csv, json, svg")
    for t in tokens:
        if t not in FORMATS:
            raise ValidationError(f"unknown format {t!r}; choose from {', '.join(FORMATS)}")
    return tokens


def _threads(args) -> int:
    raw = args.threads if args.threads is not None else os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except (TypeError, ValueError):
        raise ValidationError(f"--threads must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValidationError("--threads must be at least 1")
    return n


def _say(args, text: str) -> None:
    if not args.quiet:
        print(text)


def _write(args, name: str, text: str) -> str:
    os.makedirs(args.out_dir, exist_ok=True)
    path = os.path.join(args.out_dir, name)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)
    _say(args, f"wrote {path}")
    return path


def _parse_floats(text: str, what: str) -> tuple:
    try:
        values = tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValidationError(f"{what} must be a comma-separated list of numbers") from None
    if not values:
        raise ValidationError(f"{what} is empty")
    return values


def _opt_float(text: Optional[str], what: str) -> Optional[float]:
    if text is None or text.strip().lower() in ("", "none"):
        return None
    try:
        return float(text)
    except ValueError:
        raise ValidationError(f"{what} must be a number or 'none', got {text!r}") from None


def _step_xy(curve_: RocCurve) -> tuple:
    """Staircase coordinates for plotting an empirical curve."""
    f = curve_.fpf
    t = curve_.tpf
    xs = [f[0]]
    ys = [t[0]]
    for i in range(1, f.size):
        xs.extend([f[i], f[i]])
        ys.extend([t[i - 1], t[i]])
    return np.asarray(xs), np.asarray(ys)


# ---------------------------------------------------------------------------
# curve


def _curve_for_kind(model, kind: str, n_points: int) -> RocCurve:
    if kind == "univariate-a":
        return univariate_curve(model.marg_an, model.marg_ad, n_points)
    if kind == "univariate-b":
        return curve(model, "univariate", n_points)
    return curve(model, kind, n_points)


def _threshold_vlines(model) -> list:
    vlines = []
    if model.t_a_ro is not None:
        vlines.append({"x": model.fpf_a(model.t_a_ro), "label": "rule-out A", "color": "#888888"})
    if model.t_a_ri is not None:
        vlines.append({"x": model.fpf_a(model.t_a_ri), "label": "rule-in A", "color": "#555555"})
    return vlines


def cmd_curve(args) -> int:
    _threads(args)
    formats = _formats(args)
    spec = load_model_spec(args.spec)
    model = spec.model

    if args.kind.strip() == "all":
        kinds = ["univariate-a", "univariate-b"]
        if model.t_a_ro is not None:
            kinds.append("ruleout")
        if model.t_a_ri is not None:
            kinds.append("rulein")
        if model.t_a_ro is not None and model.t_a_ri is not None:
            kinds.append("combined")
    else:
        kinds = [k.strip() for k in args.kind.split(",") if k.strip()]
        for k in kinds:
            if k not in CURVE_KINDS_CLI:
                raise ValidationError(
                    f"unknown curve kind {k!r}; choose from {', '.join(CURVE_KINDS_CLI)} or all"
                )

    model_doc = spec.model.to_dict()
    curves = {k: _curve_for_kind(model, k, args.n_points) for k in kinds}
    for k, c in curves.items():
        stem = "curve_" + k.replace("-", "_")
        if "csv" in formats:
            _write(args, stem + ".csv", csv_text(("fpf", "tpf"), zip(c.fpf, c.tpf)))
        if "json" in formats:
            _write(args, stem + ".json", dump_json(c.to_dict(model=model_doc)))
        lo, hi = c.fpf_range
        _say(args, f"{k}: auc={fmt17(auc(c))} fpf_range=[{lo:.6g}, {hi:.6g}] points={len(c)}")

    if "svg" in formats:
        series = [
            {"fpf": c.fpf, "tpf": c.tpf, "label": k, "color": PALETTE[i % len(PALETTE)]}
            for i, (k, c) in enumerate(curves.items())
        ]
        _write(
            args,
            "curves.svg",
            render_roc_svg(series, vlines=_threshold_vlines(model), title="ROC curves"),
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# theorem-check


def cmd_theorem_check(args) -> int:
    _threads(args)
    formats = _formats(args)
    spec = load_model_spec(args.spec)

    if args.parameter is not None:
        if args.grid is None:
            raise ValidationError("--parameter needs a matching --grid")
        sweeps = [SweepDef(args.parameter, _parse_floats(args.grid, "--grid"))]
    else:
        if args.grid is not None:
            raise ValidationError("--grid needs a matching --parameter")
        sweeps = list(spec.sweeps)
        if not sweeps:
            raise ValidationError(
                "no sweep requested: pass --parameter/--grid or add sweeps to the spec file"
            )

    all_passed = True
    for sweep in sweeps:
        result = theorem_sweep(
            spec.model, args.which, sweep.parameter, sweep.grid, n_points=args.n_points
        )
        all_passed = all_passed and result.passed
        stem = f"theorem_{args.which}_{sweep.parameter}"
        if "csv" in formats:
            _write(
                args,
                stem + ".csv",
                csv_text(("parameter", "value", "pauc"), [(r["parameter"], r["value"], r["pauc"]) for r in result.rows()]),
            )
        if "json" in formats:
            _write(args, stem + ".json", dump_json(result.to_dict()))
        if "svg" in formats:
            series = []
            for i, v in enumerate(result.values):
                m = swept_model(spec.model, sweep.parameter, v)
                c = curve(m, args.which, args.n_points)
                series.append(
                    {
                        "fpf": c.fpf,
                        "tpf": c.tpf,
                        "label": f"{sweep.parameter}={v:g}",
                        "color": PALETTE[i % len(PALETTE)],
                    }
                )
            _write(
                args,
                stem + ".svg",
                render_roc_svg(
                    series,
                    vlines=_threshold_vlines(spec.model),
                    title=f"{args.which} sweep over {sweep.parameter} ({result.family})",
                ),
            )

        lo, hi = result.window
        _say(
            args,
            f"{args.which} pAUC on [{lo:.6g}, {hi:.6g}] vs {sweep.parameter} "
            f"({result.family}), expected {result.expected}",
        )
        for v, p in zip(result.values, result.paucs):
            _say(args, f"  {v:<12g} {fmt17(p)}")
        verdict = "PASS" if result.passed else "FAIL"
        _say(args, f"verdict: {verdict} (min margin {result.min_margin:.3e})")

    return EXIT_OK if all_passed else EXIT_THEOREM_FAIL


# ---------------------------------------------------------------------------
# analyze


def _metric_rows(doc: dict) -> list:
    rows = []
    for name in ("a", "b"):
        t = doc[f"test_{name}"]
        rows.append((f"auc_{name}_empirical", t["empirical_auc"]))
        rows.append((f"auc_{name}_fit", t["fit"]["auc"]))
        rows.append((f"mu_{name}", t["fit"]["mu"]))
        rows.append((f"sigma_{name}", t["fit"]["sigma"]))
        rows.append((f"degenerate_{name}", t["fit"]["degenerate"]))
    for side in ("n", "d"):
        for kind, value in doc["correlations"][side].items():
            rows.append((f"{kind}_{side}", value))
    for fam in doc["families"]:
        name = fam["family"]
        rows.append((f"param_n_{name}", fam["param_n"]))
        rows.append((f"param_d_{name}", fam["param_d"]))
        for scenario, value in fam["pauc"].items():
            rows.append((f"pauc_{name}_{scenario}", value))
    for scenario, point in doc["projected_points"].items():
        rows.append((f"projected_{scenario}_fpf", point["fpf"]))
        rows.append((f"projected_{scenario}_tpf", point["tpf"]))
    for key, value in doc["thresholds"].items():
        rows.append((key, value))
    for entry in doc["workload"]:
        rows.append((f"workload_ruled_out_{entry['basis']}", entry["ruled_out"]))
    return rows


def _ppv_npv_segments(point, prevalence: float) -> list:
    """Constant-PPV and constant-NPV reference lines through one point."""
    p = float(prevalence)
    f, t = point["fpf"], point["tpf"]
    segments = []
    denom_p = p * t + (1.0 - p) * f
    if denom_p > 0.0 and t > 0.0:
        ppv = p * t / denom_p
        if 0.0 < ppv < 1.0:
            k = (1.0 - p) / p * ppv / (1.0 - ppv)
            x_end, y_end = (1.0 / k, 1.0) if k >= 1.0 else (1.0, k)
            segments.append(
                {"x1": 0.0, "y1": 0.0, "x2": x_end, "y2": y_end, "color": "#c08030", "dash": "6,3"}
            )
    denom_n = (1.0 - p) * (1.0 - f) + p * (1.0 - t)
    if denom_n > 0.0 and (1.0 - f) > 0.0:
        npv = (1.0 - p) * (1.0 - f) / denom_n
        if 0.0 < npv < 1.0:
            m = (1.0 - p) / p * (1.0 - npv) / npv
            x0, y0 = (0.0, 1.0 - m) if m <= 1.0 else (1.0 - 1.0 / m, 0.0)
            segments.append(
                {"x1": x0, "y1": y0, "x2": 1.0, "y2": 1.0, "color": "#3080c0", "dash": "6,3"}
            )
    return segments


def _analysis_svg(report, doc: dict, cfg: AnalysisConfig) -> str:
    scenario = "ruleout" if "ruleout" in report.projected else "rulein"
    series = []
    for name, color in (("a", "#b5b5b5"), ("b", "#d9d9d9")):
        emp = report.test_a.empirical if name == "a" else report.test_b.empirical
        xs, ys = _step_xy(emp)
        series.append(
            {"fpf": xs, "tpf": ys, "label": f"test {name} (empirical)", "color": color, "width": 1.1}
        )
    for i, fam in enumerate(report.families):
        c = fam.curves.get(scenario)
        if c is None:
            continue
        series.append(
            {
                "fpf": c.fpf,
                "tpf": c.tpf,
                "label": f"{fam.family} {scenario}",
                "color": PALETTE[i % len(PALETTE)],
            }
        )
    proj = report.projected.get(scenario)
    if proj is not None:
        xs, ys = _step_xy(proj)
        series.append(
            {
                "fpf": xs,
                "tpf": ys,
                "label": f"projected {scenario}",
                "color": "#222222",
                "dash": "3,3",
            }
        )

    points = []
    segments = []
    pt = doc["projected_points"].get(scenario)
    if pt is not None:
        points.append({"fpf": pt["fpf"], "tpf": pt["tpf"], "label": "B threshold"})
        segments = _ppv_npv_segments(pt, cfg.prevalence)

    vlines = []
    for stem, label in (("ruleout", "rule-out A"), ("rulein", "rule-in A")):
        target = doc["thresholds"][f"{stem}_fpf_a"]
        if target is not None:
            vlines.append({"x": target, "label": label, "color": "#888888"})
    return render_roc_svg(
        series, vlines=vlines, points=points, segments=segments, title="analysis"
    )


def cmd_analyze(args) -> int:
    _threads(args)
    formats = _formats(args)
    data = ScoreDataset.from_csv(args.data)
    cfg = AnalysisConfig(
        families=tuple(f.strip() for f in args.families.split(",") if f.strip()),
        ruleout_fpf_a=_opt_float(args.ruleout_fpf, "--ruleout-fpf"),
        rulein_fpf_a=_opt_float(args.rulein_fpf, "--rulein-fpf"),
        prevalence=args.prevalence,
        deming_delta=args.deming_delta,
        n_points=args.n_points,
        b_threshold_fpf=_opt_float(args.b_threshold_fpf, "--b-threshold-fpf"),
    )
    report = analyze(data, cfg)
    report.provenance["seed"] = args.seed
    doc = report.to_dict()

    _say(
        args,
        f"cases: {len(data)} ({data.n_diseased} diseased, {data.n_nondiseased} non-diseased)",
    )
    for name in ("a", "b"):
        t = doc[f"test_{name}"]
        _say(
            args,
            f"test {name}: empirical auc={t['empirical_auc']:.4f}, fit mu={t['fit']['mu']:.4f} "
            f"sigma={t['fit']['sigma']:.4f} auc={t['fit']['auc']:.4f} ({t['fit']['source']})",
        )
    for side in ("n", "d"):
        c = doc["correlations"][side]
        _say(
            args,
            f"correlation ({side}): pearson={c['pearson']:.4f} kendall={c['kendall']:.4f} "
            f"spearman={c['spearman']:.4f}",
        )
    for fam in doc["families"]:
        paucs = " ".join(f"{k}={v:.4f}" for k, v in fam["pauc"].items())
        _say(args, f"family {fam['family']}: pauc {paucs}")
    for entry in doc["workload"]:
        _say(
            args,
            f"workload ({entry['basis']}): ruled_out={entry['ruled_out']:.4f} "
            f"at prevalence {entry['prevalence']:g}",
        )

    if "json" in formats:
        _write(args, "report.json", dump_json(doc))
    if "csv" in formats:
        _write(args, "metrics.csv", csv_text(("metric", "value"), _metric_rows(doc)))
    if "svg" in formats:
        _write(args, "analysis.svg", _analysis_svg(report, doc, cfg))
    return EXIT_OK


# ---------------------------------------------------------------------------
# simulate


def cmd_simulate(args) -> int:
    _threads(args)
    formats = _formats(args)
    spec = load_model_spec(args.spec)
    seed = args.seed if args.seed is not None else 0
    config = SimulationConfig(
        model=spec.model,
        n_per_class=args.n,
        seed=seed,
        prevalence=args.prevalence,
    )
    data = synth_dataset(config)
    _write(args, "dataset.csv", data.to_csv_text())
    _say(
        args,
        f"{len(data)} cases ({data.n_diseased} diseased), seed={seed}, "
        f"sha256={data.content_hash()}",
    )
    if "json" in formats:
        meta = {
            "model": spec.model.to_dict(),
            "n_per_class": int(args.n),
            "prevalence": args.prevalence,
            "seed": int(seed),
            "cases": len(data),
            "n_diseased": data.n_diseased,
            "n_nondiseased": data.n_nondiseased,
            "dataset_sha256": data.content_hash(),
        }
        _write(args, "dataset_meta.json", dump_json(meta))
    if "svg" in formats and data.n_diseased > 0 and data.n_nondiseased > 0:
        series = []
        for i, name in enumerate(("a", "b")):
            emp = empirical_roc(data, name)
            xs, ys = _step_xy(emp)
            series.append(
                {"fpf": xs, "tpf": ys, "label": f"test {name} (empirical)", "color": PALETTE[i]}
            )
        _write(args, "dataset.svg", render_roc_svg(series, title="simulated dataset"))
    return EXIT_OK


# ---------------------------------------------------------------------------
# dependence


def cmd_dependence(args) -> int:
    _threads(args)
    formats = _formats(args)
    family = args.family
    given = {
        name: getattr(args, name)
        for name in ("rho", "theta", "tau")
        if getattr(args, name) is not None
    }

    if family == "independence":
        if given:
            raise ValidationError("the independence copula takes no parameter")
        copula = IndependenceCopula()
        parameter, value, tau = None, None, 0.0
    elif family == "gaussian":
        if set(given) not in ({"rho"}, {"tau"}):
            raise ValidationError("gaussian needs exactly one of --rho or --tau")
        if "tau" in given:
            t = float(given["tau"])
            if not -1.0 < t < 1.0:
                raise ParameterError("gaussian tau must lie in (-1, 1)")
            rho = math.sin(math.pi * t / 2.0)
        else:
            rho = float(given["rho"])
        copula = GaussianCopula(rho)
        parameter, value = "rho", rho
        tau = 2.0 * math.asin(rho) / math.pi
    else:
        cls = {"gumbel": GumbelCopula, "clayton": ClaytonCopula, "frank": FrankCopula}[family]
        if set(given) not in ({"theta"}, {"tau"}):
            raise ValidationError(f"{family} needs exactly one of --theta or --tau")
        theta = (
            theta_from_tau(family, float(given["tau"]))
            if "tau" in given
            else float(given["theta"])
        )
        copula = cls(theta)
        parameter, value = "theta", theta
        tau = tau_from_theta(family, theta)

    spearman = spearman_from_copula(copula)
    doc = {
        "family": family,
        "parameter": parameter,
        "value": value,
        "tau": tau,
        "spearman": spearman,
    }
    shown = "-" if value is None else fmt17(value)
    _say(
        args,
        f"{family}: {parameter or 'parameter'}={shown} tau={fmt17(tau)} "
        f"spearman={fmt17(spearman)}",
    )
    if "csv" in formats:
        _write(
            args,
            "dependence.csv",
            csv_text(
                ("family", "parameter", "value", "tau", "spearman"),
                [(family, parameter or "", value, tau, spearman)],
            ),
        )
    if "json" in formats:
        _write(args, "dependence.json", dump_json(doc))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default=".", help="directory for output files")
    common.add_argument(
        "--format",
        default="csv,json",
        help="comma-separated output formats: csv, json, svg (default csv,json)",
    )
    common.add_argument("--seed", type=int, default=None, help="random seed")
    common.add_argument("--quiet", action="store_true", help="suppress stdout chatter")
    common.add_argument(
        "--threads",
        default=None,
        help=f"parallelism bound (>= 1; also {THREADS_ENV}); evaluation is "
        "vectorized, so this is an upper bound, not a demand",
    )

    parser = argparse.ArgumentParser(
        prog="rocopula",
        description="Joint ROC curves for correlated tests combined under "
        "rule-out / rule-in / combined protocols.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", parents=[common], help="model-implied ROC curves")
    p.add_argument("spec", help="model-spec JSON file")
    p.add_argument(
        "--kind",
        default="all",
        help="comma-separated curve kinds (univariate-a, univariate-b, ruleout, "
        "rulein, combined) or all",
    )
    p.add_argument("--n-points", type=int, default=512, help="points per curve")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser(
        "theorem-check", parents=[common], help="pAUC monotonicity sweep with verdict"
    )
    p.add_argument("spec", help="model-spec JSON file")
    p.add_argument("--which", required=True, choices=("ruleout", "rulein"))
    p.add_argument(
        "--parameter",
        choices=SWEEP_PARAMETERS,
        help="dependence parameter to sweep (default: sweeps from the spec file)",
    )
    p.add_argument("--grid", help="comma-separated, strictly increasing parameter values")
    p.add_argument("--n-points", type=int, default=512, help="points per curve")
    p.set_defaults(func=cmd_theorem_check)

    p = sub.add_parser("analyze", parents=[common], help="end-to-end analysis of a score CSV")
    p.add_argument("data", help="CSV with header case_id,label,score_a,score_b")
    p.add_argument(
        "--families",
        default="gaussian,frank,clayton,independence",
        help="comma-separated copula families to calibrate",
    )
    p.add_argument("--ruleout-fpf", default="0.5", help="Test-A rule-out FPF target, or none")
    p.add_argument("--rulein-fpf", default="none", help="Test-A rule-in FPF target, or none")
    p.add_argument("--prevalence", type=float, default=0.01, help="prevalence for workload rows")
    p.add_argument("--deming-delta", type=float, default=1.0, help="Deming variance ratio")
    p.add_argument("--n-points", type=int, default=512, help="points per model curve")
    p.add_argument(
        "--b-threshold-fpf",
        default="none",
        help="Test-B FPF target for the projected operating point, or none",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("simulate", parents=[common], help="draw a synthetic score dataset")
    p.add_argument("spec", help="model-spec JSON file")
    p.add_argument("--n", type=int, required=True, help="cases per class")
    p.add_argument(
        "--prevalence",
        type=float,
        default=None,
        help="draw 2n cases with Bernoulli(prevalence) labels instead of n per class",
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser(
        "dependence", parents=[common], help="population dependence measures of a copula"
    )
    p.add_argument(
        "family", choices=("gaussian", "gumbel", "clayton", "frank", "independence")
    )
    p.add_argument("--rho", type=float, default=None, help="gaussian correlation")
    p.add_argument("--theta", type=float, default=None, help="archimedean parameter")
    p.add_argument("--tau", type=float, default=None, help="target Kendall tau")
    p.set_defaults(func=cmd_dependence)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, ParameterError, DegenerateDataError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename or exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NumericError, FitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
