"""Joint ROC curves for two correlated tests under triage protocols.

Two exponential-score tests are combined three ways: rule-out (a
negative on Test A ends the workup), rule-in (a positive on Test A is
final), and the combined protocol with both thresholds active.  The
joint curves are improper: their FPF ranges are clipped by the Test-A
thresholds, so partial AUC over the reachable window is the comparable
metric.

The second half sweeps the diseased-class correlation and prints the
rule-out pAUC at each value, which is the monotonicity the theorem
sweeps verify wholesale: diseased-side dependence helps rule-out,
non-diseased-side dependence hurts it.

Run from the repository root:

    python3 demos/joint_roc_curves.py

Writes demos/out/joint_roc_curves.svg.
"""

import os

from rocopula.copulas import GaussianCopula
from rocopula.jointroc import JointDiagnosticModel, curve, pauc, univariate_curve
from rocopula.marginals import Exponential
from rocopula.svg import PALETTE, render_roc_svg
from rocopula.theorems import theorem_sweep

OUT_DIR = os.path.join(os.path.dirname(__file__), "out")


def build_model(rho_n=0.4, rho_d=0.4):
    return JointDiagnosticModel.with_fpf_thresholds(
        Exponential(1.0),
        Exponential(0.23),
        Exponential(1.0),
        Exponential(0.17),
        GaussianCopula(rho_n),
        GaussianCopula(rho_d),
        ruleout_fpf_a=0.55,
        rulein_fpf_a=0.05,
    )


def main():
    model = build_model()
    lo = model.fpf_a(model.t_a_ri)
    hi = model.fpf_a(model.t_a_ro)
    print(f"Test-A thresholds pin the joint FPF window to [{lo:.3f}, {hi:.3f}]")
    print()

    curves = {
        "A alone": univariate_curve(model.marg_an, model.marg_ad, 512),
        "B alone": curve(model, "univariate", 512),
        "rule-out": curve(model, "ruleout", 512),
        "rule-in": curve(model, "rulein", 512),
        "combined": curve(model, "combined", 512),
    }
    print(f"{'curve':>10}  {'fpf range':>16}  {'pAUC on window':>14}")
    for name, c in curves.items():
        c_lo, c_hi = c.fpf_range
        w_lo, w_hi = max(c_lo, lo), min(c_hi, hi)
        p = pauc(c, w_lo, w_hi)
        print(f"{name:>10}  [{c_lo:6.3f}, {c_hi:6.3f}]  {p:14.6f}")
    print()

    print("rule-out pAUC as the diseased-class correlation grows (rho_n = 0.4):")
    sweep = theorem_sweep(model, "ruleout", "rho_d", (0.0, 0.2, 0.4, 0.6, 0.8))
    for value, p in zip(sweep.values, sweep.paucs):
        print(f"  rho_d = {value:3.1f}   pAUC = {p:.6f}")
    print(f"verdict: {'PASS' if sweep.passed else 'FAIL'} ({sweep.expected})")

    os.makedirs(OUT_DIR, exist_ok=True)
    series = [
        {"fpf": c.fpf, "tpf": c.tpf, "label": name, "color": PALETTE[i % len(PALETTE)]}
        for i, (name, c) in enumerate(curves.items())
    ]
    vlines = [
        {"x": hi, "label": "rule-out A", "color": "#888888"},
        {"x": lo, "label": "rule-in A", "color": "#555555"},
    ]
    path = os.path.join(OUT_DIR, "joint_roc_curves.svg")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_roc_svg(series, vlines=vlines, title="joint ROC curves"))
    print(f"\nwrote {path}")


if __name__ == "__main__":
    main()
