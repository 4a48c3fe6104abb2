"""Tests for rocopula.cli.

The CLI runs in-process through main(argv), which keeps exit codes and
stderr observable without subprocesses.  Golden files under
tests/golden/ pin the exact bytes of representative outputs; regenerate
them with::

    python3 -m rocopula.cli <job args> --out-dir tests/golden

using the argument lists in GOLDEN_JOBS below.
"""

import hashlib
import json
import math
import os
import subprocess
import sys
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from rocopula import __version__
from rocopula.cli import dump_json, main
from rocopula.copulas import GaussianCopula
from rocopula.jointroc import JointDiagnosticModel
from rocopula.marginals import Exponential, Normal
from rocopula.simulate import SimulationConfig, synth_dataset

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")
SPEC_EXP = os.path.join(GOLDEN_DIR, "spec_exp.json")

#: pinned CLI invocations whose outputs are stored in tests/golden/
GOLDEN_JOBS = [
    ["dependence", "gumbel", "--theta", "2.0", "--format", "csv,json", "--quiet"],
    [
        "curve",
        SPEC_EXP,
        "--kind",
        "ruleout,combined",
        "--n-points",
        "9",
        "--format",
        "csv,json",
        "--quiet",
    ],
    [
        "theorem-check",
        SPEC_EXP,
        "--which",
        "ruleout",
        "--parameter",
        "rho_d",
        "--grid",
        "0.0,0.4,0.8",
        "--n-points",
        "64",
        "--format",
        "json",
        "--quiet",
    ],
    ["simulate", SPEC_EXP, "--n", "12", "--seed", "7", "--format", "csv,json", "--quiet"],
]

GOLDEN_FILES = [
    "dependence.csv",
    "dependence.json",
    "curve_ruleout.csv",
    "curve_ruleout.json",
    "curve_combined.csv",
    "curve_combined.json",
    "theorem_ruleout_rho_d.json",
    "dataset.csv",
    "dataset_meta.json",
]


def run_jobs(out_dir):
    for job in GOLDEN_JOBS:
        code = main(job + ["--out-dir", str(out_dir)])
        assert code == 0, job
    return out_dir


def write_spec(tmp_path, doc, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def base_spec():
    with open(SPEC_EXP, "r", encoding="utf-8") as handle:
        return json.load(handle)


def write_dataset_csv(tmp_path, n=80, seed=424, name="data.csv"):
    model = JointDiagnosticModel(
        marg_an=Normal(0.0, 1.0),
        marg_ad=Normal(1.2, 1.1),
        marg_bn=Normal(0.0, 1.0),
        marg_bd=Normal(1.0, 1.0),
        copula_n=GaussianCopula(0.3),
        copula_d=GaussianCopula(0.5),
    )
    data = synth_dataset(SimulationConfig(model=model, n_per_class=n, seed=seed))
    path = tmp_path / name
    path.write_text(data.to_csv_text(), encoding="utf-8")
    return str(path)


# ---------------------------------------------------------------------------
# golden files: byte-identical output for pinned inputs


@pytest.mark.parametrize("name", GOLDEN_FILES)
def test_golden_outputs_are_byte_identical(tmp_path, name):
    run_jobs(tmp_path)
    fresh = (tmp_path / name).read_bytes()
    stored = open(os.path.join(GOLDEN_DIR, name), "rb").read()
    assert fresh == stored, f"{name} drifted from tests/golden/{name}"


def test_golden_dir_has_no_strays():
    produced = set(GOLDEN_FILES) | {"spec_exp.json"}
    assert set(os.listdir(GOLDEN_DIR)) == produced


# ---------------------------------------------------------------------------
# exit codes


def test_version_flag_prints_version(capsys):
    with pytest.raises(SystemExit) as err:
        main(["--version"])
    assert err.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_unknown_spec_field_exits_2(tmp_path, capsys):
    doc = base_spec()
    doc["extra_knob"] = 1
    code = main(["curve", write_spec(tmp_path, doc), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "extra_knob" in capsys.readouterr().err


def test_threshold_ordering_violation_exits_2(tmp_path, capsys):
    doc = base_spec()
    # FPF targets reversed: the rule-out score lands above the rule-in score
    doc["thresholds"] = {"ruleout_fpf_a": 0.05, "rulein_fpf_a": 0.55}
    code = main(["curve", write_spec(tmp_path, doc), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "rule-out" in capsys.readouterr().err


def test_both_threshold_forms_exit_2(tmp_path, capsys):
    doc = base_spec()
    doc["thresholds"] = {"ruleout_fpf_a": 0.55, "ruleout_score_a": 0.6}
    code = main(["curve", write_spec(tmp_path, doc), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "not both" in capsys.readouterr().err


def test_missing_spec_file_exits_2(tmp_path, capsys):
    code = main(["curve", str(tmp_path / "nope.json"), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "not found" in capsys.readouterr().err


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    code = main(["curve", str(path), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "JSON" in capsys.readouterr().err


def test_bad_format_exits_2(tmp_path, capsys):
    code = main(["curve", SPEC_EXP, "--format", "pdf", "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "pdf" in capsys.readouterr().err


def test_bad_threads_flag_exits_2(tmp_path):
    assert main(["curve", SPEC_EXP, "--threads", "0", "--out-dir", str(tmp_path), "--quiet"]) == 2


def test_bad_threads_env_exits_2(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ROC_COPULA_THREADS", "many")
    code = main(["dependence", "independence", "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "many" in capsys.readouterr().err


def test_threads_env_is_honored_when_valid(tmp_path, monkeypatch):
    monkeypatch.setenv("ROC_COPULA_THREADS", "4")
    assert main(["dependence", "independence", "--out-dir", str(tmp_path), "--quiet"]) == 0


def test_unknown_curve_kind_exits_2(tmp_path, capsys):
    code = main(["curve", SPEC_EXP, "--kind", "sideways", "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "sideways" in capsys.readouterr().err


def test_theorem_fail_exits_1(tmp_path, capsys):
    # consecutive grid values this close cannot clear the 1e-4 margin
    code = main(
        [
            "theorem-check",
            SPEC_EXP,
            "--which",
            "ruleout",
            "--parameter",
            "rho_d",
            "--grid",
            "0.4,0.400000001",
            "--n-points",
            "64",
            "--out-dir",
            str(tmp_path),
        ]
    )
    assert code == 1
    assert "FAIL" in capsys.readouterr().out


def test_theorem_grid_without_parameter_exits_2(tmp_path):
    args = ["theorem-check", SPEC_EXP, "--which", "ruleout", "--grid", "0.1,0.2"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 2


def test_theorem_parameter_without_grid_exits_2(tmp_path):
    args = ["theorem-check", SPEC_EXP, "--which", "ruleout", "--parameter", "rho_d"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 2


def test_theorem_no_sweeps_anywhere_exits_2(tmp_path):
    doc = base_spec()
    del doc["sweeps"]
    args = ["theorem-check", write_spec(tmp_path, doc), "--which", "ruleout"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 2


def test_analyze_empty_diseased_class_exits_2(tmp_path, capsys):
    path = tmp_path / "data.csv"
    rows = ["case_id,label,score_a,score_b"]
    rows += [f"c{i},0,{i / 10.0},{i / 7.0}" for i in range(10)]
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    code = main(["analyze", str(path), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 2
    assert "diseased" in capsys.readouterr().err


def test_analyze_fit_failure_exits_3(tmp_path, capsys):
    # perfectly separated scores leave no interior ROC points, which the
    # binormal fit cannot use
    path = tmp_path / "data.csv"
    rows = ["case_id,label,score_a,score_b"]
    rows += [f"n{i},0,{i / 100.0},{i / 70.0}" for i in range(12)]
    rows += [f"d{i},1,{2.0 + i / 100.0},{2.0 + i / 70.0}" for i in range(12)]
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    code = main(["analyze", str(path), "--out-dir", str(tmp_path), "--quiet"])
    assert code == 3
    assert "interior" in capsys.readouterr().err


def test_dependence_conflicting_parameters_exit_2(tmp_path):
    base = ["--out-dir", str(tmp_path), "--quiet"]
    assert main(["dependence", "gaussian", "--rho", "0.3", "--tau", "0.2"] + base) == 2
    assert main(["dependence", "gaussian"] + base) == 2
    assert main(["dependence", "independence", "--theta", "2.0"] + base) == 2
    assert main(["dependence", "gaussian", "--tau", "1.5"] + base) == 2
    assert main(["dependence", "gumbel", "--rho", "0.3"] + base) == 2


# ---------------------------------------------------------------------------
# curve behavior


def curve_points(path):
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().strip().splitlines()
    assert lines[0] == "fpf,tpf"
    pairs = [tuple(float(t) for t in line.split(",")) for line in lines[1:]]
    return np.asarray(pairs)


def test_curve_ruleout_stops_at_threshold_fpf(tmp_path):
    assert main(["curve", SPEC_EXP, "--kind", "ruleout", "--out-dir", str(tmp_path), "--quiet"]) == 0
    pts = curve_points(tmp_path / "curve_ruleout.csv")
    assert pts[-1, 0] == pytest.approx(0.55, abs=1e-9)
    assert pts[0, 0] == pytest.approx(0.0, abs=1e-12)


def test_curve_combined_starts_at_rulein_fpf(tmp_path):
    assert main(["curve", SPEC_EXP, "--kind", "combined", "--out-dir", str(tmp_path), "--quiet"]) == 0
    pts = curve_points(tmp_path / "curve_combined.csv")
    assert pts[0, 0] == pytest.approx(0.05, abs=1e-9)
    assert pts[-1, 0] == pytest.approx(0.55, abs=1e-9)


def test_curve_independence_matches_product_formula(tmp_path):
    doc = base_spec()
    doc["copulas"] = {"n": {"family": "independence"}, "d": {"family": "independence"}}
    del doc["sweeps"]
    spec = write_spec(tmp_path, doc)
    n_points = 33
    args = ["curve", spec, "--kind", "ruleout", "--n-points", str(n_points)]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    pts = curve_points(tmp_path / "curve_ruleout.csv")

    a_n, a_d = Exponential(1.0), Exponential(0.23)
    t_ro = a_n.quantile(1.0 - 0.55)
    surv_an = 1.0 - a_n.cdf(t_ro)
    surv_ad = 1.0 - a_d.cdf(t_ro)
    # under independence with exponential B margins the threshold drops
    # out: tpf = surv_ad * (fpf / surv_an) ** (lambda_bd / lambda_bn).
    # recovering the threshold from a serialized fpf amplifies its last
    # ulp by 1/fpf, so the bound carries that conditioning term
    for fpf, tpf in pts:
        if fpf == 0.0:
            continue
        tol = 1e-12 + 0.17 * tpf * (2.3e-16 / fpf)
        assert tpf == pytest.approx(surv_ad * (fpf / surv_an) ** 0.17, abs=tol)


def test_curve_kind_all_emits_every_applicable_curve(tmp_path):
    assert main(["curve", SPEC_EXP, "--out-dir", str(tmp_path), "--quiet"]) == 0
    stems = [
        "curve_univariate_a",
        "curve_univariate_b",
        "curve_ruleout",
        "curve_rulein",
        "curve_combined",
    ]
    for stem in stems:
        assert (tmp_path / f"{stem}.csv").exists()
        assert (tmp_path / f"{stem}.json").exists()


def test_curve_json_embeds_model(tmp_path):
    assert main(["curve", SPEC_EXP, "--kind", "ruleout", "--out-dir", str(tmp_path), "--quiet"]) == 0
    doc = json.loads((tmp_path / "curve_ruleout.json").read_text(encoding="utf-8"))
    assert doc["kind"] == "ruleout"
    assert doc["model"]["copulas"]["d"]["rho"] == 0.4
    assert doc["fpf_range"] == [0.0, 0.55]
    assert all(set(p) == {"fpf", "tpf"} for p in doc["points"])


def test_quiet_flag_silences_stdout(tmp_path, capsys):
    assert main(["curve", SPEC_EXP, "--kind", "ruleout", "--out-dir", str(tmp_path), "--quiet"]) == 0
    assert capsys.readouterr().out == ""


def test_out_dir_is_created_when_missing(tmp_path):
    target = tmp_path / "deep" / "nested"
    assert main(["dependence", "frank", "--theta", "3.0", "--out-dir", str(target), "--quiet"]) == 0
    assert (target / "dependence.json").exists()


# ---------------------------------------------------------------------------
# theorem-check behavior


def test_theorem_sweeps_from_spec_file(tmp_path, capsys):
    args = ["theorem-check", SPEC_EXP, "--which", "ruleout", "--n-points", "64"]
    assert main(args + ["--out-dir", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "FAIL" not in out
    doc = json.loads((tmp_path / "theorem_ruleout_rho_d.json").read_text(encoding="utf-8"))
    assert doc["verdict"] == "PASS"
    assert doc["expected"] == "increasing"
    assert doc["pauc"] == sorted(doc["pauc"])


def test_theorem_rulein_direction_is_reversed(tmp_path):
    args = [
        "theorem-check",
        SPEC_EXP,
        "--which",
        "rulein",
        "--parameter",
        "rho_d",
        "--grid",
        "0.0,0.4,0.8",
        "--n-points",
        "64",
    ]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    doc = json.loads((tmp_path / "theorem_rulein_rho_d.json").read_text(encoding="utf-8"))
    assert doc["expected"] == "decreasing"
    assert doc["verdict"] == "PASS"
    assert doc["pauc"] == sorted(doc["pauc"], reverse=True)


def test_theorem_rho_n_ruleout_decreasing(tmp_path):
    args = [
        "theorem-check",
        SPEC_EXP,
        "--which",
        "ruleout",
        "--parameter",
        "rho_n",
        "--grid",
        "0.0,0.4,0.8",
        "--n-points",
        "64",
    ]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    doc = json.loads((tmp_path / "theorem_ruleout_rho_n.json").read_text(encoding="utf-8"))
    assert doc["expected"] == "decreasing"
    assert doc["verdict"] == "PASS"


# ---------------------------------------------------------------------------
# analyze behavior


def test_analyze_writes_report_and_metrics(tmp_path):
    data = write_dataset_csv(tmp_path)
    args = [
        "analyze",
        data,
        "--ruleout-fpf",
        "0.5",
        "--b-threshold-fpf",
        "0.2",
        "--n-points",
        "65",
        "--seed",
        "11",
    ]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    doc = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))

    with open(data, "rb") as handle:
        digest = hashlib.sha256(handle.read()).hexdigest()
    assert doc["provenance"]["input_sha256"] == digest
    assert doc["provenance"]["tool_version"] == __version__
    assert doc["provenance"]["seed"] == 11

    metrics = (tmp_path / "metrics.csv").read_text(encoding="utf-8").splitlines()
    assert metrics[0] == "metric,value"
    names = {line.split(",")[0] for line in metrics[1:]}
    assert {"auc_a_empirical", "pauc_gaussian_ruleout", "workload_ruled_out_model"} <= names


def test_analyze_families_flag_echoes_into_report(tmp_path):
    data = write_dataset_csv(tmp_path)
    args = ["analyze", data, "--families", "gaussian,frank,clayton,independence"]
    assert main(args + ["--n-points", "65", "--out-dir", str(tmp_path), "--quiet"]) == 0
    doc = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert [f["family"] for f in doc["families"]] == [
        "gaussian",
        "frank",
        "clayton",
        "independence",
    ]


def test_analyze_report_roundtrips_through_json(tmp_path):
    data = write_dataset_csv(tmp_path)
    args = ["analyze", data, "--b-threshold-fpf", "0.2", "--n-points", "65"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    text = (tmp_path / "report.json").read_text(encoding="utf-8")
    assert dump_json(json.loads(text)) == text


def test_analyze_recovers_diseased_tau_from_large_simulation(tmp_path):
    # simulate -> analyze round trip at the scale where tau is tight
    doc = base_spec()
    del doc["sweeps"]
    spec = write_spec(tmp_path, doc)
    args = ["simulate", spec, "--n", "100000", "--seed", "99", "--format", "csv"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    args = ["analyze", str(tmp_path / "dataset.csv"), "--families", "gaussian", "--n-points", "65"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    report = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    tau_target = 2.0 * math.asin(0.4) / math.pi
    assert report["correlations"]["d"]["kendall"] == pytest.approx(tau_target, abs=0.02)
    assert report["correlations"]["n"]["kendall"] == pytest.approx(tau_target, abs=0.02)


# ---------------------------------------------------------------------------
# simulate behavior


def test_simulate_fixed_seed_reproduces_hash(tmp_path):
    d1, d2 = tmp_path / "one", tmp_path / "two"
    for d in (d1, d2):
        args = ["simulate", SPEC_EXP, "--n", "50", "--seed", "21", "--format", "csv,json"]
        assert main(args + ["--out-dir", str(d), "--quiet"]) == 0
    assert (d1 / "dataset.csv").read_bytes() == (d2 / "dataset.csv").read_bytes()

    meta = json.loads((d1 / "dataset_meta.json").read_text(encoding="utf-8"))
    digest = hashlib.sha256((d1 / "dataset.csv").read_bytes()).hexdigest()
    assert meta["dataset_sha256"] == digest
    assert meta["seed"] == 21
    assert meta["cases"] == 100


def test_simulate_prevalence_label_mix(tmp_path):
    p, n = 0.2, 2000
    args = ["simulate", SPEC_EXP, "--n", str(n), "--seed", "5", "--prevalence", str(p)]
    assert main(args + ["--format", "json", "--out-dir", str(tmp_path), "--quiet"]) == 0
    meta = json.loads((tmp_path / "dataset_meta.json").read_text(encoding="utf-8"))
    total = 2 * n
    se = math.sqrt(total * p * (1.0 - p))
    assert abs(meta["n_diseased"] - total * p) < 3.0 * se


# ---------------------------------------------------------------------------
# svg output


@pytest.mark.parametrize(
    "args, name",
    [
        (["curve", SPEC_EXP, "--kind", "ruleout,rulein", "--format", "svg"], "curves.svg"),
        (
            [
                "theorem-check",
                SPEC_EXP,
                "--which",
                "rulein",
                "--parameter",
                "rho_d",
                "--grid",
                "0.1,0.5",
                "--n-points",
                "64",
                "--format",
                "svg",
            ],
            "theorem_rulein_rho_d.svg",
        ),
        (["simulate", SPEC_EXP, "--n", "40", "--seed", "3", "--format", "svg"], "dataset.svg"),
    ],
    ids=["curve", "theorem", "simulate"],
)
def test_svg_outputs_are_well_formed(tmp_path, args, name):
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    root = ET.fromstring((tmp_path / name).read_text(encoding="utf-8"))
    assert root.tag.endswith("svg")


def test_analyze_svg_is_well_formed(tmp_path):
    data = write_dataset_csv(tmp_path)
    args = [
        "analyze",
        data,
        "--b-threshold-fpf",
        "0.2",
        "--format",
        "svg",
        "--n-points",
        "65",
        "--prevalence",
        "0.05",
    ]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    root = ET.fromstring((tmp_path / "analysis.svg").read_text(encoding="utf-8"))
    assert root.tag.endswith("svg")


# ---------------------------------------------------------------------------
# serialization details


def test_dump_json_writes_17_digit_floats():
    text = dump_json({"x": 0.1, "n": 3, "flag": True, "none": None})
    assert '"x": 0.10000000000000001' in text
    assert '"n": 3' in text
    assert '"flag": true' in text
    assert '"none": null' in text
    assert json.loads(text) == {"x": 0.1, "n": 3, "flag": True, "none": None}


def test_dump_json_floats_roundtrip_exactly():
    values = [1.0 / 3.0, 0.55, 7.0 ** -0.5, 1e-300, 123456.789]
    text = dump_json({"values": values})
    assert json.loads(text)["values"] == values


def test_dump_json_keeps_float_type_on_integers():
    # a float-valued 2.0 must not collapse into the integer 2
    assert json.loads(dump_json({"v": 2.0}))["v"] == 2.0
    assert isinstance(json.loads(dump_json({"v": 2.0}))["v"], float)


def test_dependence_tau_parameterization_inverts(tmp_path):
    args = ["dependence", "gumbel", "--tau", "0.5", "--format", "json"]
    assert main(args + ["--out-dir", str(tmp_path), "--quiet"]) == 0
    doc = json.loads((tmp_path / "dependence.json").read_text(encoding="utf-8"))
    assert doc["value"] == pytest.approx(2.0, abs=1e-9)
    assert doc["tau"] == pytest.approx(0.5, abs=1e-12)


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "rocopula.cli", "--version"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert __version__ in proc.stdout
