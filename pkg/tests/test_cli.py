"""End-to-end checks of the command-line surface."""

import csv
import json
import shutil
import subprocess

import pytest

from oscdecay.cli import main


CURVE_B = {
    "modes": {"M": 80.0, "w": [1.0], "Gamma": [1.0], "Omega": [10.0], "a": [0.04]},
    "p": 200.0,
}


def write_config(tmp_path, name, extra):
    cfg = dict(CURVE_B)
    cfg.update(extra)
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


def read_csv(path):
    with open(path) as fh:
        header = fh.readline().rstrip("\n")
        rows = list(csv.reader(fh))
    return header, rows


def test_missing_config_is_io_error(tmp_path):
    code = main(["curve", "--config", str(tmp_path / "absent.json"), "--quiet"])
    assert code == 3


def test_invalid_model_reports_violations(tmp_path):
    cfg = write_config(tmp_path, "bad.json", {
        "modes": {"M": 80.0, "w": [1.0], "Gamma": [1.0], "Omega": [10.0],
                  "a": [0.49]},
    })
    out = tmp_path / "report.json"
    code = main(["validate", "--config", cfg, "--out", str(out), "--quiet"])
    assert code == 2
    report = json.loads(out.read_text())
    assert report["results"]["valid"] is False
    assert any("positivity" in v for v in report["results"]["violations"])


def test_one_point_grid_rejected(tmp_path):
    cfg = write_config(tmp_path, "grid1.json",
                       {"grid": {"t_min": 1.0, "t_max": 2.0, "points": 1}})
    code = main(["curve", "--config", cfg, "--quiet"])
    assert code == 2


def test_boosted_grid_must_start_positive(tmp_path):
    cfg = write_config(tmp_path, "t0.json",
                       {"grid": {"t_min": 0.0, "t_max": 5.0, "points": 11}})
    code = main(["curve", "--which", "boosted", "--config", cfg, "--quiet"])
    assert code == 2


def test_rest_curve_csv_contract(tmp_path):
    cfg = write_config(tmp_path, "rest.json", {
        "p": 0.0, "grid": {"t_min": 0.0, "t_max": 10.0, "points": 21},
    })
    out = tmp_path / "rest.csv"
    code = main(["curve", "--which", "rest", "--config", cfg,
                 "--out", str(out), "--quiet"])
    assert code == 0
    header, rows = read_csv(str(out))
    assert header == "t,gamma_t,value"
    assert len(rows) == 21
    assert float(rows[0][0]) == 0.0
    assert float(rows[0][2]) == 1.0
    # gamma_t column is Gamma_1 * t
    assert float(rows[5][1]) == pytest.approx(float(rows[5][0]), rel=1e-15)


def test_boosted_at_rest_matches_rest_columns(tmp_path):
    grid = {"t_min": 0.1, "t_max": 8.0, "points": 17}
    cfg = write_config(tmp_path, "p0.json", {"p": 0.0, "grid": grid})
    rest_out = tmp_path / "rest.csv"
    boost_out = tmp_path / "boost.csv"
    assert main(["curve", "--which", "rest", "--config", cfg,
                 "--out", str(rest_out), "--quiet"]) == 0
    assert main(["curve", "--which", "boosted", "--config", cfg,
                 "--out", str(boost_out), "--quiet"]) == 0
    header, brows = read_csv(str(boost_out))
    assert header == "t,gamma_t,value,valid"
    _, rrows = read_csv(str(rest_out))
    for rr, br in zip(rrows, brows):
        assert abs(float(br[2]) - float(rr[2])) <= 1e-12 * float(rr[2])


def test_split_curve_adds_up(tmp_path):
    cfg = write_config(tmp_path, "split.json", {
        "p": 0.0, "grid": {"t_min": 0.0, "t_max": 10.0, "points": 26},
    })
    out = tmp_path / "split.csv"
    assert main(["curve", "--which", "split", "--config", cfg,
                 "--out", str(out), "--quiet"]) == 0
    header, rows = read_csv(str(out))
    assert header == "t,gamma_t,value,value_exp,value_osc"
    for row in rows:
        total, exp_part, osc_part = map(float, row[2:5])
        assert total == pytest.approx(exp_part + osc_part, abs=1e-15)


def test_boosted_validity_column(tmp_path):
    cfg = write_config(tmp_path, "bvalid.json", {
        "grid": {"t_min": 2.0, "t_max": 11.0, "points": 19},
    })
    out = tmp_path / "b.csv"
    assert main(["curve", "--which", "boosted", "--config", cfg,
                 "--out", str(out), "--quiet"]) == 0
    _, rows = read_csv(str(out))
    assert all(row[3] == "true" for row in rows)
    assert all(0.0 < float(row[2]) <= 1.0 for row in rows)


def test_curve_determinism_including_parallel(tmp_path):
    cfg = write_config(tmp_path, "det.json", {
        "grid": {"t_min": 2.0, "t_max": 11.0, "points": 61},
    })
    outs = []
    for name, extra in (("a.csv", []), ("b.csv", []), ("c.csv", ["--parallel", "2"])):
        out = tmp_path / name
        assert main(["curve", "--which", "boosted", "--config", cfg,
                     "--out", str(out), "--quiet"] + extra) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_window_report_top_level_keys(tmp_path):
    cfg = write_config(tmp_path, "win.json", {})
    out = tmp_path / "win.json.out"
    assert main(["window", "--config", cfg, "--out", str(out), "--quiet"]) == 0
    report = json.loads(out.read_text())
    assert set(report) == {"params", "window", "constraints", "results",
                           "tool_version"}
    assert report["window"]["admitted"] == [0]
    assert report["window"]["merged"] is True
    per = report["results"]["periods"]
    assert per["Tp"] == pytest.approx(per["T0"] * report["window"]["gamma"])


def test_validate_passes_with_late_window_start(tmp_path):
    cfg = write_config(tmp_path, "vok.json", {"window": {"zeta_min": 0.05}})
    out = tmp_path / "vok.out"
    code = main(["validate", "--config", cfg, "--out", str(out), "--quiet"])
    assert code == 0
    report = json.loads(out.read_text())
    assert report["results"]["valid"] is True
    assert all(c["status"] == "pass" for c in report["constraints"])


def test_validate_fails_at_published_window_start(tmp_path):
    # default zeta_min=1e-4 puts the window start where every graded
    # check fails; the report must name them
    cfg = write_config(tmp_path, "vfail.json", {})
    out = tmp_path / "vfail.out"
    code = main(["validate", "--config", cfg, "--out", str(out), "--quiet"])
    assert code == 2
    report = json.loads(out.read_text())
    names = {c["name"] for c in report["constraints"] if c["status"] == "fail"}
    assert "domain-at-start" in names
    assert "phase-at-start" in names


def test_phi_requires_out(tmp_path):
    cfg = write_config(tmp_path, "phi0.json", {
        "grid": {"t_min": 0.5, "t_max": 20.0, "points": 40},
    })
    assert main(["phi", "--config", cfg, "--quiet"]) == 2


def test_phi_identity_frame_residuals(tmp_path):
    cfg = write_config(tmp_path, "phiid.json", {
        "p": 0.0, "grid": {"t_min": 0.1, "t_max": 10.0, "points": 30},
    })
    out = tmp_path / "phi.csv"
    assert main(["phi", "--config", cfg, "--out", str(out), "--quiet"]) == 0
    header, rows = read_csv(str(out))
    assert header == "t,phi_p,t_over_gamma,residual"
    for row in rows:
        assert abs(float(row[3])) <= 1e-10
    # gamma = 1 admits no window, so the sidecar reports the fit as
    # unavailable instead of inventing one
    sidecar = json.loads((tmp_path / "phi.csv.fit.json").read_text())
    assert "fit_error" in sidecar["results"]


def test_phi_sidecar_fit_slope(tmp_path):
    cfg = write_config(tmp_path, "phifit.json", {
        "grid": {"t_min": 0.5, "t_max": 25.0, "points": 80},
    })
    out = tmp_path / "phib.csv"
    assert main(["phi", "--config", cfg, "--out", str(out), "--quiet"]) == 0
    sidecar = json.loads((tmp_path / "phib.csv.fit.json").read_text())
    fit = sidecar["results"]["fit"]
    assert fit["rel_slope_error"] <= 0.02
    assert fit["expected_slope"] == pytest.approx(1.0 / 2.6925824035672523,
                                                  rel=1e-12)


def test_compare_exit_codes(tmp_path):
    cfg = write_config(tmp_path, "cmp.json", {
        "grid": {"t_min": 2.0, "t_max": 6.0, "points": 5},
        "oracle": {"abs_tol": 1e-7, "rel_tol": 1e-5},
        "compare": {"max_rel_deviation": 1e-2},
    })
    out = tmp_path / "cmp.json.out"
    assert main(["compare", "--config", cfg, "--out", str(out), "--quiet"]) == 0
    report = json.loads(out.read_text())
    assert report["results"]["within_bound"] is True
    assert report["results"]["max_rel_deviation"] <= 1e-2

    tight = write_config(tmp_path, "cmp2.json", {
        "grid": {"t_min": 2.0, "t_max": 6.0, "points": 5},
        "oracle": {"abs_tol": 1e-7, "rel_tol": 1e-5},
        "compare": {"max_rel_deviation": 1e-6},
    })
    assert main(["compare", "--config", tight, "--out",
                 str(tmp_path / "cmp2.out"), "--quiet"]) == 1


def test_console_script_is_installed(tmp_path):
    exe = shutil.which("oscdecay")
    assert exe is not None
    cfg = write_config(tmp_path, "script.json", {
        "p": 0.0, "grid": {"t_min": 0.0, "t_max": 5.0, "points": 6},
    })
    out = tmp_path / "script.csv"
    proc = subprocess.run([exe, "curve", "--which", "rest", "--config", cfg,
                           "--out", str(out), "--quiet"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    header, rows = read_csv(str(out))
    assert header == "t,gamma_t,value"
    assert len(rows) == 6
