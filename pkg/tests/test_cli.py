"""Command-line driver: verbs, exit codes, report formats, config overrides."""
from __future__ import annotations

import json
import math

import pytest

from conesine import fixture_cone
from conesine.cli import EXIT_DOMAIN, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_complex


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def eval_record(out: str) -> dict:
    # eval prints a human line then one JSON record line
    return json.loads(out.splitlines()[1])


# ---------------------------------------------------------------------------
# argument parsing


def test_parse_complex_forms():
    assert parse_complex("0.5-0.25i") == 0.5 - 0.25j
    assert parse_complex("1.3i") == 1.3j
    assert parse_complex("2") == 2.0
    assert parse_complex("-0.7+0.2j") == -0.7 + 0.2j


def test_bad_complex_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["eval", "s1", "--z", "wat", "--omega", "1"])
    assert exc.value.code == EXIT_USAGE


def test_missing_argument_is_usage_error(capsys):
    rc, _, err = run(capsys, "eval", "s1", "--omega", "1")
    assert rc == EXIT_USAGE
    assert "--z" in err


def test_unknown_eval_target_is_usage_error(capsys):
    rc, _, err = run(capsys, "eval", "blorp", "--z", "0.5")
    assert rc == EXIT_USAGE
    assert "unknown eval target" in err


# ---------------------------------------------------------------------------
# eval


def test_eval_single_sine_closed_form(capsys):
    rc, out, _ = run(capsys, "eval", "s1", "--z", "0.25", "--omega", "1")
    assert rc == EXIT_OK
    value = eval_record(out)["value"]
    assert math.isclose(value[0], math.sqrt(2), rel_tol=1e-12)
    assert abs(value[1]) < 1e-12


def test_eval_theta_vanishes_at_origin(capsys):
    rc, out, _ = run(capsys, "eval", "theta0", "--z", "0", "--tau", "i")
    assert rc == EXIT_OK
    value = eval_record(out)["value"]
    assert abs(complex(*value)) < 1e-14


def test_eval_negative_complex_values(capsys):
    rc, out, _ = run(capsys, "eval", "s2", "--z", "-0.3+0.1i",
                     "--omega", "-0.9+0.12i", "--omega", "1.1+0.07i")
    assert rc == EXIT_OK
    rec = eval_record(out)
    assert rec["z"] == [-0.3, 0.1]


def test_eval_standard_cone_matches_plain_sine(capsys):
    args = ["--z", "0.31-0.17i", "--omega", "0.8+0.11i", "--omega", "0.9-0.13i"]
    rc1, out1, _ = run(capsys, "eval", "s2c", "--cone", "standard-2", *args)
    rc2, out2, _ = run(capsys, "eval", "s2", *args)
    assert rc1 == rc2 == EXIT_OK
    v1 = complex(*eval_record(out1)["value"])
    v2 = complex(*eval_record(out2)["value"])
    assert abs(v1 - v2) / abs(v2) < 1e-10


def test_eval_cone_routes_agree(capsys):
    args = ["g1c", "--cone", "wedge21", "--z", "0.31-0.17i",
            "--omega", "0.09-0.60i", "--omega", "-0.04+0.65i"]
    rc1, out1, _ = run(capsys, "eval", *args, "--route", "direct")
    rc2, out2, _ = run(capsys, "eval", *args, "--route", "factorized")
    assert rc1 == rc2 == EXIT_OK
    v1 = complex(*eval_record(out1)["value"])
    v2 = complex(*eval_record(out2)["value"])
    assert abs(v1 - v2) / abs(v2) < 1e-8
    assert eval_record(out1)["route"] == "direct"


def test_eval_gamma_variant_recorded(capsys):
    rc, out, _ = run(capsys, "eval", "g2c", "--cone", "cone-over-square",
                     "--z", "0.31-0.17i", "--omega", "0.06+0.95i",
                     "--omega", "-0.04-0.28i", "--omega", "0.05-0.33i",
                     "--route", "factorized", "--variant", "alternative")
    assert rc == EXIT_OK
    assert eval_record(out)["variant"] == "alternative"


def test_eval_wrong_cone_dimension_is_domain_error(capsys):
    rc, _, err = run(capsys, "eval", "s2c", "--cone", "cone-over-square",
                     "--z", "0.3", "--omega", "1+0.1i", "--omega", "1-0.1i")
    assert rc == EXIT_DOMAIN
    assert "2d cone" in err


def test_eval_qfac_needs_periods(capsys):
    rc, _, err = run(capsys, "eval", "qfac", "--z", "0.3+0.2i")
    assert rc == EXIT_USAGE
    assert "period" in err


# ---------------------------------------------------------------------------
# verify


def test_verify_pass(capsys, tmp_path):
    out_file = tmp_path / "rep.json"
    rc, out, _ = run(capsys, "verify", "s2c-factorization", "--cone", "wedge21",
                     "--samples", "3", "--seed", "7", "--output", str(out_file))
    assert rc == EXIT_OK
    assert "status           PASS" in out
    doc = json.loads(out_file.read_text())
    assert doc["status"] == "PASS"
    assert doc["theorem"] == "s2c-factorization"
    assert len(doc["points"]) == 3


def test_verify_skip_is_success(capsys):
    rc, out, _ = run(capsys, "verify", "s3c-factorization", "--cone", "wedge21",
                     "--samples", "2")
    assert rc == EXIT_OK
    assert "status           SKIP" in out
    assert "skip reason" in out


def test_verify_fail_exit_code(capsys):
    rc, out, _ = run(capsys, "verify", "s2c-factorization", "--cone", "wedge21",
                     "--samples", "2", "--tol", "1e-300")
    assert rc == EXIT_FAIL
    assert "status           FAIL" in out


def test_verify_unknown_theorem_is_usage_error(capsys):
    rc, _, err = run(capsys, "verify", "nonsense", "--cone", "wedge21")
    assert rc == EXIT_USAGE
    assert "unknown theorem id" in err


def test_verify_cone_from_json_file(capsys, tmp_path):
    path = tmp_path / "wedge.json"
    path.write_text(json.dumps(fixture_cone("wedge21").to_json_dict()))
    rc, out, _ = run(capsys, "verify", "s2c-factorization", "--cone", str(path),
                     "--samples", "2")
    assert rc == EXIT_OK
    assert "status           PASS" in out


def test_malformed_cone_file_is_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    rc, _, err = run(capsys, "verify", "s2c-factorization", "--cone", str(path))
    assert rc == EXIT_USAGE
    assert "not valid JSON" in err


def test_invalid_cone_data_is_domain_error(capsys, tmp_path):
    path = tmp_path / "nonprimitive.json"
    path.write_text(json.dumps({"dim": 2, "normals": [[0, 2], [1, 0]]}))
    rc, _, err = run(capsys, "verify", "s2c-factorization", "--cone", str(path))
    assert rc == EXIT_DOMAIN


def test_unknown_fixture_name_is_usage_error(capsys):
    rc, _, err = run(capsys, "verify", "s2c-factorization", "--cone", "no-such-cone")
    assert rc == EXIT_USAGE
    assert "neither a bundled cone name" in err


# ---------------------------------------------------------------------------
# report


def test_report_json_deterministic(capsys):
    args = ["report", "--cone", "wedge21", "--theorem", "s2c-factorization",
            "--theorem", "g1c-factorization", "--samples", "2", "--seed", "11"]
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == EXIT_OK
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["kind"] == "verification-report"
    assert doc["counts"] == {"PASS": 2, "SKIP": 0, "FAIL": 0}
    assert doc["status"] == "PASS"
    assert {item["theorem"] for item in doc["items"]} == {
        "s2c-factorization", "g1c-factorization"
    }
    assert all(len(c["digest"]) == 64 for c in doc["cones"])


def test_report_mixed_dimensions_count_skips(capsys):
    rc, out, _ = run(capsys, "report", "--cone", "wedge21", "--cone", "cone-over-square",
                     "--theorem", "s2c-factorization", "--samples", "2")
    assert rc == EXIT_OK
    doc = json.loads(out)
    assert doc["counts"] == {"PASS": 1, "SKIP": 1, "FAIL": 0}


def test_report_csv_format(capsys):
    rc, out, _ = run(capsys, "report", "--cone", "wedge21", "--cone", "standard-3",
                     "--theorem", "s2c-factorization", "--format", "csv",
                     "--samples", "2")
    assert rc == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "theorem,cone,status,samples,seed,tolerance,max_residual,detail"
    assert lines[1].startswith("s2c-factorization,wedge21,PASS,2,0,")
    assert lines[2].startswith("s2c-factorization,standard-3,SKIP,")


def test_report_output_file_and_summary(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    rc, out, _ = run(capsys, "report", "--cone", "wedge21",
                     "--theorem", "s2c-factorization", "--samples", "2",
                     "--output", str(out_file))
    assert rc == EXIT_OK
    assert "overall          PASS" in out
    assert f"report written   {out_file}" in out
    doc = json.loads(out_file.read_text())
    assert doc["status"] == "PASS"


def test_report_unknown_theorem_is_usage_error(capsys):
    rc, _, err = run(capsys, "report", "--theorem", "bogus", "--cone", "wedge21")
    assert rc == EXIT_USAGE
    assert "unknown theorem id" in err


# ---------------------------------------------------------------------------
# subdivide / check-cone


def test_subdivide_output(capsys):
    rc, out, _ = run(capsys, "subdivide", "0,1", "-5,3")
    assert rc == EXIT_OK
    assert "chain                  (0,1) (-1,1) (-3,2) (-5,3)" in out
    assert "adjacent determinants  1 1 1" in out
    assert "interior lines         (-1,1) (-3,2)" in out


def test_subdivide_trivial_wedge(capsys):
    rc, out, _ = run(capsys, "subdivide", "0,1", "-1,0")
    assert rc == EXIT_OK
    assert "chain                  (0,1) (-1,0)" in out
    assert "interior lines         (none)" in out


def test_check_cone_square(capsys):
    rc, out, _ = run(capsys, "check-cone", "cone-over-square")
    assert rc == EXIT_OK
    assert "good        yes" in out
    assert "gorenstein  xi = (1,0,0)" in out
    assert out.count("edge(") == 4


def test_check_cone_not_good(capsys, tmp_path):
    path = tmp_path / "notgood.json"
    path.write_text(json.dumps({"dim": 3, "normals": [[1, 0, 0], [1, 2, 0], [0, 0, 1]]}))
    rc, out, _ = run(capsys, "check-cone", str(path))
    assert rc == EXIT_OK
    assert "good        no" in out
    assert "face transforms unavailable" in out


# ---------------------------------------------------------------------------
# configuration plumbing


def test_env_config_override(capsys, monkeypatch, tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({"max_terms": 50000}))
    monkeypatch.setenv("CONESINE_CONFIG", str(cfg_file))
    rc, out, _ = run(capsys, "eval", "s1", "--z", "0.25", "--omega", "1")
    assert rc == EXIT_OK
    assert eval_record(out)["config"]["max_terms"] == 50000


def test_env_config_unknown_key_is_usage_error(capsys, monkeypatch, tmp_path):
    cfg_file = tmp_path / "cfg.json"
    cfg_file.write_text(json.dumps({"bogus": 1}))
    monkeypatch.setenv("CONESINE_CONFIG", str(cfg_file))
    rc, _, err = run(capsys, "eval", "s1", "--z", "0.25", "--omega", "1")
    assert rc == EXIT_USAGE
    assert "unknown config keys" in err


def test_env_config_missing_file_is_usage_error(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("CONESINE_CONFIG", str(tmp_path / "absent.json"))
    rc, _, err = run(capsys, "eval", "s1", "--z", "0.25", "--omega", "1")
    assert rc == EXIT_USAGE
    assert "cannot read file" in err


def test_tail_tol_flag_threads_into_config(capsys):
    rc, out, _ = run(capsys, "eval", "s2", "--z", "0.3+0.1i",
                     "--omega", "0.8+0.11i", "--omega", "0.9-0.13i",
                     "--tail-tol", "1e-14")
    assert rc == EXIT_OK
    assert eval_record(out)["config"]["tail_tol"] == 1e-14
