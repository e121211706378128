"""Command line entry points, exercised through main(argv)."""

import json

import pytest

from splitlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_qbinom(capsys):
    code, out, err = run(capsys, "qbinom", "4", "2", "2")
    assert code == 0
    assert out.strip() == "35"


def test_count_splitting_json(capsys):
    code, out, _ = run(capsys, "count-splitting", "--q", "2", "--m", "2", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["brute"] == 20
    assert payload["formula"] == 20
    assert payload["verdict"] == "match"
    assert payload["status"] == "proved"
    assert "seconds" in payload


def test_count_splitting_no_timing_is_deterministic(capsys):
    args = ("count-splitting", "--q", "2", "--m", "2", "--n", "2", "--no-timing")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert "seconds" not in json.loads(first)


def test_count_splitting_text_format(capsys):
    code, out, _ = run(
        capsys, "count-splitting", "--q", "2", "--m", "2", "--n", "2",
        "--format", "text", "--no-timing",
    )
    assert code == 0
    assert "brute=20" in out
    assert "formula=20" in out
    assert "defining_poly=1,0,0,1,1" in out


def test_count_splitting_explicit_poly_and_alpha(capsys):
    code, out, _ = run(
        capsys, "count-splitting", "--q", "2", "--m", "2", "--n", "2",
        "--poly", "1,1,0,0,1", "--alpha", "0,1,0,0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["defining_poly"] == "1,1,0,0,1"
    assert payload["brute"] == 20


def test_count_splitting_pointed(capsys):
    code, out, _ = run(
        capsys, "count-splitting", "--q", "2", "--m", "2", "--n", "2",
        "--pointed", "1,1,0,0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pointed_x"] == "1,1,0,0"
    assert payload["pointed_brute"] == 4
    assert payload["pointed_formula"] == 4
    assert payload["pointed_verdict"] == "match"


def test_count_splitting_formula_only(capsys):
    code, out, _ = run(
        capsys, "count-splitting", "--q", "2", "--m", "3", "--n", "2",
        "--formula-only",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["brute"] is None
    assert payload["formula"] == 576
    assert payload["status"] == "conjectural"


def test_verify_csv(capsys):
    code, out, _ = run(
        capsys, "verify", "--statement", "SSC", "--grid", "2,1,2;2,2,2",
        "--format", "csv", "--no-timing",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "statement,params,brute,formula,status,verdict,seconds"
    assert lines[1] == 'SSC,"2,1,2",3,3,proved,match,'


def test_verify_json_reproducible(capsys):
    args = ("verify", "--statement", "NILPOTENT", "--no-timing")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second
    assert json.loads(first)["summary"]["exit_code"] == 0


def test_verify_every_statement(capsys):
    for sid in ("SSC", "GENBB", "PVRC", "CHAIN"):
        code, out, _ = run(capsys, "verify", "--statement", sid, "--format", "text")
        assert code == 0, sid
        assert "0 mismatch" in out


def test_verify_unknown_statement(capsys):
    code, _, err = run(capsys, "verify", "--statement", "WAT")
    assert code == 3
    assert err.startswith("error:")


def test_verify_out_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "verify", "--statement", "NOBASES", "--out", str(dest), "--no-timing",
    )
    assert code == 0
    payload = json.loads(dest.read_text())
    assert payload["schema"] == "splitlab/1"
    assert payload["summary"]["mismatches"] == 0


def test_verify_ssc_alias(capsys):
    code, out, _ = run(capsys, "verify-ssc", "--format", "text", "--no-timing")
    assert code == 0
    assert out.startswith("SSC:")
    assert "0 mismatch" in out


def test_verify_seed_is_echoed(capsys):
    code, out, _ = run(
        capsys, "verify", "--statement", "NOBASES", "--seed", "5", "--no-timing",
    )
    assert code == 0
    assert json.loads(out)["seed"] == 5


def test_coprime_census_both(capsys):
    code, out, _ = run(
        capsys, "coprime-census", "--q", "2", "--n1", "2", "--n2", "2",
        "--method", "both",
    )
    assert code == 0
    assert out.splitlines() == ["closed 7", "brute 7", "verdict match"]


def test_coprime_census_single_method(capsys):
    code, out, _ = run(
        capsys, "coprime-census", "--q", "3", "--n1", "3", "--n2", "2",
        "--method", "brute",
    )
    assert code == 0
    assert out.strip() == "80"


def test_nilpotent_census(capsys):
    code, out, _ = run(capsys, "nilpotent-census", "3", "2", "--method", "both")
    assert code == 0
    assert out.splitlines() == ["closed 64", "brute 64", "verdict match"]


def test_singer_census(capsys):
    code, out, _ = run(
        capsys, "singer-census", "--q", "2", "--m", "2", "--n", "2",
        "--method", "both",
    )
    assert code == 0
    assert out.splitlines() == ["scan 16", "formula 16", "verdict match"]


def test_lfsr_simulate(capsys):
    code, out, _ = run(
        capsys, "lfsr", "simulate", "--q", "2", "--m", "1", "--n", "2",
        "--C", "1|1", "--init", "0;1", "--steps", "6",
    )
    assert code == 0
    assert out.splitlines() == ["0", "1", "1", "0", "1", "1"]


def test_lfsr_simulate_words(capsys):
    code, out, _ = run(
        capsys, "lfsr", "simulate", "--q", "2", "--m", "2", "--n", "2",
        "--C", "1,0;0,1|0,1;1,0", "--init", "1,0;0,1", "--steps", "3",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1,0"
    assert lines[1] == "0,1"
    assert all("," in line for line in lines)


def test_lfsr_period(capsys):
    code, out, _ = run(
        capsys, "lfsr", "period", "--q", "2", "--m", "1", "--n", "2",
        "--C", "1|1", "--init", "0;1",
    )
    assert code == 0
    assert out.strip() == "preperiod=0 period=3 periodic=true"


def test_lfsr_period_not_purely_periodic(capsys):
    code, out, _ = run(
        capsys, "lfsr", "period", "--q", "2", "--m", "1", "--n", "1",
        "--C", "0", "--init", "1",
    )
    assert code == 0
    assert out.strip() == "preperiod=1 period=1 periodic=false"


def test_fiber_census_single_poly(capsys):
    code, out, _ = run(
        capsys, "fiber-census", "--q", "2", "--m", "2", "--n", "1",
        "--poly", "1,1,1",
    )
    assert code == 0
    assert "poly=1,1,1 scan=2 formula=2 bridge=2 verdict=match" in out


def test_fiber_census_all_irreducible(capsys):
    code, out, _ = run(
        capsys, "fiber-census", "--q", "2", "--m", "2", "--n", "2",
        "--all-irreducible",
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4  # three quartics plus the summary
    assert all("scan=8" in line for line in lines[:3])
    assert lines[3] == "total 24 over 3 polynomials"


def test_fiber_census_all_primitive(capsys):
    code, out, _ = run(
        capsys, "fiber-census", "--q", "2", "--m", "2", "--n", "2",
        "--all-primitive",
    )
    assert code == 0
    assert out.splitlines()[-1] == "total 16 over 2 polynomials"


def test_field_literal_forms(capsys):
    args = ("coprime-census", "--n1", "1", "--n2", "1", "--method", "closed")
    code_a, out_a, _ = run(capsys, *args, "--q", "2^2")
    code_b, out_b, _ = run(capsys, *args, "--q", "4")
    assert code_a == code_b == 0
    assert out_a == out_b == "3\n"


def test_bad_inputs_exit_3(capsys):
    for argv in (
        ("count-splitting", "--q", "6", "--m", "2", "--n", "2"),
        ("count-splitting", "--q", "2", "--m", "2", "--n", "2", "--poly", "1,1"),
        ("verify", "--statement", "SSC", "--grid", "2,2"),
        ("fiber-census", "--q", "2", "--m", "2", "--n", "1", "--poly", "1,1,2"),
        ("lfsr", "period", "--q", "2", "--m", "1", "--n", "2", "--C", "1", "--init", "0;1"),
    ):
        code, _, err = run(capsys, *argv)
        assert code == 3, argv
        assert err.startswith("error:"), argv
