"""Tests for the sixfold command line interface"""

import json


def test_count(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["count", "50"])

    assert result.exit_code == 0, result.output
    assert "P+ = 22, pi+ = 28, P- = 18, pi- = 32, pi = 60" in result.output
    assert "nu = 3, k = 2, r = 2" in result.output


def test_count_smallest_index(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["count", "1"])

    assert result.exit_code == 0
    assert "pi = 2" in result.output


def test_count_json(runner):
    """JSON output re-serializes byte for byte"""
    from sixfold.report.cli import main

    result = runner.invoke(main, ["count", "10", "--format", "json"])

    assert result.exit_code == 0
    parsed = json.loads(result.stdout)
    assert parsed["pi_total"] == 16
    assert json.dumps(parsed, indent=2) + "\n" == result.stdout


def test_count_csv(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["count", "50", "-f", "csv"])

    assert result.exit_code == 0
    header, row = result.stdout.strip().splitlines()
    assert header == "m,nu,k,r,nu0,k0,p_plus,pi_plus,p_minus,pi_minus,pi_total"
    assert row == "50,3,2,2,3,2,22,28,18,32,60"


def test_count_to_file(runner, tmp_path):
    from sixfold.report.cli import main

    target = tmp_path / "count.json"

    result = runner.invoke(main, ["count", "50", "-f", "json", "-o", str(target)])

    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(target.read_text())["pi_minus"] == 32


def test_count_usage_errors(runner):
    from sixfold.report.cli import main

    assert runner.invoke(main, ["count", "0"]).exit_code == 2
    assert runner.invoke(main, ["count", "x"]).exit_code == 2
    assert runner.invoke(main, ["count", "50", "-f", "xml"]).exit_code == 2


def test_count_out_of_range(runner):
    """6m+1 beyond the word range is a usage error"""
    from sixfold.report.cli import main

    result = runner.invoke(main, ["count", str(2**62)])

    assert result.exit_code == 2
    assert "max_value" in result.output


def test_terms_csv(runner):
    """One CSV row per term plus one per level"""
    from sixfold.report.cli import main

    result = runner.invoke(
        main, ["terms", "50", "--side", "plus", "--max-q", "2", "-f", "csv"]
    )

    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0].startswith("factors,d,q,s,residue,sign,count")
    assert len(lines) == 1 + 15 + 2
    assert lines[1].startswith("5,5,1,1,-1,1,10")


def test_terms_minus_first_level(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["terms", "50", "--side", "minus", "--max-q", "1", "-f", "json"])

    assert result.exit_code == 0
    rows = json.loads(result.stdout)["rows"]
    assert [row["count"] for row in rows] == [9, 4, 7, 4]


def test_terms_empty_basis(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["terms", "1"])

    assert result.exit_code == 0
    assert "empty basis" in result.output


def test_verify(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["verify", "50"])

    assert result.exit_code == 0
    assert "m = 50: engine (22, 28, 18, 32, 60)" in result.output
    assert "50/50 match" in result.output


def test_verify_zero_is_a_usage_error(runner):
    from sixfold.report.cli import main

    assert runner.invoke(main, ["verify", "0"]).exit_code == 2


def test_verify_mismatch_exit_code(runner, mocker):
    from sixfold.report.cli import main
    from sixfold.sieve.engine import CountSummary

    mocker.patch(
        "sixfold.report.verify.count_summary",
        side_effect=lambda m: CountSummary(
            m=m, p_plus=0, pi_plus=m, p_minus=0, pi_minus=m, pi_total=2 * m
        ),
    )

    result = runner.invoke(main, ["verify", "10", "--fail-fast"])

    assert result.exit_code == 1
    assert "MISMATCH in p_plus" in result.output


def test_verify_oracle_cap(runner):
    """A sieve above --oracle-cap is refused with exit code 2"""
    from sixfold.report.cli import main

    result = runner.invoke(main, ["verify", "50", "--oracle-cap", "100"])

    assert result.exit_code == 2
    assert "oracle_cap" in result.output


def test_paper_check(runner, tmp_path):
    from sixfold.report.cli import main
    from sixfold.report.errata import render_errata_markdown

    errata = tmp_path / "ERRATA.md"

    result = runner.invoke(main, ["paper-check", "--errata-file", str(errata)])

    assert result.exit_code == 0, result.output
    assert "(2.19): expected 22, got 22, pass" in result.output
    assert "Example 2 level-1: expected (9,4,7,4), got (9,4,7,4), pass" in result.output
    assert "ERRATA (2.15), denominator" in result.output
    assert errata.read_text(encoding="utf-8") == render_errata_markdown()


def test_bench(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["bench", "50", "2", "-f", "json"])

    assert result.exit_code == 0
    rows = json.loads(result.stdout)["rows"]
    assert [row["pi_total"] for row in rows] == [60, 60]


def test_witness(runner):
    from sixfold.report.cli import main

    result = runner.invoke(main, ["witness", "16"])

    assert result.exit_code == 0
    assert "6m-1 = 95: m in M2, witnesses: (5)(19)" in result.output
    assert "6m+1 = 97: m in H1" in result.output


def test_cli_builds_the_session(runner, mocker):
    """Global options and --oracle-cap reach the Sixfold session"""
    from sixfold.core.sixfold import Sixfold
    from sixfold.report.cli import main

    session = mocker.patch("sixfold.report.cli.Sixfold", wraps=Sixfold)

    result = runner.invoke(
        main, ["--loglevel", "debug", "bench", "5", "--oracle-cap", "1000"]
    )

    assert result.exit_code == 0
    session.assert_called_once_with(env=None, loglevel="DEBUG", oracle_cap=1000)
