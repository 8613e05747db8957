import json
import subprocess


def run(cli, *args, env=None):
    return subprocess.run(
        [cli, *args], capture_output=True, text=True, env=env, timeout=120
    )


def test_compute_json_round_trips_byte_identically(cli):
    out = run(cli, "compute", "--n", "3", "--what", "bpoly", "--format", "json")
    assert out.returncode == 0
    line = out.stdout.strip()
    parsed = json.loads(line)
    assert parsed["variable"] == "X"
    assert json.dumps(parsed, separators=(",", ":")) == line


def test_compute_latex_first_polynomial(cli):
    out = run(cli, "compute", "--n", "1", "--what", "bpoly", "--format", "latex")
    assert out.returncode == 0
    assert out.stdout == "X - \\frac{1}{q + 1}\n"


def test_compute_bracket_notation_number(cli):
    out = run(
        cli,
        "compute",
        "--n",
        "3",
        "--what",
        "bnumber",
        "--format",
        "latex",
        "--bracket-notation",
    )
    assert out.returncode == 0
    assert out.stdout == "-\\frac{q^2 - q}{[3]_q [4]_q}\n"


def test_table_csv_header(cli):
    out = run(cli, "table", "--max-n", "2", "--format", "csv")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "n,bpoly,bnumber,beta,limit"
    assert len(lines) == 4


def test_verify_reports_then_summary(cli):
    out = run(
        cli, "verify", "--tags", "COR2", "--max-n", "12", "--format", "json"
    )
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert len(lines) == 14
    for line in lines[:-1]:
        report = json.loads(line)
        assert report["identity"] == "COR2"
        assert report["passed"] is True
    summary = json.loads(lines[-1])
    assert summary["total"] == 13
    assert summary["failed"] == 0


def test_numcheck_passes_at_both_branches(cli):
    for q in ("1/2", "2"):
        out = run(cli, "numcheck", "--q", q)
        assert out.returncode == 0
        lines = out.stdout.splitlines()
        assert len(lines) == 5
        assert json.loads(lines[-1])["total"] == 4


def test_usage_errors_exit_2(cli):
    assert run(cli, "verify", "--tags", "BOGUS").returncode == 2
    assert run(cli, "numcheck", "--q", "1").returncode == 2
    assert run(cli, "compute", "--n", "999", "--what", "bpoly").returncode == 2
    assert run(cli, "compute").returncode == 2


def test_cap_override(cli):
    out = run(
        cli,
        "compute",
        "--n",
        "14",
        "--what",
        "bnumber",
        "--max-n-cap",
        "14",
        "--format",
        "plain",
    )
    assert out.returncode == 0
    assert out.stdout.strip()


def test_help_exits_zero(cli):
    assert run(cli, "--help").returncode == 0
    assert run(cli, "compute", "--help").returncode == 0
