"""The solve subcommand as a black box (subprocess level)."""

import subprocess
import sys


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "heatcg", *args],
        capture_output=True,
        text=True,
        timeout=120,
        **kwargs,
    )


def parse_csv(text: str) -> list[tuple[float, float]]:
    lines = text.splitlines()
    assert lines[0] == "x,temperature"
    rows = []
    for line in lines[1:]:
        x_text, t_text = line.split(",")
        rows.append((float(x_text), float(t_text)))
    return rows


def test_defaults_emit_hundred_converged_rows():
    proc = run_cli("solve")
    assert proc.returncode == 0
    rows = parse_csv(proc.stdout)
    assert len(rows) == 100
    assert rows[0][0] == 0.005
    assert "converged=True" in proc.stderr


def test_three_cells_reproduce_worked_profile():
    proc = run_cli("solve", "--cells", "3")
    assert proc.returncode == 0
    rows = parse_csv(proc.stdout)
    expected = [1.0 / 6.0, 0.5, 5.0 / 6.0]
    for (x, t), reference in zip(rows, expected):
        assert abs(x - reference) <= 1e-15
        assert abs(t - reference) <= 1e-9


def test_zero_cells_is_invalid_usage():
    proc = run_cli("solve", "--cells", "0")
    assert proc.returncode == 2
    assert "usage" in proc.stderr.lower()
    assert proc.stdout == ""


def test_negative_gamma_is_invalid_usage():
    proc = run_cli("solve", "--gamma", "-1.0")
    assert proc.returncode == 2


def test_output_file_receives_the_csv(tmp_path):
    target = tmp_path / "profile.csv"
    proc = run_cli("solve", "--out", str(target))
    assert proc.returncode == 0
    assert proc.stdout == ""
    rows = parse_csv(target.read_text(encoding="utf-8"))
    assert len(rows) == 100


def test_crs_storage_flag_is_accepted():
    proc = run_cli("solve", "--cells", "10", "--storage", "crs")
    assert proc.returncode == 0
    assert len(parse_csv(proc.stdout)) == 10


def test_iteration_cap_failure_still_writes_csv():
    proc = run_cli("solve", "--max-iters", "1")
    assert proc.returncode == 1
    assert len(parse_csv(proc.stdout)) == 100
    assert "did not converge" in proc.stderr


def test_identical_options_produce_identical_bytes(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert run_cli("solve", "--out", str(first)).returncode == 0
    assert run_cli("solve", "--out", str(second)).returncode == 0
    assert first.read_bytes() == second.read_bytes()
