"""End-to-end exercises of the command-line interface."""

import json
import math
import subprocess
import sys
from unittest import mock

import pytest

from orlicz import cli
from orlicz.young import BracketError


def _write_json(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def ind8(tmp_path):
    """Indicator of a mass-8 set on an infinite space."""
    return _write_json(tmp_path, "ind8.json",
                       {"total_mass": "inf",
                        "atoms": [{"value": 1.0, "mass": 8.0}]})


@pytest.fixture
def zero_fn(tmp_path):
    return _write_json(tmp_path, "zero.json", {"total_mass": 5.0, "atoms": []})


@pytest.fixture
def unit_ind(tmp_path):
    return _write_json(tmp_path, "unit.json",
                       {"total_mass": "inf",
                        "atoms": [{"value": 1.0, "mass": 1.0}]})


# ---------------------------------------------------------------- norm


def test_norm_power_cube_root(capsys, ind8):
    # modular: 8 * (1/lam)^3 = 1  =>  lam = 2, printed to 12 significant digits
    assert cli.main(["norm", "--family", "power", "--q", "3",
                     "--input", ind8]) == 0
    assert capsys.readouterr().out == "2.00000000000\n"


def test_norm_zero_function(capsys, zero_fn):
    assert cli.main(["norm", "--family", "power", "--q", "2",
                     "--input", zero_fn]) == 0
    assert capsys.readouterr().out == "0\n"


def test_norm_unit_indicator(capsys, unit_ind):
    assert cli.main(["norm", "--family", "power", "--q", "7",
                     "--input", unit_ind]) == 0
    assert capsys.readouterr().out == "1.00000000000\n"


def test_norm_subprocess_bytes(ind8):
    proc = subprocess.run(
        [sys.executable, "-m", "orlicz.cli", "norm", "--family", "power",
         "--q", "3", "--input", ind8],
        capture_output=True)
    assert proc.returncode == 0
    assert proc.stdout == b"2.00000000000\n"
    assert proc.stderr == b""


def test_fmt_sig_rendering():
    assert cli._fmt_sig(0.0) == "0"
    assert cli._fmt_sig(2.0) == "2.00000000000"
    assert cli._fmt_sig(1.0671404006768237) == "1.06714040068"
    assert cli._fmt_sig(123.456) == "123.456000000"


# ---------------------------------------------------------------- exit codes


def test_bad_family_exits_2(capsys, ind8):
    assert cli.main(["norm", "--family", "nosuch", "--q", "2",
                     "--input", ind8]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_bad_json_exits_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert cli.main(["norm", "--family", "power", "--q", "2",
                     "--input", str(path)]) == 2


def test_missing_file_exits_2(tmp_path):
    assert cli.main(["norm", "--family", "power", "--q", "2",
                     "--input", str(tmp_path / "absent.json")]) == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["frobnicate"])
    assert excinfo.value.code == 2


def test_numeric_failure_exits_3(capsys, ind8):
    with mock.patch.object(cli, "luxemburg_norm",
                           side_effect=BracketError("no bracket")):
        assert cli.main(["norm", "--family", "power", "--q", "2",
                         "--input", ind8]) == 3
    assert capsys.readouterr().err.startswith("numeric failure:")


# ---------------------------------------------------------------- sweep


def _sweep_lines(capsys, args):
    assert cli.main(args) == 0
    out = capsys.readouterr().out
    return out, out.strip().split("\n")


def test_sweep_csv_schema(capsys, ind8):
    _, lines = _sweep_lines(capsys, [
        "sweep", "--family", "power", "--input", ind8,
        "--q-min", "1", "--q-max", "4096", "--q-steps", "13"])
    assert lines[0] == "q,norm,target,abs_error"
    assert len(lines) == 14
    qs, norms, targets, errors = zip(*(line.split(",") for line in lines[1:]))
    # doubling schedule snaps to exact integers despite geomspace rounding
    assert list(qs) == [repr(float(2 ** j)) for j in range(13)]
    target = float(targets[0])
    assert set(targets) == {targets[0]}
    assert target == pytest.approx(1.0, abs=1e-9)
    for q, norm, err in zip(qs, norms, errors):
        assert float(norm) == pytest.approx(8.0 ** (1.0 / float(q)), rel=1e-12)
        assert float(err) == abs(float(norm) - target)


def test_sweep_blank_target_without_limit(capsys, ind8):
    # the divergent family gets no target column, only q and norm
    _, lines = _sweep_lines(capsys, [
        "sweep", "--family", "powerlog_e", "--input", ind8,
        "--q-min", "1", "--q-max", "8", "--q-steps", "4"])
    assert lines[0] == "q,norm,target,abs_error"
    assert len(lines) == 5
    for line in lines[1:]:
        assert line.endswith(",,")


def test_sweep_out_file_matches_stdout(capsys, tmp_path, ind8):
    args = ["sweep", "--family", "power", "--input", ind8,
            "--q-min", "1", "--q-max", "16", "--q-steps", "5"]
    out, _ = _sweep_lines(capsys, args)
    out_path = tmp_path / "sweep.csv"
    assert cli.main(args + ["--out", str(out_path)]) == 0
    assert capsys.readouterr().out == ""
    assert out_path.read_text() == out


def test_sweep_deterministic(capsys, ind8):
    args = ["sweep", "--family", "logbump:p=2", "--input", ind8,
            "--q-min", "1", "--q-max", "64", "--q-steps", "7"]
    first, _ = _sweep_lines(capsys, args)
    second, _ = _sweep_lines(capsys, args)
    assert first == second


def test_sweep_phase_locked_schedule(capsys, ind8):
    _, lines = _sweep_lines(capsys, [
        "sweep", "--family", "sinpiecewise", "--input", ind8,
        "--phase-locked", "--q-min", "33", "--q-max", "36"])
    qs = [float(line.split(",")[0]) for line in lines[1:]]
    assert qs == [math.pi / 2.0 + k * math.pi for k in (33, 34, 35, 36)]


def test_sweep_rejects_bad_bounds(capsys, ind8):
    base = ["sweep", "--family", "power", "--input", ind8]
    assert cli.main(base + ["--q-min", "0", "--q-max", "4"]) == 2
    assert cli.main(base + ["--q-min", "8", "--q-max", "4"]) == 2
    assert cli.main(base + ["--q-steps", "0"]) == 2
    assert cli.main(base + ["--phase-locked", "--q-min", "0", "--q-max", "4"]) == 2
    capsys.readouterr()


# ---------------------------------------------------------------- classify


@pytest.mark.parametrize("family,mass,expected", [
    ("power", "inf", "delta-admissible delta=1.000"),
    ("powerlog_e", "inf", "inadmissible: divergent"),
    ("identity", "inf", "undetermined"),
    ("sinpiecewise", "2", "delta-admissible delta=1.000"),
])
def test_classify_verdict_lines(capsys, family, mass, expected):
    assert cli.main(["classify", "--family", family,
                     "--total-mass", mass]) == 0
    assert capsys.readouterr().out == expected + "\n"


def test_classify_oscillating_band(capsys):
    assert cli.main(["classify", "--family", "sinpiecewise"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("alpha-beta-admissible alpha=0.5")
    assert out.endswith("beta=1.000\n")


def test_classify_bad_mass_exits_2(capsys):
    assert cli.main(["classify", "--family", "power",
                     "--total-mass", "nope"]) == 2
    assert capsys.readouterr().err.startswith("error:")


# ---------------------------------------------------------------- growth


def test_growth_clean_report(capsys):
    assert cli.main(["growth", "--family", "power", "--phi", "power",
                     "--q", "1", "--k", "10"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "non-decreasing from q=1 on (0, 10]"
    assert lines[1:] == [f"q={q}: ok" for q in (1, 2, 4, 8, 16, 32)]


def test_growth_violation_report(capsys):
    assert cli.main(["growth", "--family", "logbump", "--phi", "power",
                     "--q", "3", "--k", "10"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0].startswith("violation at q=32: ratio(")
    assert " > ratio(" in lines[0]
    assert all(line.endswith(": violation") for line in lines[1:])
