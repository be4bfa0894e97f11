import json
from fractions import Fraction

import pytest

from zetatails.cli import EXIT_CONFIG, EXIT_FAIL, EXIT_OK, _fraction, main
from zetatails.errors import ConfigError


def test_constants_all_pass(capsys):
    assert main(["constants"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert "PASS C_1 = 28.06" in out


def test_constants_json(capsys):
    assert main(["constants", "--family", "thm46", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    rows = {r["name"]: r for r in data["sections"][0]["rows"]}
    assert rows["half_b"]["computed"] == "46.00343" and rows["half_b"]["status"] == "PASS"


def test_verify_failing_cell_exits_one(capsys):
    assert main(["verify", "--sigma", "1", "--t", "10", "--family", "meansquare"]) == EXIT_FAIL
    assert capsys.readouterr().out.startswith("FAIL")


def test_verify_passing_cell(capsys):
    assert main(["verify", "--sigma", "1/2", "--t", "50"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("PASS")


def test_bound_out_file(tmp_path):
    target = tmp_path / "bound.json"
    code = main(["bound", "--family", "thm46", "--sigma", "3/4", "--t", "1000", "--format", "json",
                 "--out", str(target)])
    assert code == EXIT_OK
    data = json.loads(target.read_text())
    assert len(data) == 1 and "notice" not in data[0]


def test_bound_outside_range_is_a_notice(capsys):
    assert main(["bound", "--family", "meansquare", "--sigma", "0.5", "--t", "3"]) == EXIT_OK
    assert "notice: skipped" in capsys.readouterr().out


def test_threshold_single(capsys):
    assert main(["threshold", "--sigma", "0.924"]) == EXIT_OK
    assert "threshold=590" in capsys.readouterr().out


@pytest.mark.parametrize("body", [
    "sigma = 0.5\n",                           # no section header
    "[run]\nsigma = 0.5\nwidth = 3\n",         # unknown field
    "[run]\nfamily = nope\nsigma = 0.5\nt = 50\n",
    "[run]\nprecision = lots\n",
    "[run]\nsigma = half\nt = 50\n",
])
def test_config_errors_exit_two(tmp_path, capsys, body):
    path = tmp_path / "run.ini"
    path.write_text(body)
    assert main(["bound", "--config", str(path)]) == EXIT_CONFIG
    assert "config error" in capsys.readouterr().err


def test_missing_config_file(capsys):
    assert main(["constants", "--config", "/nonexistent/run.ini"]) == EXIT_CONFIG


def test_config_file_drives_run(tmp_path, capsys):
    path = tmp_path / "run.ini"
    path.write_text("[run]\nsigma = 0.75\nt = 10^4\nfamily = thm46\nformat = json\n")
    assert main(["bound", "--config", str(path)]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)[0]


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["bound", "--format", "xml"])
    assert exc.value.code == 2


def test_fraction_parsing():
    assert _fraction("10^37", "t") == 10 ** 37
    assert _fraction("10**3", "t") == 1000
    assert _fraction("3/4", "sigma") == Fraction(3, 4)
    assert _fraction("0.924", "sigma") == Fraction(231, 250)
    with pytest.raises(ConfigError):
        _fraction("x", "t")


def test_optimize_runs(capsys):
    assert main(["optimize", "--rounds", "1"]) == EXIT_OK
    assert "objective" in capsys.readouterr().out
