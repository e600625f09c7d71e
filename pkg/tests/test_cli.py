import json
import math

import pytest

from stablemult import __version__
from stablemult.cli import main


def run(capsys, argv):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_density_csv(capsys):
    code, out, err = run(capsys, ["density", "--alpha", "1", "--x", "0"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "s,x,density"
    val = float(lines[1].split(",")[-1])
    assert val == pytest.approx(1.0 / math.pi, rel=1e-8)
    # 9 significant digits
    assert lines[1].split(",")[-1] == format(val, ".9g")


def test_density_json_meta(capsys):
    code, out, _ = run(capsys, ["density", "--alpha", "1", "--x", "1",
                                "--s", "2", "--format", "json", "--seed", "3"])
    assert code == 0
    doc = json.loads(out)
    assert doc["meta"]["seed"] == 3
    assert doc["meta"]["alpha"] == 1.0
    assert doc["meta"]["version"] == __version__
    assert doc["data"][0]["density"] == pytest.approx(2.0 / (5.0 * math.pi),
                                                      rel=1e-8)


def test_subordinator(capsys):
    code, out, _ = run(capsys, ["subordinator", "--beta", "0.5", "--s", "1"])
    assert code == 0
    val = float(out.splitlines()[1].split(",")[-1])
    assert val == pytest.approx(math.exp(-0.25) / (2.0 * math.sqrt(math.pi)),
                                rel=1e-8)


def test_config_file_defaults_and_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# preset\nalpha = 1.0\ns = 2.0\n")
    # alpha comes from the config (required flag satisfied), s overridden
    code, out, _ = run(capsys, ["density", "--config", str(cfg), "--s", "1.0"])
    assert code == 0
    val = float(out.splitlines()[1].split(",")[-1])
    assert val == pytest.approx(1.0 / math.pi, rel=1e-8)
    # without the override the config value applies
    code, out, _ = run(capsys, ["density", "--config", str(cfg)])
    assert code == 0
    assert out.splitlines()[1].startswith("2,")


def test_config_file_bad_line(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("alpha 1.0\n")
    code, _, err = run(capsys, ["density", "--config", str(cfg)])
    assert code == 2
    assert "config error" in err


def test_apply_t_rejects_alpha_out_of_range(capsys):
    for a in ("1", "1.5", "0"):
        code, _, err = run(capsys, ["apply-t", "--alpha", a, "--grid-n", "64"])
        assert code == 2
        assert "alpha in (0, 1)" in err


def test_usage_errors(capsys):
    code, _, _ = run(capsys, ["no-such-command"])
    assert code == 2
    code, _, _ = run(capsys, ["density"])  # missing required --alpha
    assert code == 2
    code, _, err = run(capsys, ["density", "--alpha", "3", "--x", "0"])
    assert code == 2
    assert "usage error" in err


def test_output_file(capsys, tmp_path):
    dest = tmp_path / "rows.csv"
    code, out, _ = run(capsys, ["symbol", "--alpha", "0.5", "--xi-points", "4",
                                "--output", str(dest)])
    assert code == 0
    assert out == ""
    lines = dest.read_text().splitlines()
    assert lines[0] == "xi,m"
    assert len(lines) == 5


def test_simulate_deterministic(capsys):
    argv = ["simulate", "--alpha", "1", "--seed", "11", "--z-adapt", "6"]
    code1, out1, _ = run(capsys, argv)
    code2, out2, _ = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    header = out1.splitlines()[0].split(",")
    assert header[:3] == ["exit_step", "exit_time", "exit_position"]


def test_extend_json_rows(capsys):
    code, out, _ = run(capsys, ["extend", "--alpha", "1", "--t", "1",
                                "--grid-n", "64", "--grid-length", "32",
                                "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["data"]) == 64
    mid = doc["data"][32]
    assert mid["x"] == 0.0
    assert 0.0 < mid["extension"] < mid["f"] + 1e-12


def test_green_row(capsys):
    code, out, _ = run(capsys, ["green", "--alpha", "1", "--n-paths", "500",
                                "--z-adapt", "6", "--max-steps", "100000",
                                "--seed", "4"])
    assert code == 0
    header, row = out.splitlines()
    vals = dict(zip(header.split(","), row.split(",")))
    ref = 1.0 - math.exp(-1.0)
    assert float(vals["reference"]) == pytest.approx(ref, rel=1e-9)
    assert abs(float(vals["mean"]) - ref) < 6.0 * float(vals["std_error"])
