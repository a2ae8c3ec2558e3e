import io
import json
import subprocess
import sys

import pytest

from kpoincare import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_commutator_command(capsys):
    code, out, _ = run(capsys, "comm", "x[0]", "x[1]")
    assert code == 0
    assert out.strip() == "i*q*x[1]"


def test_index_error_is_a_usage_error(capsys):
    code, _, err = run(capsys, "normalize", "x[5]")
    assert code == cli.EXIT_USAGE
    assert "out of range" in err and "column 1" in err


def test_syntax_error_reports_position(capsys):
    code, _, err = run(capsys, "normalize", "x[0] + * x[1]")
    assert code == cli.EXIT_USAGE
    assert "line 1, column 8" in err


def test_unknown_suite_is_a_usage_error(capsys):
    code, _, _ = run(capsys, "verify", "nonsense")
    assert code == cli.EXIT_USAGE


def test_structure_map_commands(capsys):
    assert run(capsys, "counit", "L[2,2]")[1].strip() == "1"
    assert run(capsys, "antipode", "L[0,1]")[1].strip() == "-L[1,0]"
    assert "(x)" in run(capsys, "delta", "x[2]")[1]
    assert run(capsys, "star", "i*x[0]")[1].strip() == "-i*x[0]"
    assert "(x)" in run(capsys, "ad", "x[0]")[1]
    assert "omega" in run(capsys, "d", "x[0]")[1]
    assert "/\\" in run(capsys, "wedge", "d(x[0])", "d(x[1])")[1]
    assert run(capsys, "limit", "comm(x[0], x[1])")[1].strip() == "0"


def test_minkowski_context(capsys):
    code, out, _ = run(capsys, "--algebra", "minkowski", "--n", "3", "d", "y[1]")
    assert code == 0 and out.strip() == "tau^1"
    code, _, err = run(capsys, "--algebra", "minkowski", "normalize", "x[0]")
    assert code == cli.EXIT_USAGE


def test_chi_apply(capsys):
    code, out, _ = run(capsys, "chi", "apply", "chi_0", "x[0]")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "chi", "apply", "chi_{01}", "L[0,1]")
    assert code == 0 and out.strip() in ("1", "-1")
    code, _, _ = run(capsys, "chi", "apply", "psi_3", "x[0]")
    assert code == cli.EXIT_USAGE


def test_latex_output_reparses(capsys):
    code, out, _ = run(capsys, "--format", "latex", "normalize", "(x[0] + i*q*L[1,2])^2")
    assert code == 0
    code, out2, _ = run(capsys, "--latex-input", "normalize", out.strip())
    code, out3, _ = run(capsys, "normalize", "(x[0] + i*q*L[1,2])^2")
    assert out2 == out3


def test_json_output(capsys):
    code, out, _ = run(capsys, "--format", "json", "comm", "x[0]", "x[2]")
    payload = json.loads(out)
    assert payload["result"] == "i*q*x[2]"
    assert payload["command"] == "comm"


def test_precedence_flag_over_env_over_file(tmp_path, monkeypatch, capsys):
    cfg = tmp_path / "k.conf"
    cfg.write_text("algebra = minkowski\nn = 3\nformat = json\n")
    monkeypatch.setenv("KPOINCARE_CONFIG", str(cfg))
    monkeypatch.setenv("KPOINCARE_N", "2")
    args = cli.build_parser().parse_args(["normalize", "y[0]"])
    s = cli.resolve_settings(args)
    assert (s["algebra"], s["n"], s["format"]) == ("minkowski", 2, "json")
    args = cli.build_parser().parse_args(["--n", "4", "normalize", "y[0]"])
    assert cli.resolve_settings(args)["n"] == 4
    args = cli.build_parser().parse_args(["normalize", "--n", "3", "y[0]"])
    assert cli.resolve_settings(args)["n"] == 3


def test_bad_settings(tmp_path, monkeypatch):
    monkeypatch.setenv("KPOINCARE_N", "four")
    with pytest.raises(cli.UsageError):
        cli.resolve_settings(cli.build_parser().parse_args(["normalize", "1"]))
    monkeypatch.delenv("KPOINCARE_N")
    cfg = tmp_path / "bad.conf"
    cfg.write_text("colour = blue\n")
    with pytest.raises(cli.UsageError):
        cli.read_config_file(str(cfg))


def test_repl_session():
    script = io.StringIO("comm(x[0], x[1])\nset algebra minkowski\ncomm y[0] ; y[1]\nx[0]\nquit\n")
    out = io.StringIO()
    settings = {k: d for k, (_, d) in cli.SETTINGS.items()}
    assert cli.repl(settings, stdin=script, out=out) == 0
    lines = out.getvalue().splitlines()
    assert lines[0] == "i*q*x[1]"
    assert lines[1] == "i*q*y[1]"
    assert lines[2].startswith("error:")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "wedge-basis")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    counts = report["results"][0]["details"]
    assert (counts["basis_count"], counts["relation_rank"]) == (110, 115)
    code, _, _ = run(capsys, "verify", "classical-limit")
    assert code == cli.EXIT_FAIL


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "kpoincare.cli", "comm", "x[0]", "x[3]"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "i*q*x[3]"
