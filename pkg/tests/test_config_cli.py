"""Configuration documents, sweeps and the command-line interface."""

import pytest
from click.testing import CliRunner

from paramshell import ConfigError, apply_sweep, parse_config
from paramshell.cli import main
from paramshell.reference import reference_run_config
from paramshell.runner import CSV_HEADER

BASELINE = """
[geometry]
radius = 160 mm
length = 800 mm
thickness = 0.45 mm

[material]
e1 = 6.67 GPa
e2 = auto
nu1 = 0.11
nu2 = 0.19
shear_modulus = 3.5 GPa
density = 7800 kg/m3

[rings]
count = 4
area = 5.2 mm2
j_in_plane = 19.9 mm4
j_out_of_plane = 19.9 mm4
j_torsion = 0.48 mm4
modulus = 6.67 GPa
shear_modulus = 3.5 GPa
density = 7800 kg/m3

[loading]
omega = 100 rad/s
w0_target = 0.1 mm
"""


def test_parse_units_convert_to_si():
    run = parse_config(BASELINE)
    assert run.geometry.radius == pytest.approx(0.16)
    assert run.geometry.thickness == pytest.approx(0.45e-3)
    assert run.material.e1 == pytest.approx(6.67e9)
    assert run.ring_spec.area == pytest.approx(5.2e-6)
    assert run.ring_spec.j_in_plane == pytest.approx(19.9e-12)
    assert run.loading.w0_target == pytest.approx(1e-4)


def test_parse_auto_modulus_uses_reciprocity():
    run = parse_config(BASELINE)
    assert run.material.e2 == pytest.approx(0.19 * 6.67e9 / 0.11, rel=1e-12)


def test_parse_rejects_unknown_key():
    bad = BASELINE.replace("nu1 = 0.11", "nu1 = 0.11\nnu3 = 0.2")
    with pytest.raises(ConfigError, match="nu3"):
        parse_config(bad)


def test_parse_rejects_unknown_section():
    with pytest.raises(ConfigError, match="fluid"):
        parse_config(BASELINE + "\n[fluid]\nviscosity = 1.0\n")


def test_parse_rejects_missing_required_key():
    bad = BASELINE.replace("thickness = 0.45 mm\n", "")
    with pytest.raises(ConfigError, match="thickness"):
        parse_config(bad)


def test_parse_rejects_wrong_unit_kind():
    bad = BASELINE.replace("radius = 160 mm", "radius = 160 GPa")
    with pytest.raises(ConfigError, match="GPa"):
        parse_config(bad)


def test_parse_rejects_invalid_sweep_parameter():
    bad = BASELINE + "\n[sweep]\nparameter = winkler_typo\nvalues = 1 2\n"
    with pytest.raises(ConfigError):
        parse_config(bad)


def test_canonical_echo_round_trips():
    run = reference_run_config()
    assert parse_config(run.canonical_text()) == run
    # and a second echo is textually identical (canonical form is a fixpoint)
    again = parse_config(run.canonical_text())
    assert again.canonical_text() == run.canonical_text()


def test_apply_sweep_ring_count():
    run = reference_run_config()
    swept = apply_sweep(run, "ring_count", 10)
    assert swept.ring_spec.count == 10
    assert len(swept.shell_config().rings) == 10


def test_apply_sweep_modulus_ratio_preserves_reciprocity():
    run = reference_run_config()
    swept = apply_sweep(run, "modulus_ratio", 2.0)
    mat = swept.material
    assert mat.e1 / mat.e2 == pytest.approx(2.0, rel=1e-12)
    assert mat.nu1 * mat.e2 == pytest.approx(mat.nu2 * mat.e1, rel=1e-9)


def test_apply_sweep_slopes_and_foundation():
    run = reference_run_config()
    assert apply_sweep(run, "sigma", 0.4).ring_spec.modulus_slope == 0.4
    assert apply_sweep(run, "sigma", 0.4).rod_spec.modulus_slope == 0.4
    assert apply_sweep(run, "tau", -0.2).rod_spec.density_slope == -0.2
    assert apply_sweep(run, "winkler", 5e6).foundation.winkler == 5e6
    assert apply_sweep(run, "pasternak", 2e4).foundation.pasternak == 2e4
    assert apply_sweep(run, "gamma", 0.1).damage.gamma == 0.1
    assert apply_sweep(run, "R_l", 0.3).damage.rheologic == 0.3


def _write(tmp_path, text, name="run.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_cli_solve_reports_minimum(tmp_path):
    runner = CliRunner()
    cfg = _write(tmp_path, BASELINE)
    result = runner.invoke(main, ["solve", "--config", cfg])
    assert result.exit_code == 0
    assert "argmin mode" in result.output
    assert "p1b =" in result.output


def test_cli_solve_bad_config_exits_2(tmp_path):
    runner = CliRunner()
    cfg = _write(tmp_path, BASELINE.replace("nu1 = 0.11", "nu1 = banana"))
    result = runner.invoke(main, ["solve", "--config", cfg])
    assert result.exit_code == 2
    assert "error" in result.output


def test_cli_solve_missing_file_exits_2():
    runner = CliRunner()
    result = runner.invoke(main, ["solve", "--config", "/nonexistent.cfg"])
    assert result.exit_code == 2


def test_cli_solve_non_excitable_exits_3(tmp_path):
    cfg = _write(
        tmp_path, BASELINE + "\n[search]\nn_min = 4\nn_max = 4\nm_values = 2 4\n"
    )
    runner = CliRunner()
    result = runner.invoke(main, ["solve", "--config", cfg])
    assert result.exit_code == 3


def test_cli_sweep_writes_csv_and_plot_script(tmp_path):
    cfg = _write(
        tmp_path,
        BASELINE + "\n[sweep]\nparameter = ring_count\nvalues = 2 4 6\n",
    )
    out = tmp_path / "out.csv"
    plot = tmp_path / "plot.py"
    runner = CliRunner()
    result = runner.invoke(
        main,
        ["sweep", "--config", cfg, "--out", str(out), "--plot-script", str(plot)],
    )
    assert result.exit_code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4
    assert all(line.endswith(",ok") for line in lines[1:])
    assert "matplotlib" in plot.read_text()
    compile(plot.read_text(), str(plot), "exec")  # script must be valid python


def test_cli_sweep_deterministic_bytes(tmp_path):
    cfg = _write(
        tmp_path,
        BASELINE + "\n[sweep]\nparameter = winkler\nvalues = 0 1e6 5e6\n",
    )
    runner = CliRunner()
    outputs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        result = runner.invoke(main, ["sweep", "--config", cfg, "--out", str(out)])
        assert result.exit_code == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_cli_sweep_without_sweep_section_exits_2(tmp_path):
    cfg = _write(tmp_path, BASELINE)
    out = tmp_path / "out.csv"
    runner = CliRunner()
    result = runner.invoke(main, ["sweep", "--config", cfg, "--out", str(out)])
    assert result.exit_code == 2


def test_cli_check_passes():
    runner = CliRunner()
    result = runner.invoke(main, ["check"])
    assert result.exit_code == 0
    assert "overall: PASS" in result.output


def test_cli_check_detects_injected_fault():
    runner = CliRunner()
    result = runner.invoke(main, ["check", "--inject-fault", "b12_sign"])
    assert result.exit_code == 5
    assert "FAIL" in result.output
