import json
import subprocess
import sys
from pathlib import Path

import pytest

from qcenters.cli import main, read_spec_file
from qcenters.presets import PRESET_NAMES, parse_preset, PresetError

GOLDEN_DIR = Path(__file__).parent / "golden"


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text_output(capsys):
    code, out, _err = run_cli(["analyze", "--type", "A1", "--lattice", "sc", "--param", "pi/l:2"], capsys)
    assert code == 0
    assert "FPdim(fiber) = 16" in out
    assert "modular: True" in out


def test_analyze_sl2_odd_counterexample(capsys):
    code, out, _err = run_cli(["analyze", "--type", "A1", "--lattice", "sc", "--param", "2pi/l:3", "--json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["centers"]["verdicts"]["tan_equals_mug"] is False
    assert report["centers"]["witness_mug_not_tan"] == ["3/1"]
    assert report["dims"]["fpdim_fiber"] == 54


def test_analyze_preset_checks_conclusion(capsys):
    code, out, _err = run_cli(["analyze", "--preset", "sl3-odd-5", "--json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["centers"]["x_tan"] == report["centers"]["lQ"] == [[5, 5], [0, 15]]


def test_bad_inputs_exit_one(capsys):
    assert run_cli(["analyze", "--type", "Z9", "--param", "1/2"], capsys)[0] == 1
    assert run_cli(["analyze", "--type", "A1", "--param", "nonsense"], capsys)[0] == 1
    assert run_cli(["analyze", "--preset", "no-such-preset"], capsys)[0] == 1
    assert run_cli(["analyze", "--type", "A1"], capsys)[0] == 1
    assert run_cli(["analyze", "--type", "A1", "--lattice", "[[3]]", "--param", "1/2"], capsys)[0] == 1


def test_rmatrix_command(capsys):
    code, out, _err = run_cli(["rmatrix", "--type", "A1", "--lattice", "sc", "--param", "pi/l:2"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["support_count"] == 2
    coeffs = [t["coeff"] for t in payload["terms"]]
    assert coeffs[0]["coeffs"][0] == "1/1"
    # -2i at conductor 4: coefficient vector (0, -2).
    assert coeffs[1]["conductor"] == 4
    assert coeffs[1]["coeffs"] == ["0/1", "-2/1"]


def test_analyze_with_term_list(capsys):
    code, out, _err = run_cli(
        ["analyze", "--type", "A1", "--lattice", "sc", "--param", "pi/l:2", "--max-terms", "10", "--json"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["rmatrix"]["support_count"] == 2
    assert not report["rmatrix"]["truncated"]
    assert [t["support"] for t in report["rmatrix"]["terms"]] == [[0], [1]]
    # Text rendering of the same report includes the term lines.
    code, out, _err = run_cli(
        ["analyze", "--type", "A1", "--lattice", "sc", "--param", "pi/l:2", "--max-terms", "1"], capsys
    )
    assert code == 0
    assert "braiding support count: 2 (truncated list)" in out


def test_rmatrix_quasi_classical(capsys):
    code, out, _err = run_cli(["rmatrix", "--type", "A2", "--lattice", "sc", "--param", "2pi/l:1"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["support_count"] == 1


def test_verify_twist_command(capsys):
    code, out, _err = run_cli(["verify-twist", "--type", "A2", "--lattice", "sc", "--param", "pi/l:3"], capsys)
    assert code == 0
    assert "FAIL" not in out


def test_dual_command(capsys):
    code, out, _err = run_cli(["dual", "--type", "C2", "--lattice", "sc", "--param", "1/8", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["g_star"]["cartan"] == [[2, -1], [-2, 2]]
    assert payload["g_star"]["dynkin_type"] == "B2"


def test_presets_command(capsys):
    code, out, _err = run_cli(["presets"], capsys)
    assert code == 0
    for name in PRESET_NAMES:
        assert name in out


def test_preset_argument_forms():
    assert parse_preset("sl3-odd-5").c == (pytest.importorskip("fractions").Fraction(1, 5),)
    assert parse_preset("sl2n-odd:n=3,l=3").type_str == "A5"
    assert parse_preset("adjoint-odd-lusztig:type=A2,l=5").lattice == "adjoint"
    assert parse_preset("adjoint-odd-lusztig:A1,l=3").type_str == "A1"  # bare type argument
    with pytest.raises(PresetError):
        parse_preset("sl2n-odd:n=2,l=3")  # even n is outside this family
    with pytest.raises(PresetError):
        parse_preset("sl3-odd:l=4")


def test_spec_file_roundtrip(tmp_path, capsys):
    spec = tmp_path / "input.spec"
    spec.write_text('type = "A2"\nlattice = "sc"\n# comment line\nparam = "1/6"\n')
    parsed = read_spec_file(str(spec))
    assert parsed == {"type": "A2", "lattice": "sc", "param": "1/6"}
    code, out, _err = run_cli(["analyze", "--spec", str(spec), "--json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["input"]["type"] == "A2"

    matrix_spec = tmp_path / "matrix.spec"
    matrix_spec.write_text('type = "A2"\nlattice = [[1, 1], [0, 3]]\nparam = "1/6"\n')
    code, out, _err = run_cli(["analyze", "--spec", str(matrix_spec), "--json"], capsys)
    assert code == 0
    assert json.loads(out)["root_datum"]["char_lattice"] == [[1, 1], [0, 3]]


def test_json_reports_roundtrip_bytes(capsys):
    code, out, _err = run_cli(["analyze", "--preset", "g2-small", "--json"], capsys)
    assert code == 0
    assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_presets_match_golden_files(name, capsys):
    code, out, _err = run_cli(["analyze", "--preset", name, "--json"], capsys)
    assert code == 0
    golden = (GOLDEN_DIR / f"{name}.json").read_text()
    assert out == golden


def test_selftest_smoke(capsys):
    code, out, _err = run_cli(["selftest", "--seed", "7"], capsys)
    assert code == 0
    assert out.count("[pass]") == 5


def test_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "qcenters.cli", "analyze", "--preset", "sl2n-even", "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    report = json.loads(proc.stdout)
    assert report["dims"]["fpdim_fiber"] == 16
