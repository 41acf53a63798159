import json

import pytest

from magforms.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tables_command(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0
    assert "72 published table entries reproduced exactly" in out


def test_basis_pretty(capsys, tmp_path):
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--terms", "6", "basis", "G", "1")
    assert code == 0
    assert out.startswith("G_1 = q^(-1/8) - 4*q^(1/8) + 112*q^(5/8)")


def test_basis_json_and_csv(capsys, tmp_path):
    code, out, _ = run(
        capsys, "--cache-dir", str(tmp_path), "--terms", "4", "--format", "json", "basis", "F", "1"
    )
    assert code == 0
    data = json.loads(out)
    assert data["name"] == "F_1"
    assert data["coefficients"][0] == [-1, "1"]
    code, out, _ = run(
        capsys, "--cache-dir", str(tmp_path), "--terms", "4", "--format", "csv", "basis", "F", "1"
    )
    assert code == 0
    assert out.splitlines()[0] == "m,coefficient"


def test_basis_bad_residue_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "--cache-dir", str(tmp_path), "basis", "G", "5")
    assert code == 2
    assert "mod 8" in err
    code, _, _ = run(capsys, "--cache-dir", str(tmp_path), "basis", "F", "11")
    assert code == 2


def test_cache_round_trip_and_extension(capsys, tmp_path):
    code, out1, _ = run(capsys, "--cache-dir", str(tmp_path), "--terms", "5", "basis", "G", "3")
    assert code == 0
    assert (tmp_path / "G3.json").exists()
    # second run hits the cache and reproduces the expansion identically
    code, out2, _ = run(capsys, "--cache-dir", str(tmp_path), "--terms", "5", "basis", "G", "3")
    assert out1 == out2
    # a larger request extends the expansion without changing earlier terms
    code, out3, _ = run(capsys, "--cache-dir", str(tmp_path), "--terms", "9", "basis", "G", "3")
    assert code == 0
    assert out3.startswith(out1.rstrip()[: out1.index("+ O(")])


def test_cache_version_mismatch_rebuilds(capsys, tmp_path):
    run(capsys, "--cache-dir", str(tmp_path), "--terms", "4", "basis", "G", "1")
    path = tmp_path / "G1.json"
    data = json.loads(path.read_text())
    data["format_version"] = 999
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--terms", "4", "basis", "G", "1")
    assert code == 0
    assert json.loads(path.read_text())["format_version"] == 1


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "conjecture1", "--nmax", "29")
    assert code == 0
    report = json.loads(out)
    assert report["pass"] and report["nmax"] == 29


def test_verify_duality_small(capsys):
    code, out, _ = run(capsys, "verify", "duality", "--nmax", "15")
    assert code == 0
    assert json.loads(out)["pass"]


def test_dump_discform(capsys):
    code, out, _ = run(capsys, "dump-discform")
    assert code == 0
    data = json.loads(out)
    assert len(data["orth_group"]) == 32
    assert data["so_group_size"] == 16
    assert len(data["orbits"]["A1"]) == 4
    assert data["varrho2_S"] == ["0", "-1", "0", "0"]


def test_config_validation():
    from magforms.cli import Config

    with pytest.raises(ValueError):
        Config(terms=0, cache_dir=".", output_format="json")


def test_basis_f15_line(capsys, tmp_path):
    code, out, _ = run(capsys, "--cache-dir", str(tmp_path), "--terms", "6", "basis", "F", "15")
    assert code == 0
    assert out.startswith(
        "F_15 = q^(-15/8) + 87*q^(1/8) - 44032*q^(3/8) + 5074944*q^(7/8) - 5031*q^(9/8)"
    )


def test_bad_terms_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "--cache-dir", str(tmp_path), "--terms", "0", "basis", "G", "1")
    assert code == 2
    assert "terms" in err
