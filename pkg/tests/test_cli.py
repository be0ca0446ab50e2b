import json
import subprocess
import sys

from quasicyclic.cli import main
from quasicyclic.textio import bundled_path, load_code


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field_check(capsys, tmp_path):
    code, out, _ = run(capsys, "field-check", "--format", "json", bundled_path("gf256.field"))
    assert code == 0 and json.loads(out)["multiplicative_order"] == 255
    bad = tmp_path / "bad.field"
    bad.write_text("2 1 4\n1 1 1 1 1\n")
    code, out, _ = run(capsys, "field-check", str(bad))
    assert code == 1 and "NotPrimitive" in out
    code, _, err = run(capsys, "field-check", str(tmp_path / "missing"))
    assert code == 2 and err.startswith("error:")


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "8", "3", "1", "2")
    assert code == 0 and out.strip() == "A_2(8,4,3) <= 1542"


def test_subpoly_and_orbit(capsys, tmp_path):
    code, out, _ = run(capsys, "subpoly", "elements: 0 52 71 109 135 141 144")
    assert code == 0 and out.startswith("lin q-coeffs:")
    code, out, _ = run(capsys, "orbit", "--format", "json", "--m", "5", "--report-dir", str(tmp_path),
                       "elements: 0 52 71 109 135 141 144")
    data = json.loads(out)
    assert code == 0 and data["length"] == 51 and len(data["representatives"]) == 51
    assert (tmp_path / "orbit.csv").exists() and (tmp_path / "orbit.png").exists()


def test_verify_example(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "@example", "--report-dir", str(tmp_path))
    assert code == 0
    assert "bound: 1275 <= A_2(8,4,3) <= 1542" in out and out.strip().endswith("PASS")
    rows = (tmp_path / "distances.csv").read_text().splitlines()
    assert rows == ["distance,pairs", "4,151725", "6,660450"]
    assert (tmp_path / "distances.png").stat().st_size > 0
    code, out, _ = run(capsys, "verify", "@example", "--literal")
    assert code == 1 and "FAIL" in out


def test_construct_and_reverify(capsys, tmp_path):
    path = tmp_path / "c4.code"
    code, out, _ = run(capsys, "construct", "c4", "--n", "7", "--k", "3", "--s", "2", "-o", str(path))
    assert code == 0
    C = load_code(str(path))
    assert len(C) == 127
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and "PASS" in out


def test_construct_t4(capsys):
    code, out, _ = run(capsys, "construct", "t4", "--n", "3", "--k", "2", "--s", "1", "--m", "7",
                       "--coeff-exp", "1", "--format", "json", "-o", "/dev/null")
    data = json.loads(out)
    assert code == 0 and data["size"] == 27 and data["disjoint"]
    code, _, err = run(capsys, "construct", "t4", "--n", "3", "--k", "2", "--s", "1", "--m", "7")
    assert code == 2 and "equivalent" in err


def test_trinomials_cli(capsys, tmp_path):
    code, out, _ = run(capsys, "trinomials", "--format", "json", "--report-dir", str(tmp_path))
    rows = {tuple(r[:3]) for r in json.loads(out)["rows"]}
    assert code == 0 and (7, 6, 127) in rows and (4, 3, 30) in rows
    assert (tmp_path / "trinomials.csv").exists()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quasicyclic", "bound", "8", "3", "1", "2", "--format", "json"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["bound"] == 1542
