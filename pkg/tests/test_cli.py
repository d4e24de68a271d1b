import io
import json
import math

import pytest

from ehrhard import Grid, Profile, gauss_perimeter, phi, psi
from ehrhard.cli import main
from ehrhard.jsonio import columnar_from_json, columnar_to_json, profile_to_json
from ehrhard.profiles import from_profile

INF = math.inf


def nonrigid_profile():
    return Profile(Grid((-INF, -1.0, 1.0, INF)), {(0,): 0.3, (1,): 1.0, (2,): 0.6})


def rigid_profile():
    return Profile(Grid((-INF, 0.0, INF)), {(0,): 0.3, (1,): 0.7})


def write_profile(tmp_path, p, name="profile.json"):
    path = tmp_path / name
    path.write_text(json.dumps(profile_to_json(p)), encoding="utf-8")
    return str(path)


def write_columnar(tmp_path, e, name="set.json"):
    path = tmp_path / name
    path.write_text(json.dumps(columnar_to_json(e)), encoding="utf-8")
    return str(path)


class TestScalars:
    def test_phi(self, capsys):
        assert main(["phi", "1.0"]) == 0
        assert float(capsys.readouterr().out) == phi(1.0)

    def test_psi(self, capsys):
        assert main(["psi", "0.25"]) == 0
        assert float(capsys.readouterr().out) == psi(0.25)

    def test_psi_domain_error(self, capsys):
        assert main(["psi", "1.5"]) == 1
        assert "error" in capsys.readouterr().err

    def test_missing_argument_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["phi"])
        assert info.value.code == 1

    def test_unknown_command_is_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 1

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["--version"])
        assert info.value.code == 0


class TestSetCommands:
    def test_perimeter(self, tmp_path, capsys):
        e = from_profile(nonrigid_profile())
        infile = write_columnar(tmp_path, e)
        assert main(["perimeter", "--in", infile]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["total_gauss"] == gauss_perimeter(e).total_gauss

    def test_symmetrize_modes(self, tmp_path, capsys):
        e = from_profile(rigid_profile())
        infile = write_columnar(tmp_path, e)
        for mode in ("ehrhard", "steiner"):
            assert main(["symmetrize", "--mode", mode, "--in", infile]) == 0
            out = json.loads(capsys.readouterr().out)
            columnar_from_json(out)

    def test_stdin_input(self, capsys, monkeypatch):
        e = from_profile(rigid_profile())
        monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(columnar_to_json(e))))
        assert main(["perimeter"]) == 0
        assert "total_gauss" in json.loads(capsys.readouterr().out)

    def test_bad_json_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        assert main(["perimeter", "--in", str(path)]) == 1
        assert "invalid JSON" in capsys.readouterr().err

    def test_missing_file_is_input_error(self, tmp_path, capsys):
        assert main(["perimeter", "--in", str(tmp_path / "nope.json")]) == 1
        assert "cannot read" in capsys.readouterr().err


class TestRigidity:
    def test_verdict_to_file(self, tmp_path):
        infile = write_profile(tmp_path, nonrigid_profile())
        out = tmp_path / "report.json"
        assert main(["rigidity", "--in", infile, "--out", str(out)]) == 0
        doc = json.loads(out.read_text(encoding="utf-8"))
        assert doc["verdict"] == "NonRigid"
        assert doc["certificate"]["minus_cells"] == [[0]]

    def test_methods_agree(self, tmp_path, capsys):
        infile = write_profile(tmp_path, rigid_profile())
        verdicts = []
        for method in ("theorem", "planar", "search"):
            assert main(["rigidity", "--method", method, "--in", infile]) == 0
            verdicts.append(json.loads(capsys.readouterr().out)["verdict"])
        assert verdicts == ["Rigid", "Rigid", "Rigid"]

    def test_counterexample_of_nonrigid(self, tmp_path, capsys):
        infile = write_profile(tmp_path, nonrigid_profile())
        assert main(["counterexample", "--in", infile]) == 0
        e = columnar_from_json(json.loads(capsys.readouterr().out))
        assert not e.is_empty

    def test_counterexample_of_rigid_fails(self, tmp_path, capsys):
        infile = write_profile(tmp_path, rigid_profile())
        assert main(["counterexample", "--in", infile]) == 2
        assert "rigid" in capsys.readouterr().err

    def test_connectedness(self, tmp_path, capsys):
        infile = write_profile(tmp_path, nonrigid_profile())
        assert main(["connectedness", "--in", infile]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["disconnects"] is True
        assert doc["witness"]["minus_cells"] == [[0]]
        assert main(["connectedness", "--kind", "steiner", "--in", infile]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["disconnects"] is False


class TestCatalogCommands:
    def test_list_entries(self, capsys):
        assert main(["catalog"]) == 0
        names = capsys.readouterr().out.split()
        assert "fig2-top" in names and len(names) == 9

    def test_run_entry_with_artifacts(self, tmp_path, capsys):
        outdir = tmp_path / "artifacts"
        assert main(["catalog", "fig2-top", "--out", str(outdir)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines and all(line.startswith("[ok  ]") for line in lines)
        assert (outdir / "fig2-top.json").exists()
        assert (outdir / "fig2-top.csv").exists()
        assert (outdir / "fig2-top.svg").exists()
        doc = json.loads((outdir / "fig2-top.json").read_text(encoding="utf-8"))
        assert doc["passed"] is True

    def test_unknown_entry(self, capsys):
        assert main(["catalog", "nope"]) == 1
        assert "unknown catalog entry" in capsys.readouterr().err

    def test_fractional_resolution(self, capsys):
        assert main(["catalog", "mistico", "--resolution", "1/16"]) == 0
        capsys.readouterr()

    def test_sweep(self, tmp_path, capsys):
        out = tmp_path / "rows.csv"
        code = main(
            ["sweep", "--family", "unannotated", "--out", str(out)]
        )
        assert code == 0
        captured = capsys.readouterr()
        assert "[ok  ] sweep unannotated" in captured.err
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "h,p_gamma_f,p_gamma_e,excess"
        assert len(lines) == 5

    def test_sweep_unknown_family(self, capsys):
        assert main(["sweep", "--family", "nope"]) == 1
        assert "error" in capsys.readouterr().err


class TestRender:
    def test_profile_input(self, tmp_path, capsys):
        infile = write_profile(tmp_path, nonrigid_profile())
        assert main(["render", "--in", infile]) == 0
        assert "<svg" in capsys.readouterr().out

    def test_columnar_input(self, tmp_path, capsys):
        infile = write_columnar(tmp_path, from_profile(rigid_profile()))
        assert main(["render", "--in", infile]) == 0
        assert "<svg" in capsys.readouterr().out

    def test_unrecognized_payload(self, tmp_path, capsys):
        path = tmp_path / "other.json"
        path.write_text('{"x": 1}', encoding="utf-8")
        assert main(["render", "--in", str(path)]) == 1
        assert "expected a profile" in capsys.readouterr().err
