"""Command line behavior: outputs, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from lralg.cli import main
from lralg.io import parse_file


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def fixture_file(tmp_path, capsys):
    def write(name: str) -> str:
        out = tmp_path / f"{name}.json"
        assert main(["catalog", name, "-o", str(out)]) == 0
        capsys.readouterr()
        return str(out)

    return write


class TestValidate:
    def test_valid(self, capsys, fixture_file):
        path = fixture_file("heisenberg-half")
        code, out, _ = run(capsys, "validate", path)
        assert code == 0
        assert "valid: yes" in out

    def test_invalid(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(
            json.dumps(
                {
                    "dim": 3,
                    "brackets": [
                        {"i": 1, "j": 2, "v": {"3": "1"}},
                        {"i": 1, "j": 3, "v": {"1": "1"}},
                    ],
                }
            )
        )
        code, out, _ = run(capsys, "validate", str(path))
        assert code == 1
        assert "valid: no" in out
        assert "jacobi at (1, 2, 3)" in out

    def test_json_mirror(self, capsys, fixture_file):
        path = fixture_file("r2")
        code, out, _ = run(capsys, "validate", path, "--json")
        assert code == 0
        data = json.loads(out)
        assert data == {"dim": 2, "valid": True, "violations": []}


class TestAnalyze:
    def test_text(self, capsys, fixture_file):
        path = fixture_file("heisenberg")
        code, out, _ = run(capsys, "analyze", path)
        assert code == 0
        assert "lower central dims: 3, 1, 0" in out
        assert "nilpotent: yes" in out
        assert "solvable: yes (class 2)" in out

    def test_json(self, capsys, fixture_file):
        path = fixture_file("r2")
        code, out, _ = run(capsys, "analyze", path, "--json")
        data = json.loads(out)
        assert data["g_infinity_dim"] == 1
        assert data["nilpotent"] is False
        assert data["two_step_solvable"] is True


class TestCheckLr:
    def test_positive(self, capsys, fixture_file):
        path = fixture_file("heisenberg-half")
        code, out, _ = run(capsys, "check-lr", path, "--require-complete")
        assert code == 0
        assert "complete: yes" in out

    def test_incomplete_fails_requirement(self, capsys, fixture_file):
        path = fixture_file("r2-twogen")
        code, out, _ = run(capsys, "check-lr", path)
        assert code == 0
        code, out, _ = run(capsys, "check-lr", path, "--require-complete")
        assert code == 1

    def test_violations_reported(self, capsys, fixture_file):
        path = fixture_file("r2-right-broken")
        code, out, _ = run(capsys, "check-lr", path)
        assert code == 1
        assert "lr: no" in out
        assert "(xy)z = (xz)y at (1, 2, 2)" in out

    def test_missing_product(self, capsys, fixture_file):
        path = fixture_file("r2")
        code, _, err = run(capsys, "check-lr", path)
        assert code == 2
        assert "missing 'product'" in err

    def test_json(self, capsys, fixture_file):
        path = fixture_file("heisenberg-fullbracket")
        code, out, _ = run(capsys, "check-lr", path, "--json")
        assert code == 1
        data = json.loads(out)
        assert data["lr"] is True and data["compatible"] is False
        assert data["violations"][0]["identity"] == "xy - yx = [x,y]"
        assert data["violations"][0]["indices"] == [1, 2]


class TestComplete:
    def test_r2(self, capsys, fixture_file, tmp_path):
        path = fixture_file("r2-twogen")
        out_path = tmp_path / "done.json"
        code, out, _ = run(capsys, "complete", path, "-o", str(out_path))
        assert code == 0
        assert "g-infinity dim: 1" in out
        assert "containment: yes" in out
        _, p = parse_file(str(out_path))
        assert p.table[0][1][1] == 1

    def test_nilpotent_degenerate_split(self, capsys, fixture_file, tmp_path):
        path = fixture_file("abelian2-idempotent-line")
        out_path = tmp_path / "done.json"
        code, out, _ = run(capsys, "complete", path, "-o", str(out_path))
        assert code == 0
        assert "g-infinity dim: 0" in out
        assert "changed: yes" in out

    def test_already_complete_unchanged(self, capsys, fixture_file, tmp_path):
        path = fixture_file("heisenberg-half")
        out_path = tmp_path / "same.json"
        code, out, _ = run(capsys, "complete", path, "-o", str(out_path))
        assert code == 0
        assert "changed: no" in out

    def test_non_lr_input(self, capsys, fixture_file, tmp_path):
        path = fixture_file("heisenberg-fullbracket")
        code, _, err = run(capsys, "complete", path, "-o", str(tmp_path / "x.json"))
        assert code == 1
        assert "not an LR-structure" in err

    def test_json(self, capsys, fixture_file, tmp_path):
        path = fixture_file("diag11-twogen")
        out_path = tmp_path / "d.json"
        code, out, _ = run(capsys, "complete", path, "-o", str(out_path), "--json")
        data = json.loads(out)
        assert data["g_infinity_dim"] == 2
        assert data["containment"] is True
        assert data["output"] == str(out_path)


class TestTwoGen:
    def test_r2(self, capsys, fixture_file, tmp_path):
        path = fixture_file("r2")
        out_path = tmp_path / "tg.json"
        code, out, _ = run(
            capsys, "two-gen", path, "--x", "1,0", "--y", "0,1", "-o", str(out_path)
        )
        assert code == 0
        assert "complete: no" in out
        _, p = parse_file(str(out_path))
        assert p.table[1][0][1] == -1

    def test_complete_flag(self, capsys, fixture_file, tmp_path):
        path = fixture_file("r2")
        out_path = tmp_path / "tgc.json"
        code, out, _ = run(
            capsys,
            "two-gen", path, "--x", "1,0", "--y", "0,1",
            "-o", str(out_path), "--complete",
        )
        assert code == 0
        assert "completion applied: yes" in out
        _, p = parse_file(str(out_path))
        assert p.table[0][1][1] == 1

    def test_fractional_generators(self, capsys, fixture_file, tmp_path):
        path = fixture_file("r2")
        code, out, _ = run(
            capsys,
            "two-gen", path, "--x", "1/2,0", "--y", "0,-2/3",
            "-o", str(tmp_path / "f.json"),
        )
        assert code == 0

    def test_not_generating(self, capsys, fixture_file, tmp_path):
        path = fixture_file("heisenberg")
        code, _, err = run(
            capsys,
            "two-gen", path, "--x", "1,0,0", "--y", "0,0,1",
            "-o", str(tmp_path / "x.json"),
        )
        assert code == 1
        assert "generate" in err

    def test_bad_vector_length(self, capsys, fixture_file, tmp_path):
        path = fixture_file("r2")
        code, _, err = run(
            capsys,
            "two-gen", path, "--x", "1", "--y", "0,1",
            "-o", str(tmp_path / "x.json"),
        )
        assert code == 2
        assert "--x" in err

    def test_bad_rational(self, capsys, fixture_file, tmp_path):
        path = fixture_file("r2")
        code, _, err = run(
            capsys,
            "two-gen", path, "--x", "1,oops", "--y", "0,1",
            "-o", str(tmp_path / "x.json"),
        )
        assert code == 2


class TestCatalog:
    def test_fixture_with_product(self, capsys, tmp_path):
        out_path = tmp_path / "hh.json"
        code, out, _ = run(capsys, "catalog", "heisenberg-half", "-o", str(out_path))
        assert code == 0
        assert "product: yes" in out
        g, p = parse_file(str(out_path))
        assert g.dim == 3 and p is not None

    def test_family_with_param(self, capsys, tmp_path):
        out_path = tmp_path / "f6.json"
        code, out, _ = run(capsys, "catalog", "filiform", "6", "-o", str(out_path))
        assert code == 0
        assert "product: no" in out
        g, p = parse_file(str(out_path))
        assert g.dim == 6 and p is None

    def test_diag_weights(self, capsys, tmp_path):
        out_path = tmp_path / "d.json"
        code, _, _ = run(capsys, "catalog", "diag-solvable", "1,1/2", "-o", str(out_path))
        assert code == 0
        g, _ = parse_file(str(out_path))
        assert g.basis_names == ("x", "y1", "y2")

    def test_unknown_name(self, capsys, tmp_path):
        code, _, err = run(capsys, "catalog", "nonsense", "-o", str(tmp_path / "x.json"))
        assert code == 2
        assert "unknown name" in err

    def test_param_on_fixture(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "catalog", "r2-twogen", "7", "-o", str(tmp_path / "x.json")
        )
        assert code == 2

    def test_bad_param(self, capsys, tmp_path):
        code, _, err = run(capsys, "catalog", "filiform", "x", "-o", str(tmp_path / "x.json"))
        assert code == 2
        assert "integer" in err


class TestLemma14:
    def test_holds(self, capsys, fixture_file):
        path = fixture_file("free2step3-half")
        code, out, _ = run(capsys, "lemma14", path, "--samples", "10", "--seed", "3")
        assert code == 0
        assert "holds: yes" in out

    def test_fails_on_non_lr(self, capsys, fixture_file):
        path = fixture_file("r2-left-broken")
        code, out, _ = run(capsys, "lemma14", path)
        assert code == 1
        assert "holds: no" in out

    def test_json(self, capsys, fixture_file):
        path = fixture_file("heisenberg-half")
        code, out, _ = run(capsys, "lemma14", path, "--json", "--samples", "5")
        data = json.loads(out)
        assert data["holds"] is True
        assert data["samples"] == 5


class TestContract:
    def test_file_errors_are_code_2(self, capsys):
        code, _, err = run(capsys, "validate", "no-such-file.json")
        assert code == 2
        assert "no-such-file.json" in err

    def test_malformed_json_is_code_2(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{")
        code, _, err = run(capsys, "validate", str(path))
        assert code == 2

    def test_unknown_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ("validate",),
            ("complete", "x.json"),
            ("two-gen", "x.json", "--x", "1,0"),
        ],
    )
    def test_missing_required_args_exit_2(self, argv):
        with pytest.raises(SystemExit) as exc:
            main(list(argv))
        assert exc.value.code == 2

    def test_byte_identical_reruns(self, capsys, fixture_file):
        path = fixture_file("filiform12-shift")
        first = run(capsys, "check-lr", path, "--json")
        second = run(capsys, "check-lr", path, "--json")
        assert first == second

    def test_entry_point_subprocess(self, tmp_path):
        out = subprocess.run(
            [sys.executable, "-m", "lralg", "--version"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        assert out.stdout.startswith("lralg ")

    def test_round_trip_every_fixture_through_cli(self, capsys, tmp_path):
        from lralg.catalog import known_lr_names

        for name in known_lr_names():
            a = tmp_path / f"{name}-a.json"
            b = tmp_path / f"{name}-b.json"
            assert main(["catalog", name, "-o", str(a)]) == 0
            g, p = parse_file(str(a))
            from lralg.io import emit_file

            emit_file(str(b), g, p)
            assert a.read_bytes() == b.read_bytes()
        capsys.readouterr()
