import json
from fractions import Fraction as F

import pytest

from core.config import MAX_WORK_ENV
from enums.exit_code import ExitCode
from enums.matrix_kind import MatrixKind
from factories.matrix_factory import MatrixFactory
from matrix.symmetric_matrix import SymmetricMatrix
from main import main
from ui.commands import cmd_check, cmd_gen, cmd_subdivide, cmd_verify_witness
from ui.matrix_file import read_matrix_file, write_matrix_file
from ui.report import REPORT_KEYS


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


@pytest.fixture
def horn_path(tmp_path):
    path = str(tmp_path / "horn.txt")
    write_matrix_file(MatrixFactory.horn_matrix(), path)
    return path


class TestCheck:
    def test_identity(self, write, capsys):
        assert cmd_check(write("i.txt", "2\n1 0\n0 1\n")) == ExitCode.POSITIVE
        assert capsys.readouterr().out.strip() == "copositive"

    def test_refuted_matrix(self, write, capsys):
        assert cmd_check(write("a.txt", "2\n1 -2\n-2 1\n")) == ExitCode.NEGATIVE
        assert capsys.readouterr().out.splitlines() == [
            "not copositive",
            "witness: 2/3 1/3",
            "value: -1/3",
        ]

    def test_strict(self, write, capsys):
        path = write("b.txt", "2\n1 -1\n-1 1\n")
        assert cmd_check(path) == ExitCode.POSITIVE
        assert cmd_check(path, strict=True) == ExitCode.NEGATIVE
        assert "not strictly copositive" in capsys.readouterr().out

    def test_stats(self, write, capsys):
        cmd_check(write("i.txt", "3\n1 0 0\n0 1 0\n0 0 1\n"), stats=True)
        out = capsys.readouterr().out
        assert "matrices processed: 1 (work bound for n=3: 2)" in out
        assert "level sizes: 1" in out

    def test_json(self, write, capsys):
        cmd_check(write("a.txt", "2\n1 -2\n-2 1\n"), as_json=True)
        document = json.loads(capsys.readouterr().out)
        assert tuple(document) == REPORT_KEYS
        assert document["verdict"] == "not copositive"
        assert document["witness"] == ["2/3", "1/3"]
        assert document["value"] == "-1/3"
        assert document["stats"]["matricesProcessed"] == 2

    @pytest.mark.parametrize(
        "text",
        ["2\n1 0\n", "2\n1 2\n0 1\n", "1\n1/0\n", "1\n0.5\n"],
    )
    def test_input_errors(self, write, text, capsys):
        assert cmd_check(write("bad.txt", text)) == ExitCode.INPUT_ERROR
        assert "error: " in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert cmd_check(str(tmp_path / "absent.txt")) == ExitCode.INPUT_ERROR

    def test_accept_decimal_and_symmetrize(self, write):
        decimal = write("d.txt", "1\n0.5\n")
        assert cmd_check(decimal, accept_decimal=True) == ExitCode.POSITIVE
        lopsided = write("s.txt", "2\n1 -2\n0 1\n")
        assert cmd_check(lopsided, symmetrize=True) == ExitCode.POSITIVE

    def test_work_limit(self, horn_path, capsys):
        assert cmd_check(horn_path, max_work=1) == ExitCode.WORK_LIMIT
        assert capsys.readouterr().out.strip() == "work limit exceeded"

    def test_work_limit_from_environment(self, horn_path, monkeypatch):
        monkeypatch.setenv(MAX_WORK_ENV, "1")
        assert cmd_check(horn_path) == ExitCode.WORK_LIMIT

    def test_horn(self, horn_path):
        assert cmd_check(horn_path) == ExitCode.POSITIVE
        assert cmd_check(horn_path, strict=True) == ExitCode.NEGATIVE

    @pytest.mark.parametrize("header", ["²", "٣", "1.0", "-1"])
    def test_non_ascii_or_signed_order(self, write, header, capsys):
        path = write("bad.txt", f"{header}\n1 0\n0 1\n")
        assert cmd_check(path) == ExitCode.INPUT_ERROR
        assert "first line must be a positive order" in capsys.readouterr().err

    def test_unusable_environment_cap(self, horn_path, monkeypatch, capsys):
        monkeypatch.setenv(MAX_WORK_ENV, "lots")
        assert cmd_check(horn_path) == ExitCode.INPUT_ERROR
        assert MAX_WORK_ENV in capsys.readouterr().err

    @pytest.mark.parametrize("cap", [0, -1])
    def test_cap_below_one(self, write, cap, capsys):
        path = write("one.txt", "1\n1\n")
        assert cmd_check(path, max_work=cap) == ExitCode.INPUT_ERROR
        captured = capsys.readouterr()
        assert "work cap must be at least 1" in captured.err
        assert captured.out == ""


class TestSubdivide:
    def test_two_five(self, capsys):
        assert cmd_subdivide("[[1,2],[3,4,5]]_5", stats=True) == ExitCode.POSITIVE
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "{M(1,3), M(2,3), e3, e4, e5}"
        assert lines[6] == "6 simplices"
        assert lines[7] == "expected binomial(4,2) = 6"

    def test_single_simplex(self, capsys):
        cmd_subdivide("[[],[1,2,3]]_3")
        assert capsys.readouterr().out.splitlines() == ["{e1, e2, e3}", "1 simplex"]

    def test_json(self, capsys):
        cmd_subdivide("[[1],[2,3]]_3", as_json=True)
        document = json.loads(capsys.readouterr().out)
        assert document["label"] == "[[1],[2,3]]_3"
        assert document["count"] == 2
        assert document["simplices"][1] == ["M(1,2)", "e3", "M(1,3)"]

    @pytest.mark.parametrize(
        "text",
        ["[[1],[2,3]", "[[1,1],[2]]_3", "[[1],[9]]_3", "[[¹],[2]]_2", "[[1],[2]]_²"],
    )
    def test_bad_labels(self, text):
        assert cmd_subdivide(text) == ExitCode.INPUT_ERROR


class TestVerifyWitness:
    def test_valid(self, write, capsys):
        matrix_path = write("a.txt", "2\n1 -2\n-2 1\n")
        witness_path = write("x.txt", "1/2 1/2\n")
        assert cmd_verify_witness(matrix_path, witness_path) == ExitCode.POSITIVE
        assert capsys.readouterr().out.splitlines() == ["value: -1/2", "valid witness"]

    def test_invalid(self, write, capsys):
        matrix_path = write("a.txt", "2\n1 -2\n-2 1\n")
        witness_path = write("x.txt", "1 1\n")
        assert cmd_verify_witness(matrix_path, witness_path) == ExitCode.NEGATIVE
        assert "invalid witness: coordinates do not sum to 1" in capsys.readouterr().out

    def test_identity_has_positive_value(self, write, capsys):
        matrix_path = write("i.txt", "2\n1 0\n0 1\n")
        witness_path = write("x.txt", "1 0\n")
        assert cmd_verify_witness(matrix_path, witness_path) == ExitCode.NEGATIVE
        assert capsys.readouterr().out.splitlines()[0] == "value: 1"

    def test_negative_entry(self, write, capsys):
        matrix_path = write("a.txt", "2\n1 -2\n-2 1\n")
        witness_path = write("x.txt", "-1 2\n")
        assert cmd_verify_witness(matrix_path, witness_path) == ExitCode.NEGATIVE
        assert "invalid witness: not in simplex" in capsys.readouterr().out

    def test_strict_zero(self, write):
        matrix_path = write("b.txt", "2\n1 -1\n-1 1\n")
        witness_path = write("x.txt", "1/2 1/2\n")
        assert cmd_verify_witness(matrix_path, witness_path) == ExitCode.NEGATIVE
        verdict = cmd_verify_witness(matrix_path, witness_path, strict=True)
        assert verdict == ExitCode.POSITIVE

    def test_length_mismatch(self, write):
        matrix_path = write("a.txt", "2\n1 -2\n-2 1\n")
        witness_path = write("x.txt", "1\n")
        assert cmd_verify_witness(matrix_path, witness_path) == ExitCode.INPUT_ERROR


class TestGen:
    def test_horn(self, tmp_path):
        path = str(tmp_path / "horn.txt")
        assert cmd_gen(MatrixKind.HORN, 5, 0, path) == ExitCode.POSITIVE
        assert read_matrix_file(path) == MatrixFactory.horn_matrix()

    def test_same_seed_same_bytes(self, tmp_path):
        first, second = tmp_path / "1.txt", tmp_path / "2.txt"
        cmd_gen(MatrixKind.RANDOM, 4, 12, str(first))
        cmd_gen(MatrixKind.RANDOM, 4, 12, str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_unwritable(self, tmp_path):
        path = str(tmp_path / "missing" / "a.txt")
        assert cmd_gen(MatrixKind.PSD, 3, 0, path) == ExitCode.INPUT_ERROR

    def test_psd_of_order_one(self, tmp_path):
        seed = next(
            seed
            for seed in range(100)
            if MatrixFactory.gen_psd(1, seed) == SymmetricMatrix([[4]])
        )
        path = tmp_path / "psd.txt"
        assert cmd_gen(MatrixKind.PSD, 1, seed, str(path)) == ExitCode.POSITIVE
        assert path.read_text().split() == ["1", "4"]


class TestMain:
    def test_subdivide(self, tmp_path, capsys):
        config = str(tmp_path / "none.yaml")
        argv = ["--config", config, "subdivide", "[[1],[2,3]]_3"]
        assert main(argv) == ExitCode.POSITIVE
        assert capsys.readouterr().out.splitlines()[-1] == "2 simplices"

    def test_gen_then_check(self, tmp_path):
        config = str(tmp_path / "none.yaml")
        path = str(tmp_path / "psd.txt")
        argv = ["--config", config, "gen", "psd", path, "-n", "4", "--seed", "3"]
        assert main(argv) == 0
        assert main(["--config", config, "check", path, "--json"]) == ExitCode.POSITIVE

    def test_max_work_flag(self, horn_path, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("max_work: 100000\n")
        argv = ["--config", str(config), "check", horn_path, "--max-work", "1"]
        assert main(argv) == 3

    def test_verbose_logs_to_stderr(self, write, tmp_path, capsys):
        config = str(tmp_path / "none.yaml")
        path = write("a.txt", "2\n1 -2\n-2 1\n")
        main(["--config", config, "--verbose", "check", path])
        captured = capsys.readouterr()
        assert "[DEBUG]:" in captured.err
        assert "[DEBUG]:" not in captured.out

    def test_witness_value_is_exact(self, write, capsys, tmp_path):
        config = str(tmp_path / "none.yaml")
        main(["--config", config, "check", write("a.txt", "2\n1 -2\n-2 1\n"), "--json"])
        assert F(json.loads(capsys.readouterr().out)["value"]) == F(-1, 3)

    @pytest.mark.parametrize("cap", ["0", "-1"])
    def test_max_work_below_one(self, write, tmp_path, cap):
        config = str(tmp_path / "none.yaml")
        path = write("one.txt", "1\n1\n")
        assert main(["--config", config, "check", path, "--max-work", cap]) == 2

    def test_superscript_inputs_exit_with_input_error(self, write, tmp_path):
        config = str(tmp_path / "none.yaml")
        path = write("sup.txt", "²\n1 0\n0 1\n")
        assert main(["--config", config, "check", path]) == ExitCode.INPUT_ERROR
        argv = ["--config", config, "subdivide", "[[¹],[2]]_2"]
        assert main(argv) == ExitCode.INPUT_ERROR

    def test_bad_cap_in_config_file(self, horn_path, tmp_path):
        config = tmp_path / "config.yaml"
        config.write_text("max_work: many\n")
        argv = ["--config", str(config), "check", horn_path]
        assert main(argv) == ExitCode.INPUT_ERROR
