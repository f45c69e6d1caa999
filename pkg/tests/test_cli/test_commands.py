"""Tests for the check, classify, generate, knn and rknn subcommands."""

import json
from pathlib import Path

import pytest

from src.cli import ExitCode, main
from src.data import dumps_jsonl, read_jsonl_path
from src.index import Entry

WORKED_EXAMPLE = ["--a", "[[0,0],[2,2]]", "--b", "[[0,0],[0,0]]", "--r", "[[2,10],[2,4]]"]


@pytest.fixture
def example_dataset(tmp_path: Path, example_entries: list[Entry]) -> Path:
    path = tmp_path / "example.jsonl"
    path.write_bytes(dumps_jsonl(example_entries))
    return path


@pytest.fixture
def generated_dataset(tmp_path: Path) -> Path:
    path = tmp_path / "uniform.jsonl"
    code = main(["generate", "--n", "300", "--d", "3", "--seed", "1", "--out", str(path)])
    assert code == ExitCode.OK
    return path


class TestCheck:
    def test_worked_example_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code = main(["check", *WORKED_EXAMPLE, "--p", "2", "--format", "json"])
        report = json.loads(capsys.readouterr().out)
        assert code == ExitCode.OK
        assert report["eq2"]["dominated"] is True
        assert report["eq2"]["margin"] == -4.0
        assert report["eq2"]["per_dim_terms"] == [0.0, -4.0]
        assert report["minmax"]["dominated"] is False
        assert report["minmax"]["max_dist_a_r"] == pytest.approx(104**0.5)
        assert report["minmax"]["min_dist_b_r"] == pytest.approx(8**0.5)

    def test_worked_example_text(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["check", *WORKED_EXAMPLE]) == ExitCode.OK
        out = capsys.readouterr().out
        assert "eq2:    true  margin=-4" in out
        assert "minmax: false" in out

    def test_identical_operands_exit_one(self, capsys: pytest.CaptureFixture[str]) -> None:
        code = main(
            ["check", "--a", "[[0,1]]", "--b", "[[0,1]]", "--r", "[[3,4]]", "--format", "json"]
        )
        assert code == ExitCode.NOT_DOMINATED
        assert json.loads(capsys.readouterr().out)["eq2"]["dominated"] is False

    def test_bad_rectangle_exit_two(self, capsys: pytest.CaptureFixture[str]) -> None:
        flags = ["--a", "[[0,0],[2,2]]", "--b", "[[0,0],[0,0]]", "--r", "[[10,2],[2,4]]"]
        code = main(["check", *flags])
        assert code == ExitCode.INPUT_ERROR
        assert "Dimension 0" in capsys.readouterr().err

    @pytest.mark.parametrize(
        "flags",
        [
            ["--a", "[[0,0]", "--b", "[[0,0]]", "--r", "[[0,1]]"],
            ["--a", "[[0,0]]", "--b", "[[0,0]]", "--r", "[[0,1],[0,1]]"],
            [*WORKED_EXAMPLE, "--p", "0.5"],
            ["--a", "[[-1e200,-1e200]]", "--b", "[[-1e200,-1e200]]", "--r", "[[1e200,1e200]]"],
        ],
    )
    def test_input_errors(self, flags: list[str]) -> None:
        assert main(["check", *flags]) == ExitCode.INPUT_ERROR

    def test_oracle_and_falsifier(self, capsys: pytest.CaptureFixture[str]) -> None:
        code = main(
            ["check", *WORKED_EXAMPLE, "--format", "json", "--oracle",
             "--falsify", "20000", "--seed", "3"]
        )
        report = json.loads(capsys.readouterr().out)
        assert code == ExitCode.OK
        assert report["corner_oracle"] == {"dominated": True, "margin": -4.0, "agrees": True}
        assert report["falsifier"]["counterexample"] is None

    def test_falsifier_witness_on_swapped_example(
        self, capsys: pytest.CaptureFixture[str]
    ) -> None:
        flags = ["--a", "[[0,0],[0,0]]", "--b", "[[0,0],[2,2]]", "--r", "[[2,10],[2,4]]"]
        code = main(["check", *flags, "--format", "json", "--falsify", "1000"])
        report = json.loads(capsys.readouterr().out)
        assert code == ExitCode.NOT_DOMINATED
        witness = report["falsifier"]["counterexample"]
        assert witness["dist_a"] >= witness["dist_b"]

    def test_oracle_skipped_above_cap(self, capsys: pytest.CaptureFixture[str]) -> None:
        flags = ["--a", "[[0,0],[0,0],[0,0]]", "--b", "[[5,5],[5,5],[5,5]]"]
        flags += ["--r", "[[0,1],[0,1],[0,1]]"]
        code = main(["check", *flags, "--format", "json", "--oracle", "--corner-cap", "2"])
        report = json.loads(capsys.readouterr().out)
        assert code == ExitCode.OK
        assert "skipped" in report["corner_oracle"]


class TestClassify:
    @pytest.mark.parametrize(
        ("a", "b", "r", "expected"),
        [
            ("[0,2]", "[0,0]", "[[2,10],[2,4]]", "fully_closer_to_a"),
            ("[0,0]", "[0,2]", "[[2,10],[2,4]]", "fully_closer_to_b"),
            ("[0,0]", "[2,0]", "[[0,2],[0,1]]", "intersecting"),
        ],
    )
    def test_examples(
        self, capsys: pytest.CaptureFixture[str], a: str, b: str, r: str, expected: str
    ) -> None:
        assert main(["classify", "--a", a, "--b", b, "--r", r]) == ExitCode.OK
        assert json.loads(capsys.readouterr().out) == {"class": expected}

    def test_identical_points(self) -> None:
        code = main(["classify", "--a", "[1,1]", "--b", "[1,1]", "--r", "[[0,1],[0,1]]"])
        assert code == ExitCode.INPUT_ERROR


class TestGenerate:
    def test_file_output(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        out = tmp_path / "data.jsonl"
        argv = ["generate", "--n", "1000", "--d", "2", "--seed", "1", "--out", str(out)]
        assert main(argv) == ExitCode.OK
        assert len(out.read_bytes().splitlines()) == 1000
        assert json.loads(capsys.readouterr().out) == {"n": 1000, "d": 2, "out": str(out)}

    def test_reproducible(self, tmp_path: Path) -> None:
        first, second = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        for path in (first, second):
            main(["generate", "--n", "50", "--d", "3", "--seed", "9", "--out", str(path)])
        assert first.read_bytes() == second.read_bytes()

    def test_stdout_output(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["generate", "--n", "3", "--d", "2", "--max-side", "0"]) == ExitCode.OK
        captured = capsys.readouterr()
        assert len(captured.out.splitlines()) == 3
        assert json.loads(captured.err.strip().splitlines()[-1])["out"] == "-"

    def test_point_dataset(self, tmp_path: Path) -> None:
        out = tmp_path / "points.jsonl"
        main(["generate", "--n", "20", "--d", "2", "--max-side", "0", "--out", str(out)])
        assert all(entry.mbr.is_point for entry in read_jsonl_path(out))

    @pytest.mark.parametrize(
        "flags", [["--d", "0"], ["--n", "0"], ["--seed", "-1"], ["--max-side", "5"]]
    )
    def test_invalid_config(self, flags: list[str]) -> None:
        argv = ["generate", "--n", "5", "--d", "2", *flags]
        assert main(argv) == ExitCode.INPUT_ERROR


class TestCandidateCommands:
    def test_knn_worked_example(
        self, example_dataset: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        argv = ["knn", "--data", str(example_dataset), "--query", "[[2,10],[2,4]]", "--k", "1"]
        assert main(argv) == ExitCode.OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["candidates"] == [1]
        assert payload["stats"]["candidates_returned"] == 1

    def test_knn_minmax_keeps_both(
        self, example_dataset: Path, capsys: pytest.CaptureFixture[str]
    ) -> None:
        argv = ["knn", "--data", str(example_dataset), "--query", "[[2,10],[2,4]]"]
        assert main([*argv, "--criterion", "minmax"]) == ExitCode.OK
        assert json.loads(capsys.readouterr().out)["candidates"] == [1, 2]

    @pytest.mark.parametrize("command", ["knn", "rknn"])
    @pytest.mark.parametrize("criterion", ["eq2", "minmax"])
    def test_naive_check_passes(
        self,
        generated_dataset: Path,
        capsys: pytest.CaptureFixture[str],
        command: str,
        criterion: str,
    ) -> None:
        capsys.readouterr()
        query = "[[0.4,0.45],[0.4,0.45],[0.4,0.45]]"
        argv = [command, "--data", str(generated_dataset), "--query", query, "--k", "2"]
        code = main([*argv, "--criterion", criterion, "--naive-check", "--fanout", "4"])
        assert code == ExitCode.OK
        assert json.loads(capsys.readouterr().out)["naive_check"] == "passed"

    def test_missing_dataset(self, tmp_path: Path) -> None:
        argv = ["knn", "--data", str(tmp_path / "nope.jsonl"), "--query", "[[0,1]]"]
        assert main(argv) == ExitCode.INPUT_ERROR

    @pytest.mark.parametrize("command", ["knn", "rknn"])
    def test_non_utf8_dataset(
        self, tmp_path: Path, command: str, capsys: pytest.CaptureFixture[str]
    ) -> None:
        path = tmp_path / "binary.jsonl"
        path.write_bytes(b'{"id":1,"min":[0],"max":[1]}\n\xff\xfe\n')
        argv = [command, "--data", str(path), "--query", "[[0,1]]"]
        assert main(argv) == ExitCode.INPUT_ERROR
        assert "line 2" in capsys.readouterr().err

    def test_query_dimension_mismatch(self, example_dataset: Path) -> None:
        argv = ["rknn", "--data", str(example_dataset), "--query", "[[0,1]]"]
        assert main(argv) == ExitCode.INPUT_ERROR

    def test_k_zero(self, example_dataset: Path) -> None:
        argv = ["rknn", "--data", str(example_dataset), "--query", "[[0,1],[0,1]]", "--k", "0"]
        assert main(argv) == ExitCode.INPUT_ERROR


class TestCheckFalsifierDefaults:
    def test_bare_flag_uses_configured_samples(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        monkeypatch.setenv("SPATIAL_DOM_FALSIFY_SAMPLES", "500")
        assert main(["check", *WORKED_EXAMPLE, "--format", "json", "--falsify"]) == ExitCode.OK
        assert json.loads(capsys.readouterr().out)["falsifier"]["samples"] == 500

    def test_negative_seed_rejected(self) -> None:
        with pytest.raises(SystemExit) as exc_info:
            main(["check", *WORKED_EXAMPLE, "--falsify", "10", "--seed", "-1"])
        assert exc_info.value.code == ExitCode.INPUT_ERROR
