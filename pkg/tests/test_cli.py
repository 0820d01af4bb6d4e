"""
Тесты командной строки: вывод, форматы и коды возврата
"""
import sys
import os
import json

import pytest

# Добавляем путь к src в PYTHONPATH
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

import cli
from dto.check_dto import CheckReport, Counterexample, SuiteSizes, SuiteSummary


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


class TestEvalCommand:
    """eval"""

    def test_worked_example(self, capsys):
        code, out = run(capsys, "eval", "--rep", "skein", "--kappa", "2", "--word", "s1*y1",
                        "--elem", "(a1^2*a2^-1,[2 1])")
        assert code == 0
        assert out.out == "c^4*(a1^-1*a2^2,[1 2])\n"

    def test_identity_word(self, capsys):
        code, out = run(capsys, "eval", "--rep", "poly", "--kappa", "2", "--word", "", "--elem", "X1")
        assert code == 0
        assert out.out == "X1\n"

    def test_sigma_on_constant(self, capsys):
        code, out = run(capsys, "eval", "--rep", "poly", "--kappa", "2", "--word", "s1", "--elem", "1")
        assert code == 0
        assert out.out == "s\n"

    def test_substitution_flag(self, capsys):
        code, out = run(capsys, "eval", "--rep", "skein", "--kappa", "2", "--word", "s1",
                        "--elem", "(1,[1 2])", "--d-eq-s")
        assert code == 0
        assert out.out == "s^-1*(1,[2 1])\n"

    def test_json_lines(self, capsys):
        code, out = run(capsys, "eval", "--rep", "poly", "--kappa", "2", "--word", "x1",
                        "--elem", "X2", "--format", "json-lines")
        assert code == 0
        record = json.loads(out.out)
        assert record["record"] == "eval"
        assert record["result"] == "X1*X2"
        assert record["terms"] == 1

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "cases.txt"
        path.write_text("# cases\nelem: X1\nword: s1\nelem: 1\nelem: X1 + X2\n", encoding="utf-8")
        code, out = run(capsys, "eval", "--rep", "poly", "--kappa", "2", "--file", str(path))
        assert code == 0
        assert out.out.splitlines() == ["X1", "s", "s*X1 + s*X2"]

    @pytest.mark.parametrize("word, elem", [("x3", "X1"), ("s1 *", "X1"), ("s1", "X1 +"), ("s1", "Y1")])
    def test_usage_errors(self, capsys, word, elem):
        code, out = run(capsys, "eval", "--rep", "poly", "--kappa", "2", "--word", word, "--elem", elem)
        assert code == 2
        assert out.out == ""
        assert out.err.startswith("error:")

    def test_missing_element(self, capsys):
        code, _ = run(capsys, "eval", "--rep", "poly", "--kappa", "2")
        assert code == 2

    def test_argparse_errors(self):
        with pytest.raises(SystemExit) as info:
            cli.main(["eval", "--rep", "matrix", "--kappa", "2", "--elem", "1"])
        assert info.value.code == 2
        with pytest.raises(SystemExit) as info:
            cli.main(["check", "--kappa", "0"])
        assert info.value.code == 2


class TestCheckCommand:
    """check"""

    def test_example_suite(self, capsys):
        code, out = run(capsys, "check", "--suite", "example", "--kappa", "2")
        assert code == 0
        lines = out.out.splitlines()
        assert lines[0] == "# suite=example kappa=2 seed=0"
        assert lines[1].startswith("# sizes: poly_bound=3")
        assert "failures=0 OK" in lines[2]
        assert lines[-1] == "total: cases=2 failures=0"

    def test_json_lines_schema(self, capsys):
        code, out = run(capsys, "check", "--suite", "push", "--kappa", "3", "--seed", "42",
                        "--push-cases", "30", "--format", "json-lines")
        assert code == 0
        records = [json.loads(line) for line in out.out.splitlines()]
        assert records[0]["record"] == "header"
        assert records[0]["seed"] == 42
        assert records[0]["sizes"]["push_cases"] == 30
        assert records[1] == {
            "record": "report", "label": "push", "kappa": 3, "cases": 30, "failures": 0,
            "seed": 42, "counterexample": None,
        }
        assert records[-1] == {"record": "summary", "cases": 30, "failures": 0, "ok": True}

    def test_output_is_deterministic(self, capsys):
        argv = ("check", "--suite", "subrep", "--kappa", "2", "--seed", "9", "--subrep-words", "5")
        _, first = run(capsys, *argv)
        _, second = run(capsys, *argv)
        assert first.out == second.out

    def test_failure_exit_code(self, capsys, mocker):
        failing = CheckReport(
            label="relations/poly/(9)", kappa=2, cases=3, failures=1,
            counterexample=Counterexample(word="x1", input="X1", lhs="X1", rhs="X2"),
        )
        summary = SuiteSummary(
            suite="relations", kappa=2, seed=0, sizes=SuiteSizes(), reports=[failing],
            cases=3, failures=1, elapsed=0.0,
        )
        mocker.patch("cli.run_suite", return_value=summary)
        code, out = run(capsys, "check", "--suite", "relations", "--kappa", "2")
        assert code == 1
        assert "FAIL" in out.out
        assert "    lhs:   X1" in out.out

    def test_invalid_size(self, capsys):
        code, _ = run(capsys, "check", "--suite", "example", "--kappa", "2", "--word-length", "0")
        assert code == 2


class TestOtherCommands:
    """relations и bench"""

    def test_relations(self, capsys):
        code, out = run(capsys, "relations", "--kappa", "2")
        assert code == 0
        lines = out.out.splitlines()
        assert len(lines) == 5
        assert lines[0] == "(5) x1 * s1 * x1 * s1 = s1 * x1 * s1 * x1"

    def test_bench_json_lines(self, capsys):
        code, out = run(capsys, "bench", "--kappa", "2", "--length", "3", "--words", "2", "--format", "json-lines")
        assert code == 0
        records = [json.loads(line) for line in out.out.splitlines()]
        assert records[0]["record"] == "header"
        assert [r["rep"] for r in records[1:]] == ["poly", "skein", "poly", "skein"]
        assert all(r["output_terms"] >= 1 for r in records[1:])

    def test_bench_rank_one(self, capsys):
        code, out = run(capsys, "bench", "--kappa", "1", "--length", "4", "--words", "1")
        assert code == 0
        assert out.out.startswith("# bench kappa=1")
