"""CLI tests: exit-code contract, output formats and determinism"""

import io
import json
import sys

import pytest

from family.codec import serialize_family
from generators.random_family import gen_random
from harness.experiment import build_family, build_grid, make_tasks, run_trial
from harness.records import CSV_COLUMNS, CSV_VERSION_LINE
from main import run

TWO_STARS = "1 2\n1 3\n4 5\n4 6\n"
STAR = "0 1\n0 2\n0 3\n"
DISJOINT_TRIPLE = "1 2\n3 4\n5 6\n"
TWO_BLOCKS = "0 1 2\n0 1 3\n0 4 5\n6 7 8\n6 7 9\n6 10 11\n"
HUGE_LABELS = "0 40000000000\n1 40000000001\n"


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGen:
    def test_star(self, capsys):
        code, out, _ = _run(capsys, ["gen", "--kind", "star", "--n", "4", "--s", "2", "--u", "1", "--count", "3"])
        assert code == 0
        assert out == "0 1\n0 2\n0 3\n"

    def test_deterministic(self, capsys):
        argv = ["gen", "--kind", "random", "--n", "6", "--s", "3", "--count", "4", "--seed", "7"]
        first = _run(capsys, argv)
        second = _run(capsys, argv)
        assert first[0] == 0
        assert first == second
        assert len(first[1].splitlines()) == 4

    def test_infeasible_count(self, capsys):
        code, out, err = _run(capsys, ["gen", "--kind", "random", "--n", "3", "--s", "2", "--count", "99"])
        assert code == 2
        assert out == ""
        assert err

    def test_missing_kind_fields(self, capsys):
        code, _, _ = _run(capsys, ["gen", "--kind", "star", "--n", "4"])
        assert code == 2


class TestCheck:
    def test_two_stars(self, capsys, write_family):
        code, out, _ = _run(capsys, ["check", write_family(TWO_STARS), "--k", "3", "--u", "1"])
        assert (code, out) == (0, "INTERSECTING\n")

    def test_disjoint_triple(self, capsys, write_family):
        code, out, _ = _run(capsys, ["check", write_family(DISJOINT_TRIPLE), "--k", "3", "--u", "1"])
        assert (code, out) == (1, "WITNESS: 0 1 2\n")

    def test_malformed(self, capsys, write_family):
        code, _, err = _run(capsys, ["check", write_family("1 2\n3 x\n"), "--k", "3", "--u", "1"])
        assert code == 2
        assert "line 2" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, _ = _run(capsys, ["check", str(tmp_path / "absent.txt"), "--k", "3", "--u", "1"])
        assert code == 2

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(STAR.encode())))
        code, out, _ = _run(capsys, ["check", "-", "--k", "2", "--u", "1"])
        assert (code, out) == (0, "INTERSECTING\n")

    def test_huge_labels(self, capsys, write_family):
        path = write_family(HUGE_LABELS)
        assert _run(capsys, ["check", path, "--k", "3", "--u", "1"])[:2] == (0, "INTERSECTING\n")
        code, out, _ = _run(capsys, ["decompose", path, "--k", "3", "--u", "1", "--ell", "2", "--verify"])
        assert (code, out.splitlines()[0]) == (0, "parts=2 bound=4 verified=true")


class TestDecompose:
    def test_two_stars(self, capsys, write_family):
        code, out, _ = _run(capsys, ["decompose", write_family(TWO_STARS), "--k", "3", "--u", "1", "--ell", "2"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "parts=2 bound=4 verified=true"
        assert lines[1:3] == ["part 0: 0 1", "part 1: 2 3"]

    def test_star(self, capsys, write_family):
        code, out, _ = _run(capsys, ["decompose", write_family(STAR), "--k", "3", "--u", "1", "--ell", "2", "--verify"])
        assert code == 0
        assert out.startswith("parts=1 ")

    def test_not_intersecting(self, capsys, write_family):
        code, out, _ = _run(capsys, ["decompose", write_family(DISJOINT_TRIPLE), "--k", "3", "--u", "1", "--ell", "2"])
        assert code == 1
        assert "WITNESS: 0 1 2" in out

    def test_compact_reports_both_counts(self, capsys, write_family):
        code, out, _ = _run(capsys, [
            "decompose", write_family(TWO_STARS), "--k", "3", "--u", "1", "--ell", "2", "--compact",
        ])
        assert code == 0
        assert out.splitlines()[0] == "parts=2 bound=4 verified=true compacted_from=2"

    def test_json(self, capsys, write_family):
        code, out, _ = _run(capsys, [
            "decompose", write_family(TWO_STARS), "--k", "3", "--u", "1", "--ell", "2", "--format", "json",
        ])
        assert code == 0
        document = json.loads(out)
        assert (document["parts"], document["bound"], document["verified"]) == (2, 4, True)

    def test_bad_params(self, capsys, write_family):
        code, _, _ = _run(capsys, ["decompose", write_family(TWO_STARS), "--k", "3", "--u", "1", "--ell", "3"])
        assert code == 2


class TestOracle:
    def test_two_stars(self, capsys, write_family):
        code, out, _ = _run(capsys, ["oracle", write_family(TWO_STARS), "--ell", "2", "--u", "1"])
        assert code == 0
        assert out.splitlines()[:3] == ["minimum=2", "part 0: 0 1", "part 1: 2 3"]

    def test_star(self, capsys, write_family):
        code, out, _ = _run(capsys, ["oracle", write_family(STAR), "--ell", "2", "--u", "1"])
        assert code == 0
        assert out.startswith("minimum=1\n")

    def test_cap_exceeded(self, capsys, write_family):
        big = serialize_family(gen_random(10, 2, 30, seed=0))
        code, out, _ = _run(capsys, ["oracle", write_family(big), "--ell", "2", "--u", "1"])
        assert code == 3
        assert out == ""


class TestBound:
    @pytest.mark.parametrize("argv,expected", [
        (["--s", "3", "--k", "3", "--u", "1", "--ell", "2"], "6\n"),
        (["--s", "4", "--k", "5", "--u", "2", "--ell", "3"], "12\n"),
    ])
    def test_values(self, capsys, argv, expected):
        assert _run(capsys, ["bound", *argv])[:2] == (0, expected)

    def test_invalid(self, capsys):
        code, _, _ = _run(capsys, ["bound", "--s", "3", "--k", "2", "--u", "1", "--ell", "2"])
        assert code == 2


class TestSearch:
    def test_single_member_universe(self, capsys):
        code, out, _ = _run(capsys, ["search", "--n", "2", "--s", "2", "--k", "3", "--u", "1", "--ell", "2", "--exhaustive"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "best_value=1"
        assert "bound=4" in lines
        assert lines[-1] == "0 1"

    @pytest.mark.parametrize("n,expected", [("4", "best_value=2"), ("5", "best_value=3")])
    def test_pinned(self, capsys, n, expected):
        code, out, _ = _run(capsys, ["search", "--n", n, "--s", "2", "--k", "3", "--u", "1", "--ell", "2", "--exhaustive"])
        assert code == 0
        assert out.splitlines()[0] == expected

    def test_exhaustive_over_limit(self, capsys):
        code, _, _ = _run(capsys, ["search", "--n", "9", "--s", "2", "--k", "3", "--u", "1", "--ell", "2", "--exhaustive"])
        assert code == 3


EXPERIMENT = [
    "experiment", "--s", "2", "--k", "3", "--u", "1", "--ell", "2", "--n", "8",
    "--trials", "100", "--size", "10", "--seed", "5", "--no-timing",
]


class TestExperiment:
    def test_hundred_rows_verified(self, capsys):
        code, out, _ = _run(capsys, EXPERIMENT)
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == CSV_VERSION_LINE
        assert lines[1] == ",".join(CSV_COLUMNS)
        rows = [dict(zip(CSV_COLUMNS, line.split(","))) for line in lines[2:]]
        assert len(rows) == 100
        for row in rows:
            assert row["verified"] == "true"
            assert row["wall_ms"] == ""
            oracle = int(row["oracle_parts"])
            assert oracle <= int(row["constructive_parts"]) <= int(row["bound"])
            assert int(row["kernel_size"]) <= 2

    def test_byte_identical(self, capsys):
        argv = EXPERIMENT[:EXPERIMENT.index("--trials")] + ["--trials", "6", "--size", "10", "--seed", "5", "--no-timing"]
        first = _run(capsys, argv)
        second = _run(capsys, argv)
        assert first[0] == 0
        assert first[1] == second[1]

    def test_workers_do_not_change_output(self, capsys):
        argv = ["experiment", "--s", "2,3", "--k", "3,4", "--n", "9", "--trials", "2", "--no-timing"]
        serial = _run(capsys, argv + ["--workers", "1"])
        parallel = _run(capsys, argv + ["--workers", "2"])
        assert serial[0] == parallel[0] == 0
        assert serial[1] == parallel[1]

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        code, out, _ = _run(capsys, ["experiment", "--s", "2", "--k", "3", "--n", "6", "--trials", "2", "--out", str(path)])
        assert code == 0
        assert out == ""
        assert path.read_text().startswith(CSV_VERSION_LINE + "\n")

    def test_empty_grid(self, capsys):
        code, _, _ = _run(capsys, ["experiment", "--s", "2", "--k", "3", "--ell", "3", "--n", "6"])
        assert code == 2

    def test_oracle_skipped_above_cap(self):
        tasks = make_tasks(build_grid([2], [3], [12]), trials=1, seed=0, size=20, oracle_cap=2)
        record = run_trial(tasks[0])
        assert record.oracle_parts is None
        assert record.to_dict()["oracle_parts"] == ""
        assert record.verified

    def test_random_rows_keep_a_size_floor(self):
        # six points hold at most three pairwise disjoint pairs
        points = build_grid([2], [4], [6], u_values=[1], ell_values=[2])
        random_rows = [t for t in make_tasks(points, trials=8, seed=3, size=12, oracle_cap=12) if t.trial % 2]
        assert len(random_rows) == 4
        for task in random_rows:
            assert 6 <= len(build_family(task)) <= 12


class TestRepeatRuns:
    FILES = {"two_stars": TWO_STARS, "triple": DISJOINT_TRIPLE, "blocks": TWO_BLOCKS}

    @pytest.mark.parametrize("argv", [
        ["gen", "--kind", "random", "--n", "8", "--s", "3", "--count", "6", "--seed", "11"],
        ["gen", "--kind", "star", "--n", "8", "--s", "3", "--u", "1", "--count", "5", "--seed", "11"],
        ["gen", "--kind", "scattered_stars", "--n", "12", "--s", "3", "--u", "1", "--k", "3",
         "--per-star", "4", "--seed", "11"],
        ["gen", "--kind", "sunflower", "--core-size", "2", "--petal-size", "1", "--petals", "5", "--seed", "11"],
        ["gen", "--kind", "complete", "--n", "5", "--s", "2"],
        ["check", "{two_stars}", "--k", "3", "--u", "1"],
        ["check", "{triple}", "--k", "3", "--u", "1"],
        ["decompose", "{blocks}", "--k", "3", "--u", "1", "--ell", "2", "--compact", "--verbose"],
        ["decompose", "{blocks}", "--k", "3", "--u", "1", "--ell", "2", "--compact", "--format", "json"],
        ["oracle", "{blocks}", "--ell", "2", "--u", "1", "--verbose"],
        ["search", "--n", "25", "--s", "1", "--k", "3", "--u", "1", "--ell", "2", "--budget", "300", "--seed", "5"],
        ["search", "--n", "5", "--s", "2", "--k", "3", "--u", "1", "--ell", "2", "--exhaustive"],
        ["experiment", "--s", "2", "--k", "3", "--n", "6", "--trials", "3", "--seed", "4", "--no-timing"],
    ])
    def test_byte_identical(self, capsys, write_family, argv):
        paths = {name: write_family(text, f"{name}.txt") for name, text in self.FILES.items()}
        argv = [arg.format(**paths) for arg in argv]
        first = _run(capsys, argv)
        second = _run(capsys, argv)
        assert first[0] in (0, 1)
        assert first[1]
        assert first == second


class TestUsage:
    def test_no_command(self, capsys):
        assert _run(capsys, [])[0] == 2

    def test_memory_error_is_usage(self, capsys, monkeypatch, write_family):
        def exhausted(args, out):
            raise MemoryError("out of memory")

        monkeypatch.setattr("harness.cli.dispatch", exhausted)
        code, _, err = _run(capsys, ["check", write_family(STAR), "--k", "2", "--u", "1"])
        assert code == 2
        assert "out of memory" in err

    def test_pipeline_round_trip(self, capsys, write_family):
        code, family_text, _ = _run(capsys, [
            "gen", "--kind", "scattered_stars", "--n", "15", "--s", "3", "--u", "2", "--k", "4",
            "--per-star", "3", "--seed", "9",
        ])
        assert code == 0
        path = write_family(family_text)
        assert _run(capsys, ["check", path, "--k", "4", "--u", "2"])[0] == 0
        code, out, _ = _run(capsys, ["decompose", path, "--k", "4", "--u", "2", "--ell", "2", "--verify"])
        assert code == 0
        assert "verified=true" in out.splitlines()[0]
