"""
Tests for the command line.

This module contains test cases for:
- count, enumerate, expand, canon and iso output documents
- oracle and verify exit statuses
- Rejection of invalid input with exit status 2
"""

import io
import json

import pytest

from main import main

EXAMPLE_PAIR = {"n_bar": [4, 2], "matrix": [[3, 0], [2, 1]]}
SWAPPED_PAIR = {"n_bar": [2, 4], "matrix": [[1, 2], [0, 3]]}


def _lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


@pytest.fixture
def feed_stdin(monkeypatch):
    def feed(text):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))

    return feed


class TestCount:
    """Test the count table."""

    def test_csv_rows(self, capsys):
        assert main(["count", "--n-range", "2..4", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines == [
            "n,cases,violations,r1,total_pairs,symmetric,bipartite",
            "2,1,1,2,2,0,1",
            "3,6,4,8,10,0,5",
            "4,22,9,19,32,2,17",
        ]

    def test_json_lines(self, capsys):
        assert main(["count", "--n", "4"]) == 0
        assert _lines(capsys.readouterr().out) == [
            {
                "n": 4,
                "cases": 22,
                "violations": 9,
                "r1": 19,
                "total_pairs": 32,
                "symmetric": 2,
                "bipartite": 17,
            }
        ]

    def test_large_counts_stay_exact(self, capsys):
        assert main(["count", "--n", "150", "--format", "csv"]) == 0
        row = capsys.readouterr().out.splitlines()[1].split(",")
        assert int(row[4]) == 2**152 - 150 * 150 - 450 - 4

    def test_by_r(self, capsys):
        assert main(["count", "--n", "4", "--by-r"]) == 0
        rows = _lines(capsys.readouterr().out)
        assert [row["r"] for row in rows] == [1, 2, 3]
        assert sum(row["bipartite"] for row in rows) == 17

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "counts.csv"
        assert main(["count", "--n-range", "2..3", "--format", "csv", "--output", str(target)]) == 0
        assert capsys.readouterr().out == ""
        assert target.read_text().splitlines()[-1] == "3,6,4,8,10,0,5"

    def test_deterministic(self, capsys):
        main(["count", "--n-range", "2..30"])
        first = capsys.readouterr().out
        main(["count", "--n-range", "2..30"])
        assert capsys.readouterr().out == first

    @pytest.mark.parametrize(
        "argv",
        [
            ["count", "--n", "1"],
            ["count"],
            ["count", "--n-range", "5..2"],
            ["count", "--n-range", "two..four"],
        ],
    )
    def test_invalid_ranges(self, argv, capsys):
        assert main(argv) == 2
        assert "error" in capsys.readouterr().err


class TestEnumerate:
    """Test the canonical pair stream."""

    def test_three_players(self, capsys):
        assert main(["enumerate", "--n", "3"]) == 0
        documents = _lines(capsys.readouterr().out)
        assert len(documents) == 5
        assert {"n_bar": [2, 1], "matrix": [[2, 0], [0, 1]]} in documents
        assert all(d["n_bar"] == [2, 1] for d in documents)

    def test_count_matches_table(self, capsys):
        assert main(["enumerate", "--n", "6"]) == 0
        assert len(_lines(capsys.readouterr().out)) == 103

    def test_missing_n_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["enumerate"])
        assert excinfo.value.code == 2


class TestGameDocuments:
    """Test expand, canon and iso."""

    def test_expand(self, capsys, feed_stdin):
        feed_stdin(json.dumps(EXAMPLE_PAIR))
        assert main(["expand"]) == 0
        (game,) = _lines(capsys.readouterr().out)
        assert game["n"] == 6
        assert len(game["min_winning"]) == 16
        assert game["min_winning"][0] == [1, 2, 3]

    def test_expand_from_file(self, capsys, tmp_path):
        source = tmp_path / "pair.json"
        source.write_text(json.dumps(EXAMPLE_PAIR))
        assert main(["expand", str(source)]) == 0
        assert len(_lines(capsys.readouterr().out)) == 1

    def test_canon(self, capsys, feed_stdin):
        feed_stdin(json.dumps({"n": 3, "min_winning": [[1], [2, 3]]}))
        assert main(["canon"]) == 0
        assert _lines(capsys.readouterr().out) == [{"n_bar": [2, 1], "matrix": [[2, 0], [0, 1]]}]

    def test_expand_then_canon_is_fixed_point(self, capsys, feed_stdin):
        feed_stdin(json.dumps(SWAPPED_PAIR))
        assert main(["expand"]) == 0
        expanded = capsys.readouterr().out
        feed_stdin(expanded)
        assert main(["canon"]) == 0
        canonical = capsys.readouterr().out
        assert json.loads(canonical) == EXAMPLE_PAIR

        feed_stdin(canonical)
        main(["expand"])
        feed_stdin(capsys.readouterr().out)
        main(["canon"])
        assert capsys.readouterr().out == canonical

    def test_iso(self, capsys, feed_stdin):
        feed_stdin(
            "\n".join(
                [
                    json.dumps({"n": 3, "min_winning": [[1], [2, 3]]}),
                    json.dumps({"n": 3, "min_winning": [[3], [1, 2]]}),
                ]
            )
        )
        assert main(["iso"]) == 0
        assert capsys.readouterr().out.strip() == "true"

    def test_not_iso(self, capsys, tmp_path):
        first = tmp_path / "dictator.json"
        second = tmp_path / "unanimity.json"
        first.write_text(json.dumps({"n": 2, "min_winning": [[1]]}))
        second.write_text(json.dumps({"n": 2, "min_winning": [[1, 2]]}))
        assert main(["iso", str(first), str(second)]) == 0
        assert capsys.readouterr().out.strip() == "false"

    @pytest.mark.parametrize(
        "command, text",
        [
            ("canon", "{not json"),
            ("canon", json.dumps({"n": 2, "min_winning": [[1], [1, 2]]})),
            ("canon", json.dumps({"n": 2, "min_winning": [[3]]})),
            ("canon", json.dumps({"n": 2, "min_winning": [[1]], "extra": 1})),
            ("expand", json.dumps({"n_bar": [2, 2], "matrix": [[0, 1], [1, 0]]})),
            ("expand", json.dumps({"n_bar": [2, 2], "matrix": [[1, 0], [1]]})),
            ("iso", json.dumps({"n": 2, "min_winning": [[1]]})),
            ("canon", ""),
        ],
    )
    def test_invalid_documents(self, command, text, capsys, feed_stdin):
        feed_stdin(text)
        assert main([command]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error:" in captured.err

    def test_missing_file(self, capsys, tmp_path):
        assert main(["canon", str(tmp_path / "absent.json")]) == 2


class TestOracleAndVerify:
    """Test the brute-force commands."""

    def test_oracle(self, capsys):
        assert main(["oracle", "--n", "3"]) == 0
        (report,) = _lines(capsys.readouterr().out)
        assert report["by_t"] == {"1": 3, "2": 5}
        assert report["labeled_total"] == 18
        assert all(check["pass"] for check in report["checks"])

    def test_oracle_single_player(self, capsys):
        assert main(["oracle", "--n", "1"]) == 0
        assert _lines(capsys.readouterr().out)[0]["by_t"] == {"1": 1}

    def test_oracle_text(self, capsys):
        assert main(["oracle", "--n", "2", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "t=1: 2" in out and "t=2: 1" in out

    @pytest.mark.parametrize(
        "argv",
        [
            ["oracle", "--n", "6"],
            ["oracle", "--n", "6", "--oracle-max-n", "6"],
            ["oracle", "--n", "5", "--oracle-max-n", "4"],
            ["oracle", "--n", "7", "--allow-n6"],
        ],
    )
    def test_oracle_cap(self, argv, capsys):
        assert main(argv) == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["oracle", "--n", "3", "--workers", "0"],
            ["oracle", "--n", "3", "--oracle-max-n", "0"],
            ["verify", "--max-n", "3", "--workers", "0"],
        ],
    )
    def test_zero_flags_are_rejected(self, argv, capsys):
        assert main(argv) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error:" in captured.err

    def test_oracle_cap_from_environment(self, monkeypatch, capsys):
        monkeypatch.setenv("ORACLE_MAX_N", "3")
        assert main(["oracle", "--n", "4"]) == 2

    @pytest.mark.slow
    def test_verify_small(self, capsys):
        assert main(["verify", "--max-n", "3"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert report["max_n"] == 3
        names = {check["name"] for check in report["checks"]}
        assert {
            "formula_identities",
            "pair_counts",
            "xyz_bijection",
            "canonical_idempotence",
            "relabel_invariance",
        } <= names

    @pytest.mark.slow
    def test_verify_acceptance(self, capsys):
        assert main(["verify", "--max-n", "5"]) == 0
        assert json.loads(capsys.readouterr().out)["passed"] is True
