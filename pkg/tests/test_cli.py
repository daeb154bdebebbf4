import io

import pytest

from src.api.analyze import SOLVERS
from src.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, main
from src.models.graph import MAX_DENSE_NODES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def analyze_lines(text):
    return dict(line.split(" ", 1) for line in text.splitlines())


class TestGen:
    def test_tree_file(self, tmp_path, capsys):
        out = tmp_path / "tree.txt"
        code, stdout, _ = run(capsys, "gen", "--model", "tree", "--r", "3", "--k", "4", "--out", str(out))
        assert code == EXIT_OK
        assert stdout == ""
        lines = out.read_text().splitlines()
        assert lines[0].startswith("# generated model=tree r=3 k=4")
        assert lines[1] == "n 40"
        assert len(lines) == 2 + 39

    def test_structured_to_stdout(self, capsys):
        code, stdout, _ = run(capsys, "gen", "--model", "structured", "--n", "16")
        assert code == EXIT_OK
        body = [line for line in stdout.splitlines() if not line.startswith("#")]
        assert body[0] == "n 16"
        assert len(body) - 1 == 56

    def test_ws_repeat_is_byte_identical(self, tmp_path, capsys):
        paths = [tmp_path / "a.txt", tmp_path / "b.txt"]
        for path in paths:
            args = ["gen", "--model", "ws", "--n", "20", "--kdeg", "4", "--p", "0", "--seed", "1"]
            assert run(capsys, *args, "--out", str(path))[0] == EXIT_OK
        assert paths[0].read_bytes() == paths[1].read_bytes()
        assert "seed=1" in paths[0].read_text().splitlines()[0]

    def test_missing_model_flags(self, capsys):
        code, _, err = run(capsys, "gen", "--model", "tree", "--r", "3")
        assert code == EXIT_USAGE
        assert "error:" in err

    def test_tree_beyond_dense_limit(self, tmp_path, capsys):
        out = tmp_path / "big.txt"
        code, _, err = run(capsys, "gen", "--model", "tree", "--r", "2", "--k", "13", "--out", str(out))
        assert code == EXIT_USAGE
        assert "limit" in err
        assert not out.exists()

    def test_unknown_model(self, capsys):
        assert run(capsys, "gen", "--model", "scale-free")[0] == EXIT_USAGE

    def test_unwritable_output(self, tmp_path, capsys):
        blocker = tmp_path / "file"
        blocker.write_text("x")
        code, _, _ = run(capsys, "gen", "--model", "tree", "--r", "2", "--k", "3",
                         "--out", str(blocker / "nested.txt"))
        assert code == EXIT_IO


class TestAnalyze:
    def test_binary_tree(self, tmp_path, capsys):
        path = tmp_path / "tree.txt"
        run(capsys, "gen", "--model", "tree", "--r", "2", "--k", "4", "--out", str(path))
        code, stdout, _ = run(capsys, "analyze", "--in", str(path))
        assert code == EXIT_OK
        fields = analyze_lines(stdout)
        assert fields == {
            "n": "15",
            "edges": "14",
            "connected": "true",
            "reachable_pairs": "210",
            "sum": "736",
            "paper_norm": "3.75510",
            "ordered": "3.50476",
            "diameter": "6",
        }

    def test_structured(self, tmp_path, capsys):
        path = tmp_path / "s16.txt"
        run(capsys, "gen", "--model", "structured", "--n", "16", "--out", str(path))
        _, stdout, _ = run(capsys, "analyze", "--in", str(path))
        assert analyze_lines(stdout)["paper_norm"] == "1.63556"

    def test_disconnected_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("n 2\n"))
        code, stdout, _ = run(capsys, "analyze", "--stdin")
        assert code == EXIT_OK
        fields = analyze_lines(stdout)
        assert fields["connected"] == "false"
        assert fields["reachable_pairs"] == "0"

    def test_emit_matrix(self, tmp_path, capsys):
        edges = tmp_path / "p3.txt"
        edges.write_text("n 3\n0 1\n1 2\n")
        matrix = tmp_path / "dist.csv"
        code, _, _ = run(capsys, "analyze", "--in", str(edges), "--emit-matrix", str(matrix))
        assert code == EXIT_OK
        assert matrix.read_text() == "n,3\n0,1,2\n1,0,1\n2,1,0\n"

    def test_emit_trace(self, tmp_path, capsys):
        edges = tmp_path / "p3.txt"
        edges.write_text("n 3\n0 1\n1 2\n")
        trace = tmp_path / "trace.csv"
        code, _, _ = run(capsys, "analyze", "--in", str(edges), "--emit-trace", str(trace))
        assert code == EXIT_OK
        assert trace.read_text() == "pass,1\nn,3\n0,1,2\n1,0,1\n2,1,0\n"

    def test_emit_trace_binary_tree(self, tmp_path, capsys):
        path = tmp_path / "tree.txt"
        run(capsys, "gen", "--model", "tree", "--r", "2", "--k", "4", "--out", str(path))
        trace = tmp_path / "trace.csv"
        run(capsys, "analyze", "--in", str(path), "--emit-trace", str(trace))
        headers = [line for line in trace.read_text().splitlines() if line.startswith("pass,")]
        assert headers == [f"pass,{p}" for p in range(1, 6)]

    @pytest.mark.parametrize("solver", SOLVERS)
    def test_oversized_graph_is_usage_error(self, tmp_path, capsys, solver):
        path = tmp_path / "big.txt"
        path.write_text(f"n {MAX_DENSE_NODES + 1}\n0 1\n")
        code, stdout, err = run(capsys, "analyze", "--in", str(path), "--solver", solver)
        assert code == EXIT_USAGE
        assert stdout == ""
        assert "error:" in err and "limited to" in err

    def test_oracle_solver_agrees(self, tmp_path, capsys):
        path = tmp_path / "tree.txt"
        run(capsys, "gen", "--model", "tree", "--r", "3", "--k", "3", "--out", str(path))
        _, matrix_out, _ = run(capsys, "analyze", "--in", str(path))
        _, oracle_out, _ = run(capsys, "analyze", "--in", str(path), "--solver", "networkx")
        assert matrix_out == oracle_out

    def test_parse_failure(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("n 2\n0 0\n")
        code, _, err = run(capsys, "analyze", "--in", str(path))
        assert code == EXIT_USAGE
        assert "self-loop" in err

    def test_missing_file(self, tmp_path, capsys):
        assert run(capsys, "analyze", "--in", str(tmp_path / "missing.txt"))[0] == EXIT_IO

    def test_requires_a_source(self, capsys):
        assert run(capsys, "analyze")[0] == EXIT_USAGE

    @pytest.mark.parametrize("r, k", [(2, 3), (3, 3), (2, 5)])
    def test_matches_tree_avg(self, tmp_path, capsys, r, k):
        path = tmp_path / "tree.txt"
        run(capsys, "gen", "--model", "tree", "--r", str(r), "--k", str(k), "--out", str(path))
        _, stdout, _ = run(capsys, "analyze", "--in", str(path))
        _, avg, _ = run(capsys, "tree-avg", "--r", str(r), "--k", str(k))
        assert analyze_lines(stdout)["ordered"] == avg.strip()


class TestTreeCommands:
    def test_table(self, capsys):
        code, stdout, _ = run(capsys, "table", "--r", "3", "--k", "4")
        assert code == EXIT_OK
        assert stdout.splitlines() == [
            "level,s1,s2,s3,s4,s5,s6",
            "S4,1,3,3,8,6,18",
            "S3,4,3,8,6,18,",
            "S2,4,11,6,18,,",
            "S1,3,9,27,,,",
        ]

    def test_table_to_file(self, tmp_path, capsys):
        out = tmp_path / "t.csv"
        assert run(capsys, "table", "--r", "2", "--k", "3", "--out", str(out))[0] == EXIT_OK
        assert out.read_text().splitlines()[1] == "S3,1,2,1,2"

    def test_tree_avg(self, capsys):
        code, stdout, _ = run(capsys, "tree-avg", "--r", "3", "--k", "4")
        assert code == EXIT_OK
        assert stdout == "4.36154\n"

    def test_tree_avg_rejects_single_level(self, capsys):
        assert run(capsys, "tree-avg", "--r", "3", "--k", "1")[0] == EXIT_USAGE

    def test_cross_check(self, capsys):
        _, stdout, _ = run(capsys, "cross-check", "--r", "2", "--k", "4")
        assert stdout == "formula 3.50476 ordered 3.50476 paper_norm 3.75510 ratio 15/14\n"

    def test_cross_check_rejects_oversized_tree(self, capsys):
        code, stdout, err = run(capsys, "cross-check", "--r", "2", "--k", "17")
        assert code == EXIT_USAGE
        assert stdout == ""
        assert "error:" in err


class TestBoundAndSweep:
    def test_check_bound(self, capsys):
        code, stdout, _ = run(capsys, "check-bound", "--n", "16")
        assert code == EXIT_OK
        assert stdout == "diameter 2 bound 3 PASS\n"

    def test_check_bound_invalid(self, capsys):
        assert run(capsys, "check-bound", "--n", "12")[0] == EXIT_USAGE

    def test_sweep_summary_on_stdout(self, capsys):
        code, stdout, _ = run(capsys, "sweep", "--n", "20", "--p-grid", "0", "--trials", "3")
        assert code == EXIT_OK
        assert stdout.splitlines() == ["p,trials,mean,stddev", f"0.0,3,{55 / 19!r},0.0"]

    def test_sweep_files_are_reproducible(self, tmp_path, capsys):
        outputs = []
        for jobs in ("1", "3"):
            records = tmp_path / f"records{jobs}.csv"
            summary = tmp_path / f"summary{jobs}.csv"
            paper = tmp_path / f"paper{jobs}.csv"
            code, stdout, _ = run(
                capsys, "sweep", "--n", "20", "--p-grid", "0,0.25,0.5", "--trials", "8",
                "--seed", "11", "--jobs", jobs, "--out", str(records),
                "--summary-out", str(summary), "--paper-summary-out", str(paper),
            )
            assert code == EXIT_OK
            assert stdout == ""
            outputs.append((records.read_bytes(), summary.read_bytes(), paper.read_bytes()))
        assert outputs[0] == outputs[1]
        assert len(outputs[0][0].decode().splitlines()) == 1 + 3 * 8

    def test_sweep_rejects_zero_trials(self, capsys):
        code, _, err = run(capsys, "sweep", "--n", "20", "--trials", "0")
        assert code == EXIT_USAGE
        assert "trials" in err

    def test_sweep_rejects_bad_grid(self, capsys):
        assert run(capsys, "sweep", "--p-grid", "0,2")[0] == EXIT_USAGE


def test_help_exits_cleanly(capsys):
    assert run(capsys, "--help")[0] == EXIT_OK


def test_log_file(tmp_path, capsys):
    log = tmp_path / "logs" / "cli.log"
    code, _, _ = run(capsys, "--verbose", "--log-file", str(log), "check-bound", "--n", "8")
    assert code == EXIT_OK
    assert log.exists()
