import json

import pytest

from combsynth.cli import main

from conftest import DATA_DIR


@pytest.fixture
def repo_5x2(tmp_path):
    path = tmp_path / "repo.json"
    path.write_text((DATA_DIR / "labyrinth_5x2.json").read_text())
    return path


def run_cli(args):
    return main(args)


class TestRun:
    def test_inhabited_exit_zero(self, repo_5x2, tmp_path, capsys):
        out = tmp_path / "out"
        code = run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(0, 1)",
             "--out", str(out)]
        )
        assert code == 0
        assert capsys.readouterr().out.strip() == "inhabited"
        for name in ("grammar.json", "trace.json", "reports.json", "graph.json"):
            assert (out / name).exists()
        grammar = json.loads((out / "grammar.json").read_text())
        assert len(grammar["rules"]) == 3

    def test_uninhabited_exit_one(self, repo_5x2, tmp_path, capsys):
        code = run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(2, 0)",
             "--out", str(tmp_path / "out")]
        )
        assert code == 1
        assert capsys.readouterr().out.strip() == "uninhabited"
        graph = json.loads((tmp_path / "out" / "graph.json").read_text())
        assert graph["solution"] is False
        assert graph["reason"] == "UnproductiveCycle"

    def test_dead_end_reason(self, repo_5x2, tmp_path):
        code = run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(4, 1)",
             "--out", str(tmp_path / "out")]
        )
        assert code == 1
        graph = json.loads((tmp_path / "out" / "graph.json").read_text())
        assert graph["reason"] == "NoUsableCombinator"

    def test_bad_target_exit_two(self, repo_5x2, tmp_path, capsys):
        code = run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(0, ",
             "--out", str(tmp_path / "out")]
        )
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_missing_repo_exit_two(self, tmp_path):
        code = run_cli(
            ["run", "--repo", str(tmp_path / "missing.json"), "--target", "A",
             "--out", str(tmp_path / "out")]
        )
        assert code == 2

    def test_enumerate_writes_terms(self, repo_5x2, tmp_path):
        out = tmp_path / "out"
        run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(0, 1)",
             "--out", str(out), "--enumerate", "2"]
        )
        assert (out / "terms.txt").read_text() == (
            "down(start)\ndown(up(down(start)))\n"
        )

    def test_steps_writes_one_graph_per_prefix(self, repo_5x2, tmp_path):
        out = tmp_path / "out"
        run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(0, 1)",
             "--out", str(out), "--steps"]
        )
        assert sorted(p.name for p in out.glob("step-*.json")) == [
            "step-0.json", "step-1.json", "step-2.json",
        ]
        step0 = json.loads((out / "step-0.json").read_text())
        assert [n["status"] for n in step0["nodes"]] == ["todo"]

    def test_dot_format(self, repo_5x2, tmp_path):
        out = tmp_path / "out"
        run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(0, 1)",
             "--out", str(out), "--format", "dot"]
        )
        dot = (out / "graph.dot").read_text()
        assert dot.startswith("digraph")
        assert "down" in dot and "start" in dot

    def test_no_unproductive_filters_graph(self, repo_5x2, tmp_path):
        out = tmp_path / "out"
        run_cli(
            ["run", "--repo", str(repo_5x2), "--target", "Pos(2, 0)",
             "--out", str(out), "--steps", "--no-unproductive"]
        )
        last = json.loads((out / "step-3.json").read_text())
        assert last["edges"] == []
        assert len(last["nodes"]) == 1

    def test_deterministic_outputs(self, repo_5x2, tmp_path):
        outputs = []
        for name in ("a", "b"):
            out = tmp_path / name
            run_cli(
                ["run", "--repo", str(repo_5x2), "--target", "Pos(0, 1)",
                 "--out", str(out), "--enumerate", "5", "--steps"]
            )
            outputs.append(
                {p.name: p.read_text() for p in sorted(out.iterdir())}
            )
        assert outputs[0] == outputs[1]


class TestGenLabyrinth:
    def test_bundled_files_reproducible(self, tmp_path):
        for name, rows, cols, walls, start in [
            ("labyrinth_5x2.json", 2, 5, "1,0;4,0;1,1;3,1", "0,0"),
            ("labyrinth_3x4.json", 4, 3, "0,0;2,0;1,2", "0,2"),
        ]:
            out = tmp_path / name
            code = run_cli(
                ["gen-labyrinth", "--rows", str(rows), "--cols", str(cols),
                 "--walls", walls, "--start", start, "--out", str(out)]
            )
            assert code == 0
            assert json.loads(out.read_text()) == json.loads(
                (DATA_DIR / name).read_text()
            )

    def test_stdout_when_no_out(self, capsys):
        code = run_cli(
            ["gen-labyrinth", "--rows", "1", "--cols", "2", "--start", "0,0"]
        )
        assert code == 0
        doc = json.loads(capsys.readouterr().out)
        # a single-row grid has no vertical moves, so up/down are omitted
        names = [c["name"] for c in doc["combinators"]]
        assert names == ["left", "right", "start"]

    def test_start_on_wall_rejected(self, capsys):
        code = run_cli(
            ["gen-labyrinth", "--rows", "1", "--cols", "2",
             "--walls", "0,0", "--start", "0,0"]
        )
        assert code == 2
        assert "error" in capsys.readouterr().err

    def test_bad_start_syntax_rejected(self, capsys):
        code = run_cli(
            ["gen-labyrinth", "--rows", "1", "--cols", "2", "--start", "zero"]
        )
        assert code == 2
        assert "error" in capsys.readouterr().err
