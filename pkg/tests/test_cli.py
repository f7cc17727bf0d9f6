import json
import math

import pytest

from pgain.cli import main


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("a b\nb c\nc a\n")
    return path


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.txt"
    path.write_text("u v\n")
    return path


@pytest.fixture
def star_tail_file(tmp_path):
    lines = [f"0 {i}" for i in range(1, 7)] + ["0 7", "7 8", "7 9", "8 9"]
    path = tmp_path / "star_tail.txt"
    path.write_text("\n".join(lines) + "\n")
    return path


def read_scores(path):
    lines = path.read_text().strip().split("\n")
    assert lines[0] == "node,score"
    return {row.split(",")[0]: float(row.split(",")[1]) for row in lines[1:]}


class TestCompute:
    def test_gpg_k3_closed_form(self, k3_file, tmp_path):
        out = tmp_path / "out"
        code = main([
            "compute", "--metric", "gpg", "--delta-star", "0.5",
            "--out", str(out), str(k3_file),
        ])
        assert code == 0
        scores = read_scores(out / "gpg.csv")
        assert set(scores) == {"a", "b", "c"}
        for value in scores.values():
            assert value == pytest.approx(4.0, rel=1e-8)

    def test_epg_p2(self, p2_file, tmp_path):
        out = tmp_path / "out"
        code = main(["compute", "--metric", "epg", "--out", str(out), str(p2_file)])
        assert code == 0
        scores = read_scores(out / "epg.csv")
        assert len(scores) == 2
        for value in scores.values():
            assert value == pytest.approx(math.e, rel=1e-8)

    def test_metric_all_writes_six_files(self, tmp_path):
        star = tmp_path / "star4.txt"
        star.write_text("c l1\nc l2\nc l3\nc l4\n")
        out = tmp_path / "out"
        code = main(["compute", "--metric", "all", "--out", str(out), str(star)])
        assert code == 0
        names = sorted(p.name for p in out.glob("*.csv"))
        assert names == ["deg.csv", "ec.csv", "epg.csv", "gpg.csv", "katz.csv", "pr.csv"]

    def test_byte_identical_reruns(self, k3_file, tmp_path):
        out_a, out_b = tmp_path / "a", tmp_path / "b"
        for out in (out_a, out_b):
            assert main([
                "compute", "--metric", "gpg", "--out", str(out), str(k3_file)
            ]) == 0
        assert (out_a / "gpg.csv").read_bytes() == (out_b / "gpg.csv").read_bytes()

    def test_json_format(self, k3_file, tmp_path):
        out = tmp_path / "out"
        code = main([
            "compute", "--metric", "deg", "--format", "json",
            "--out", str(out), str(k3_file),
        ])
        assert code == 0
        payload = json.loads((out / "deg.json").read_text())
        assert payload["metric"] == "deg"
        assert payload["scores"] == {"a": 2.0, "b": 2.0, "c": 2.0}

    def test_missing_file_is_io_error(self, tmp_path):
        assert main([
            "compute", "--metric", "deg", "--out", str(tmp_path), "no_such_file"
        ]) == 1

    def test_bad_delta_is_parameter_error(self, k3_file, tmp_path):
        code = main([
            "compute", "--metric", "gpg", "--delta", "0.9",
            "--out", str(tmp_path), str(k3_file),
        ])
        assert code == 2

    def test_summary_on_stderr(self, k3_file, tmp_path, capsys):
        main(["compute", "--metric", "gpg", "--out", str(tmp_path), str(k3_file)])
        err = capsys.readouterr().err
        assert "metric=gpg" in err
        assert "lambda1=2" in err
        assert "n=3 m=3" in err

    def test_non_convergence_exits_3(self, tmp_path):
        # a path graph needs more than one power-iteration round
        path_file = tmp_path / "p4.txt"
        path_file.write_text("0 1\n1 2\n2 3\n")
        code = main([
            "compute", "--metric", "ec", "--max-k", "1",
            "--out", str(tmp_path), str(path_file),
        ])
        assert code == 3


class TestSweep:
    def test_star_tail_katz_column(self, star_tail_file, tmp_path, capsys):
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--out", str(out), str(star_tail_file)]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "delta_star,rho_deg,rho_ec,rho_pr,rho_katz,rho_epg"
        assert len(lines) == 10  # default 9-point grid
        for row in lines[1:]:
            assert float(row.split(",")[4]) >= 0.999

    def test_regular_ring_emits_empty_fields_and_warns(self, tmp_path, capsys):
        ring = tmp_path / "ring.txt"
        ring.write_text("".join(f"{i} {(i + 1) % 6}\n" for i in range(6)))
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--grid", "0.3,0.6", "--out", str(out), str(ring)]) == 0
        for row in out.read_text().strip().split("\n")[1:]:
            assert row.split(",")[1:] == [""] * 5
        assert "undefined correlation" in capsys.readouterr().err

    def test_row_count_contract(self, tmp_path):
        er = tmp_path / "er.txt"
        assert main(["generate", "er", "100", "0.05", "--seed", "1",
                     "--out", str(er)]) == 0
        out = tmp_path / "sweep.csv"
        assert main(["sweep", "--out", str(out), str(er)]) == 0
        assert len(out.read_text().strip().split("\n")) == 10

    def test_json_format(self, star_tail_file, tmp_path):
        out = tmp_path / "sweep.json"
        assert main(["sweep", "--grid", "0.5", "--format", "json",
                     "--out", str(out), str(star_tail_file)]) == 0
        payload = json.loads(out.read_text())
        assert payload["rows"][0]["rho_katz"] >= 0.999


class TestConvergence:
    def test_csv_shape(self, k3_file, tmp_path):
        out = tmp_path / "conv.csv"
        code = main([
            "convergence", "--metric", "gpg", "--delta-star", "0.5",
            "--max-k", "20", "--out", str(out), str(k3_file),
        ])
        assert code == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "k,epsilon"
        assert len(lines) == 21
        last_eps = float(lines[-1].split(",")[1])
        assert last_eps < 1e-6

    def test_stdout_default(self, p2_file, capsys):
        assert main(["convergence", "--metric", "epg", "--max-k", "15",
                     str(p2_file)]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines[0] == "k,epsilon"
        assert float(lines[-1].split(",")[1]) < 1e-10


class TestGenerate:
    def test_complete_three_edges(self, capsys):
        assert main(["generate", "complete", "3"]) == 0
        assert capsys.readouterr().out == "0 1\n0 2\n1 2\n"

    def test_er_deterministic(self, tmp_path):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        for path in (a, b):
            assert main(["generate", "er", "100", "0.05", "--seed", "1",
                         "--out", str(path)]) == 0
        assert a.read_bytes() == b.read_bytes()
        assert a.stat().st_size > 0

    def test_ba_edge_count(self, tmp_path):
        out = tmp_path / "ba.txt"
        assert main(["generate", "ba", "200", "3", "--seed", "2",
                     "--out", str(out)]) == 0
        # clique of 4 (6 edges) + 196 nodes * 3 attachments
        assert len(out.read_text().strip().split("\n")) == 594

    def test_bad_params(self, capsys):
        assert main(["generate", "grid", "3"]) == 2

    def test_ring_and_grid(self, capsys):
        assert main(["generate", "ring", "5"]) == 0
        assert len(capsys.readouterr().out.strip().split("\n")) == 5
        assert main(["generate", "grid", "2", "3"]) == 0
        assert len(capsys.readouterr().out.strip().split("\n")) == 7


class TestSpectral:
    def test_reports_lambda1(self, k3_file, capsys):
        assert main(["spectral", str(k3_file)]) == 0
        out = capsys.readouterr().out
        assert "lambda1=2" in out
        assert "converged=True" in out
