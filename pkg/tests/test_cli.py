import json
import math

import numpy as np
import pytest

from catspace.cli import build_parser, main

from conftest import PVT, PVT_SIMILARITY


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_cluster_smoke(capsys, pvt_file):
    code, out, _ = run(capsys, "cluster", pvt_file, "--label-col", "none", "--algorithm", "kmeans",
                          "--distance", "sbd", "--k", 2, "--seed", 7)
    assert code == 0
    lines = out.splitlines()
    assert [l.split(",")[0] for l in lines] == ["0", "1", "2", "3"]
    assert {l.split(",")[1] for l in lines} <= {"0", "1"}


@pytest.mark.parametrize("algorithm", ["kmeans", "fcm", "hierarchical", "kmodes"])
def test_cluster_score(capsys, pvt_file, algorithm):
    code, out, _ = run(capsys, "cluster", pvt_file, "--algorithm", algorithm, "--score", "--restarts", 5)
    assert code == 0
    lines = out.splitlines()
    assert lines[-2].startswith("accuracy,") and lines[-1].startswith("accuracy_std,")
    assert 0.0 <= float(lines[-2].split(",")[1]) <= 1.0


def test_cluster_deterministic_output_file(capsys, pvt_file, tmp_path):
    outs = []
    for name in ("a.txt", "b.txt"):
        assert run(capsys, "cluster", pvt_file, "--seed", 3, "--k", 2, "-o", tmp_path / name)[0] == 0
        outs.append((tmp_path / name).read_bytes())
    assert outs[0] == outs[1] and outs[0].count(b"\n") == 4


@pytest.mark.parametrize("argv, flag", [
    (["--k", "0"], "--k"),
    (["--algorithm", "kmodes", "--distance", "sbd"], "--distance"),
    (["--k", "9"], "--k"),
    (["--label-col", "none"], "--k"),
    (["--label-col", "none", "--k", "2", "--score"], "--score"),
    (["--label-col", "7"], ""),
])
def test_cluster_usage_errors(capsys, pvt_file, argv, flag):
    code, _, err = run(capsys, "cluster", pvt_file, *argv)
    assert code == 2
    assert flag in err


def test_argparse_errors_exit_2(capsys, pvt_file):
    for argv in (["cluster", pvt_file, "--restarts", "0"], ["cluster", pvt_file, "--distance", "hamming"], []):
        with pytest.raises(SystemExit) as exc:
            main([str(a) for a in argv])
        assert exc.value.code == 2
    capsys.readouterr()


def test_missing_input_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "cluster", tmp_path / "absent.csv")
    assert code == 2 and "absent.csv" in err


def test_matrix_similarity(capsys, pvt_file):
    code, out, _ = run(capsys, "matrix", pvt_file, "--label-col", "none", "--kind", "similarity")
    assert code == 0
    assert [[int(v) for v in l.split(",")] for l in out.splitlines()] == PVT_SIMILARITY


def test_matrix_distance_round_trips(capsys, pvt_file):
    code, out, _ = run(capsys, "matrix", pvt_file, "--label-col", "none", "--kind", "distance", "--distance", "sbd")
    assert code == 0
    D = np.array([[float(v) for v in l.split(",")] for l in out.splitlines()])
    assert D.shape == (4, 4)
    assert np.array_equal(D, D.T)
    assert abs(D[0, 1] - math.sqrt(25 / 6)) < 1e-12
    assert abs(D[0, 1] - 2.0412) < 1e-4


@pytest.mark.parametrize("argv", [
    ["--kind", "distance"],
    ["--kind", "similarity", "--distance", "sbd"],
])
def test_matrix_usage_errors(capsys, pvt_file, argv):
    assert run(capsys, "matrix", pvt_file, "--label-col", "none", *argv)[0] == 2


def test_matrix_cosine_one_hot_rows(capsys, tmp_path):
    path = tmp_path / "d.csv"
    path.write_text("a\nb\n")
    assert run(capsys, "matrix", path, "--label-col", "none", "--kind", "distance", "--distance", "cosine")[0] == 0


def _manifest(tmp_path, extra=""):
    (tmp_path / "t1.csv").write_text(PVT)
    path = tmp_path / "manifest.csv"
    path.write_text("name,path,k,label_column\npvt,t1.csv,2,-1\n" + extra)
    return path


def test_benchmark_byte_identical(capsys, tmp_path):
    manifest = _manifest(tmp_path)
    for name in ("a", "b"):
        code, _, _ = run(capsys, "benchmark", manifest, "--restarts", 1, "--seed", 9, "--quiet",
                         "-o", tmp_path / f"{name}.csv", "--json", tmp_path / f"{name}.json")
        assert code == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()
    assert len((tmp_path / "a.csv").read_text().splitlines()) == 14
    assert len(json.loads((tmp_path / "a.json").read_text())) == 13


def test_benchmark_progress_and_timing(capsys, tmp_path):
    code, out, err = run(capsys, "benchmark", _manifest(tmp_path), "--restarts", 2, "--timing")
    assert code == 0
    assert len(err.splitlines()) == 13
    rows = out.splitlines()[1:]
    assert all(float(r.split(",")[7]) >= 0 for r in rows)


def test_benchmark_missing_entry_exit_2(capsys, tmp_path):
    manifest = _manifest(tmp_path, "ghost,ghost.csv,2,-1\n")
    code, out, err = run(capsys, "benchmark", manifest, "--restarts", 1)
    assert code == 2 and out == "" and "ghost.csv" in err


def test_benchmark_failed_cell_exit_1(capsys, tmp_path):
    manifest = _manifest(tmp_path, "too-many,t1.csv,9,-1\n")
    code, out, _ = run(capsys, "benchmark", manifest, "--restarts", 1, "--quiet")
    assert code == 1
    assert "ConfigurationError" in out


def test_help_lists_defaults():
    parser = build_parser()
    sub = parser._subparsers._group_actions[0].choices
    for name, p in sub.items():
        for action in p._actions:
            if action.option_strings and action.dest != "help":
                assert "default" in (action.help or "") or "required" in (action.help or ""), (name, action.dest)
