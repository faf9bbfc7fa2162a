import json

import pytest

from fillorder.cli import main


def run_cli(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.edges"
    path.write_text("0 1\n1 2\n2 3\n0 3\n")
    return str(path)


def test_order_bruteforce_c4(capsys, c4_file):
    code, out, _ = run_cli(capsys, "order", "--input", c4_file,
                           "--algorithm", "bruteforce", "--verify")
    assert code == 0
    report = json.loads(out)
    assert report["order"] == [0, 1, 2, 3]
    assert report["total_fill"] == 1
    assert report["verify"]["passed"] is True
    assert "wall_time" not in report


def test_order_approx_verifies(capsys, tmp_path):
    path = tmp_path / "p6.edges"
    path.write_text("\n".join(f"{i} {i+1}" for i in range(5)))
    code, out, _ = run_cli(capsys, "order", "--input", str(path),
                           "--algorithm", "approx", "--epsilon", "0.5",
                           "--seed", "7", "--verify")
    assert code == 0
    report = json.loads(out)
    pd = report["verify"]["true_degree"]
    md = report["verify"]["min_degree"]
    assert all(p <= 1.5 * m for p, m in zip(pd, md))


def test_order_missing_input_exits_2(capsys):
    code, _, err = run_cli(capsys, "order")
    assert code == 2
    assert "input" in err


def test_order_unreadable_input_exits_1(capsys):
    code, _, _ = run_cli(capsys, "order", "--input", "/nonexistent/file.edges")
    assert code == 1


def test_order_parse_error_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.edges"
    path.write_text("zero one\n")
    code, _, _ = run_cli(capsys, "order", "--input", str(path))
    assert code == 1


def test_order_bad_flag_combination(capsys, c4_file):
    code, _, _ = run_cli(capsys, "order", "--input", c4_file,
                         "--algorithm", "delta-capped", "--delta", "0")
    assert code == 2


def test_order_byte_identical_given_seed(capsys, c4_file):
    _, out1, _ = run_cli(capsys, "order", "--input", c4_file,
                         "--algorithm", "approx", "--seed", "5")
    _, out2, _ = run_cli(capsys, "order", "--input", c4_file,
                         "--algorithm", "approx", "--seed", "5")
    assert out1 == out2


def test_gen_grid2d_edge_count(capsys):
    code, out, _ = run_cli(capsys, "gen", "--model", "grid2d", "--n", "9")
    assert code == 0
    assert len(out.strip().splitlines()) == 12


def test_gen_mtx_roundtrip(capsys, tmp_path):
    out_path = tmp_path / "g.mtx"
    code, _, _ = run_cli(capsys, "gen", "--model", "gnp", "--n", "12", "--p", "0.3",
                         "--seed", "4", "--out-format", "mtx", "--output", str(out_path))
    assert code == 0
    code, out, _ = run_cli(capsys, "order", "--input", str(out_path),
                           "--format", "mtx", "--algorithm", "bruteforce")
    assert code == 0 and json.loads(out)["n"] == 12


def test_demo_adversary_fixed(capsys):
    code, out, _ = run_cli(capsys, "demo", "adversary", "--mode", "fixed",
                           "--n", "64", "--epsilon", "0.5", "--seed", "1")
    assert code == 0
    report = json.loads(out)
    assert report["recovered_fraction"] == 1.0


def test_estimate_degree_on_figure_state(capsys, tmp_path):
    path = tmp_path / "fig.edges"
    path.write_text("1 0\n1 2\n1 6\n6 0\n6 4\n4 5\n3 4\n")
    code, out, _ = run_cli(capsys, "estimate", "--input", str(path),
                           "--vertex", "1", "--eliminate", "4,6",
                           "--epsilon", "0.25", "--seed", "3")
    assert code == 0
    report = json.loads(out)
    assert report["true"] == 5
    assert 0.75 * 5 <= report["estimate"] <= 1.25 * 5


def test_estimate_buckets_mode(capsys, tmp_path):
    path = tmp_path / "p4.edges"
    path.write_text("0 1\n1 2\n2 3\n")
    code, out, _ = run_cli(capsys, "estimate", "--input", str(path),
                           "--mode", "buckets", "--epsilon", "0.25", "--seed", "2")
    assert code == 0
    report = json.loads(out)
    members = sorted(v for b in report["buckets"] for v in b["vertices"])
    assert members == [0, 1, 2, 3]


def test_env_seed_default(capsys, c4_file, monkeypatch):
    monkeypatch.setenv("FILLORDER_SEED", "41")
    code, out, _ = run_cli(capsys, "order", "--input", c4_file, "--algorithm", "approx")
    assert code == 0
    assert json.loads(out)["seed"] == 41


def test_verify_refused_above_limit(capsys, tmp_path):
    path = tmp_path / "big.edges"
    path.write_text("\n".join(f"{i} {i+1}" for i in range(2100)))
    code, _, err = run_cli(capsys, "order", "--input", str(path), "--verify")
    assert code == 2
    assert "2000" in err
