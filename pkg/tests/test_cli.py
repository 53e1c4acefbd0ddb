"""CLI contract: exit codes, JSON schemas, piping, bench determinism."""

import json
import subprocess
import sys
from importlib import resources

import sparsity_forge as sf
from sparsity_forge.cli import main


def run_cli(capsys, argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema(name):
    import jsonschema

    text = resources.files("sparsity_forge.schemas").joinpath(name).read_text()
    schema = json.loads(text)
    return lambda obj: jsonschema.validate(obj, schema)


def g6(g):
    return sf.write_graph6(g) + "\n"


def test_check_exit_codes(capsys, monkeypatch):
    path = sf.Graph(3, [(0, 1), (1, 2)])
    code, out, _ = run_cli(capsys, ["check", "--a", "1", "--b", "-1"], g6(path), monkeypatch)
    assert code == 0
    load_schema("certificate.schema.json")(json.loads(out))
    code, out, _ = run_cli(
        capsys, ["check", "--a", "1", "--b", "-1"], g6(sf.complete_graph(3)), monkeypatch
    )
    assert code == 1
    payload = json.loads(out)
    assert payload["verdict"] == "not_sparse" and payload["witness"] == [0, 1, 2]
    code, _, err = run_cli(
        capsys, ["check", "--a", "1", "--b", "-2"], g6(path), monkeypatch
    )
    assert code == 2 and "error" in err


def test_check_k6_at_seven_thirds(capsys, monkeypatch):
    # e(K6) = 15 > (7/3)*6 = 14: certified not sparse
    code, out, _ = run_cli(
        capsys, ["check", "--a", "7/3", "--b", "0"], g6(sf.complete_graph(6)), monkeypatch
    )
    assert code == 1


def test_check_batch_order_preserved(capsys, monkeypatch):
    monkeypatch.setenv("SPARSITY_FORGE_THREADS", "3")
    batch = g6(sf.complete_graph(3)) + g6(sf.Graph(3, [(0, 1)])) + g6(sf.complete_graph(4))
    code, out, _ = run_cli(capsys, ["check", "--a", "1", "--b", "-1"], batch, monkeypatch)
    verdicts = [json.loads(line)["verdict"] for line in out.splitlines()]
    assert verdicts == ["not_sparse", "sparse", "not_sparse"]
    assert code == 1


def test_check_edgelist_file(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n1 2\n2 0\n")
    code, out, _ = run_cli(
        capsys, ["check", "--a", "1", "--b", "0", "--format", "edgelist", str(f)]
    )
    assert code == 0
    assert json.loads(out)["verdict"] == "sparse"


def test_parse_error_exit_2(capsys, monkeypatch):
    code, _, err = run_cli(capsys, ["check", "--a", "1", "--b", "0"], "!!!\n", monkeypatch)
    assert code == 2 and "error" in err


def test_decompose_cli(capsys, monkeypatch):
    validate = load_schema("decomposition.schema.json")
    code, out, _ = run_cli(
        capsys,
        ["decompose", "--m", "2", "--verify", "--trace"],
        g6(sf.complete_graph(5)),
        monkeypatch,
    )
    assert code == 0
    payload = json.loads(out)
    validate(payload)
    assert payload["case"] == "large_m_case_A" and payload["verified"] is True
    code, out, _ = run_cli(
        capsys, ["decompose", "--m", "3/2"], g6(sf.complete_graph(5)), monkeypatch
    )
    assert code == 1
    load_schema("certificate.schema.json")(json.loads(out))


def test_partition_cli_and_schema(capsys, monkeypatch):
    validate = load_schema("partition.schema.json")
    code, out, _ = run_cli(
        capsys,
        ["partition", "--a1", "1", "--b1", "-1", "--a2", "1", "--b2", "-1"],
        g6(sf.complete_graph(4)),
        monkeypatch,
    )
    assert code == 0
    validate(json.loads(out))
    code, _, err = run_cli(
        capsys,
        ["partition", "--a1", "1", "--b1", "-3", "--a2", "1", "--b2", "0"],
        g6(sf.complete_graph(4)),
        monkeypatch,
    )
    assert code == 2


def test_gen_and_pipe_reproduces_deficiency(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, ["gen", "ring", "--a", "1", "--t", "3"])
    assert code == 0
    ring_line = out.strip()
    assert sf.parse_graph6(ring_line) == sf.gen_counterexample_ring(1, 3)
    validate = load_schema("partition.schema.json")
    code, out, _ = run_cli(
        capsys,
        ["partition", "--a1", "1", "--b1", "-1", "--a2", "1", "--b2", "-2"],
        ring_line + "\n",
        monkeypatch,
    )
    assert code == 1
    payload = json.loads(out)
    validate(payload)
    assert payload["outcome"] == "deficiency"
    assert payload["r1"] + payload["r2"] < len(payload["B"])


def test_gen_invalid_params_exit_2(capsys):
    code, _, err = run_cli(capsys, ["gen", "ring", "--a", "1", "--t", "2"])
    assert code == 2 and "error" in err


def test_gen_families_match_library(capsys):
    code, out, _ = run_cli(capsys, ["gen", "disconnected", "--a1", "1", "--a2", "1", "--n", "5", "--t", "2"])
    assert code == 0
    assert sf.parse_graph6(out.strip()) == sf.gen_counterexample_disconnected(1, 1, 5, 2)
    code, out, _ = run_cli(capsys, ["gen", "glued-trees", "--a", "2"])
    assert code == 0
    assert sf.parse_graph6(out.strip()) == sf.gen_counterexample_glued_trees(2)


def test_bench_deterministic_and_consistent(capsys):
    argv = ["bench", "decompose", "--sizes", "24,40", "--seed", "7", "--m", "5/2"]
    code, out1, _ = run_cli(capsys, argv)
    assert code == 0
    code, out2, _ = run_cli(capsys, argv)
    assert out1.splitlines()[1:] and [l.split()[:3] for l in out1.splitlines()[1:]] == [
        l.split()[:3] for l in out2.splitlines()[1:]
    ]
    for line in out1.splitlines()[1:]:
        cols = line.split()
        check_ms, split_ms, verify_ms, total_ms = map(float, cols[3:7])
        assert abs((check_ms + split_ms + verify_ms) - total_ms) <= 0.05 * total_ms + 0.5


def test_bench_unknown_suite(capsys):
    code, _, err = run_cli(capsys, ["bench", "nonsense"])
    assert code == 2 and "unknown bench suite" in err


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "sparsity_forge.cli", "gen", "ring", "--a", "1", "--t", "3"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert sf.parse_graph6(out.stdout.strip()).n == 9
