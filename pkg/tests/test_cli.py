import orjson
import pytest

from agents import INVARIANT_CHECKS
from cli import main
from state import ENV_MAX_N, ENV_NODE_LIMIT, ENV_TIME_LIMIT_MS, ENV_WORKERS
from tools.constructions import basic_graph, mycielski_iterated
from tools.graph_io import parse_graph6, write_graph6


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in (ENV_MAX_N, ENV_NODE_LIMIT, ENV_TIME_LIMIT_MS, ENV_WORKERS):
        monkeypatch.delenv(name, raising=False)


def write_corpus(tmp_path, *graphs, name="corpus.g6"):
    path = tmp_path / name
    path.write_text("".join(write_graph6(g) + "\n" for g in graphs))
    return str(path)


def records(capsys):
    out = capsys.readouterr().out
    return [orjson.loads(line) for line in out.splitlines() if line.strip()]


def test_compute_structured(tmp_path, capsys):
    path = write_corpus(tmp_path, basic_graph("cycle", 5))
    status = main(["compute", "--in", path, "--invariants", "alpha,chi,rho,f,mir", "--output", "structured"])
    assert status == 0
    (record,) = records(capsys)
    assert record["kind"] == "invariants" and record["position"] == 1
    assert (record["alpha"], record["chi"], record["rho"], record["f"]) == (2, 3, 3, 3)
    assert record["mir"] == "2/5"


def test_compute_text(tmp_path, capsys):
    path = write_corpus(tmp_path, basic_graph("complete", 3), basic_graph("path", 4))
    assert main(["compute", "--in", path, "--invariants", "omega,girth"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("line 1 ") and "omega=3" in lines[0] and "girth=3" in lines[0]
    assert "girth=None" in lines[1]


def test_compute_rejects_unknown_invariant(tmp_path, capsys):
    path = write_corpus(tmp_path, basic_graph("cycle", 5))
    assert main(["compute", "--in", path, "--invariants", "alpha,treewidth"]) == 2
    assert "[ERROR]" in capsys.readouterr().err


def test_lenient_input_skips_malformed_lines(tmp_path, capsys):
    path = tmp_path / "mixed.g6"
    path.write_text("Dhc\nbad!\nA_\n")
    assert main(["compute", "--in", str(path), "--invariants", "alpha", "--output", "structured"]) == 0
    captured = capsys.readouterr()
    positions = [orjson.loads(line)["position"] for line in captured.out.splitlines()]
    assert positions == [1, 3]
    assert "line 2" in captured.err


def test_strict_input_stops_on_malformed_line(tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_text("Dhc\nbad!\n")
    assert main(["compute", "--in", str(path), "--strict", "--invariants", "alpha"]) == 2


def test_non_ascii_input_line(tmp_path, capsys):
    path = tmp_path / "mixed.g6"
    path.write_bytes(b"A_\n\xc3\xa9\nDhc\n")
    assert main(["compute", "--in", str(path), "--invariants", "alpha", "--output", "structured"]) == 0
    captured = capsys.readouterr()
    assert [orjson.loads(line)["position"] for line in captured.out.splitlines()] == [1, 3]
    assert "line 2" in captured.err
    assert main(["compute", "--in", str(path), "--strict", "--invariants", "alpha"]) == 2
    assert main(["verify", "folkman", "--in", str(path), "--strict"]) == 2


def test_missing_file_is_a_usage_error(tmp_path, capsys):
    assert main(["compute", "--in", str(tmp_path / "absent.g6")]) == 2
    assert "[ERROR]" in capsys.readouterr().err


def test_invalid_max_n_flag():
    assert main(["compute", "--max-n", "40"]) == 2


def test_unknown_subcommand():
    with pytest.raises(SystemExit) as excinfo:
        main(["colour"])
    assert excinfo.value.code == 2


def test_max_n_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv(ENV_MAX_N, "3")
    path = write_corpus(tmp_path, basic_graph("cycle", 5))
    assert main(["compute", "--in", path, "--invariants", "alpha"]) == 2


def test_node_limit_exhaustion_exits_three(tmp_path, capsys):
    path = write_corpus(tmp_path, mycielski_iterated(3))
    assert main(["compute", "--in", path, "--invariants", "chi", "--node-limit", "2"]) == 3
    assert "node limit" in capsys.readouterr().err


def test_verify_enumerated_corpus(capsys):
    assert main(["verify", "folkman", "--n", "6", "--dedup", "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["kind"] == "verification"
    assert record["checked"] == 156 and record["passed"]
    assert record["corpus"] == "n=6 dedup"
    assert "elapsed_ms" not in record


def test_verify_roundtrip_alias(capsys):
    assert main(["verify", "roundtrip", "--max-n-vertices", "3", "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["invariant"] == "graph6-roundtrip"
    assert record["checked"] == 1 + 1 + 2 + 8


def test_verify_reports_violations(tmp_path, monkeypatch, capsys):
    monkeypatch.setitem(INVARIANT_CHECKS, "folkman", lambda g, budget: (g.n != 5, {"n": g.n}))
    path = write_corpus(tmp_path, basic_graph("cycle", 4), basic_graph("cycle", 5))
    assert main(["verify", "folkman", "--in", path]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "line 2 Dhc" in out


def test_verify_output_does_not_depend_on_workers(capsys):
    assert main(["verify", "half-stable-deletion", "--n", "5", "--dedup", "--output", "structured"]) == 0
    one = capsys.readouterr().out
    assert main(["verify", "half-stable-deletion", "--n", "5", "--dedup", "--workers", "2",
                 "--output", "structured"]) == 0
    assert capsys.readouterr().out == one


def test_construct_generalized_mycielski(capsys):
    assert main(["construct", "gen-mycielski", "--k", "3", "--ell", "3"]) == 0
    (line,) = capsys.readouterr().out.splitlines()
    assert parse_graph6(line).n == 15


def test_construct_fig1_structured(capsys):
    assert main(["construct", "fig1", "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["kind"] == "graph" and record["family"] == "fig1"
    assert (record["n"], record["m"]) == (6, 9)


def test_construct_requires_parameters(capsys):
    assert main(["construct", "cycle"]) == 2
    assert "--n" in capsys.readouterr().err


def test_construct_dimacs(capsys):
    assert main(["construct", "cycle", "--n", "4", "--write-format", "dimacs"]) == 0
    assert "p edge 4 4" in capsys.readouterr().out


def test_reduce_even_cycle(tmp_path, capsys):
    path = write_corpus(tmp_path, basic_graph("cycle", 6))
    assert main(["reduce", "even-cycle", "--in", path, "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["kind"] == "reduction" and record["reduction"] == "even_cycle_contraction"
    assert (record["n"], record["m"]) == (2, 1)


def test_reduce_without_even_cycle(tmp_path):
    path = write_corpus(tmp_path, basic_graph("cycle", 5))
    assert main(["reduce", "even-cycle", "--in", path]) == 2


def test_audit_conclusion_beyond_exact_range(capsys):
    assert main(["audit", "conclusion", "--k", "3", "--ell", "100", "--c", "3/2", "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["c"] == "3/2"
    assert record["vertices_exact"] is None
    assert record["vertices_formula"] == 403
    assert not record["f2_at_least_k_plus_1"]
    assert record["failure_threshold"] == 2


def test_audit_coefficient(capsys):
    assert main(["audit", "coefficient", "--c", "5/2", "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["kind"] == "audit-coefficient" and not record["bound_holds"]


def test_explore_alpha_p(tmp_path, capsys):
    path = write_corpus(tmp_path, basic_graph("cycle", 5))
    assert main(["explore", "alpha-p", "--p", "2", "--in", path, "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["alpha_p"] == 4 and len(record["witness"]) == 4


def test_explore_f_p(tmp_path, capsys):
    path = write_corpus(tmp_path, basic_graph("cycle", 5))
    assert main(["explore", "f-p", "--p", "2", "--c", "1", "--in", path, "--output", "structured"]) == 0
    (record,) = records(capsys)
    assert record["value"] == "3/1"


def test_audit_coefficient_beyond_the_probe_cap(capsys):
    assert main(["audit", "coefficient", "--c", "6"]) == 2
    assert "M_6" in capsys.readouterr().err
