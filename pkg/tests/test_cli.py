import json

import pytest

from hamtough.cli import main
from hamtough.graph import complete, complete_bipartite, cycle_graph
from hamtough.graph6 import emit_graph6


def run_cli(capsys, monkeypatch, argv, stdin_text=""):
    import io
    import sys

    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_g6_parse_and_emit(capsys, monkeypatch, tmp_path):
    code, out, _ = run_cli(capsys, monkeypatch, ["g6", "parse"], "C~\n")
    assert code == 0
    payload = json.loads(out.strip())
    assert payload["n"] == 4 and len(payload["edges"]) == 6

    code, out, _ = run_cli(capsys, monkeypatch, ["g6", "emit"], json.dumps(payload) + "\n")
    assert code == 0 and out.strip() == "C~"


def test_solve_subcommands(capsys, monkeypatch):
    line = emit_graph6(cycle_graph(5)) + "\n"
    code, out, _ = run_cli(capsys, monkeypatch, ["solve", "hamilton"], line)
    assert code == 0 and json.loads(out)["hamiltonian"] is True

    code, out, _ = run_cli(capsys, monkeypatch, ["solve", "toughness"], line)
    payload = json.loads(out)
    assert payload["toughness"] == "1/1" and payload["components"] == 2

    code, out, _ = run_cli(capsys, monkeypatch, ["solve", "pancyclic"], line)
    assert json.loads(out)["first_missing"] == 3

    code, out, _ = run_cli(
        capsys, monkeypatch, ["solve", "toughness"], emit_graph6(complete(4)) + "\n"
    )
    assert json.loads(out)["toughness"] == "Inf"


def test_check_subcommands(capsys, monkeypatch):
    line = emit_graph6(cycle_graph(5)) + "\n"
    code, out, _ = run_cli(capsys, monkeypatch, ["check", "chvatal"], line)
    assert json.loads(out) == {"g6": "Dhc", "holds": False, "witness_index": 2}

    code, out, _ = run_cli(capsys, monkeypatch, ["check", "hoang", "--t", "1"], line)
    assert json.loads(out)["holds"] is False

    code, out, _ = run_cli(capsys, monkeypatch, ["check", "bauer", "--t", "1"], line)
    assert json.loads(out)["holds"] is True


def test_closure_subcommand(capsys, monkeypatch):
    line = emit_graph6(cycle_graph(5)) + "\n"
    code, out, _ = run_cli(capsys, monkeypatch, ["closure", "--t", "1"], line)
    payload = json.loads(out)
    assert len(payload["added"]) == 5
    assert payload["closure_g6"] == emit_graph6(complete(5))


def test_certify_closure(capsys, monkeypatch):
    from hamtough.graph import path_graph

    line = emit_graph6(path_graph(5)) + "\n"
    code, out, _ = run_cli(
        capsys, monkeypatch, ["certify", "closure", "--x", "0", "--y", "4", "--t", "4"], line
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certificate"] == "CUTSET t=1/2 S={1} c=2"
    assert payload["valid"] is True


def test_certify_successor(capsys, monkeypatch):
    line = emit_graph6(complete_bipartite(2, 3)) + "\n"
    code, out, _ = run_cli(
        capsys,
        monkeypatch,
        ["certify", "successor", "--z", "4", "--x", "0", "--y", "1", "--t", "4"],
        line,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certificate"].startswith("CUTSET")
    assert payload["valid"] is True


def test_certify_error_exit_code(capsys, monkeypatch):
    line = emit_graph6(cycle_graph(6)) + "\n"
    code, out, _ = run_cli(
        capsys, monkeypatch, ["certify", "closure", "--x", "0", "--y", "1", "--t", "4"], line
    )
    assert code == 1
    assert json.loads(out)["error"] == "endpoints-adjacent"


def test_campaign_cli(capsys, monkeypatch):
    stream = emit_graph6(complete(5)) + "\n" + emit_graph6(cycle_graph(5)) + "\n"
    code, out, err = run_cli(capsys, monkeypatch, ["campaign", "chvatal"], stream)
    assert code == 0
    records = [json.loads(line) for line in out.strip().splitlines()]
    assert len(records) == 2
    summary = json.loads(err.strip().splitlines()[-1])
    assert summary["hypothesis_hits"] == 1


def test_campaign_violation_exit_code(capsys, monkeypatch):
    # bipartite K_{3,3} defeats the pancyclicity conclusion at t = 1
    stream = emit_graph6(complete_bipartite(3, 3)) + "\n"
    code, out, err = run_cli(
        capsys, monkeypatch, ["campaign", "pancyclic-corollary", "--t", "1"], stream
    )
    assert code == 1
    summary = json.loads(err.strip().splitlines()[-1])
    assert summary["violations"]


def test_campaign_input_error(capsys, monkeypatch):
    code, out, err = run_cli(capsys, monkeypatch, ["campaign", "chvatal"], "C~~~\n")
    assert code == 2
    assert "error" in err


def test_campaign_skip_bad(capsys, monkeypatch):
    stream = "C~~~\n" + emit_graph6(complete(5)) + "\n"
    code, out, err = run_cli(capsys, monkeypatch, ["campaign", "chvatal", "--skip-bad"], stream)
    assert code == 0
    summary = json.loads(err.strip().splitlines()[-1])
    assert summary["bad_lines"] and summary["graphs_examined"] == 1


def test_gen_subcommand(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, monkeypatch, ["gen", "tough", "--n", "8", "--t", "1", "--count", "2", "--seed", "4"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    from hamtough.graph6 import parse_graph6
    from hamtough.solvers import is_t_tough

    for line in lines:
        assert is_t_tough(parse_graph6(line), 1)


def test_file_positional_after_options(capsys, monkeypatch, tmp_path):
    # the input file must be accepted on either side of the option flags
    target = tmp_path / "graphs.g6"
    target.write_text(emit_graph6(complete(5)) + "\n")
    code, out, err = run_cli(
        capsys, monkeypatch, ["campaign", "chvatal", "--jobs", "1", str(target)]
    )
    assert code == 0
    assert json.loads(err.strip().splitlines()[-1])["graphs_examined"] == 1
    code, _, _ = run_cli(capsys, monkeypatch, ["check", "hoang", "--t", "2", str(target)])
    assert code == 0


def test_missing_z_for_successor(capsys, monkeypatch):
    with pytest.raises(SystemExit):
        main(["certify", "successor", "--x", "0", "--y", "1", "--t", "4"])
