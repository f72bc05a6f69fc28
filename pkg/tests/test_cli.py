"""Command-line interface: outputs, file handling, and exit codes."""

import json

from pivotminors import (
    Graph,
    canonical_key,
    complete_multipartite,
    named_graph,
    pivot,
    to_graph6,
)
from pivotminors.cli import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_USAGE, main
from pivotminors.generate import KNOWN_CLASS_COUNTS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_contains_true(capsys):
    code, out, _ = run(capsys, "contains", "--g", "C5", "--h", "C3")
    assert code == EXIT_OK
    assert out.strip() == "true"


def test_contains_false_json(capsys):
    code, out, _ = run(capsys, "contains", "--g", "C4", "--h", "C3", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "false"
    assert data["inputs"]["g"]["n"] == 4


def test_contains_inconclusive_exit(capsys):
    # the process-wide cache may already hold this orbit; drop it so the
    # tiny limit actually bites
    from pivotminors.containment import DEFAULT_CACHE

    DEFAULT_CACHE.target_orbits.pop(canonical_key(named_graph("C5")), None)
    code, out, _ = run(capsys, "contains", "--g", "C5", "--h", "C5",
                       "--limit", "1")
    assert code == EXIT_INCONCLUSIVE
    assert out.strip() == "inconclusive"


def test_pivot_command(capsys):
    code, out, _ = run(capsys, "pivot", "--in", "C4", "--edge", "0,1")
    assert code == EXIT_OK
    assert out.strip() == to_graph6(pivot(named_graph("C4"), 0, 1))


def test_pivot_non_edge_is_usage_error(capsys):
    code, _, err = run(capsys, "pivot", "--in", "C4", "--edge", "0,2")
    assert code == EXIT_USAGE
    assert "error:" in err


def test_pivot_bad_edge_syntax(capsys):
    code, _, err = run(capsys, "pivot", "--in", "C4", "--edge", "zero,one")
    assert code == EXIT_USAGE
    assert "u,v" in err


def test_orbit_json(capsys):
    code, out, _ = run(capsys, "orbit", "--in", "C5", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["orbit_size"] >= 2
    assert canonical_key(named_graph("C5")) in data["classes"]


def test_graph_arguments_accept_files_and_literals(tmp_path, capsys):
    p = tmp_path / "g.g6"
    p.write_text(to_graph6(named_graph("C5")) + "\n")
    code, out, _ = run(capsys, "contains", "--g", str(p), "--h", "g6:Bw")
    assert code == EXIT_OK
    assert out.strip() == "true"


def test_unknown_graph_argument(capsys):
    code, _, err = run(capsys, "contains", "--g", "nosuchgraph", "--h", "C3")
    assert code == EXIT_USAGE
    assert "g6:" in err


def test_sequence_command(capsys):
    code, out, _ = run(capsys, "sequence", "--g", "C5", "--h", "C3")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["steps"]
    assert sorted(data["target_map"]) == [0, 1, 2]


def test_sequence_none(capsys):
    code, out, _ = run(capsys, "sequence", "--g", "C4", "--h", "C3")
    assert code == EXIT_OK
    assert out.strip() == "none"


def test_gen_counts(capsys):
    code, out, _ = run(capsys, "gen", "--n", "5")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == KNOWN_CLASS_COUNTS[5]


def test_convert_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "convert", "--in", "g6:Bg", "--to", "edges")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "3 2"
    p = tmp_path / "g.edges"
    p.write_text(out)
    code, out, _ = run(capsys, "convert", "--in", str(p), "--to", "g6")
    assert code == EXIT_OK
    assert out.strip() == "Bg"


def test_mine_and_stored_comparison(tmp_path, capsys):
    out_dir = tmp_path / "c3"
    code, out, err = run(capsys, "mine", "--h", "C3", "--nmax", "5",
                         "--out", str(out_dir))
    assert code == EXIT_OK
    assert "saved" in err
    assert len(out.strip().splitlines()) == 2  # C3 and C5

    # a second run must agree with what was stored
    code, _, err = run(capsys, "mine", "--h", "C3", "--nmax", "5",
                       "--out", str(out_dir))
    assert code == EXIT_OK
    assert "matches stored results" in err

    # tampering with the stored members must be caught
    members = out_dir / "members.g6"
    members.write_text("Bw\n")
    code, _, err = run(capsys, "mine", "--h", "C3", "--nmax", "5",
                       "--out", str(out_dir))
    assert code == EXIT_USAGE
    assert "checksum" in err


def test_check_bound_covered(capsys):
    code, out, _ = run(capsys, "check-bound", "--family", "tP1", "--t", "2",
                       "--nmax", "3", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["covered"] is True
    assert data["bound"] == 3
    assert data["observed_max_order"] == 2


def test_check_bound_uncovered_is_flagged(capsys):
    code, out, _ = run(capsys, "check-bound", "--family", "tP1", "--t", "3",
                       "--nmax", "4")
    assert code == EXIT_INCONCLUSIVE
    assert "may be missing" in out


def test_family_commands(capsys):
    code, out, _ = run(capsys, "family", "--name", "k4", "--odd", "3,3",
                       "--path-len", "0")
    assert code == EXIT_OK
    from pivotminors import family_k4

    assert out.strip() == to_graph6(family_k4(3, 3, 0))
    code, out, _ = run(capsys, "family", "--name", "c3p1", "--k", "5")
    assert code == EXIT_OK
    code, _, err = run(capsys, "family", "--name", "k4")
    assert code == EXIT_USAGE


def test_recognize_and_verify_roundtrip(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "recognize", "--target", "C3", "--in", "C5",
                       "--emit-cert", str(cert_path))
    assert code == EXIT_OK
    assert out.startswith("contains")
    assert "C5" in out

    code, out, _ = run(capsys, "verify", "--in", "C5",
                       "--cert", str(cert_path), "--h", "C3")
    assert code == EXIT_OK
    assert out.strip() == "VALID"

    # break one step and make sure the verifier names the broken index
    data = json.loads(cert_path.read_text())
    pivots = [i for i, s in enumerate(data["steps"]) if s["op"] == "pivot"]
    data["steps"][pivots[0]] = {"op": "pivot", "u": 0, "v": 2}
    cert_path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--in", "C5",
                       "--cert", str(cert_path), "--h", "C3")
    assert code == EXIT_USAGE
    assert f"INVALID at step {pivots[0]}" in out


def test_recognize_json_free(capsys):
    code, out, _ = run(capsys, "recognize", "--target", "2P2", "--in",
                       "prism", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "free"
    assert data["certificate"] is None


def test_recognize_bounded_family_targets(capsys):
    code, out, _ = run(capsys, "recognize", "--target", "2P1", "--in", "K3",
                       "--nmax", "3")
    assert code == EXIT_OK
    assert out.startswith("free")

    # a sweep below the bound is refused unless explicitly allowed
    code, _, err = run(capsys, "recognize", "--target", "2P1", "--in", "K3",
                       "--nmax", "2")
    assert code == EXIT_USAGE
    assert "allow_truncated" in err

    code, out, _ = run(capsys, "recognize", "--target", "2P1", "--in", "K3",
                       "--nmax", "2", "--allow-truncated")
    assert code == EXIT_INCONCLUSIVE
    assert out.startswith("free-up-to-truncation")


def test_recognize_unknown_target(capsys):
    code, _, err = run(capsys, "recognize", "--target", "Q7", "--in", "C5")
    assert code == EXIT_USAGE


def test_reduce_multi_line_file(tmp_path, capsys):
    lines = [to_graph6(complete_multipartite([3, 3])),
             to_graph6(named_graph("prism"))]
    p = tmp_path / "cubic.g6"
    p.write_text("\n".join(lines) + "\n")
    report_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "reduce", "--in", str(p),
                       "--report", str(report_path))
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["reports"]) == 2
    assert all(r["sides_agree"] for r in data["reports"])
    assert json.loads(report_path.read_text()) == {"reports": data["reports"]}


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = run(capsys, "definitely-not-a-command")
    assert code == EXIT_USAGE
    code, _, err = run(capsys)
    assert code == EXIT_USAGE


def test_version_flag(capsys):
    import pytest

    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
