import io
import json
import subprocess
import sys

import pytest

from threshold_hamilton.cli import run
from threshold_hamilton.core import Graph, cycle_graph, from_creation_sequence
from threshold_hamilton.errors import FormatError
from threshold_hamilton.extremal import build_gn
from threshold_hamilton.io import (
    format_creation_sequence,
    format_edge_list,
    parse_creation_sequence,
    parse_edge_list,
    read_edge_list,
    to_dot,
    write_edge_list,
)


def cli(*argv, stdin=""):
    out = io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


# ---------------------------------------------------------------------------
# formats
# ---------------------------------------------------------------------------


def test_edge_list_round_trip(tmp_path):
    g = build_gn(9)
    path = tmp_path / "g9.txt"
    write_edge_list(g, str(path))
    assert read_edge_list(str(path)).rows == g.rows


def test_edge_list_comments_and_whitespace():
    g = parse_edge_list("# header comment\n3   2\n0 1\n# mid\n1\t2\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n0 1\n", "3 1\n0 x\n", "a b\n", "3 1\n0 1 2\n"],
)
def test_edge_list_rejects(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


def test_format_edge_list_header():
    text = format_edge_list(build_gn(8))
    lines = text.splitlines()
    assert lines[0] == "8 19" and len(lines) == 20


def test_creation_sequence_strings():
    seq = parse_creation_sequence("IDIDD")
    assert format_creation_sequence(seq) == "IDIDD"
    assert parse_creation_sequence("") == []
    with pytest.raises(FormatError):
        parse_creation_sequence("IDx")


def test_dot_export():
    dot = to_dot(build_gn(5))
    assert dot.startswith("graph G {") and dot.count(" -- ") == 8
    assert "rank=same" in dot
    plain = to_dot(cycle_graph(4))
    assert "rank=same" not in plain and plain.count(" -- ") == 4


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_gn_edgelist():
    code, out = cli("gn", "8", "--format", "edgelist")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "8 19" and len(lines) == 20


def test_gn_text_and_json_agree():
    _, text = cli("gn", "7")
    _, js = cli("gn", "7", "--format", "json")
    doc = json.loads(js)
    assert doc["size"] == 15
    assert f"size {doc['size']}" in text
    assert "degrees " + " ".join(map(str, doc["degree_sequence"])) in text


def test_gn_bad_order():
    assert cli("gn", "2")[0] == 2


def test_count_g8_file(tmp_path):
    path = tmp_path / "g8.txt"
    write_edge_list(build_gn(8), str(path))
    code, out = cli("count", str(path))
    assert code == 0 and out.strip() == "4"
    code, out = cli("count", str(path), "--format", "json")
    assert json.loads(out)["count"] == "4"


def test_count_through_edge():
    k4 = format_edge_list(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]))
    assert cli("count", "-", "--edge", "0", "1", stdin=k4) == (0, "2\n")
    assert cli("count", "-", "--edge", "0", "1", stdin=format_edge_list(cycle_graph(5)))[0] == 0
    assert cli("count", "-", "--edge", "0", "2", stdin=format_edge_list(cycle_graph(5)))[0] == 2


def test_count_capacity_exit():
    code, _ = cli("count", "--cs", "DDDDD", "--cap", "5")
    assert code == 3


def test_recognize_outputs():
    code, out = cli("recognize", "-", stdin=format_edge_list(build_gn(6)))
    assert code == 0 and out.startswith("threshold, m = 4")
    code, out = cli("recognize", "-", stdin=format_edge_list(cycle_graph(4)))
    assert code == 1 and out.strip() == "NOT_THRESHOLD"
    code, out = cli("recognize", "--cs", "IDD", "--format", "json")
    doc = json.loads(out)
    assert doc["threshold"] and doc["m"] == 2


def test_hamiltonian_verdicts():
    assert cli("hamiltonian", "--cs", "IDIDD") == (0, "hamiltonian\n")
    code, out = cli("hamiltonian", "--cs", "IID")
    assert code == 1 and "k=1" in out
    code, out = cli("hamiltonian", "--cs", "IID", "--format", "json")
    assert json.loads(out) == {"hamiltonian": False, "reason": json.loads(out)["reason"], "failed_k": 1}
    assert cli("hamiltonian", "-", stdin=format_edge_list(cycle_graph(4)))[0] == 2


def test_keyedges_listing():
    code, out = cli("keyedges", "-", "--format", "json", stdin=format_edge_list(build_gn(6)))
    edges = json.loads(out)
    assert code == 0 and len(edges) == 4
    assert {(e["j"], e["other"]) for e in edges} == {(1, 4), (2, 3)}
    _, text = cli("keyedges", "-", stdin=format_edge_list(build_gn(6)))
    assert len(text.splitlines()) == 4 and "(1, 4)" in text


def test_delete_emits_case_and_graph():
    g = build_gn(6)
    x, y = g.partition.sets[1][0], g.partition.sets[4][0]
    code, out = cli("delete", "-", str(x), str(y), stdin=format_edge_list(g))
    assert code == 0
    assert out.splitlines()[0] == "# case CASE2, m_delta +0"
    assert parse_edge_list(out).degree_sequence == (5, 4, 4, 3, 3, 1)
    code, out = cli("delete", "-", str(x), str(y), "--format", "json", stdin=format_edge_list(g))
    doc = json.loads(out)
    assert doc["case"] == "CASE2" and doc["m_delta"] == 0 and doc["graph"]["size"] == 10


def test_delete_non_key_edge():
    g = build_gn(6)
    x, y = g.partition.sets[4]
    assert cli("delete", "-", str(x), str(y), stdin=format_edge_list(g))[0] == 2


def test_enumerate():
    code, out = cli("enumerate", "5")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16
    code, out = cli("enumerate", "5", "--hamiltonian-only", "--format", "json")
    rows = json.loads(out)
    assert [r["count"] for r in rows] == ["12", "6", "2"]
    assert rows[-1]["degree_sequence"] == [4, 4, 3, 3, 2]


def test_enumerate_jobs_same_output():
    assert cli("enumerate", "7", "--jobs", "2") == cli("enumerate", "7")


def test_enumerate_capacity():
    assert cli("enumerate", "21")[0] == 3


def test_verify_theorem6_json_schema():
    code, out = cli("verify", "theorem6", "10", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    for key in ("n", "theorem", "pass", "min_count", "formula_count", "minimizers", "unique", "elapsed_ms"):
        assert key in doc
    assert doc["min_count"] == "8" and doc["unique"] is True
    assert doc["minimizers"] == [[9, 9, 8, 7, 6, 5, 5, 4, 3, 2]]


def test_verify_text_matches_json():
    _, text = cli("verify", "theorem6", "8")
    doc = json.loads(cli("verify", "theorem6", "8", "--format", "json")[1])
    assert f"min_count = {doc['min_count']}" in text
    assert "minimizer " + ",".join(map(str, doc["minimizers"][0])) in text


def test_verify_other_suites():
    assert cli("verify", "theorem7", "9")[0] == 0
    assert cli("verify", "claim", "5")[0] == 0
    assert cli("verify", "forced-path", "4")[0] == 0
    code, out = cli("verify", "lemmas", "7", "--format", "json")
    assert code == 0 and all(c["failures"] == [] for c in json.loads(out)["checks"])


def test_verify_capacity_and_usage():
    assert cli("verify", "theorem6", "15")[0] == 3
    assert cli("verify", "lemmas", "11")[0] == 3
    assert cli("verify", "nonsense", "3")[0] == 2
    assert cli("frobnicate")[0] == 2


def test_input_errors():
    assert cli("count")[0] == 2
    assert cli("count", "/nonexistent/file")[0] == 2
    assert cli("count", "-", stdin="3 1\n2 0\n")[0] == 2
    assert cli("count", "x", "--cs", "DD")[0] == 2


def test_creation_sequence_input_matches_file():
    g = from_creation_sequence("IDIDD")
    assert cli("count", "--cs", "IDIDD") == cli("count", "-", stdin=format_edge_list(g))


def test_pipe_round_trip_subprocess():
    for n in (3, 11, 20):
        gen = subprocess.run(
            [sys.executable, "-m", "threshold_hamilton", "gn", str(n), "--format", "edgelist"],
            capture_output=True, text=True, check=True,
        )
        rec = subprocess.run(
            [sys.executable, "-m", "threshold_hamilton", "recognize", "-"],
            input=gen.stdout, capture_output=True, text=True,
        )
        assert rec.returncode == 0 and rec.stdout.startswith("threshold")


def test_gn_round_trip_all_orders():
    for n in range(3, 21):
        _, text = cli("gn", str(n), "--format", "edgelist")
        assert cli("recognize", "-", stdin=text)[0] == 0
