"""Text formats and the command-line front end."""

import json
import random

import pytest

from boolminor import cli, verify
from boolminor.bfcore import TruthTable, Zhegalkin
from boolminor.formats import (
    ParseError,
    format_graph_line,
    format_hypergraph_doc,
    format_polynomial,
    format_truth_table,
    parse_graph,
    parse_hypergraph_doc,
    parse_polynomial,
    parse_truth_table,
)
from boolminor.graphs import Graph, cycle
from boolminor.hypergraph import Hypergraph


def poly(arity, *monos):
    return Zhegalkin.from_sets(arity, monos)


# ---------------------------------------------------------------------------
# polynomial grammar


def test_parse_examples():
    assert parse_polynomial("x1*x2 + x1*x3 + x2*x3") == poly(3, (1, 2), (1, 3), (2, 3))
    assert parse_polynomial("x1 + x1") == Zhegalkin(1, frozenset())
    assert parse_polynomial("x2*x1") == poly(2, (1, 2))
    assert parse_polynomial("1 + x1") == poly(1, (), (1,))
    assert parse_polynomial("0") == Zhegalkin(1, frozenset())
    assert parse_polynomial("x2", arity=5) == poly(5, (2,))


def test_parse_errors_have_positions():
    for text in ("", "x0", "0 + x1", "x1 * * x2", "y3", "x1 ++ x2", "x1*x2 + "):
        with pytest.raises(ParseError) as err:
            parse_polynomial(text)
        assert hasattr(err.value, "position")
    with pytest.raises(ParseError):
        parse_polynomial("x3", arity=2)


def test_print_parse_identity_polynomials():
    rng = random.Random(73)
    for _ in range(100):
        p = Zhegalkin(5, frozenset(rng.sample(range(32), rng.randrange(0, 16))))
        assert parse_polynomial(format_polynomial(p), arity=5) == p
    assert format_polynomial(Zhegalkin(2, frozenset())) == "0"
    assert format_polynomial(poly(2, (), (1, 2))) == "x1*x2 + 1"


def test_truth_table_format():
    t = TruthTable.from_hex("E8", 3)
    assert format_truth_table(t) == "tt:E8 arity=3"
    assert parse_truth_table("tt:E8 arity=3") == t
    assert parse_truth_table("tt:8", arity=2) == TruthTable.from_hex("8", 2)
    with pytest.raises(ParseError):
        parse_truth_table("E8")


def test_hypergraph_doc_round_trip():
    rng = random.Random(79)
    for _ in range(50):
        h = Hypergraph(4, frozenset(rng.sample(range(16), rng.randrange(0, 10))))
        assert parse_hypergraph_doc(format_hypergraph_doc(h)) == h
    doc = format_hypergraph_doc(Hypergraph.from_sets(3, [(1, 2), ()]))
    assert json.loads(doc) == {"n": 3, "edges": [[], [1, 2]]}
    with pytest.raises(ParseError):
        parse_hypergraph_doc("{broken")
    with pytest.raises(ParseError):
        parse_hypergraph_doc('{"n": 2}')


def test_graph_line_round_trip():
    g = cycle(5)
    line = format_graph_line(g)
    assert parse_graph(line) == g
    assert parse_graph("3:") == Graph(3, frozenset())
    assert format_graph_line(Graph(2, frozenset())) == "2:"
    with pytest.raises(ParseError):
        parse_graph("3: 1-2, 2")
    with pytest.raises(ParseError):
        parse_graph("oops")


def test_graph_doc_input():
    g = cycle(4)
    doc = format_hypergraph_doc(Hypergraph(g.vertex_count, g.edges))
    assert parse_graph(doc) == g


# ---------------------------------------------------------------------------
# command-line verbs


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_irreducible_conjunction(capsys):
    code, out, _ = run_cli(capsys, "irreducible", "x1*x2")
    assert code == 0
    assert out.strip() == "irreducible; unique lower cover: x1"


def test_cli_irreducible_composite(capsys):
    code, out, _ = run_cli(
        capsys,
        "irreducible",
        "x1*x3 + x1*x4 + x1*x3*x4 + x2*x3 + x2*x4 + x2*x3*x4 + x1*x2*x3 + x1*x2*x4 + x1*x2*x3*x4",
    )
    assert code == 0
    assert out.startswith("not irreducible; maximal strict minors: ")
    minors = out.split(": ", 1)[1].strip().split("; ")
    assert len(minors) == 2


def test_cli_convert(capsys):
    code, out, _ = run_cli(capsys, "convert", "tt:E8 arity=3", "--to", "polynomial")
    assert code == 0 and out.strip() == "x1*x2 + x1*x3 + x2*x3"
    code, out, _ = run_cli(capsys, "convert", "x1*x2", "--to", "table")
    assert code == 0 and out.strip() == "tt:8 arity=2"
    code, out, _ = run_cli(capsys, "convert", "x1*x2 + 1", "--to", "hypergraph")
    assert code == 0 and json.loads(out) == {"n": 2, "edges": [[], [1, 2]]}


def test_cli_gap(capsys):
    code, out, _ = run_cli(capsys, "gap", "x1 + x2 + x3 + 1")
    assert code == 0 and out.strip() == "gap: 2; family: LinearSum (c=1)"
    code, out, _ = run_cli(capsys, "gap", "x1*x2 + x1 + x2")
    assert code == 0 and out.strip() == "gap: 1; family: GapOne"


def test_cli_graph_classify(capsys):
    code, out, _ = run_cli(capsys, "graph-classify", "5: 1-2, 2-3, 3-4, 4-5, 5-1")
    assert code == 0 and out.strip() == "C5"
    code, out, _ = run_cli(capsys, "graph-classify", "4: 1-2, 2-3, 3-4")
    assert code == 0 and out.strip() == "NotIrreducible"


def test_cli_iso(capsys):
    code, out, _ = run_cli(capsys, "iso", "3: 1-2, 2-3", "3: 2-1, 1-3")
    assert code == 0 and out.startswith("isomorphic:")
    code, out, _ = run_cli(capsys, "iso", "3: 1-2", "3: 1-2, 2-3")
    assert code == 0 and out.strip() == "not isomorphic"


def test_cli_steiner_check(capsys):
    code, out, _ = run_cli(capsys, "steiner-check", "fano")
    assert code == 0
    assert "2-set-transitive=True aut-order=168" in out
    code, out, _ = run_cli(capsys, "steiner-check", "3: 1-2")
    assert code == 1 and "not a Steiner system" in out


def test_cli_classify_structured(capsys):
    code, out, _ = run_cli(capsys, "classify", "x1*x2", "--format", "structured")
    assert code == 0
    doc = json.loads(out)
    assert doc["irreducible"] is True and doc["gap"] == 1


def test_cli_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("x1*x2 + x1"))
    code, out, _ = run_cli(capsys, "classify", "-")
    assert code == 0 and "gap family: XYplusX" in out


def test_cli_input_errors(capsys):
    code, _, err = run_cli(capsys, "classify", "x0 + x1")
    assert code == 2 and "error:" in err
    code, _, err = run_cli(capsys, "gap", "x1")
    assert code == 2


def test_cli_poset_export(capsys, tmp_path):
    out_path = tmp_path / "classes.dot"
    code, out, _ = run_cli(capsys, "poset", "--max-ess", "1", "--out", str(out_path))
    assert code == 0 and "4 classes written" in out
    assert out_path.read_text().startswith("digraph classes {")


def test_cli_verify_gap_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "gap", "--max-arity", "3")
    assert code == 0
    assert out.splitlines()[0] == "256 tables checked"
    assert out.strip().endswith("ok")


def test_verify_deterministic_across_workers():
    one = verify.gap_sweep(3, workers=1)
    two = verify.gap_sweep(3, workers=2)
    assert one.lines == two.lines and one.data == two.data
    g1 = verify.graph_sweep(4, workers=1)
    g2 = verify.graph_sweep(4, workers=2)
    assert g1.lines == g2.lines


def test_poset_structured_export_parses_back(capsys, tmp_path):
    out_path = tmp_path / "classes.tsv"
    code, out, _ = run_cli(
        capsys,
        "poset",
        "--max-ess",
        "2",
        "--export-format",
        "structured",
        "--out",
        str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().strip().splitlines()
    assert len(lines) == 12
    for line in lines:
        parse_polynomial(line.split("\t")[0])


def test_cli_requires_one_source(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("x1*x2")
    code, _, err = run_cli(capsys, "classify", "x1", "--file", str(path))
    assert code == 2 and "one input source" in err
    code, _, err = run_cli(capsys, "classify")
    assert code == 2
    code, out, _ = run_cli(capsys, "classify", "--file", str(path))
    assert code == 0 and "irreducible: True" in out
