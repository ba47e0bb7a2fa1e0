"""Text formats: polynomial grammar, truth-table hex, hypergraph documents.

The polynomial grammar is a `+`-separated term list; a term is `1` or
`x<k>` factors separated by `*`; `0` alone denotes the zero polynomial;
whitespace is insignificant.  Truth tables read `tt:<HEX> arity=<n>` with
the most significant bit first.  Hypergraphs travel as JSON documents with
fields ``n`` and ``edges`` (ascending vertex arrays, sorted by size then
lexicographically; ``[]`` is the empty edge).  Graphs additionally accept
the compact line ``n: i-j, k-l, ...``.
"""

from __future__ import annotations

import json
import re
from typing import Optional

from .bfcore import TruthTable, Zhegalkin, popcount, vars_of
from .graphs import Graph
from .hypergraph import Hypergraph


class ParseError(ValueError):
    """Malformed input text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# polynomials

_FACTOR_RE = re.compile(r"^x(\d+)$")


def parse_polynomial(text: str, arity: Optional[int] = None) -> Zhegalkin:
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    monomials: set[int] = set()
    max_var = 0
    chunks = text.split("+")
    offset = 0
    stripped = [c.strip() for c in chunks]
    if stripped == ["0"]:
        return Zhegalkin(arity or 1, frozenset())
    for chunk in chunks:
        term = chunk.strip()
        pos = offset + len(chunk) - len(chunk.lstrip())
        offset += len(chunk) + 1
        if not term:
            raise ParseError("empty term", pos)
        if term == "0":
            raise ParseError("'0' is only valid as the whole polynomial", pos)
        if term == "1":
            mask = 0
        else:
            mask = 0
            fpos = pos
            for factor in term.split("*"):
                fact = factor.strip()
                m = _FACTOR_RE.match(fact)
                if not m:
                    raise ParseError(f"expected a factor like x3, got {fact!r}", fpos)
                idx = int(m.group(1))
                if idx < 1:
                    raise ParseError("variable indices start at 1", fpos)
                mask |= 1 << (idx - 1)
                max_var = max(max_var, idx)
                fpos += len(factor) + 1
        if mask in monomials:
            monomials.discard(mask)
        else:
            monomials.add(mask)
    n = arity if arity is not None else max(max_var, 1)
    if n < max_var:
        raise ParseError(f"declared arity {n} below the largest variable x{max_var}", 0)
    return Zhegalkin(n, frozenset(monomials))


def format_polynomial(poly: Zhegalkin) -> str:
    if not poly.monomials:
        return "0"
    def key(mask: int):
        return (-popcount(mask), tuple(sorted(vars_of(mask))))
    parts = []
    for mask in sorted(poly.monomials, key=key):
        if mask == 0:
            parts.append("1")
        else:
            parts.append("*".join(f"x{v}" for v in sorted(vars_of(mask))))
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# truth tables

_TT_RE = re.compile(r"^tt:([0-9A-Fa-f]+)\s+arity=(\d+)$")


def parse_truth_table(text: str, arity: Optional[int] = None) -> TruthTable:
    s = text.strip()
    m = _TT_RE.match(s)
    if m:
        return TruthTable(int(m.group(2)), int(m.group(1), 16))
    if s.startswith("tt:") and arity is not None:
        return TruthTable(arity, int(s[3:].strip(), 16))
    raise ParseError("expected 'tt:<hex> arity=<n>'", 0)


def format_truth_table(table: TruthTable) -> str:
    return f"tt:{table.to_hex()} arity={table.arity}"


# ---------------------------------------------------------------------------
# hypergraph documents


def _sorted_edge_lists(h: Hypergraph) -> list[list[int]]:
    lists = [sorted(vars_of(e)) for e in h.edges]
    return sorted(lists, key=lambda e: (len(e), e))


def format_hypergraph_doc(h: Hypergraph, indent: Optional[int] = None) -> str:
    doc = {"edges": _sorted_edge_lists(h), "n": h.vertex_count}
    return json.dumps(doc, sort_keys=True, indent=indent)


def parse_hypergraph_doc(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid hypergraph document: {exc.msg}", exc.pos) from exc
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError("hypergraph document needs fields 'n' and 'edges'", 0)
    n = doc["n"]
    edges = doc["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError("'n' must be an integer and 'edges' an array", 0)
    try:
        return Hypergraph.from_sets(n, edges)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), 0) from exc


# ---------------------------------------------------------------------------
# graphs

_GRAPH_LINE_RE = re.compile(r"^(\d+)\s*:\s*(.*)$")


def parse_graph(text: str) -> Graph:
    s = text.strip()
    if s.startswith("{"):
        h = parse_hypergraph_doc(s)
        return Graph(h.vertex_count, h.edges)
    m = _GRAPH_LINE_RE.match(s)
    if not m:
        raise ParseError("expected 'n: i-j, k-l, ...' or a hypergraph document", 0)
    n = int(m.group(1))
    rest = m.group(2).strip()
    pairs = []
    if rest:
        for item in rest.split(","):
            part = item.strip()
            em = re.match(r"^(\d+)\s*-\s*(\d+)$", part)
            if not em:
                raise ParseError(f"expected an edge like 2-5, got {part!r}", text.find(part))
            pairs.append((int(em.group(1)), int(em.group(2))))
    try:
        return Graph.from_pairs(n, pairs)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), 0) from exc


def format_graph_line(g: Graph) -> str:
    pairs = ", ".join(f"{a}-{b}" for a, b in g.edge_pairs())
    return f"{g.vertex_count}: {pairs}" if pairs else f"{g.vertex_count}:"


# ---------------------------------------------------------------------------
# input detection for the CLI


def detect_kind(text: str) -> str:
    s = text.strip()
    if s.startswith("tt:"):
        return "table"
    if s.startswith("{"):
        return "hypergraph"
    if _GRAPH_LINE_RE.match(s):
        return "graph"
    return "polynomial"


def parse_any_polynomial(text: str, arity: Optional[int] = None) -> Zhegalkin:
    """Accept a polynomial, a truth table, or a hypergraph document."""
    kind = detect_kind(text)
    if kind == "table":
        from .bfcore import zhegalkin_from_truth_table

        return zhegalkin_from_truth_table(parse_truth_table(text, arity))
    if kind == "hypergraph":
        from .hypergraph import polynomial_of

        return polynomial_of(parse_hypergraph_doc(text))
    if kind == "graph":
        from .hypergraph import polynomial_of

        return polynomial_of(parse_graph(text))
    return parse_polynomial(text, arity)


def parse_any_hypergraph(text: str) -> Hypergraph:
    """Accept a hypergraph document, a graph line, or a polynomial."""
    kind = detect_kind(text)
    if kind == "hypergraph":
        return parse_hypergraph_doc(text)
    if kind == "graph":
        return parse_graph(text)
    if kind == "table":
        from .bfcore import zhegalkin_from_truth_table
        from .hypergraph import hypergraph_of

        return hypergraph_of(zhegalkin_from_truth_table(parse_truth_table(text)))
    from .hypergraph import hypergraph_of

    return hypergraph_of(parse_polynomial(text))
