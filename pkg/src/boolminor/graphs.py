"""Simple graphs: constructions, autonomous independent sets, and the
classifier of graphs whose Boolean function is join-irreducible.

A graph is a hypergraph whose edges all have exactly two vertices, so the
whole hypergraph toolbox (contraction, isomorphism, the irreducibility
tests) applies unchanged.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .bfcore import bits_of, popcount, support_mask
from .hypergraph import Hypergraph, contract, is_isomorphic, support_reduce


class Graph(Hypergraph):
    """A hypergraph with 2-element edges only (no loops, no empty edge)."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for e in self.edges:
            if popcount(e) != 2:
                raise ValueError("graph edges must join exactly two distinct vertices")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Graph":
        edges = frozenset((1 << (a - 1)) | (1 << (b - 1)) for a, b in pairs)
        return cls(n, edges)

    def edge_pairs(self) -> list[tuple[int, int]]:
        out = []
        for e in sorted(self.edges):
            a, b = bits_of(e)
            out.append((a + 1, b + 1))
        return sorted(out)


def neighborhoods(g: Graph) -> list[int]:
    """Open neighborhood of each vertex as a bitmask (index 0 = vertex 1)."""
    nb = [0] * g.vertex_count
    for e in g.edges:
        a, b = bits_of(e)
        nb[a] |= 1 << b
        nb[b] |= 1 << a
    return nb


# ---------------------------------------------------------------------------
# builders


def _require_positive(n: int) -> None:
    if n < 1:
        raise ValueError("graph constructions need at least one vertex")


def complete(n: int) -> Graph:
    _require_positive(n)
    return Graph.from_pairs(n, itertools.combinations(range(1, n + 1), 2))


def empty(n: int) -> Graph:
    _require_positive(n)
    return Graph(n, frozenset())


def path(n: int) -> Graph:
    _require_positive(n)
    return Graph.from_pairs(n, ((k, k + 1) for k in range(1, n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    pairs = [(k, k + 1) for k in range(1, n)] + [(n, 1)]
    return Graph.from_pairs(n, pairs)


def complement(g: Graph) -> Graph:
    n = g.vertex_count
    edges = frozenset(
        (1 << (a - 1)) | (1 << (b - 1))
        for a, b in itertools.combinations(range(1, n + 1), 2)
    )
    return Graph(n, edges - g.edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.vertex_count
    shifted = frozenset(e << shift for e in g2.edges)
    return Graph(shift + g2.vertex_count, g1.edges | shifted)


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    base = disjoint_union(g1, g2)
    cross = frozenset(
        (1 << a) | (1 << (g1.vertex_count + b))
        for a in range(g1.vertex_count)
        for b in range(g2.vertex_count)
    )
    return Graph(base.vertex_count, base.edges | cross)


# ---------------------------------------------------------------------------
# connectivity and isolated vertices


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, sorted by lowest vertex."""
    nb = neighborhoods(g)
    seen = 0
    out = []
    for v in range(g.vertex_count):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for b in bits_of(frontier):
                nxt |= nb[b]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def reduce_isolated(g: Graph) -> Graph:
    """Delete degree-0 vertices; may return the graph on zero vertices."""
    reduced = support_reduce(g)
    return Graph(reduced.vertex_count, reduced.edges)


# ---------------------------------------------------------------------------
# autonomous independent sets


@dataclass(frozen=True)
class AiDecomposition:
    """Partition into maximal autonomous independent sets plus the quotient.

    Vertices share a block exactly when they are nonadjacent with identical
    neighborhoods; the quotient graph on the blocks is ai-prime and the
    original graph is the lexicographic sum of its blocks over the quotient.
    """

    components: tuple[tuple[int, ...], ...]
    quotient: Graph


def ai_decomposition(g: Graph) -> AiDecomposition:
    nb = neighborhoods(g)
    by_nb: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        by_nb.setdefault(nb[v], []).append(v + 1)
    blocks = sorted(by_nb.values())
    index_of = {v: bi for bi, block in enumerate(blocks) for v in block}
    qedges = set()
    for e in g.edges:
        a, b = bits_of(e)
        ba, bb = index_of[a + 1], index_of[b + 1]
        if ba != bb:
            qedges.add((1 << ba) | (1 << bb))
    quotient = Graph(len(blocks), frozenset(qedges))
    if not is_ai_prime(quotient):
        raise AssertionError("ai quotient failed to be prime; decomposition is broken")
    return AiDecomposition(tuple(tuple(b) for b in blocks), quotient)


def is_ai_prime(g: Graph) -> bool:
    """No two vertices are nonadjacent with identical neighborhoods."""
    nb = neighborhoods(g)
    return len(set(nb)) == g.vertex_count


def lexicographic_sum(components: tuple[tuple[int, ...], ...], quotient: Graph) -> Graph:
    """Blow each quotient vertex up into an independent set; rebuilds the graph."""
    n = sum(len(block) for block in components)
    edges = set()
    for e in quotient.edges:
        qa, qb = bits_of(e)
        for a in components[qa]:
            for b in components[qb]:
                edges.add((1 << (a - 1)) | (1 << (b - 1)))
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# property (P): every nonedge has a common neighbor of degree two


def satisfies_property_p(g: Graph) -> bool:
    nb = neighborhoods(g)
    deg2 = 0
    for v, m in enumerate(nb):
        if popcount(m) == 2:
            deg2 |= 1 << v
    for a, b in itertools.combinations(range(g.vertex_count), 2):
        if nb[a] >> b & 1:
            continue
        if not nb[a] & nb[b] & deg2:
            return False
    return True


class PropertyPKind(Enum):
    COMPLETE = "Kn"
    C5 = "C5"
    C4 = "C4"
    PATH3 = "Path3"


@dataclass(frozen=True)
class PropertyPClass:
    kind: PropertyPKind
    n: Optional[int] = None


class ClassificationError(RuntimeError):
    """An exhaustive sweep met a value the family classification cannot place."""


def classify_property_p(g: Graph) -> Optional[PropertyPClass]:
    """Which of the four families a property-(P) graph belongs to.

    Returns None when (P) fails.  The single-vertex graph satisfies (P)
    vacuously but belongs to no family and also returns None; the
    classification concerns graphs with at least two vertices.
    """
    if not satisfies_property_p(g):
        return None
    n = g.vertex_count
    if n < 2:
        return None
    if len(g.edges) == n * (n - 1) // 2:
        return PropertyPClass(PropertyPKind.COMPLETE, n)
    degrees = sorted(popcount(m) for m in neighborhoods(g))
    if n == 3 and degrees == [1, 1, 2]:
        return PropertyPClass(PropertyPKind.PATH3)
    if n == 4 and degrees == [2, 2, 2, 2] and is_connected(g):
        return PropertyPClass(PropertyPKind.C4)
    if n == 5 and degrees == [2] * 5 and is_connected(g):
        return PropertyPClass(PropertyPKind.C5)
    raise ClassificationError(
        f"graph satisfies (P) but matches no family: n={n} edges={sorted(g.edges)}"
    )


# ---------------------------------------------------------------------------
# join-irreducible graphs


class JIKind(Enum):
    DISJOINT_TRIANGLES = "DisjointTriangles"
    C5 = "C5"
    K2_JOIN_EMPTY = "K2JoinEmpty"
    COMPLETE = "Complete"
    EMPTY_JOIN_EMPTY = "EmptyJoinEmpty"
    BALANCED_MULTIPARTITE = "BalancedMultipartite"
    NOT_IRREDUCIBLE = "NotIrreducible"


_JI_PARAM_COUNT = {
    JIKind.DISJOINT_TRIANGLES: 1,
    JIKind.C5: 0,
    JIKind.K2_JOIN_EMPTY: 1,
    JIKind.COMPLETE: 1,
    JIKind.EMPTY_JOIN_EMPTY: 2,
    JIKind.BALANCED_MULTIPARTITE: 2,
    JIKind.NOT_IRREDUCIBLE: 0,
}


@dataclass(frozen=True)
class JIGraphClass:
    kind: JIKind
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if len(self.params) != _JI_PARAM_COUNT[self.kind]:
            raise ValueError(f"{self.kind.value} takes {_JI_PARAM_COUNT[self.kind]} parameters")
        k, p = self.kind, self.params
        ok = True
        if k in (JIKind.DISJOINT_TRIANGLES, JIKind.K2_JOIN_EMPTY, JIKind.COMPLETE):
            ok = p[0] >= 2
        elif k is JIKind.EMPTY_JOIN_EMPTY:
            ok = 1 <= p[0] < p[1]
        elif k is JIKind.BALANCED_MULTIPARTITE:
            ok = p[0] >= 2 and p[1] >= 2
        if not ok:
            raise ValueError(f"parameters {p} violate the side conditions of {k.value}")

    @property
    def irreducible(self) -> bool:
        return self.kind is not JIKind.NOT_IRREDUCIBLE

    def __str__(self) -> str:
        if self.params:
            inner = ",".join(str(x) for x in self.params)
            return f"{self.kind.value}({inner})"
        return self.kind.value


def _multipartite_parts(g: Graph) -> Optional[list[int]]:
    """Sorted part sizes when g is complete multipartite, else None.

    In a complete multipartite graph the part of v is exactly the set of
    non-neighbors of v (v included), so consistency of those sets is the
    whole test.
    """
    n = g.vertex_count
    full = (1 << n) - 1
    nb = neighborhoods(g)
    parts: dict[int, int] = {}
    for v in range(n):
        pm = full & ~nb[v]
        parts[pm] = parts.get(pm, 0) | (1 << v)
    covered = 0
    for pm, members in parts.items():
        if pm != members:
            return None
        covered |= pm
    if covered != full:
        return None
    return sorted(popcount(pm) for pm in parts)


def classify_join_irreducible(g: Graph) -> JIGraphClass:
    """Match the isolated-vertex-free core against the six irreducible families."""
    core = reduce_isolated(g)
    if not core.edges:
        return JIGraphClass(JIKind.NOT_IRREDUCIBLE)
    comps = components(core)
    if len(comps) > 1:
        for comp in comps:
            inside = sum(1 for e in core.edges if e & comp == e)
            if popcount(comp) != 3 or inside != 3:
                return JIGraphClass(JIKind.NOT_IRREDUCIBLE)
        return JIGraphClass(JIKind.DISJOINT_TRIANGLES, (len(comps),))
    sizes = _multipartite_parts(core)
    if sizes is not None:
        r = len(sizes)
        if all(s == 1 for s in sizes):
            return JIGraphClass(JIKind.COMPLETE, (core.vertex_count,))
        if r == 3 and sizes[0] == sizes[1] == 1 and sizes[2] >= 2:
            return JIGraphClass(JIKind.K2_JOIN_EMPTY, (sizes[2],))
        if r == 2 and sizes[0] < sizes[1]:
            return JIGraphClass(JIKind.EMPTY_JOIN_EMPTY, (sizes[0], sizes[1]))
        if r >= 2 and sizes[0] == sizes[-1] >= 2:
            return JIGraphClass(JIKind.BALANCED_MULTIPARTITE, (r, sizes[0]))
        return JIGraphClass(JIKind.NOT_IRREDUCIBLE)
    nb = neighborhoods(core)
    if core.vertex_count == 5 and all(popcount(m) == 2 for m in nb):
        return JIGraphClass(JIKind.C5)
    return JIGraphClass(JIKind.NOT_IRREDUCIBLE)


def template_graph(cls: JIGraphClass) -> Graph:
    """A concrete representative of a join-irreducible family."""
    k, p = cls.kind, cls.params
    if k is JIKind.DISJOINT_TRIANGLES:
        g = complete(3)
        for _ in range(p[0] - 1):
            g = disjoint_union(g, complete(3))
        return g
    if k is JIKind.C5:
        return cycle(5)
    if k is JIKind.K2_JOIN_EMPTY:
        return graph_join(complete(2), empty(p[0]))
    if k is JIKind.COMPLETE:
        return complete(p[0])
    if k is JIKind.EMPTY_JOIN_EMPTY:
        return graph_join(empty(p[0]), empty(p[1]))
    if k is JIKind.BALANCED_MULTIPARTITE:
        g = empty(p[1])
        for _ in range(p[0] - 1):
            g = graph_join(g, empty(p[1]))
        return g
    raise ValueError("no template for the non-irreducible tag")


def matches_template(g: Graph, cls: JIGraphClass) -> bool:
    if not cls.irreducible:
        return False
    return is_isomorphic(reduce_isolated(g), template_graph(cls)) is not None


# ---------------------------------------------------------------------------
# contraction probe used by the verification sweeps


def _contraction_has_no_isolated(g: Graph, pair: tuple[int, int]) -> bool:
    he = contract(g, pair)
    return popcount(support_mask(he.edges)) == he.vertex_count


def lemma_aux_check(g: Graph) -> bool:
    """If some nonedge contraction keeps every vertex covered, some edge
    contraction must as well; returns whether that implication holds."""
    if not is_connected(g):
        raise ValueError("the contraction probe is defined for connected graphs")
    n = g.vertex_count
    all_pairs = list(itertools.combinations(range(1, n + 1), 2))
    edge_pairs = {tuple(sorted((a + 1, b + 1))) for e in g.edges for a, b in [bits_of(e)]}
    nonedges = [p for p in all_pairs if p not in edge_pairs]
    premise = any(_contraction_has_no_isolated(g, p) for p in nonedges)
    if not premise:
        return True
    return any(_contraction_has_no_isolated(g, p) for p in edge_pairs)
