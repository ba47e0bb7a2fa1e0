"""Hypergraphs as the combinatorial twin of multilinear GF(2) polynomials.

Vertices are 1..n and a hyperedge is a vertex-set bitmask, so a hypergraph
and a polynomial are literally the same data (edges = monomials, the empty
edge = the constant monomial 1).  The module carries the minor machinery on
the hypergraph side: quotient maps, pair contraction, isomorphism and
automorphism search, and the contraction-class irreducibility test.

Isolated vertices are kept; support reduction is an explicit step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from . import bfcore
from .bfcore import Zhegalkin, bits_of, mask_of, popcount, support_mask, vars_of

MAX_VERTICES = 63
AUTOMORPHISM_MAX_VERTICES = 13


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus a duplicate-free set of hyperedge bitmasks.

    ``vertex_count`` 0 is allowed only as the result of reducing an edgeless
    value; every ordinary construction uses at least one vertex.
    """

    vertex_count: int
    edges: frozenset[int]

    def __post_init__(self) -> None:
        if not 0 <= self.vertex_count <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        top = 1 << self.vertex_count
        for e in self.edges:
            if not 0 <= e < top:
                raise ValueError(f"edge {e:#x} names a vertex beyond {self.vertex_count}")

    @classmethod
    def from_sets(cls, vertex_count: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(vertex_count, frozenset(mask_of(e) for e in edges))

    def edge_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(vars_of(e) for e in self.edges)


@dataclass(frozen=True)
class VertexMap:
    """A total map {1..source_count} -> {1..target_count}."""

    source_count: int
    target_count: int
    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.image) != self.source_count:
            raise ValueError("image must assign every source vertex")
        for t in self.image:
            if not 1 <= t <= self.target_count:
                raise ValueError(f"image value {t} outside 1..{self.target_count}")

    def apply_vertex(self, v: int) -> int:
        return self.image[v - 1]

    def apply_mask(self, mask: int) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << (self.image[low.bit_length() - 1] - 1)
            mask ^= low
        return out

    @classmethod
    def identity(cls, n: int) -> "VertexMap":
        return cls(n, n, tuple(range(1, n + 1)))


@dataclass(frozen=True)
class ContractionClass:
    """One block of the pair partition: pairs whose contractions are isomorphic."""

    pairs: tuple[tuple[int, int], ...]
    canon: Zhegalkin
    ess: int


@dataclass(frozen=True)
class ContractionClassPartition:
    support: frozenset[int]
    classes: tuple[ContractionClass, ...]


# ---------------------------------------------------------------------------
# the polynomial bijection


def polynomial_of(h: Hypergraph) -> Zhegalkin:
    if h.vertex_count < 1:
        raise ValueError("a polynomial needs at least one variable")
    return Zhegalkin(h.vertex_count, h.edges)


def hypergraph_of(p: Zhegalkin) -> Hypergraph:
    return Hypergraph(p.arity, p.monomials)


def support(h: Hypergraph) -> frozenset[int]:
    return vars_of(support_mask(h.edges))


def support_reduce(h: Hypergraph) -> Hypergraph:
    """Drop isolated vertices, renumbering the support contiguously."""
    sup = support_mask(h.edges)
    positions = bits_of(sup)
    if positions == list(range(h.vertex_count)):
        return h
    images = [0] * h.vertex_count
    for new, old in enumerate(positions):
        images[old] = 1 << new
    edges = frozenset(bfcore._remap_bijective(e, images) for e in h.edges)
    return Hypergraph(len(positions), edges)


# ---------------------------------------------------------------------------
# quotient maps


def verify_quotient_map(m: VertexMap, hp: Hypergraph, h: Hypergraph) -> bool:
    """Check the parity condition: each target edge has an odd preimage count.

    Only images of hp's edges can have nonzero count, so folding them with
    cancellation and comparing against h's edge set is the whole check.
    """
    if m.source_count != hp.vertex_count or m.target_count != h.vertex_count:
        raise ValueError("vertex map does not fit the given hypergraphs")
    images = [1 << (t - 1) for t in m.image]
    return bfcore.map_monomials(hp.edges, images) == h.edges


def compose_quotients(m1: VertexMap, m2: VertexMap) -> VertexMap:
    """The composite map applying m1 first, then m2."""
    if m1.target_count != m2.source_count:
        raise ValueError("maps are not composable: range mismatch")
    return VertexMap(
        m1.source_count,
        m2.target_count,
        tuple(m2.image[t - 1] for t in m1.image),
    )


# ---------------------------------------------------------------------------
# contraction of a vertex pair


def _collapse_images(n: int, i: int, j: int) -> list[int]:
    lo, hi = min(i, j), max(i, j)
    out = []
    for v in range(1, n + 1):
        if v == i or v == j:
            new = lo
        elif v > hi:
            new = v - 1
        else:
            new = v
        out.append(new)
    return out


def collapse_map(n: int, i: int, j: int) -> VertexMap:
    """The canonical quotient map onto the contraction: i,j -> l_e, rest kept.

    The merged vertex takes index min(i,j); vertices above max(i,j) shift
    down by one so the vertex set stays contiguous.
    """
    if i == j:
        raise ValueError("contraction needs two distinct vertices")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("contracted vertices must exist")
    return VertexMap(n, n - 1, tuple(_collapse_images(n, i, j)))


def contract(h: Hypergraph, pair: tuple[int, int]) -> Hypergraph:
    """Identify the two vertices of ``pair``; edges cancel by parity."""
    i, j = pair
    cmap = collapse_map(h.vertex_count, i, j)
    images = [1 << (t - 1) for t in cmap.image]
    return Hypergraph(h.vertex_count - 1, bfcore.map_monomials(h.edges, images))


# ---------------------------------------------------------------------------
# isomorphism and automorphisms


def _vertex_profiles(h: Hypergraph) -> list[tuple[int, ...]]:
    prof: list[list[int]] = [[] for _ in range(h.vertex_count)]
    for e in h.edges:
        size = popcount(e)
        for b in bits_of(e):
            prof[b].append(size)
    return [tuple(sorted(p)) for p in prof]


def _match(h1: Hypergraph, h2: Hypergraph, find_all: bool) -> list[tuple[int, ...]]:
    """Backtracking search for edge-preserving vertex bijections h1 -> h2.

    Returns 0-based image tuples; with ``find_all`` every bijection is
    collected, otherwise the search stops at the first.
    """
    n = h1.vertex_count
    if (0 in h1.edges) != (0 in h2.edges):
        return []
    if n == 0:
        return [()]
    edges1, edges2 = h1.edges, h2.edges
    inc1: list[list[int]] = [[] for _ in range(n)]
    inc2: list[list[int]] = [[] for _ in range(n)]
    for e in edges1:
        for b in bits_of(e):
            inc1[b].append(e)
    for e in edges2:
        for b in bits_of(e):
            inc2[b].append(e)
    prof1 = _vertex_profiles(h1)
    prof2 = _vertex_profiles(h2)
    if sorted(prof1) != sorted(prof2):
        return []

    img = [-1] * n
    pre = [-1] * n
    results: list[tuple[int, ...]] = []
    full = (1 << n) - 1

    def fold(mask: int, table: list[int]) -> int:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << table[low.bit_length() - 1]
            mask ^= low
        return out

    def search(assigned: int, image_mask: int) -> bool:
        if assigned == full:
            results.append(tuple(img))
            return not find_all
        # most-constrained vertex first: completing edges prunes hardest
        best_v, best_score = -1, None
        for v in range(n):
            if assigned >> v & 1:
                continue
            rest = ~(assigned | 1 << v)
            completed = sum(1 for e in inc1[v] if e & rest == 0)
            score = (-completed, -len(inc1[v]), v)
            if best_score is None or score < best_score:
                best_v, best_score = v, score
        v = best_v
        vbit = 1 << v
        new_assigned = assigned | vbit
        closing = [e for e in inc1[v] if e & ~new_assigned == 0]
        for w in range(n):
            wbit = 1 << w
            if image_mask & wbit or prof1[v] != prof2[w]:
                continue
            img[v] = w
            pre[w] = v
            new_image = image_mask | wbit
            ok = all(fold(e, img) in edges2 for e in closing)
            if ok:
                for e2 in inc2[w]:
                    if e2 & ~new_image == 0 and fold(e2, pre) not in edges1:
                        ok = False
                        break
            if ok and search(new_assigned, new_image):
                img[v] = -1
                pre[w] = -1
                return True
            img[v] = -1
            pre[w] = -1
        return False

    search(0, 0)
    return results


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> Optional[VertexMap]:
    """An edge-preserving vertex bijection, or None.

    Both hypergraphs must have the same vertex count; reduce supports first
    when comparing values with different numbers of isolated vertices.
    """
    if h1.vertex_count != h2.vertex_count or len(h1.edges) != len(h2.edges):
        return None
    if sorted(map(popcount, h1.edges)) != sorted(map(popcount, h2.edges)):
        return None
    found = _match(h1, h2, find_all=False)
    if not found:
        return None
    n = h1.vertex_count
    return VertexMap(n, n, tuple(w + 1 for w in found[0]))


def automorphisms(h: Hypergraph) -> list[VertexMap]:
    """Every edge-preserving vertex permutation, identity included."""
    if h.vertex_count > AUTOMORPHISM_MAX_VERTICES:
        raise ValueError(
            f"automorphism search is capped at {AUTOMORPHISM_MAX_VERTICES} vertices"
        )
    n = h.vertex_count
    return [
        VertexMap(n, n, tuple(w + 1 for w in found))
        for found in sorted(_match(h, h, find_all=True))
    ]


def is_2set_transitive(h: Hypergraph) -> bool:
    """Does the automorphism group move any vertex pair to any other?"""
    n = h.vertex_count
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if len(pairs) <= 1:
        return True
    group = automorphisms(h)
    a, b = pairs[0]
    orbit = {frozenset((g.apply_vertex(a), g.apply_vertex(b))) for g in group}
    return len(orbit) == len(pairs)


# ---------------------------------------------------------------------------
# contraction classes and irreducibility


def _iso_invariant(h: Hypergraph) -> tuple:
    return (
        h.vertex_count,
        len(h.edges),
        0 in h.edges,
        tuple(sorted(map(popcount, h.edges))),
        tuple(sorted(_vertex_profiles(h))),
    )


def _support_pairs(h: Hypergraph) -> list[tuple[int, int]]:
    return list(itertools.combinations(sorted(support(h)), 2))


def contraction_classes(h: Hypergraph) -> ContractionClassPartition:
    """Partition the support pairs by isomorphism of their contractions."""
    pairs = _support_pairs(h)
    if not pairs:
        raise ValueError("contraction classes need a support of at least two vertices")
    groups: list[tuple[tuple, Hypergraph, list[tuple[int, int]]]] = []
    for pair in pairs:
        he = contract(h, pair)
        key = _iso_invariant(he)
        for gkey, rep, members in groups:
            if gkey == key and is_isomorphic(rep, he) is not None:
                members.append(pair)
                break
        else:
            groups.append((key, he, [pair]))
    classes = []
    for _, rep, members in groups:
        poly = polynomial_of(rep)
        classes.append(
            ContractionClass(
                pairs=tuple(sorted(members)),
                canon=bfcore.canonical_form(poly),
                ess=len(support(rep)),
            )
        )
    classes.sort(key=lambda c: c.pairs[0])
    return ContractionClassPartition(support=support(h), classes=tuple(classes))


def lemma_condition_holds(partition: ContractionClassPartition) -> bool:
    """Is there a class whose contractions strictly dominate all others in ess?"""
    top = max(c.ess for c in partition.classes)
    return sum(1 for c in partition.classes if c.ess == top) == 1


def is_irreducible_by_contractions(h: Hypergraph) -> bool:
    """Irreducibility via contraction classes.

    The criterion asks for a pair class whose contractions have strictly
    larger essential arity than every other pair's; equivalently the pairs
    achieving the maximal essential arity must form a single isomorphism
    class, which is all this checks.
    """
    pairs = _support_pairs(h)
    if not pairs:
        return False
    contractions = [contract(h, pair) for pair in pairs]
    esses = [popcount(support_mask(he.edges)) for he in contractions]
    top = max(esses)
    top_hs = [he for he, e in zip(contractions, esses) if e == top]
    first = top_hs[0]
    key = _iso_invariant(first)
    for other in top_hs[1:]:
        if _iso_invariant(other) != key or is_isomorphic(first, other) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# essential-arity drop analysis


@dataclass(frozen=True)
class EssDropReport:
    """Why contracting ``pair`` dropped the essential arity by ``drop``.

    ``le_isolated`` flags the merged vertex ending up outside the support;
    ``le_parity_condition`` is the equivalent cancellation condition computed
    straight from the edges.  ``isolated_vertices`` lists other support
    vertices that became isolated, each with its evaluated edge condition.
    """

    pair: tuple[int, int]
    drop: int
    le_isolated: bool
    le_parity_condition: bool
    isolated_vertices: tuple[int, ...]
    vertex_conditions: tuple[tuple[int, bool], ...]


def ess_drop_analysis(h: Hypergraph, pair: tuple[int, int]) -> EssDropReport:
    i, j = pair
    he = contract(h, pair)
    sup_before = support_mask(h.edges)
    drop = popcount(sup_before) - popcount(support_mask(he.edges))

    e_mask = (1 << (i - 1)) | (1 << (j - 1))
    ibit, jbit = 1 << (i - 1), 1 << (j - 1)
    edges = h.edges

    le_new_bit = min(i, j) - 1
    le_isolated = not (support_mask(he.edges) >> le_new_bit) & 1

    # merged vertex isolated iff every residue F meets an even number of
    # the three possible donors F|{i}, F|{j}, F|{i,j}
    residues = {e & ~e_mask for e in edges if e & e_mask}
    le_parity = all(
        sum(1 for cand in (f | ibit, f | jbit, f | e_mask) if cand in edges) % 2 == 0
        for f in residues
    )

    isolated: list[int] = []
    conditions: list[tuple[int, bool]] = []
    collapse = _collapse_images(h.vertex_count, i, j)
    after_sup = support_mask(he.edges)
    for b in bits_of(sup_before):
        v = b + 1
        if v in (i, j):
            continue
        if (after_sup >> (collapse[v - 1] - 1)) & 1:
            continue
        isolated.append(v)
        vbit = 1 << b
        through_v = [e for e in edges if e & vbit]
        cond = all(e & e_mask for e in through_v) and all(
            sum(1 for cand in (s | e_mask, s | ibit, s | jbit) if cand in edges) % 2 == 0
            for s in {e & ~e_mask for e in through_v}
        )
        conditions.append((v, cond))
    return EssDropReport(
        pair=(i, j),
        drop=drop,
        le_isolated=le_isolated,
        le_parity_condition=le_parity,
        isolated_vertices=tuple(isolated),
        vertex_conditions=tuple(conditions),
    )
