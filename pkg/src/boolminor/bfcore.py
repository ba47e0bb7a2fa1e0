"""Boolean functions and the variable-identification minor quasi-order.

A function lives in two interchangeable representations: a truth table
(the 2^n evaluation bits) and a multilinear GF(2) polynomial (a set of
monomials, also called the algebraic normal form).  Conventions, fixed once
and used everywhere:

* point indices: x_k is bit k-1 of the index, so x_1 is the least
  significant bit;
* monomials: a bitmask with bit k-1 set when x_k occurs; the empty mask 0
  is the constant monomial 1; the empty monomial *set* is the zero
  polynomial;
* hex serialization of truth tables writes the most significant bit first.

Truth-table operations are capped at arity 20, polynomial-only operations
at 63 variables (a monomial must fit a machine word).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping, Optional

MAX_TABLE_ARITY = 20
MAX_POLY_ARITY = 63


# ---------------------------------------------------------------------------
# bitmask helpers


def popcount(x: int) -> int:
    return x.bit_count()


def bits_of(mask: int) -> list[int]:
    """0-based positions of the set bits, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(variables: Iterable[int]) -> int:
    """Bitmask of 1-based variable indices."""
    m = 0
    for v in variables:
        if v < 1:
            raise ValueError(f"variable index must be >= 1, got {v}")
        m |= 1 << (v - 1)
    return m


def vars_of(mask: int) -> frozenset[int]:
    """1-based variable indices of a bitmask."""
    return frozenset(b + 1 for b in bits_of(mask))


def _toggle(acc: set[int], value: int) -> None:
    # GF(2): equal monomials cancel in pairs.
    if value in acc:
        acc.discard(value)
    else:
        acc.add(value)


def map_monomials(monomials: Iterable[int], images: list[int]) -> frozenset[int]:
    """Apply a per-variable substitution to a set of monomial masks.

    ``images[b]`` is the monomial mask substituted for variable bit ``b``;
    duplicates produced by the substitution cancel over GF(2).
    """
    acc: set[int] = set()
    for m in monomials:
        im = 0
        while m:
            low = m & -m
            im |= images[low.bit_length() - 1]
            m ^= low
        _toggle(acc, im)
    return frozenset(acc)


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function as its 2^arity evaluation bits packed into an int.

    Bit i of ``bits`` is f at the point whose coordinates are the binary
    digits of i (x_1 least significant).
    """

    arity: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.arity <= MAX_TABLE_ARITY:
            raise ValueError(f"arity must be in 1..{MAX_TABLE_ARITY}, got {self.arity}")
        size = 1 << self.arity
        if not 0 <= self.bits < (1 << size):
            raise ValueError("truth-table bits out of range for the declared arity")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "TruthTable":
        vals = list(values)
        n = len(vals).bit_length() - 1
        if len(vals) != 1 << n or n < 1:
            raise ValueError("bit vector length must be a power of two, at least 2")
        bits = 0
        for i, v in enumerate(vals):
            if v not in (0, 1, True, False):
                raise ValueError(f"truth-table entries must be 0/1, got {v!r}")
            if v:
                bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def from_hex(cls, text: str, arity: int) -> "TruthTable":
        return cls(arity, int(text, 16))

    def to_hex(self) -> str:
        width = ((1 << self.arity) + 3) // 4
        return format(self.bits, f"0{width}X")

    def value(self, point: int) -> int:
        return (self.bits >> point) & 1

    def values(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(1 << self.arity)]


@dataclass(frozen=True)
class Zhegalkin:
    """A multilinear GF(2) polynomial: a set of monomial bitmasks."""

    arity: int
    monomials: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= self.arity <= MAX_POLY_ARITY:
            raise ValueError(f"arity must be in 1..{MAX_POLY_ARITY}, got {self.arity}")
        object.__setattr__(self, "monomials", frozenset(self.monomials))
        top = 1 << self.arity
        for m in self.monomials:
            if not 0 <= m < top:
                raise ValueError(f"monomial {m:#x} names a variable beyond arity {self.arity}")

    @classmethod
    def from_sets(cls, arity: int, monomials: Iterable[Iterable[int]]) -> "Zhegalkin":
        return cls(arity, frozenset(mask_of(mono) for mono in monomials))

    def monomial_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(vars_of(m) for m in self.monomials)

    def evaluate(self, point: int) -> int:
        """Pointwise value; the point is a bitmask of true variables."""
        acc = 0
        for m in self.monomials:
            if m & point == m:
                acc ^= 1
        return acc


@dataclass(frozen=True)
class MinorWitness:
    """A partition of the essential variables of the larger function.

    Each block collapses to a single variable of the minor; blocks are stored
    ascending and ordered by their smallest member.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("witness blocks must be nonempty")
            if set(block) & seen:
                raise ValueError("witness blocks must be pairwise disjoint")
            seen.update(block)


class GapTag(Enum):
    LINEAR_SUM = "LinearSum"
    XY_PLUS_X = "XYplusX"
    TRIANGLE = "Triangle"
    TRIANGLE_LINEAR = "TriangleLinear"
    GAP_ONE = "GapOne"


@dataclass(frozen=True)
class GapClass:
    """Which of the four gap-two polynomial families a function matches."""

    tag: GapTag
    constant: Optional[int] = None

    def __post_init__(self) -> None:
        if self.tag is GapTag.GAP_ONE:
            if self.constant is not None:
                raise ValueError("GapOne carries no constant")
        elif self.constant not in (0, 1):
            raise ValueError("gap-two families carry a constant in {0, 1}")


# ---------------------------------------------------------------------------
# truth table <-> polynomial

def _mobius(bits: int, arity: int) -> int:
    """In-place binary Moebius transform; an involution on 2^arity-bit words."""
    size = 1 << arity
    full = (1 << size) - 1
    step = 1
    while step < size:
        two = step << 1
        pattern = (full // ((1 << two) - 1)) * ((1 << step) - 1)
        bits ^= (bits & pattern) << step
        step = two
    return bits & full


def zhegalkin_from_truth_table(table: TruthTable) -> Zhegalkin:
    """The unique multilinear GF(2) polynomial evaluating to the table."""
    anf = _mobius(table.bits, table.arity)
    return Zhegalkin(table.arity, frozenset(bits_of(anf)))


def truth_table_from_zhegalkin(poly: Zhegalkin) -> TruthTable:
    """Inverse of :func:`zhegalkin_from_truth_table`."""
    if poly.arity > MAX_TABLE_ARITY:
        raise ValueError(f"truth tables are capped at arity {MAX_TABLE_ARITY}")
    anf = 0
    for m in poly.monomials:
        anf |= 1 << m
    return TruthTable(poly.arity, _mobius(anf, poly.arity))


# ---------------------------------------------------------------------------
# essential variables, substitution, identification


def support_mask(monomials: Iterable[int]) -> int:
    s = 0
    for m in monomials:
        s |= m
    return s


def essential_variables(poly: Zhegalkin) -> frozenset[int]:
    """Variables that actually occur, i.e. the union of the monomials."""
    return vars_of(support_mask(poly.monomials))


def essential_arity(poly: Zhegalkin) -> int:
    return popcount(support_mask(poly.monomials))


def substitute(poly: Zhegalkin, sigma: Mapping[int, int], arity: int) -> Zhegalkin:
    """Replace each variable i by x_sigma(i) and reduce over GF(2).

    ``sigma`` must be total on 1..poly.arity with values in 1..arity.
    """
    if not 1 <= arity <= MAX_POLY_ARITY:
        raise ValueError(f"target arity must be in 1..{MAX_POLY_ARITY}")
    images = []
    for v in range(1, poly.arity + 1):
        if v not in sigma:
            raise ValueError(f"substitution is not total: variable {v} unmapped")
        t = sigma[v]
        if not 1 <= t <= arity:
            raise ValueError(f"substitution sends {v} to {t}, outside 1..{arity}")
        images.append(1 << (t - 1))
    return Zhegalkin(arity, map_monomials(poly.monomials, images))


def identify(poly: Zhegalkin, i: int, j: int) -> Zhegalkin:
    """Identify variable j with variable i (j becomes inessential)."""
    if i == j:
        raise ValueError("degenerate identification: the variables must differ")
    if not (1 <= i <= poly.arity and 1 <= j <= poly.arity):
        raise ValueError("identified variables must not exceed the arity")
    sigma = {v: v for v in range(1, poly.arity + 1)}
    sigma[j] = i
    return substitute(poly, sigma, poly.arity)


def _identify_masks(monomials: frozenset[int], bi: int, bj: int) -> frozenset[int]:
    # 0-based bit positions; fast path used by the sweeps below.
    acc: set[int] = set()
    jbit = 1 << bj
    ibit = 1 << bi
    for m in monomials:
        if m & jbit:
            m = (m ^ jbit) | ibit
        _toggle(acc, m)
    return frozenset(acc)


# ---------------------------------------------------------------------------
# equivalence and canonical forms


def _reduce_masks(monomials: frozenset[int]) -> tuple[frozenset[int], int]:
    """Relabel the occurring variables onto bits 0..ess-1, order preserved."""
    sup = support_mask(monomials)
    if sup == 0:
        return monomials, 0
    positions = bits_of(sup)
    ess = len(positions)
    if positions == list(range(ess)):
        return monomials, ess
    images = [0] * (positions[-1] + 1)
    for new, old in enumerate(positions):
        images[old] = 1 << new
    reduced = frozenset(_remap_bijective(m, images) for m in monomials)
    return reduced, ess


def _remap_bijective(mask: int, images: list[int]) -> int:
    out = 0
    while mask:
        low = mask & -mask
        out |= images[low.bit_length() - 1]
        mask ^= low
    return out


def _invariant_key(monomials: frozenset[int]) -> tuple:
    """A cheap permutation-invariant fingerprint used to prune comparisons."""
    sizes = sorted(popcount(m) for m in monomials)
    sup = support_mask(monomials)
    degrees = sorted(sum(1 for m in monomials if m >> b & 1) for b in bits_of(sup))
    return (popcount(sup), tuple(sizes), tuple(degrees))


@lru_cache(maxsize=1 << 16)
def _canonical_reduced(reduced: frozenset[int], ess: int) -> tuple[int, ...]:
    """Lexicographically least sorted monomial tuple over relabelings.

    ``reduced`` must already use bits 0..ess-1.
    """
    if ess <= 1:
        return tuple(sorted(reduced))
    best: Optional[tuple[int, ...]] = None
    for perm in itertools.permutations(range(ess)):
        images = [1 << p for p in perm]
        cur = tuple(sorted(_remap_bijective(m, images) for m in reduced))
        if best is None or cur < best:
            best = cur
    assert best is not None
    return best


def canonical_form(poly: Zhegalkin) -> Zhegalkin:
    """The distinguished representative of the equivalence class of ``poly``.

    Essential variables are relabeled 1..ess; among all relabelings the one
    whose ascending monomial-mask sequence is lexicographically least wins.
    Constants canonicalize at arity 1.
    """
    reduced, ess = _reduce_masks(poly.monomials)
    canon = _canonical_reduced(reduced, ess)
    return Zhegalkin(max(ess, 1), frozenset(canon))


def _equivalent_masks(m1: frozenset[int], m2: frozenset[int]) -> bool:
    r1, e1 = _reduce_masks(m1)
    r2, e2 = _reduce_masks(m2)
    if e1 != e2 or len(r1) != len(r2):
        return False
    if e1 <= 1:
        return r1 == r2
    if _invariant_key(r1) != _invariant_key(r2):
        return False
    return _canonical_reduced(r1, e1) == _canonical_reduced(r2, e2)


def is_equivalent(f: Zhegalkin, g: Zhegalkin) -> bool:
    """Equality up to permutation of essential variables and dummy addition.

    Delegates to hypergraph isomorphism on the support-reduced associated
    hypergraphs; functions of different declared arity compare fine.
    """
    r1, e1 = _reduce_masks(f.monomials)
    r2, e2 = _reduce_masks(g.monomials)
    if e1 != e2 or len(r1) != len(r2):
        return False
    if e1 <= 1:
        return r1 == r2
    if _invariant_key(r1) != _invariant_key(r2):
        return False
    from . import hypergraph as hg

    h1 = hg.Hypergraph(e1, r1)
    h2 = hg.Hypergraph(e2, r2)
    return hg.is_isomorphic(h1, h2) is not None


# ---------------------------------------------------------------------------
# the minor quasi-order


def _partitions(items: tuple[int, ...], min_blocks: int):
    """Partitions of ``items`` ordered by block count, then lexicographically.

    Yields tuples of tuples; the coarsest admissible partitions come first,
    which makes the first witness found deterministic.
    """
    n = len(items)
    if n == 0:
        if min_blocks <= 0:
            yield ()
        return
    for k in range(max(1, min_blocks), n + 1):
        rgs = [0] * n
        yield from _rgs_exact(items, rgs, 1, 0, k)


def _rgs_exact(items, rgs, pos, mx, k):
    n = len(items)
    if pos == n:
        if mx + 1 == k:
            blocks: list[list[int]] = [[] for _ in range(k)]
            for idx, cls in enumerate(rgs):
                blocks[cls].append(items[idx])
            yield tuple(tuple(b) for b in blocks)
        return
    # not enough positions left to open the remaining classes
    if (k - 1 - mx) > (n - pos):
        return
    for c in range(min(mx + 1, k - 1) + 1):
        rgs[pos] = c
        yield from _rgs_exact(items, rgs, pos + 1, max(mx, c), k)


def is_minor(g: Zhegalkin, f: Zhegalkin) -> Optional[MinorWitness]:
    """Witness that g arises from f by identifying variables, or None.

    Searches partitions of the essential variables of f, coarsest first;
    a partition is a witness when collapsing each block to one variable
    yields a polynomial equivalent to g.
    """
    fvars = tuple(sorted(essential_variables(f)))
    g_reduced, g_ess = _reduce_masks(g.monomials)
    if g_ess > len(fvars):
        return None
    if not fvars:
        return MinorWitness(()) if g_reduced == f.monomials else None
    g_key = (len(g_reduced), _invariant_key(g_reduced))
    g_canon = _canonical_reduced(g_reduced, g_ess) if g_ess > 1 else tuple(sorted(g_reduced))
    for blocks in _partitions(fvars, max(g_ess, 1)):
        images = [0] * f.arity
        for block in blocks:
            rep = 1 << (block[0] - 1)
            for v in block:
                images[v - 1] = rep
        candidate = map_monomials(f.monomials, images)
        c_reduced, c_ess = _reduce_masks(candidate)
        if c_ess != g_ess or (len(c_reduced), _invariant_key(c_reduced)) != g_key:
            continue
        c_canon = _canonical_reduced(c_reduced, c_ess) if c_ess > 1 else tuple(sorted(c_reduced))
        if c_canon == g_canon:
            return MinorWitness(blocks)
    return None


def arity_gap(f: Zhegalkin) -> int:
    """Minimum essential-arity drop over all one-step identifications.

    Defined only for ess >= 2; the result is always 1 or 2.
    """
    fvars = sorted(essential_variables(f))
    if len(fvars) < 2:
        raise ValueError("arity gap requires at least two essential variables")
    best_after = -1
    for i, j in itertools.combinations(fvars, 2):
        after = popcount(support_mask(_identify_masks(f.monomials, i - 1, j - 1)))
        if after > best_after:
            best_after = after
    return len(fvars) - best_after


def classify_gap(f: Zhegalkin) -> GapClass:
    """Match the function against the four gap-two polynomial families.

    The match is on the support-reduced monomial structure, which is the
    same thing as matching the canonical form up to variable permutation.
    """
    reduced, ess = _reduce_masks(f.monomials)
    if ess < 2:
        raise ValueError("gap classification requires at least two essential variables")
    constant = 1 if 0 in reduced else 0
    body = [m for m in reduced if m]
    singles = [m for m in body if popcount(m) == 1]
    doubles = [m for m in body if popcount(m) == 2]
    sizes = sorted(popcount(m) for m in body)

    if len(singles) == len(body) >= 2:
        return GapClass(GapTag.LINEAR_SUM, constant)
    if sizes == [1, 2] and singles[0] & doubles[0] == singles[0]:
        return GapClass(GapTag.XY_PLUS_X, constant)
    triangle = len(doubles) == 3 and popcount(support_mask(doubles)) == 3
    if sizes == [2, 2, 2] and triangle:
        return GapClass(GapTag.TRIANGLE, constant)
    if sizes == [1, 1, 2, 2, 2] and triangle:
        tri_support = support_mask(doubles)
        if (
            singles[0] != singles[1]
            and singles[0] & tri_support
            and singles[1] & tri_support
        ):
            return GapClass(GapTag.TRIANGLE_LINEAR, constant)
    return GapClass(GapTag.GAP_ONE)


def one_step_identification_classes(f: Zhegalkin) -> list[Zhegalkin]:
    """Canonical forms of f with one pair of essential variables identified."""
    fvars = sorted(essential_variables(f))
    seen: dict[frozenset[int], Zhegalkin] = {}
    for i, j in itertools.combinations(fvars, 2):
        masks = _identify_masks(f.monomials, i - 1, j - 1)
        reduced, ess = _reduce_masks(masks)
        canon = frozenset(_canonical_reduced(reduced, ess))
        if canon not in seen:
            seen[canon] = Zhegalkin(max(ess, 1), canon)
    return sorted(seen.values(), key=lambda p: (essential_arity(p), sorted(p.monomials)))


def is_irreducible_direct(f: Zhegalkin) -> Optional[Zhegalkin]:
    """The canonical dominating strict minor of f, if one exists.

    Every strict minor lies below some one-step identification, so f is
    irreducible exactly when one one-step class sits above all the others.
    A dominating class must be the unique class of maximal essential arity;
    only that candidate needs testing.
    """
    classes = one_step_identification_classes(f)
    if not classes:
        return None
    top_ess = max(essential_arity(c) for c in classes)
    top = [c for c in classes if essential_arity(c) == top_ess]
    if len(top) > 1:
        return None
    champion = top[0]
    for other in classes:
        if other is champion:
            continue
        if is_minor(other, champion) is None:
            return None
    return champion
