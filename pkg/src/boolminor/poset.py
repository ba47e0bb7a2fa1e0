"""Desk-scale enumeration of the quotient poset of Boolean function classes.

Every truth table on up to four variables is canonicalized; the distinct
canonical forms are the equivalence classes.  Each class record carries its
essential arity, arity gap, parity block, lower covers (the maximal strict
minors), level, and irreducibility verdict.  The four blocks come from two
minor-invariant bits: the parity of the number of nonconstant monomials and
the constant term.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from . import bfcore
from .bfcore import Zhegalkin, bits_of, essential_arity

MAX_ENUM_ESS = 4

_CACHE_HEADER = "#boolminor-classes v1"


class Block(Enum):
    ZERO = "Zero"
    ONE = "One"
    PROJECTION = "Projection"
    NEGATED_PROJECTION = "NegatedProjection"


def block_of(poly: Zhegalkin) -> Block:
    nonconstant = sum(1 for m in poly.monomials if m)
    constant = 0 in poly.monomials
    if nonconstant % 2 == 0:
        return Block.ONE if constant else Block.ZERO
    return Block.NEGATED_PROJECTION if constant else Block.PROJECTION


@dataclass(frozen=True)
class ClassRecord:
    """One equivalence class of the minor order, by canonical representative."""

    canon: Zhegalkin
    ess: int
    gap: Optional[int]
    block: Block
    level: int
    level_provisional: bool
    lower_covers: tuple[Zhegalkin, ...]
    irreducible: bool

    def key(self) -> frozenset[int]:
        return self.canon.monomials


def _canon_key(poly: Zhegalkin) -> frozenset[int]:
    return poly.monomials


def _maximal_classes(classes: list[Zhegalkin]) -> tuple[Zhegalkin, ...]:
    maximal = []
    for a in classes:
        dominated = any(
            b is not a and bfcore.is_minor(a, b) is not None for b in classes
        )
        if not dominated:
            maximal.append(a)
    return tuple(sorted(maximal, key=lambda p: sorted(p.monomials)))


def lower_covers(canon: Zhegalkin, universe: Iterable[ClassRecord]) -> tuple[Zhegalkin, ...]:
    """Maximal strict-minor classes of a canonical form.

    The universe must contain every class of smaller essential arity; the
    one-step identification classes are looked up there to catch gaps.
    """
    known = {r.key() for r in universe}
    one_steps = bfcore.one_step_identification_classes(canon)
    for cls in one_steps:
        if _canon_key(cls) not in known:
            raise ValueError("universe is incomplete: missing a one-step class")
    return _maximal_classes(one_steps)


def enumerate_classes(max_ess: int, cache_path: Optional[str] = None) -> tuple[ClassRecord, ...]:
    """Canonicalize all truth tables on ``max_ess`` variables and build records."""
    if not 0 <= max_ess <= MAX_ENUM_ESS:
        raise ValueError(f"class enumeration is capped at ess {MAX_ENUM_ESS}")
    if cache_path and os.path.exists(cache_path):
        cached = _read_cache(cache_path, max_ess)
        if cached is not None:
            return cached
    records = _compute_records(max_ess)
    if cache_path:
        _write_cache(cache_path, max_ess, records)
    return records


def _compute_records(max_ess: int) -> tuple[ClassRecord, ...]:
    arity = max(max_ess, 1)
    size = 1 << arity
    canons: dict[frozenset[int], Zhegalkin] = {}
    for table_bits in range(1 << size):
        anf = bfcore._mobius(table_bits, arity)
        monomials = frozenset(bits_of(anf))
        reduced, ess = bfcore._reduce_masks(monomials)
        canon = frozenset(bfcore._canonical_reduced(reduced, ess))
        if canon not in canons:
            canons[canon] = Zhegalkin(max(ess, 1), canon)
    if max_ess == 0:
        # only the two constants exist below arity 1
        canons = {
            k: v for k, v in canons.items() if essential_arity(v) == 0
        }

    covers: dict[frozenset[int], tuple[Zhegalkin, ...]] = {}
    for key, canon in canons.items():
        one_steps = bfcore.one_step_identification_classes(canon)
        covers[key] = _maximal_classes(one_steps)

    # levels by iterative stripping: a class enters the current level once
    # every class strictly below it has already been assigned
    strict_lower: dict[frozenset[int], set[frozenset[int]]] = {}

    def lower_set(key: frozenset[int]) -> set[frozenset[int]]:
        if key in strict_lower:
            return strict_lower[key]
        acc: set[frozenset[int]] = set()
        for cov in covers[key]:
            ck = _canon_key(cov)
            acc.add(ck)
            acc |= lower_set(ck)
        strict_lower[key] = acc
        return acc

    levels_map: dict[frozenset[int], int] = {}
    remaining = set(canons)
    level = 0
    while remaining:
        current = [k for k in remaining if not (lower_set(k) & remaining)]
        if not current:
            raise AssertionError("cycle detected while leveling the class poset")
        for k in current:
            levels_map[k] = level
        remaining -= set(current)
        level += 1

    records = []
    for key, canon in canons.items():
        ess = essential_arity(canon)
        gap = bfcore.arity_gap(canon) if ess >= 2 else None
        cov = covers[key]
        records.append(
            ClassRecord(
                canon=canon,
                ess=ess,
                gap=gap,
                block=block_of(canon),
                level=levels_map[key],
                level_provisional=(ess == max_ess),
                lower_covers=cov,
                irreducible=len(cov) == 1,
            )
        )
    records.sort(key=lambda r: (r.ess, sorted(r.canon.monomials)))
    return tuple(records)


def levels(universe: Iterable[ClassRecord]) -> list[tuple[ClassRecord, ...]]:
    """Partition a downward-closed universe into levels by minimal stripping."""
    recs = list(universe)
    by_key = {r.key(): r for r in recs}
    strict_lower: dict[frozenset[int], set[frozenset[int]]] = {}

    def lower_set(r: ClassRecord) -> set[frozenset[int]]:
        key = r.key()
        if key in strict_lower:
            return strict_lower[key]
        acc: set[frozenset[int]] = set()
        for cov in r.lower_covers:
            ck = _canon_key(cov)
            acc.add(ck)
            if ck in by_key:
                acc |= lower_set(by_key[ck])
        strict_lower[key] = acc
        return acc

    remaining = {r.key() for r in recs}
    out: list[tuple[ClassRecord, ...]] = []
    while remaining:
        current = sorted(
            (k for k in remaining if not (lower_set(by_key[k]) & remaining)),
            key=sorted,
        )
        if not current:
            raise AssertionError("cycle detected while leveling the class poset")
        out.append(tuple(by_key[k] for k in current))
        remaining -= set(current)
    return out


# ---------------------------------------------------------------------------
# export


def export(universe: Iterable[ClassRecord], format: str = "dot") -> str:
    from .formats import format_polynomial

    recs = sorted(universe, key=lambda r: (r.ess, sorted(r.canon.monomials)))
    if format == "dot":
        lines = ["digraph classes {"]
        for r in recs:
            label = format_polynomial(r.canon)
            lines.append(f'  "{label}";')
        for r in recs:
            label = format_polynomial(r.canon)
            for cov in r.lower_covers:
                lines.append(f'  "{format_polynomial(cov)}" -> "{label}";')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "structured":
        return _render_records(recs)
    raise ValueError(f"unknown export format {format!r}")


def _render_records(recs: list[ClassRecord]) -> str:
    from .formats import format_polynomial

    lines = []
    for r in recs:
        gap = "-" if r.gap is None else str(r.gap)
        level = f"{r.level}+" if r.level_provisional else str(r.level)
        cov = ";".join(format_polynomial(c) for c in r.lower_covers) or "-"
        lines.append(
            "\t".join(
                [format_polynomial(r.canon), str(r.ess), gap, r.block.value, level, cov]
            )
        )
    return "\n".join(lines) + "\n"


def _write_cache(path: str, max_ess: int, records: tuple[ClassRecord, ...]) -> None:
    body = _render_records(list(records))
    text = f"{_CACHE_HEADER} max_ess={max_ess} count={len(records)}\n{body}"
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _read_cache(path: str, max_ess: int) -> Optional[tuple[ClassRecord, ...]]:
    from .formats import parse_polynomial

    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or not lines[0].startswith(_CACHE_HEADER):
        return None
    fields = dict(
        part.split("=") for part in lines[0][len(_CACHE_HEADER):].split() if "=" in part
    )
    body = [line for line in lines[1:] if line.strip()]
    if fields.get("max_ess") != str(max_ess) or fields.get("count") != str(len(body)):
        return None
    lines = [lines[0]] + body
    records = []
    for line in lines[1:]:
        if not line.strip():
            continue
        canon_text, ess_s, gap_s, block_s, level_s, cov_s = line.split("\t")
        canon = parse_polynomial(canon_text)
        provisional = level_s.endswith("+")
        level = int(level_s.rstrip("+"))
        covs = (
            tuple(parse_polynomial(c) for c in cov_s.split(";")) if cov_s != "-" else ()
        )
        records.append(
            ClassRecord(
                canon=canon,
                ess=int(ess_s),
                gap=None if gap_s == "-" else int(gap_s),
                block=Block(block_s),
                level=level,
                level_provisional=provisional,
                lower_covers=covs,
                irreducible=len(covs) == 1,
            )
        )
    return tuple(records)
