"""Exhaustive desk-scale verification sweeps.

Each sweep checks one package of claims and returns a :class:`VerifyResult`
whose rendered lines are byte-identical across runs and worker counts:
counts are merged deterministically and timing never goes into the output.
Randomized sampling derives every sample from a fixed default seed.

The labeled-graph sweep decomposes the 2^C(n,2) edge masks into orbits
under vertex permutations (breadth-first search along adjacent
transpositions), evaluates the expensive irreducibility oracles once per
orbit representative, and still runs the structural classifiers on every
labeled mask; seeded spot samples re-run the oracle on non-representative
masks to confirm the implementation is labeling-invariant.
"""

from __future__ import annotations

import itertools
import multiprocessing
import os
import random
from array import array
from collections import Counter
from dataclasses import dataclass, field

from . import bfcore, designs, graphs, poset
from . import hypergraph as hg
from .bfcore import TruthTable, Zhegalkin, bits_of, popcount
from .formats import (
    format_graph_line,
    format_hypergraph_doc,
    format_polynomial,
    format_truth_table,
)

DEFAULT_SEED = 271828
WORKERS_ENV = "BOOLMINOR_WORKERS"


def resolve_workers(requested: int | None = None) -> int:
    if requested is not None and requested >= 1:
        return requested
    env = os.environ.get(WORKERS_ENV, "")
    if env.isdigit() and int(env) >= 1:
        return int(env)
    return 1


@dataclass
class VerifyResult:
    name: str
    lines: list[str] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def _pool_map(fn, jobs: list, workers: int) -> list:
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    with multiprocessing.Pool(processes=min(workers, len(jobs))) as pool:
        return pool.map(fn, jobs, chunksize=1)


def _split_range(total: int, pieces: int) -> list[tuple[int, int]]:
    pieces = max(1, min(pieces, total))
    step = (total + pieces - 1) // pieces
    return [(s, min(s + step, total)) for s in range(0, total, step)]


# ===========================================================================
# arity-gap sweep


def _gap_shard(job: tuple[int, int, int]) -> dict:
    arity, start, stop = job
    gap_counts: Counter = Counter()
    family_counts: Counter = Counter()
    low_ess = 0
    mismatches = []
    for table_bits in range(start, stop):
        table = TruthTable(arity, table_bits)
        poly = bfcore.zhegalkin_from_truth_table(table)
        if bfcore.essential_arity(poly) < 2:
            low_ess += 1
            continue
        gap = bfcore.arity_gap(poly)
        family = bfcore.classify_gap(poly)
        gap_counts[gap] += 1
        family_counts[family.tag.value] += 1
        bad_bound = gap not in (1, 2)
        bad_match = (family.tag is not bfcore.GapTag.GAP_ONE) != (gap == 2)
        if bad_bound or bad_match:
            mismatches.append(
                {
                    "sweep": "gap",
                    "table": format_truth_table(table),
                    "polynomial": format_polynomial(poly),
                    "gap": gap,
                    "family": family.tag.value,
                }
            )
    return {
        "gap_counts": gap_counts,
        "family_counts": family_counts,
        "low_ess": low_ess,
        "mismatches": mismatches,
    }


def gap_sweep(max_arity: int = 4, workers: int | None = None) -> VerifyResult:
    """Check the gap-two family classification against brute-force gaps."""
    workers = resolve_workers(workers)
    total = 1 << (1 << max_arity)
    jobs = [(max_arity, s, e) for s, e in _split_range(total, workers * 8)]
    parts = _pool_map(_gap_shard, jobs, workers)
    gap_counts: Counter = Counter()
    family_counts: Counter = Counter()
    low_ess = 0
    failures: list[dict] = []
    for part in parts:
        gap_counts.update(part["gap_counts"])
        family_counts.update(part["family_counts"])
        low_ess += part["low_ess"]
        failures.extend(part["mismatches"])
    lines = [f"{total} tables checked"]
    lines.append(f"skipped (fewer than two essential variables): {low_ess}")
    lines.append(
        "gap counts: " + " ".join(f"{g}->{gap_counts[g]}" for g in sorted(gap_counts))
    )
    lines.append(
        "family counts: "
        + " ".join(f"{k}={family_counts[k]}" for k in sorted(family_counts))
    )
    data = {
        "tables": total,
        "low_ess": low_ess,
        "gap_counts": dict(gap_counts),
        "family_counts": dict(family_counts),
    }
    return VerifyResult("gap", lines, failures, data)


# ===========================================================================
# function/hypergraph correspondence sweep


def _edge_list(edge_mask: int) -> list[int]:
    return bits_of(edge_mask)


def _brute_quotient(edges1: list[int], n1: int, edge_mask2: int, n2: int):
    """First vertex map whose parity-fold of edges1 equals edge_mask2, or None."""
    for image in itertools.product(range(n2), repeat=n1):
        acc = 0
        for e in edges1:
            im = 0
            mm = e
            while mm:
                low = mm & -mm
                im |= 1 << image[low.bit_length() - 1]
                mm ^= low
            acc ^= 1 << im
        if acc == edge_mask2:
            return image
    return None


def _correspondence_record(n1: int, em1: int, n2: int, em2: int, found, minor) -> dict:
    h1 = hg.Hypergraph(n1, frozenset(_edge_list(em1)))
    h2 = hg.Hypergraph(n2, frozenset(_edge_list(em2)))
    return {
        "sweep": "correspondence",
        "larger": format_hypergraph_doc(h1),
        "smaller": format_hypergraph_doc(h2),
        "quotient_map_exists": found is not None,
        "is_minor": minor,
    }


def _correspondence_pair(n1: int, em1: int, n2: int, em2: int, check_public: bool):
    """Compare brute-force quotient existence with the polynomial minor test."""
    edges1 = _edge_list(em1)
    found = _brute_quotient(edges1, n1, em2, n2)
    p1 = Zhegalkin(n1, frozenset(edges1))
    p2 = Zhegalkin(n2, frozenset(_edge_list(em2)))
    minor = bfcore.is_minor(p2, p1) is not None
    record = None
    if (found is not None) != minor:
        record = _correspondence_record(n1, em1, n2, em2, found, minor)
    elif found is not None and check_public:
        vmap = hg.VertexMap(n1, n2, tuple(t + 1 for t in found))
        h1 = hg.Hypergraph(n1, frozenset(edges1))
        h2 = hg.Hypergraph(n2, frozenset(_edge_list(em2)))
        if not hg.verify_quotient_map(vmap, h1, h2):
            record = _correspondence_record(n1, em1, n2, em2, found, minor)
            record["sweep"] = "correspondence-public-check"
    return found is not None, record


def _correspondence_exhaustive_shard(job: tuple[int, int, int]) -> dict:
    max_vertices, start, stop = job
    universe = [
        (n, em) for n in range(1, max_vertices + 1) for em in range(1 << (1 << n))
    ]
    mismatches = []
    pairs = 0
    positives = 0
    for idx in range(start, stop):
        n1, em1 = universe[idx]
        for n2, em2 in universe:
            related, record = _correspondence_pair(n1, em1, n2, em2, check_public=False)
            pairs += 1
            positives += related
            if record:
                mismatches.append(record)
    return {"pairs": pairs, "positives": positives, "mismatches": mismatches}


def _correspondence_sample_shard(job: tuple[int, int, int]) -> dict:
    seed, start, stop = job
    mismatches = []
    positives = 0
    for idx in range(start, stop):
        rng = random.Random(f"{seed}:corr:{idx}")
        n1 = rng.choice((4, 5))
        n2 = rng.choice((4, 5))
        em1 = rng.getrandbits(1 << n1)
        if idx % 3 == 0:
            # force a related pair: fold a random map's image of the larger side
            image = tuple(rng.randrange(n2) for _ in range(n1))
            acc = 0
            for e in _edge_list(em1):
                im = 0
                mm = e
                while mm:
                    low = mm & -mm
                    im |= 1 << image[low.bit_length() - 1]
                    mm ^= low
                acc ^= 1 << im
            em2 = acc
        else:
            em2 = rng.getrandbits(1 << n2)
        related, record = _correspondence_pair(
            n1, em1, n2, em2, check_public=(idx % 25 == 0)
        )
        positives += related
        if record:
            mismatches.append(record)
    return {"positives": positives, "mismatches": mismatches}


def correspondence_sweep(
    max_vertices: int = 3,
    samples: int = 10_000,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
) -> VerifyResult:
    """Quotient-map existence vs the polynomial minor relation, both directions."""
    workers = resolve_workers(workers)
    universe_size = sum(1 << (1 << n) for n in range(1, max_vertices + 1))
    jobs = [
        (max_vertices, s, e) for s, e in _split_range(universe_size, workers * 4)
    ]
    parts = _pool_map(_correspondence_exhaustive_shard, jobs, workers)
    pairs = sum(p["pairs"] for p in parts)
    positives = sum(p["positives"] for p in parts)
    failures = [m for p in parts for m in p["mismatches"]]

    sample_jobs = [(seed, s, e) for s, e in _split_range(samples, workers * 4)]
    sparts = _pool_map(_correspondence_sample_shard, sample_jobs, workers)
    sample_positives = sum(p["positives"] for p in sparts)
    failures.extend(m for p in sparts for m in p["mismatches"])

    lines = [
        f"{pairs} exhaustive pairs checked (hypergraphs on 1..{max_vertices} vertices)",
        f"related pairs: {positives}",
        f"{samples} sampled pairs checked (4..5 vertices, seed {seed})",
        f"related sampled pairs: {sample_positives}",
    ]
    data = {
        "pairs": pairs,
        "positives": positives,
        "samples": samples,
        "sample_positives": sample_positives,
        "seed": seed,
    }
    return VerifyResult("correspondence", lines, failures, data)


# ===========================================================================
# contraction-criterion consistency sweep


def _criterion_pair(n: int, em: int):
    h = hg.Hypergraph(n, frozenset(_edge_list(em)))
    by_contr = hg.is_irreducible_by_contractions(h)
    direct = bfcore.is_irreducible_direct(hg.polynomial_of(h)) is not None
    if by_contr != direct:
        return by_contr, direct, {
            "sweep": "keylemma",
            "hypergraph": format_hypergraph_doc(h),
            "contraction_criterion": by_contr,
            "direct_definition": direct,
        }
    return by_contr, direct, None


def _criterion_exhaustive_shard(job: tuple[int, int, int]) -> dict:
    n, start, stop = job
    irreducible = 0
    mismatches = []
    for em in range(start, stop):
        by_contr, _, record = _criterion_pair(n, em)
        irreducible += by_contr
        if record:
            mismatches.append(record)
    return {"checked": stop - start, "irreducible": irreducible, "mismatches": mismatches}


def _criterion_sample_shard(job: tuple[int, int, int, int]) -> dict:
    seed, n, start, stop = job
    irreducible = 0
    mismatches = []
    for idx in range(start, stop):
        rng = random.Random(f"{seed}:keylemma:{idx}")
        em = rng.getrandbits(1 << n)
        by_contr, _, record = _criterion_pair(n, em)
        irreducible += by_contr
        if record:
            mismatches.append(record)
    return {"checked": stop - start, "irreducible": irreducible, "mismatches": mismatches}


def contraction_criterion_sweep(
    max_vertices: int = 4,
    samples: int = 10_000,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
) -> VerifyResult:
    """Contraction-class irreducibility against the direct definition.

    A disagreement is a reportable finding: the sweep prints the offending
    hypergraph and fails, deciding neither side.
    """
    workers = resolve_workers(workers)
    lines = []
    failures: list[dict] = []
    data: dict = {"per_vertex_count": {}, "seed": seed}
    for n in range(1, max_vertices + 1):
        total = 1 << (1 << n)
        jobs = [(n, s, e) for s, e in _split_range(total, workers * 4)]
        parts = _pool_map(_criterion_exhaustive_shard, jobs, workers)
        checked = sum(p["checked"] for p in parts)
        irreducible = sum(p["irreducible"] for p in parts)
        failures.extend(m for p in parts for m in p["mismatches"])
        lines.append(f"n={n}: {checked} hypergraphs checked, irreducible: {irreducible}")
        data["per_vertex_count"][n] = {"checked": checked, "irreducible": irreducible}
    sample_n = max_vertices + 1
    jobs = [(seed, sample_n, s, e) for s, e in _split_range(samples, workers * 4)]
    parts = _pool_map(_criterion_sample_shard, jobs, workers)
    checked = sum(p["checked"] for p in parts)
    irreducible = sum(p["irreducible"] for p in parts)
    failures.extend(m for p in parts for m in p["mismatches"])
    lines.append(
        f"n={sample_n}: {checked} sampled hypergraphs checked, irreducible: {irreducible}"
    )
    data["samples"] = {"n": sample_n, "checked": checked, "irreducible": irreducible}
    return VerifyResult("keylemma", lines, failures, data)


# ===========================================================================
# labeled-graph sweep


def _pair_list(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _transposition_pair_tables(n: int) -> list[list[int]]:
    pairs = _pair_list(n)
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for k in range(n - 1):
        def swap(v: int) -> int:
            if v == k:
                return k + 1
            if v == k + 1:
                return k
            return v

        tables.append(
            [index[tuple(sorted((swap(a), swap(b))))] for a, b in pairs]
        )
    return tables


def _mask_tables(table: list[int], pair_count: int, lo: int) -> tuple[list[int], list[int]]:
    tl = [0] * (1 << lo)
    for m in range(1 << lo):
        x = 0
        mm = m
        while mm:
            low = mm & -mm
            x |= 1 << table[low.bit_length() - 1]
            mm ^= low
        tl[m] = x
    hi = pair_count - lo
    th = [0] * (1 << hi)
    for m in range(1 << hi):
        x = 0
        mm = m
        while mm:
            low = mm & -mm
            x |= 1 << table[lo + low.bit_length() - 1]
            mm ^= low
        th[m] = x
    return tl, th


def _orbit_partition(n: int) -> tuple[array, list[int]]:
    """Orbit representative (the orbit minimum) for every labeled edge mask."""
    pair_count = n * (n - 1) // 2
    total = 1 << pair_count
    rep_of = array("l", [0]) * total
    if n == 1:
        return rep_of, [0]
    lo = min(pair_count, 11)
    lomask = (1 << lo) - 1
    tables = [_mask_tables(t, pair_count, lo) for t in _transposition_pair_tables(n)]
    visited = bytearray(total)
    reps = []
    for m0 in range(total):
        if visited[m0]:
            continue
        visited[m0] = 1
        rep_of[m0] = m0
        reps.append(m0)
        frontier = [m0]
        while frontier:
            nxt = []
            for m in frontier:
                ml = m & lomask
                mh = m >> lo
                for tl, th in tables:
                    nm = tl[ml] | th[mh]
                    if not visited[nm]:
                        visited[nm] = 1
                        rep_of[nm] = m0
                        nxt.append(nm)
            frontier = nxt
    return rep_of, reps


def _graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]]) -> graphs.Graph:
    edges = []
    mm = mask
    while mm:
        low = mm & -mm
        a, b = pairs[low.bit_length() - 1]
        edges.append((1 << a) | (1 << b))
        mm ^= low
    return graphs.Graph(n, frozenset(edges))


def _rep_oracle_shard(job: tuple[int, list[int]]) -> list[dict]:
    n, reps = job
    pairs = _pair_list(n)
    out = []
    for rep in reps:
        g = _graph_from_mask(n, rep, pairs)
        by_contr = hg.is_irreducible_by_contractions(g)
        direct = bfcore.is_irreducible_direct(hg.polynomial_of(g)) is not None
        cls = graphs.classify_join_irreducible(g)
        probes: list[str] = []
        if cls.irreducible and not graphs.matches_template(g, cls):
            probes.append("classification does not match its template graph")
        connected = graphs.is_connected(g) and g.vertex_count >= 2
        if connected:
            if not graphs.lemma_aux_check(g):
                probes.append("edge-contraction probe failed")
            decomp = graphs.ai_decomposition(g)
            prime = graphs.is_ai_prime(g)
            if by_contr:
                q = decomp.quotient
                qn = q.vertex_count
                q_complete = len(q.edges) == qn * (qn - 1) // 2 and qn >= 2
                q_c5 = (
                    qn == 5
                    and all(popcount(m) == 2 for m in graphs.neighborhoods(q))
                )
                if not (q_complete or q_c5):
                    probes.append("irreducible connected graph with a bad ai quotient")
            if not prime:
                in_families = cls.kind in (
                    graphs.JIKind.K2_JOIN_EMPTY,
                    graphs.JIKind.EMPTY_JOIN_EMPTY,
                    graphs.JIKind.BALANCED_MULTIPARTITE,
                )
                if by_contr != in_families:
                    probes.append("non-prime connected case disagrees with its families")
        out.append(
            {
                "rep": rep,
                "irreducible": by_contr,
                "direct": direct,
                "classify_irreducible": cls.irreducible,
                "classify": str(cls),
                "probes": probes,
            }
        )
    return out


def _labeled_shard(job) -> dict:
    n, start, stop, rep_slice, verdicts = job
    pairs = _pair_list(n)
    ji_counter: Counter = Counter()
    p_counter: Counter = Counter()
    mismatches = []
    p_mismatches = []
    for m in range(start, stop):
        g = _graph_from_mask(n, m, pairs)
        cls = graphs.classify_join_irreducible(g)
        expected = verdicts[rep_slice[m - start]]
        ji_counter[str(cls)] += 1
        if cls.irreducible != expected:
            mismatches.append(
                {
                    "sweep": "graphs",
                    "graph": format_graph_line(g),
                    "classified": str(cls),
                    "irreducible_oracle": bool(expected),
                }
            )
        if n >= 2:
            sat = graphs.satisfies_property_p(g)
            fam = graphs.classify_property_p(g)
            if sat != (fam is not None):
                p_mismatches.append(
                    {
                        "sweep": "property-p",
                        "graph": format_graph_line(g),
                        "satisfies": sat,
                        "family": None if fam is None else fam.kind.value,
                    }
                )
            if fam is not None:
                p_counter[fam.kind.value] += 1
    return {
        "ji_counter": ji_counter,
        "p_counter": p_counter,
        "mismatches": mismatches,
        "p_mismatches": p_mismatches,
    }


def _c5_blowup_check() -> list[dict]:
    """No connected graph on <= 8 vertices with a C5 quotient over a
    non-trivial block structure is irreducible."""
    failures = []
    quotient = graphs.cycle(5)
    for total in range(6, 9):
        for sizes in itertools.product(range(1, 5), repeat=5):
            if sum(sizes) != total or max(sizes) < 2:
                continue
            blocks = []
            nxt = 1
            for s in sizes:
                blocks.append(tuple(range(nxt, nxt + s)))
                nxt += s
            g = graphs.lexicographic_sum(tuple(blocks), quotient)
            if hg.is_irreducible_by_contractions(g) or (
                bfcore.is_irreducible_direct(hg.polynomial_of(g)) is not None
            ):
                failures.append(
                    {
                        "sweep": "c5-blowup",
                        "graph": format_graph_line(g),
                        "sizes": list(sizes),
                    }
                )
    return failures


def graph_sweep(
    max_vertices: int = 7,
    workers: int | None = None,
    seed: int = DEFAULT_SEED,
    spot_samples: int = 200,
) -> VerifyResult:
    """Join-irreducible classification and property (P) on all labeled graphs."""
    workers = resolve_workers(workers)
    lines = []
    failures: list[dict] = []
    p_failures: list[dict] = []
    data: dict = {"per_vertex_count": {}, "seed": seed}
    for n in range(1, max_vertices + 1):
        pair_count = n * (n - 1) // 2
        total = 1 << pair_count
        rep_of, reps = _orbit_partition(n)

        rep_jobs = [(n, chunk) for chunk in _chunks(reps, workers * 4)]
        rep_parts = _pool_map(_rep_oracle_shard, rep_jobs, workers)
        verdicts: dict[int, bool] = {}
        for part in rep_parts:
            for row in part:
                verdicts[row["rep"]] = row["irreducible"]
                if row["irreducible"] != row["direct"]:
                    failures.append(
                        {
                            "sweep": "graphs-oracle",
                            "n": n,
                            "rep": row["rep"],
                            "contraction_criterion": row["irreducible"],
                            "direct_definition": row["direct"],
                        }
                    )
                if row["irreducible"] != row["classify_irreducible"]:
                    # recorded here and caught again labeled-side
                    failures.append(
                        {
                            "sweep": "graphs-rep",
                            "n": n,
                            "rep": row["rep"],
                            "classified": row["classify"],
                            "irreducible_oracle": row["irreducible"],
                        }
                    )
                for probe in row["probes"]:
                    failures.append(
                        {"sweep": "graphs-probe", "n": n, "rep": row["rep"], "probe": probe}
                    )

        labeled_jobs = []
        for start, stop in _split_range(total, workers * 8):
            labeled_jobs.append((n, start, stop, rep_of[start:stop], verdicts))
        labeled_parts = _pool_map(_labeled_shard, labeled_jobs, workers)
        ji_counter: Counter = Counter()
        p_counter: Counter = Counter()
        for part in labeled_parts:
            ji_counter.update(part["ji_counter"])
            p_counter.update(part["p_counter"])
            failures.extend(part["mismatches"])
            p_failures.extend(part["p_mismatches"])

        irreducible_labeled = sum(
            cnt for cls, cnt in ji_counter.items() if cls != "NotIrreducible"
        )
        lines.append(
            f"n={n}: {total} labeled graphs, {len(reps)} classes,"
            f" irreducible labeled: {irreducible_labeled}"
        )
        fam_line = " ".join(
            f"{cls}={cnt}" for cls, cnt in sorted(ji_counter.items()) if cls != "NotIrreducible"
        )
        lines.append(f"  families: {fam_line}" if fam_line else "  families: none")
        if n >= 2:
            p_line = " ".join(f"{k}={v}" for k, v in sorted(p_counter.items()))
            lines.append(f"  property-P: {p_line}" if p_line else "  property-P: none")
        data["per_vertex_count"][n] = {
            "labeled": total,
            "classes": len(reps),
            "families": dict(ji_counter),
            "property_p": dict(p_counter),
        }

        # seeded spot checks: the oracle must not depend on the labeling
        rng = random.Random(f"{seed}:spot:{n}")
        for _ in range(min(spot_samples, total)):
            m = rng.randrange(total)
            g = _graph_from_mask(n, m, _pair_list(n))
            if hg.is_irreducible_by_contractions(g) != verdicts[rep_of[m]]:
                failures.append(
                    {
                        "sweep": "graphs-spot",
                        "graph": format_graph_line(g),
                        "orbit_verdict": bool(verdicts[rep_of[m]]),
                    }
                )

    failures.extend(_c5_blowup_check())
    lines.append("C5-quotient blow-ups on <= 8 vertices: none irreducible")
    all_failures = failures + p_failures
    data["property_p_mismatches"] = len(p_failures)
    data["graph_mismatches"] = len(failures)
    return VerifyResult("graphs", lines, all_failures, data)


def _chunks(items: list, pieces: int) -> list[list]:
    pieces = max(1, min(pieces, len(items) or 1))
    step = (len(items) + pieces - 1) // pieces
    return [items[s : s + step] for s in range(0, len(items), step)] or [[]]


# ===========================================================================
# Steiner catalog report


def steiner_catalog_report() -> VerifyResult:
    """The three equivalent conditions on every shipped Steiner instance."""
    lines = []
    failures = []
    data: dict = {"instances": {}}
    catalog: dict[str, hg.Hypergraph] = dict(designs.small_steiner_catalog())
    catalog["sts13"] = designs.cyclic_sts13()
    for name in sorted(catalog):
        h = catalog[name]
        report = designs.steiner_report(h, name)
        lines.extend(report.lines())
        data["instances"][name] = {
            "params": [report.params.n, report.params.k, report.params.lambda_],
            "irreducible": report.irreducible,
            "contractions_isomorphic": report.contractions_isomorphic,
            "minus2_monomorphic": report.minus2_monomorphic,
            "two_set_transitive": report.two_set_transitive,
            "aut_order": report.aut_order,
        }
        if not report.consistent:
            failures.append(
                {
                    "sweep": "steiner",
                    "instance": name,
                    "irreducible": report.irreducible,
                    "contractions_isomorphic": report.contractions_isomorphic,
                    "minus2_monomorphic": report.minus2_monomorphic,
                }
            )
        if report.two_set_transitive and not report.contractions_isomorphic:
            failures.append(
                {
                    "sweep": "steiner-2set",
                    "instance": name,
                    "detail": "2-set transitivity must force isomorphic contractions",
                }
            )
    return VerifyResult("steiner", lines, failures, data)


# ===========================================================================
# poset sweep


def poset_sweep(
    max_ess: int = 4,
    cache_path: str | None = None,
    seed: int = DEFAULT_SEED,
) -> VerifyResult:
    """Structure checks over the enumerated class poset."""
    records = poset.enumerate_classes(max_ess, cache_path=cache_path)
    by_key = {r.key(): r for r in records}
    failures: list[dict] = []

    level0 = [r for r in records if r.level == 0]
    if len(level0) != 4 or {r.block for r in level0} != set(poset.Block):
        failures.append(
            {
                "sweep": "poset",
                "detail": "level 0 must be the four one-per-block classes",
                "level0": [format_polynomial(r.canon) for r in level0],
            }
        )

    counts: Counter = Counter()
    for r in records:
        counts[(r.ess, r.block.value)] += 1
        # parity block is preserved by every one-variable identification
        fvars = sorted(bfcore.essential_variables(r.canon))
        for i, j in itertools.combinations(fvars, 2):
            child = bfcore.identify(r.canon, i, j)
            if poset.block_of(child) is not r.block:
                failures.append(
                    {
                        "sweep": "poset-block",
                        "class": format_polynomial(r.canon),
                        "identified": format_polynomial(child),
                    }
                )
        for cov in r.lower_covers:
            cov_rec = by_key.get(cov.monomials)
            if cov_rec is None:
                failures.append(
                    {
                        "sweep": "poset-cover",
                        "class": format_polynomial(r.canon),
                        "detail": "cover outside the enumerated universe",
                    }
                )
                continue
            if r.gap is None or r.ess != cov_rec.ess + r.gap:
                failures.append(
                    {
                        "sweep": "poset-gap-law",
                        "class": format_polynomial(r.canon),
                        "cover": format_polynomial(cov),
                        "ess": r.ess,
                        "cover_ess": cov_rec.ess,
                        "gap": r.gap,
                    }
                )
        direct = bfcore.is_irreducible_direct(r.canon) is not None
        by_contr = hg.is_irreducible_by_contractions(hg.hypergraph_of(r.canon))
        if not (r.irreducible == direct == by_contr):
            failures.append(
                {
                    "sweep": "poset-irreducible",
                    "class": format_polynomial(r.canon),
                    "unique_cover": r.irreducible,
                    "direct": direct,
                    "contraction_criterion": by_contr,
                }
            )

    # no comparabilities across the four blocks
    rng = random.Random(f"{seed}:poset")
    recs = list(records)
    checked_pairs = 0
    for _ in range(500):
        a = rng.choice(recs)
        b = rng.choice(recs)
        if a.block is b.block:
            continue
        checked_pairs += 1
        if bfcore.is_minor(a.canon, b.canon) or bfcore.is_minor(b.canon, a.canon):
            failures.append(
                {
                    "sweep": "poset-blocks-incomparable",
                    "first": format_polynomial(a.canon),
                    "second": format_polynomial(b.canon),
                }
            )

    lines = [f"{len(records)} classes enumerated up to ess {max_ess}"]
    per_ess: Counter = Counter()
    for r in records:
        per_ess[r.ess] += 1
    lines.append(
        "classes by ess: " + " ".join(f"{e}->{per_ess[e]}" for e in sorted(per_ess))
    )
    lines.append(
        "classes by (ess, block): "
        + " ".join(f"{e}/{b}={counts[(e, b)]}" for e, b in sorted(counts))
    )
    lines.append(f"cross-block incomparability samples: {checked_pairs}")
    data = {
        "classes": len(records),
        "by_ess": {str(k): v for k, v in per_ess.items()},
        "by_ess_block": {f"{e}/{b}": v for (e, b), v in counts.items()},
    }
    return VerifyResult("poset", lines, failures, data)


ALL_SWEEPS = {
    "gap": gap_sweep,
    "correspondence": correspondence_sweep,
    "keylemma": contraction_criterion_sweep,
    "graphs": graph_sweep,
    "steiner": steiner_catalog_report,
    "poset": poset_sweep,
}
