"""Command-line front end.

Verbs: convert, classify, gap, irreducible, iso, graph-classify,
steiner-check, poset, verify.  Inputs come from an inline argument, a file
(--file PATH), or standard input (`-`).  Plain text is the default output;
``--format structured`` emits JSON.  Verification failures print one
machine-readable record per line and exit nonzero; malformed input exits
with status 2.  Worker counts come from --workers or BOOLMINOR_WORKERS.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import bfcore, designs, graphs, poset, verify
from . import hypergraph as hg
from .formats import (
    ParseError,
    format_hypergraph_doc,
    format_polynomial,
    format_truth_table,
    parse_any_hypergraph,
    parse_any_polynomial,
    parse_graph,
    parse_polynomial,  # re-exported: the grammar's entry point
)

__all__ = ["main", "parse_polynomial"]


def _read_input(args) -> str:
    sources = [s for s in (args.input, args.file) if s]
    if args.input == "-":
        if args.file:
            raise ValueError("give exactly one input source")
        return sys.stdin.read()
    if len(sources) != 1:
        raise ValueError("give exactly one input source (inline, --file, or '-')")
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return fh.read()
    return args.input


def _emit(args, text_lines: list[str], structured: dict) -> None:
    if args.format == "structured":
        print(json.dumps(structured, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# verb implementations


def _cmd_convert(args) -> int:
    text = _read_input(args)
    poly = parse_any_polynomial(text, args.arity)
    if args.to == "polynomial":
        out = format_polynomial(poly)
    elif args.to == "table":
        out = format_truth_table(bfcore.truth_table_from_zhegalkin(poly))
    elif args.to == "hypergraph":
        out = format_hypergraph_doc(hg.hypergraph_of(poly))
    else:
        raise SystemExit(f"unknown target {args.to!r}")
    print(out)
    return 0


def _cmd_classify(args) -> int:
    text = _read_input(args)
    poly = parse_any_polynomial(text, args.arity)
    canon = bfcore.canonical_form(poly)
    ess = bfcore.essential_arity(poly)
    block = poset.block_of(poly)
    info: dict = {
        "canonical": format_polynomial(canon),
        "ess": ess,
        "block": block.value,
    }
    lines = [
        f"canonical: {info['canonical']}",
        f"ess: {ess}",
        f"block: {block.value}",
    ]
    if ess >= 2:
        gap = bfcore.arity_gap(poly)
        family = bfcore.classify_gap(poly)
        info["gap"] = gap
        info["gap_family"] = family.tag.value
        if family.constant is not None:
            info["gap_constant"] = family.constant
        lines.append(f"gap: {gap}")
        lines.append(
            f"gap family: {family.tag.value}"
            + (f" (c={family.constant})" if family.constant is not None else "")
        )
    cover = bfcore.is_irreducible_direct(poly)
    info["irreducible"] = cover is not None
    lines.append(f"irreducible: {cover is not None}")
    if cover is not None:
        info["lower_cover"] = format_polynomial(cover)
        lines.append(f"unique lower cover: {format_polynomial(cover)}")
    _emit(args, lines, info)
    return 0


def _cmd_gap(args) -> int:
    text = _read_input(args)
    poly = parse_any_polynomial(text, args.arity)
    gap = bfcore.arity_gap(poly)
    family = bfcore.classify_gap(poly)
    line = f"gap: {gap}; family: {family.tag.value}"
    if family.constant is not None:
        line += f" (c={family.constant})"
    _emit(args, [line], {"gap": gap, "family": family.tag.value, "constant": family.constant})
    return 0


def _cmd_irreducible(args) -> int:
    text = _read_input(args)
    poly = parse_any_polynomial(text, args.arity)
    cover = bfcore.is_irreducible_direct(poly)
    if cover is not None:
        _emit(
            args,
            [f"irreducible; unique lower cover: {format_polynomial(cover)}"],
            {"irreducible": True, "lower_cover": format_polynomial(cover)},
        )
        return 0
    maximal = poset._maximal_classes(bfcore.one_step_identification_classes(poly))
    if maximal:
        shown = "; ".join(format_polynomial(p) for p in maximal)
        _emit(
            args,
            [f"not irreducible; maximal strict minors: {shown}"],
            {
                "irreducible": False,
                "maximal_strict_minors": [format_polynomial(p) for p in maximal],
            },
        )
    else:
        _emit(
            args,
            ["not irreducible; no strict minor exists"],
            {"irreducible": False, "maximal_strict_minors": []},
        )
    return 0


def _cmd_iso(args) -> int:
    h1 = parse_any_hypergraph(args.first)
    h2 = parse_any_hypergraph(args.second)
    if args.reduce_support:
        h1 = hg.support_reduce(h1)
        h2 = hg.support_reduce(h2)
    found = hg.is_isomorphic(h1, h2)
    if found is None:
        _emit(args, ["not isomorphic"], {"isomorphic": False})
        return 0
    mapping = {str(v + 1): found.image[v] for v in range(found.source_count)}
    _emit(
        args,
        ["isomorphic: " + " ".join(f"{v}->{found.image[v - 1]}" for v in range(1, found.source_count + 1))],
        {"isomorphic": True, "mapping": mapping},
    )
    return 0


def _cmd_graph_classify(args) -> int:
    text = _read_input(args)
    g = parse_graph(text)
    cls = graphs.classify_join_irreducible(g)
    _emit(
        args,
        [str(cls)],
        {"class": cls.kind.value, "params": list(cls.params), "irreducible": cls.irreducible},
    )
    return 0


def _cmd_steiner_check(args) -> int:
    builtin = designs.builtin_instances()
    if args.input in builtin:
        h = builtin[args.input]
        name = args.input
    else:
        text = _read_input(args)
        h = parse_any_hypergraph(text)
        name = args.file or "input"
    params = designs.design_parameters(h)
    if params is None or params.lambda_ != 1:
        found = "no 2-design" if params is None else f"2-({params.n},{params.k},{params.lambda_})"
        _emit(args, [f"not a Steiner system ({found})"], {"steiner": False})
        return 1
    report = designs.steiner_report(h, name)
    structured = {
        "params": [params.n, params.k, params.lambda_],
        "irreducible": report.irreducible,
        "contractions_isomorphic": report.contractions_isomorphic,
        "minus2_monomorphic": report.minus2_monomorphic,
        "two_set_transitive": report.two_set_transitive,
        "aut_order": report.aut_order,
        "conditions_agree": report.consistent,
    }
    _emit(args, report.lines(), structured)
    return 0 if report.consistent else 1


def _cmd_poset(args) -> int:
    records = poset.enumerate_classes(args.max_ess, cache_path=args.cache)
    doc = poset.export(records, format=args.export_format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        print(f"{len(records)} classes written to {args.out}")
    else:
        sys.stdout.write(doc)
    return 0


def _cmd_verify(args) -> int:
    kwargs: dict = {}
    if args.sweep == "gap":
        kwargs = {"max_arity": args.max_arity, "workers": args.workers}
    elif args.sweep == "correspondence":
        kwargs = {
            "max_vertices": args.max_vertices,
            "samples": args.samples,
            "seed": args.seed,
            "workers": args.workers,
        }
    elif args.sweep == "keylemma":
        kwargs = {
            "max_vertices": args.max_vertices,
            "samples": args.samples,
            "seed": args.seed,
            "workers": args.workers,
        }
    elif args.sweep == "graphs":
        kwargs = {"max_vertices": args.max_vertices, "workers": args.workers, "seed": args.seed}
    elif args.sweep == "steiner":
        kwargs = {}
    elif args.sweep == "poset":
        kwargs = {"max_ess": args.max_ess, "cache_path": args.cache, "seed": args.seed}
    result = verify.ALL_SWEEPS[args.sweep](**kwargs)
    if args.format == "structured":
        print(
            json.dumps(
                {"sweep": result.name, "ok": result.ok, "data": result.data, "failures": result.failures},
                sort_keys=True,
            )
        )
    else:
        for line in result.lines:
            print(line)
        for failure in result.failures:
            print("FAIL " + json.dumps(failure, sort_keys=True))
        print("ok" if result.ok else "FAILED")
    return 0 if result.ok else 1


# ---------------------------------------------------------------------------
# argument wiring


def _add_io(sub, with_arity: bool = True) -> None:
    sub.add_argument("input", nargs="?", help="inline input, or '-' for stdin")
    sub.add_argument("--file", help="read the input from a file")
    if with_arity:
        sub.add_argument("--arity", type=int, help="declared arity override")
    sub.add_argument("--format", choices=("text", "structured"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolminor",
        description="Boolean function minors, their hypergraph counterpart, and"
        " exhaustive desk-scale verification",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    p = subs.add_parser("convert", help="convert between polynomial, table, hypergraph")
    _add_io(p)
    p.add_argument("--to", choices=("polynomial", "table", "hypergraph"), required=True)
    p.set_defaults(fn=_cmd_convert)

    p = subs.add_parser("classify", help="canonical form, ess, block, gap, irreducibility")
    _add_io(p)
    p.set_defaults(fn=_cmd_classify)

    p = subs.add_parser("gap", help="arity gap and gap family")
    _add_io(p)
    p.set_defaults(fn=_cmd_gap)

    p = subs.add_parser("irreducible", help="irreducibility with covers or maximal minors")
    _add_io(p)
    p.set_defaults(fn=_cmd_irreducible)

    p = subs.add_parser("iso", help="hypergraph isomorphism between two inputs")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--reduce-support", action="store_true", help="drop isolated vertices first")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=_cmd_iso)

    p = subs.add_parser("graph-classify", help="join-irreducible graph family")
    _add_io(p, with_arity=False)
    p.set_defaults(fn=_cmd_graph_classify)

    p = subs.add_parser("steiner-check", help="Steiner-system report (name or document)")
    _add_io(p, with_arity=False)
    p.set_defaults(fn=_cmd_steiner_check)

    p = subs.add_parser("poset", help="enumerate classes; export DOT or records")
    p.add_argument("--max-ess", type=int, default=4)
    p.add_argument("--cache", help="record cache file (resumable enumeration)")
    p.add_argument("--out", help="write the export to a path")
    p.add_argument("--export-format", choices=("dot", "structured"), default="dot")
    p.set_defaults(fn=_cmd_poset)

    p = subs.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("sweep", choices=sorted(verify.ALL_SWEEPS))
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--max-ess", type=int, default=4)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--cache", help="poset record cache file")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "verify" and args.max_vertices is None:
        args.max_vertices = {"correspondence": 3, "keylemma": 4, "graphs": 7}.get(args.sweep, 4)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
