"""Command-line surface: construct, verify, colourings, demo.

Exit codes follow the usual certification convention: 0 means every
requested check passed with a complete enumeration, 1 means some check
failed or came back indeterminate (node limit hit), 2 means the command
line or an input file could not be parsed.  The default solver node limit
can be set with the environment variable named in
:data:`cycdec.solver.NODE_LIMIT_ENV`.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import assembly, constructions, seeds, solver, verify
from .fileformat import (
    CheckRecord,
    ParseError,
    Report,
    format_decomposition,
    host_header,
    parse_decomposition,
)
from .hostgraph import Decomposition

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _parse_ells(text: str, parts: int) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad part-size list {text!r}") from exc
    if len(values) == 1:
        values = values * parts
    return values


def _construct(args: argparse.Namespace) -> Decomposition:
    if args.kind == "complete":
        return assembly.build_complete(args.order)
    if args.kind == "cocktail":
        return assembly.build_cocktail(args.order, args.petals, args.hub_pairs)
    if args.kind == "exclusively-alt":
        return constructions.exclusively_alt(args.parts, _parse_ells(args.ell, args.parts))
    if args.kind == "seed":
        t = args.hub_pairs
        seed = seeds.k9_seed() if t == 0 else seeds.cocktail_seed(t)
        return Decomposition(seed.host, seed.cycles)
    assert args.kind == "toy"
    return constructions.toy_three_part()


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        decomposition = _construct(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = format_decomposition(decomposition.host, decomposition.cycles)
    if args.output is None:
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="ascii")
        print(
            f"wrote {args.output} ({decomposition.cycle_count} cycles,"
            f" host {host_header(decomposition.host)})"
        )
    return EXIT_PASS


def _parse_pins(items: list[str], n_vertices: int) -> dict[int, int]:
    pins: dict[int, int] = {}
    for item in items:
        vertex, _, colour = item.partition("=")
        try:
            v, c = int(vertex), int(colour)
        except ValueError as exc:
            raise ValueError(f"bad pin {item!r}, expected VERTEX=COLOUR") from exc
        if not 0 <= v < n_vertices:
            raise ValueError(f"pin vertex {v} out of range")
        if c not in (0, 1):
            raise ValueError(f"pin colour must be 0 or 1, got {c}")
        if pins.get(v, c) != c:
            raise ValueError(f"vertex {v} pinned to both colours")
        pins[v] = c
    return pins


def _parse_id_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok]
    except ValueError as exc:
        raise ValueError(f"bad vertex list {text!r}") from exc


def _parse_colouring(text: str, n_vertices: int) -> list[int]:
    if len(text) != n_vertices or set(text) - {"0", "1"}:
        raise ValueError(
            f"colouring must be {n_vertices} characters of 0/1, got {text!r}"
        )
    return [int(ch) for ch in text]


def _cert_record(result: verify.CertResult) -> CheckRecord:
    return CheckRecord(
        verdict=result.verdict,
        model_count=len(result.outcome.models),
        nodes_explored=result.outcome.nodes_explored,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        host, raw_cycles = parse_decomposition(Path(args.file).read_text(encoding="ascii"))
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    wants_solver = (
        args.unique
        or args.anchor
        or args.exclusively_alt
        or args.exclusively_partially_alt
    )
    run_cover = args.exact_cover or not (wants_solver or args.valid_colouring)

    report = Report(subject=args.file, host=host_header(host), cycle_count=len(raw_cycles))
    started = time.perf_counter()
    limit = args.limit if args.limit is not None else solver.default_node_limit()

    try:
        if run_cover:
            cover = verify.check_cycles_cover(host, raw_cycles)
            report.add("exact_cover", CheckRecord(verdict=cover.ok, detail=cover.problem))
        if wants_solver or args.valid_colouring:
            decomposition = Decomposition(host, frozenset(raw_cycles))
            if args.valid_colouring:
                colouring = _parse_colouring(args.valid_colouring, host.vertex_count)
                ok = verify.is_valid_colouring(decomposition, colouring)
                report.add("valid_colouring", CheckRecord(verdict=ok))
            if args.unique:
                result = verify.is_uniquely_2colourable(decomposition, node_limit=limit)
                report.add("uniquely_2colourable", _cert_record(result))
            if args.anchor:
                zeros, ones = (_parse_id_list(part) for part in args.anchor)
                result = verify.check_anchor(decomposition, zeros, ones, node_limit=limit)
                report.add("anchored", _cert_record(result))
            if args.exclusively_alt:
                result = verify.check_exclusively_alt(decomposition, node_limit=limit)
                report.add("exclusively_alt", _cert_record(result))
            if args.exclusively_partially_alt:
                result = verify.check_exclusively_partially_alt(
                    decomposition, node_limit=limit
                )
                report.add("exclusively_partially_alt", _cert_record(result))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report.wall_time_s = time.perf_counter() - started

    if args.json:
        sys.stdout.write(report.to_json())
    else:
        for name, record in report.checks.items():
            word = {True: "pass", False: "FAIL", None: "indeterminate"}[record.verdict]
            extras = []
            if record.model_count is not None:
                extras.append(f"models={record.model_count}")
            if record.nodes_explored is not None:
                extras.append(f"nodes={record.nodes_explored}")
            if record.detail:
                extras.append(record.detail)
            suffix = f" ({', '.join(extras)})" if extras else ""
            print(f"{name}: {word}{suffix}")
    return EXIT_PASS if report.all_passed() else EXIT_FAIL


def cmd_colourings(args: argparse.Namespace) -> int:
    try:
        host, raw_cycles = parse_decomposition(Path(args.file).read_text(encoding="ascii"))
        decomposition = Decomposition(host, frozenset(raw_cycles))
        pins = _parse_pins(args.pin, host.vertex_count)
    except (OSError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    limit = args.limit if args.limit is not None else solver.default_node_limit()
    outcome = verify.enumerate_2colourings(decomposition, pins=pins, node_limit=limit)
    for model in outcome.models:
        print("".join(str(c) for c in model))
    status = "complete" if outcome.complete else "incomplete"
    print(f"total {len(outcome.models)} {status}")
    return EXIT_PASS if outcome.complete else EXIT_FAIL


def cmd_demo(args: argparse.Namespace) -> int:
    from . import acceptance

    results = acceptance.run_all(out_dir=args.out_dir)
    for result in results:
        print(result.line())
    passed = sum(r.ok for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return EXIT_PASS if passed == len(results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycdec",
        description=(
            "Construct and certify uniquely 2-colourable 4-cycle decompositions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_construct = sub.add_parser(
        "construct", help="build a decomposition and write it as text"
    )
    kinds = p_construct.add_subparsers(dest="kind", required=True)
    p_complete = kinds.add_parser("complete", help="complete graph, order 8h+1 >= 49")
    p_complete.add_argument("--order", type=int, required=True)
    p_cocktail = kinds.add_parser("cocktail", help="cocktail party graph, even order >= 50")
    p_cocktail.add_argument("--order", type=int, required=True)
    p_cocktail.add_argument("--petals", type=int, default=None)
    p_cocktail.add_argument("--hub-pairs", type=int, default=None)
    p_excl = kinds.add_parser(
        "exclusively-alt", help="alternation-forcing multipartite decomposition"
    )
    p_excl.add_argument("--parts", type=int, required=True)
    p_excl.add_argument(
        "--ell",
        default="2",
        help="part size parameter: one integer for all parts, or a comma list",
    )
    p_seed = kinds.add_parser("seed", help="anchored seed decomposition")
    p_seed.add_argument(
        "--hub-pairs",
        type=int,
        required=True,
        help="number of hub pairs t >= 1, or 0 for the nine-vertex complete seed",
    )
    kinds.add_parser("toy", help="three-part fixture that is not uniquely 2-colourable")
    for sp in (p_complete, p_cocktail, p_excl, p_seed, kinds.choices["toy"]):
        sp.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p_construct.set_defaults(func=cmd_construct)

    p_verify = sub.add_parser("verify", help="run certification checks on a file")
    p_verify.add_argument("file")
    p_verify.add_argument(
        "--exact-cover",
        action="store_true",
        help="check every host edge is covered exactly once (default when no other check)",
    )
    p_verify.add_argument("--unique", action="store_true", help="certify unique 2-colourability")
    p_verify.add_argument(
        "--anchor",
        nargs=2,
        metavar=("ZEROS", "ONES"),
        help="comma-separated vertex lists that must force the whole colouring",
    )
    p_verify.add_argument("--exclusively-alt", action="store_true")
    p_verify.add_argument("--exclusively-partially-alt", action="store_true")
    p_verify.add_argument(
        "--valid-colouring",
        metavar="BITS",
        help="check a 0/1 string is a valid colouring (no monochromatic cycle)",
    )
    p_verify.add_argument("--limit", type=int, default=None, help="solver node limit")
    p_verify.add_argument("--json", action="store_true", help="machine-readable report")
    p_verify.set_defaults(func=cmd_verify)

    p_col = sub.add_parser("colourings", help="enumerate valid 2-colourings of a file")
    p_col.add_argument("file")
    p_col.add_argument(
        "--pin",
        action="append",
        default=[],
        metavar="VERTEX=COLOUR",
        help="fix a vertex colour before enumerating (repeatable)",
    )
    p_col.add_argument("--limit", type=int, default=None, help="solver node limit")
    p_col.set_defaults(func=cmd_colourings)

    p_demo = sub.add_parser("demo", help="run the full acceptance suite")
    p_demo.add_argument("--out-dir", default=None, help="directory for generated artifacts")
    p_demo.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
