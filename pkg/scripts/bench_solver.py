#!/usr/bin/env python3
"""Benchmark the certification solver on the standard instances.

Reports wall time, node count, and node throughput for unique-colourability
certification of the complete and cocktail builds, plus the exhaustive
alternation check for the multipartite construction.  Node counts are
deterministic; only the timings vary between machines.
"""

from __future__ import annotations

import argparse
import time

from cycdec.assembly import build_cocktail, build_complete
from cycdec.constructions import exclusively_alt
from cycdec.solver import warm_up
from cycdec.verify import check_exclusively_alt, is_uniquely_2colourable


def report(label: str, fn) -> None:
    started = time.perf_counter()
    result = fn()
    elapsed = time.perf_counter() - started
    nodes = result.outcome.nodes_explored
    rate = nodes / elapsed if elapsed > 0 else float("inf")
    print(
        f"{label:28s} verdict={result.verdict!s:5s} models={len(result.outcome.models):3d}"
        f" nodes={nodes:>12,} time={elapsed:8.2f}s rate={rate:12,.0f}/s"
    )


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--parts",
        type=int,
        default=6,
        help="multipartite sizes to check exhaustively (default 6)",
    )
    parser.add_argument(
        "--complete",
        type=int,
        nargs="*",
        default=[49, 57],
        help="complete-graph orders to certify (default 49 57)",
    )
    parser.add_argument(
        "--cocktail",
        type=int,
        nargs="*",
        default=[50, 58],
        help="cocktail orders to certify (default 50 58)",
    )
    args = parser.parse_args()

    print("compiling the solver kernel...")
    warm_up()

    for h in range(6, args.parts + 1):
        d = exclusively_alt(h, [2] * h)
        report(f"exclusively-alt h={h}", lambda d=d: check_exclusively_alt(d))
    for n in args.complete:
        d = build_complete(n)
        report(f"complete n={n}", lambda d=d: is_uniquely_2colourable(d))
    for n in args.cocktail:
        d = build_cocktail(n)
        report(f"cocktail n={n}", lambda d=d: is_uniquely_2colourable(d))


if __name__ == "__main__":
    main()
