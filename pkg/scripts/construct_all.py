#!/usr/bin/env python3
"""Write every standard construction to decomposition files.

By default this produces the deterministic demo artifact set (seeds, toy
fixture, the six-part alternation-forcing decomposition, and the smallest
complete and cocktail builds).  With --full it also writes the larger
certified instances used by the acceptance suite.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from cycdec.acceptance import artifact_stage
from cycdec.assembly import build_cocktail, build_complete
from cycdec.fileformat import write_decomposition


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", type=Path, help="directory for the files")
    parser.add_argument(
        "--full",
        action="store_true",
        help="also build the larger instances (orders 57, 65 and 52..58)",
    )
    args = parser.parse_args()

    names = artifact_stage(args.out_dir)
    print(f"wrote {len(names)} base artifacts to {args.out_dir}")

    if args.full:
        extra = []
        for n in (57, 65):
            extra.append((f"complete-{n}.txt", build_complete(n)))
        for n in (52, 54, 56, 58):
            extra.append((f"cocktail-{n}.txt", build_cocktail(n)))
        extra.append(("cocktail-58-grown-seed.txt", build_cocktail(58, 6, 5)))
        for name, decomposition in extra:
            write_decomposition(args.out_dir / name, decomposition)
            print(f"wrote {name} ({decomposition.cycle_count} cycles)")


if __name__ == "__main__":
    main()
