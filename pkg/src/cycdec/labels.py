"""Ordered label space underlying every part of the multipartite host graphs.

Each part is a copy of Z_ell x Z_2 x Z_2 (4*ell points) in lexicographic
order, with a cyclic successor that wraps the maximum (ell-1, 1, 1) back to
the minimum (0, 0, 0).  Three pairings of this space drive the cycle
constructions:

* alpha pairs  {x, succ(x)} where x has third coordinate 0,
* beta pairs   {x, succ(x)} where succ(x) has third coordinate 0,
* gamma pairs  {(i, 0, c), (i, 1, c)}.

Each family partitions the 4*ell points into 2*ell disjoint pairs.  A
2-colouring of a part is *alternating* when consecutive points (including
the wraparound) always receive different colours; equivalently the
colouring has no monochromatic alpha pair and no monochromatic beta pair,
and its colour classes are exactly the two levels of the third coordinate.
Counting monochromatic ("twin") pairs per colour over the alpha and beta
families obeys an exact balance identity, which is what lets twin pairs be
traded between the two families in the larger constructions.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple, Sequence


class PairKind(Enum):
    """The three pair families over a label space."""

    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"


class Label(NamedTuple):
    """Point (i, j, c) of Z_ell x Z_2 x Z_2.  Tuple order is the label order."""

    i: int
    j: int
    c: int

    def rank(self) -> int:
        """Position in lexicographic order: 4*i + 2*j + c."""
        return 4 * self.i + 2 * self.j + self.c


class LabelPair(NamedTuple):
    """Unordered pair stored with lo < hi, except the wraparound beta pair.

    The beta pair {(ell-1, 1, 1), (0, 0, 0)} keeps the maximum label in
    ``lo`` so that ``hi`` is always the successor of ``lo``.
    """

    lo: Label
    hi: Label
    kind: PairKind


def check_label(x: Label, ell: int) -> None:
    if not (0 <= x.i < ell and x.j in (0, 1) and x.c in (0, 1)):
        raise ValueError(f"label {x} out of range for ell={ell}")


def label_count(ell: int) -> int:
    return 4 * ell


def all_labels(ell: int) -> list[Label]:
    """All 4*ell labels in increasing (= rank) order."""
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    return [Label(i, j, c) for i in range(ell) for j in (0, 1) for c in (0, 1)]


def label_from_rank(rank: int, ell: int) -> Label:
    if not 0 <= rank < 4 * ell:
        raise ValueError(f"rank {rank} out of range for ell={ell}")
    return Label(rank >> 2, (rank >> 1) & 1, rank & 1)


def successor(x: Label, ell: int) -> Label:
    """Cyclic successor; the maximum label wraps to (0, 0, 0)."""
    check_label(x, ell)
    return label_from_rank((x.rank() + 1) % (4 * ell), ell)


def pair_partition(ell: int, kind: PairKind) -> tuple[LabelPair, ...]:
    """The 2*ell pairs of the given family, in a fixed deterministic order.

    Alpha and beta pairs are ordered by their lower rank; gamma pairs come
    as (i=0, c=0), (i=0, c=1), (i=1, c=0), ...  so the two pairs on level
    i=0 lead the tuple.
    """
    if ell < 1:
        raise ValueError(f"ell must be >= 1, got {ell}")
    pairs: list[LabelPair] = []
    if kind is PairKind.ALPHA:
        for x in all_labels(ell):
            if x.c == 0:
                pairs.append(LabelPair(x, successor(x, ell), PairKind.ALPHA))
    elif kind is PairKind.BETA:
        for x in all_labels(ell):
            if x.c == 1:
                pairs.append(LabelPair(x, successor(x, ell), PairKind.BETA))
    elif kind is PairKind.GAMMA:
        for i in range(ell):
            for c in (0, 1):
                pairs.append(LabelPair(Label(i, 0, c), Label(i, 1, c), PairKind.GAMMA))
    else:  # pragma: no cover
        raise ValueError(f"unknown pair kind {kind!r}")
    assert len(pairs) == 2 * ell
    return tuple(pairs)


# A colouring of one part, indexed by rank.  Values are 0 or 1.
PartColouring = Sequence[int]


def _check_colouring(colouring: PartColouring) -> int:
    """Validate and return ell."""
    n = len(colouring)
    if n == 0 or n % 4:
        raise ValueError(f"part colouring length {n} is not a positive multiple of 4")
    if any(b not in (0, 1) for b in colouring):
        raise ValueError("part colouring must be 0/1 valued")
    return n // 4


def count_twin_pairs(colouring: PartColouring, kind: PairKind) -> tuple[int, int]:
    """Monochromatic pairs of the family, counted per colour.

    Returns (pairs fully coloured 0, pairs fully coloured 1).
    """
    ell = _check_colouring(colouring)
    counts = [0, 0]
    for pair in pair_partition(ell, kind):
        a, b = colouring[pair.lo.rank()], colouring[pair.hi.rank()]
        if a == b:
            counts[a] += 1
    return counts[0], counts[1]


def is_alt_colouring(colouring: PartColouring) -> bool:
    """True when consecutive labels (wraparound included) always differ."""
    n = len(colouring)
    _check_colouring(colouring)
    return all(colouring[r] != colouring[(r + 1) % n] for r in range(n))


def is_twin_free(colouring: PartColouring, kind: PairKind) -> bool:
    return count_twin_pairs(colouring, kind) == (0, 0)


def has_level_colour_classes(colouring: PartColouring) -> bool:
    """True when the colour classes are exactly the two c-levels.

    The c = 0 labels are the even ranks, so this asks for one colour on all
    even ranks and the other on all odd ranks.
    """
    _check_colouring(colouring)
    evens = set(colouring[0::2])
    odds = set(colouring[1::2])
    return len(evens) == 1 and len(odds) == 1 and evens != odds


def alt_colouring(ell: int, even_colour: int = 0) -> tuple[int, ...]:
    """The alternating colouring giving even ranks (c = 0) ``even_colour``."""
    if even_colour not in (0, 1):
        raise ValueError(f"colour must be 0 or 1, got {even_colour}")
    return tuple((r & 1) ^ even_colour for r in range(4 * ell))
