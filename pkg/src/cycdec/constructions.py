"""Product-style 4-cycle decompositions of complete multipartite graphs.

The building block is a pairing product: given a family A of disjoint
vertex pairs on one side of a complete bipartite graph and a family B on
the other, every (pair, pair) combination spans one 4-cycle

    {a, a'} x {b, b'}  ->  (a, b, a', b'),

and when A and B partition their sides these |A| * |B| cycles partition the
bipartite edge set.  Applied to the alpha / beta / gamma pairings of the
label space this yields three bridge decompositions between two parts; the
gamma bridge mixes families, pairing the two level-0 gamma pairs against
the far side's alpha pairs and every other gamma pair against the far
side's beta pairs, which is what makes it propagate alternation from one
side to the other.

Whole multipartite hosts are then decomposed by patching: parts are
grouped into consecutive blocks, each multi-part block brings its own
decomposition, and every cross-block pair of parts gets a bridge, oriented
by a tournament on the blocks (side 0 of the bridge faces the arc's tail).
The exclusiviser is one specific patching, with two extra singleton parts,
gamma bridges, and a directed triangle as tournament, that upgrades a
partially-alternation-forcing decomposition into one whose every valid
colouring alternates everywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .hostgraph import Cycle, Decomposition, HostGraph, canonical_cycle
from .labels import Label, LabelPair, PairKind, label_count, pair_partition


@dataclass(frozen=True)
class Tournament:
    """An orientation of the complete graph on ``size`` nodes."""

    size: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError(f"tournament needs size >= 1, got {self.size}")
        want = {(i, j) for i, j in itertools.combinations(range(self.size), 2)}
        got = {(min(a, b), max(a, b)) for a, b in self.arcs}
        if got != want or len(self.arcs) != len(want):
            raise ValueError("arcs must orient each node pair exactly once")

    @classmethod
    def ascending(cls, size: int) -> Tournament:
        """The default orientation i -> j for i < j."""
        return cls(
            size, frozenset((i, j) for i, j in itertools.combinations(range(size), 2))
        )

    @classmethod
    def directed_triangle(cls) -> Tournament:
        return cls(3, frozenset({(0, 1), (1, 2), (2, 0)}))

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.arcs


# An embedding places a label on one side (0 or 1) of a bipartite section
# as a concrete vertex id.
Embedding = Callable[[int, Label], int]


def rank_embedding(base0: int, base1: int) -> Embedding:
    """Labels of side s become ids base_s + rank, the standard placement."""

    def embed(side: int, lab: Label) -> int:
        return (base0 if side == 0 else base1) + lab.rank()

    return embed


def pairing_product(
    side0: Sequence[LabelPair], side1: Sequence[LabelPair], embed: Embedding
) -> frozenset[Cycle]:
    """One 4-cycle per pair of pairs; see the module docstring.

    The pairs within each side must be disjoint, and the two embedded sides
    must not collide.
    """
    for side_idx, side in ((0, side0), (1, side1)):
        labels = [lab for pair in side for lab in (pair.lo, pair.hi)]
        if len(set(labels)) != len(labels):
            raise ValueError(f"side {side_idx} pairs are not disjoint")
    ids0 = {embed(0, lab) for pair in side0 for lab in (pair.lo, pair.hi)}
    ids1 = {embed(1, lab) for pair in side1 for lab in (pair.lo, pair.hi)}
    if len(ids0) != 2 * len(side0) or len(ids1) != 2 * len(side1):
        raise ValueError("embedding is not injective on a side")
    if ids0 & ids1:
        raise ValueError("embedded sides collide")
    cycles = frozenset(
        canonical_cycle(
            (embed(0, a.lo), embed(1, b.lo), embed(0, a.hi), embed(1, b.hi))
        )
        for a in side0
        for b in side1
    )
    assert len(cycles) == len(side0) * len(side1)
    return cycles


def bridge_decomposition(
    kind: PairKind, ell0: int, ell1: int, embed: Embedding
) -> frozenset[Cycle]:
    """Decompose the complete bipartite graph between two embedded parts.

    * alpha: alpha pairs against alpha pairs,
    * beta:  beta pairs against beta pairs,
    * gamma: the two level-0 gamma pairs of side 0 against side 1's alpha
      pairs, the remaining gamma pairs against side 1's beta pairs.

    The gamma bridge needs ell0 > 1, otherwise there is no remainder and
    the mixed shape degenerates.
    """
    if kind is PairKind.ALPHA or kind is PairKind.BETA:
        return pairing_product(
            pair_partition(ell0, kind), pair_partition(ell1, kind), embed
        )
    if kind is PairKind.GAMMA:
        if ell0 < 2:
            raise ValueError("gamma bridge needs ell >= 2 on side 0")
        gammas = pair_partition(ell0, PairKind.GAMMA)
        head = pairing_product(gammas[:2], pair_partition(ell1, PairKind.ALPHA), embed)
        tail = pairing_product(gammas[2:], pair_partition(ell1, PairKind.BETA), embed)
        return head | tail
    raise ValueError(f"unknown pair kind {kind!r}")


def reverse_bridge(cycles: Iterable[Cycle], side_size: int) -> frozenset[Cycle]:
    """The same bridge seen from the other side.

    For a decomposition of the bipartite graph between two parts of equal
    size laid out as ids [0, side_size) and [side_size, 2*side_size), swap
    the roles of the sides by the label-preserving exchange
    v -> (v + side_size) mod (2*side_size).
    """
    if side_size < 1:
        raise ValueError(f"side size must be >= 1, got {side_size}")
    total = 2 * side_size
    out = set()
    for cyc in cycles:
        if any(not 0 <= v < total for v in cyc):
            raise ValueError(f"cycle {cyc} does not fit two sides of {side_size}")
        out.add(canonical_cycle(tuple((v + side_size) % total for v in cyc)))
    return frozenset(out)


def label_host(ells: Sequence[int]) -> HostGraph:
    """The multipartite host whose part p carries the ell_p label space."""
    if not ells or any(e < 1 for e in ells):
        raise ValueError(f"need positive label parameters, got {ells!r}")
    return HostGraph.multipartite([label_count(e) for e in ells])


def patch(
    block_sizes: Sequence[int],
    block_decompositions: Sequence[Decomposition | None],
    bridge: PairKind,
    ells: Sequence[int],
    tournament: Tournament | None = None,
) -> Decomposition:
    """Assemble a decomposition of the whole multipartite host from blocks.

    Parts are grouped left to right into consecutive blocks of the given
    sizes.  Each block of more than one part contributes its own
    decomposition (on exactly the matching multipartite host); singleton
    blocks contribute nothing and pass None.  Every pair of parts in
    different blocks gets a bridge of the given kind, with side 0 on the
    part whose block is the tail of the tournament arc.  The tournament
    defaults to the ascending orientation; a gamma bridge requires every
    part to have ell >= 2 since either side may end up as side 0.
    """
    ells = list(ells)
    block_sizes = list(block_sizes)
    r = len(block_sizes)
    if r < 1 or any(s < 1 for s in block_sizes):
        raise ValueError(f"block sizes must be positive, got {block_sizes!r}")
    if sum(block_sizes) != len(ells):
        raise ValueError(
            f"block sizes {block_sizes!r} do not cover {len(ells)} parts"
        )
    if len(block_decompositions) != r:
        raise ValueError("need one decomposition slot per block")
    if tournament is None:
        tournament = Tournament.ascending(r)
    if tournament.size != r:
        raise ValueError(f"tournament size {tournament.size} != {r} blocks")
    if bridge is PairKind.GAMMA and any(e < 2 for e in ells):
        raise ValueError("gamma bridges need ell >= 2 on every part")

    host = label_host(ells)
    offsets = [lo for lo, _ in host.part_ranges()]
    block_of: list[int] = []
    block_start = []
    for b, size in enumerate(block_sizes):
        block_start.append(len(block_of))
        block_of.extend([b] * size)

    cycles: set[Cycle] = set()
    expected = 0
    for b, size in enumerate(block_sizes):
        dec = block_decompositions[b]
        first = block_start[b]
        block_ells = ells[first : first + size]
        if size == 1:
            if dec is not None and dec.cycles:
                raise ValueError(f"singleton block {b} cannot carry cycles")
            continue
        if dec is None:
            raise ValueError(f"block {b} spans {size} parts and needs a decomposition")
        if dec.host != label_host(block_ells):
            raise ValueError(
                f"block {b} decomposition host {dec.host} does not match parts"
            )
        shift = offsets[first]
        cycles.update(
            canonical_cycle(tuple(v + shift for v in cyc)) for cyc in dec.cycles
        )
        expected += len(dec.cycles)

    for i, j in itertools.combinations(range(len(ells)), 2):
        bi, bj = block_of[i], block_of[j]
        if bi == bj:
            continue
        src, dst = (i, j) if tournament.has_arc(bi, bj) else (j, i)
        cycles.update(
            bridge_decomposition(
                bridge, ells[src], ells[dst], rank_embedding(offsets[src], offsets[dst])
            )
        )
        expected += 4 * ells[i] * ells[j]

    if len(cycles) != expected:
        raise AssertionError("patched pieces overlapped; construction is broken")
    return Decomposition(host, frozenset(cycles))


def exclusiviser(decomposition: Decomposition, ells: Sequence[int]) -> Decomposition:
    """Append two singleton parts tied in by gamma bridges on a triangle.

    ``decomposition`` lives on the first len(ells) - 2 parts (it is empty
    when that is a single part).  The bridges between the three groups
    {old parts}, {part h-2}, {part h-1} follow the directed triangle
    0 -> 1 -> 2 -> 0, so each group is the gamma side of one bridge class
    and the alpha/beta side of another; that cyclic pattern is what forces
    every surviving colouring to alternate on every part at once.
    """
    ells = list(ells)
    h = len(ells)
    if h < 3:
        raise ValueError(f"exclusiviser needs at least 3 parts, got {h}")
    if any(e < 2 for e in ells):
        raise ValueError("exclusiviser needs ell >= 2 on every part")
    if decomposition.host != label_host(ells[: h - 2]):
        raise ValueError("decomposition does not live on the first h - 2 parts")
    return patch(
        [h - 2, 1, 1],
        [decomposition, None, None],
        PairKind.GAMMA,
        ells,
        Tournament.directed_triangle(),
    )


def alpha_pair_patch(ells: Sequence[int]) -> Decomposition:
    """All-singleton patching with alpha bridges: every part pair gets an
    alpha bridge.  Every alternating colouring is valid for it."""
    return patch([1] * len(ells), [None] * len(ells), PairKind.ALPHA, ells)


def alpha_beta_core(ell: int) -> Decomposition:
    """Four equal parts: two alpha-bridged halves joined by beta bridges.

    Valid colourings of this decomposition always alternate on at least
    one part, which is the seed property the exclusiviser amplifies.
    """
    half = alpha_pair_patch([ell, ell])
    return patch([2, 2], [half, half], PairKind.BETA, [ell] * 4)


def toy_three_part() -> Decomposition:
    """Smallest patching shape: three parts of two vertices, one 4-cycle
    per part pair.  Handy as a worked example: it has many colourings and
    is nowhere near uniquely 2-colourable."""
    host = HostGraph.multipartite([2, 2, 2])
    cycles = frozenset(
        canonical_cycle(q) for q in ((0, 2, 1, 3), (0, 4, 1, 5), (2, 4, 3, 5))
    )
    return Decomposition(host, cycles)


def exclusively_alt(h: int, ells: Sequence[int]) -> Decomposition:
    """The alternation-forcing decomposition on h parts (h >= 6).

    Two alpha-bridged parts and a further alpha-bridged run of h - 4 parts
    are joined by beta bridges, and the exclusiviser contributes the last
    two parts.  Every valid 2-colouring of the result alternates on every
    part, and up to the colour swap the distinguished alternating colouring
    is the only one when the pieces are exact; certification is the job of
    ``verify.check_exclusively_alt``.
    """
    ells = list(ells)
    if h < 6:
        raise ValueError(f"need at least 6 parts, got {h}")
    if len(ells) != h:
        raise ValueError(f"need one ell per part: {len(ells)} != {h}")
    if any(e < 2 for e in ells):
        raise ValueError("every part needs ell >= 2")
    left = alpha_pair_patch(ells[:2])
    right = alpha_pair_patch(ells[2 : h - 2])
    core = patch([2, h - 4], [left, right], PairKind.BETA, ells[: h - 2])
    return exclusiviser(core, ells)
