"""Hand-built anchored decompositions used as the petals of the flowers.

Each seed is a 4-cycle decomposition of a small host (K_9, or a cocktail
party graph of order 2t + 8) containing a distinguished "petal": four
pairs of vertices a_1..a_4, b_1..b_4, plus a hub of the remaining
vertices.  The seed is *anchored* to ({a_1..a_4}, {b_1..b_4}): once the
a-vertices are pinned to one colour and the b-vertices to the other, the
starred "key" cycles force every hub vertex in turn, so exactly one valid
colouring remains.  That rigidity is what the flower assembly multiplies
across many petals.

Vertex ids: hub vertices come first (s_j has id j - 1; the K_9 seed has
the single hub vertex s_1 = 0), then the petal as a_1, b_1, a_2, b_2, ...
so a_j = hub + 2(j - 1) and b_j = hub + 2j - 1.  On cocktail hosts this
interleaving makes {a_j, b_j} exactly the missing pairs {2k, 2k + 1}.

The cycle tables below are data, verified rather than derived: on first
construction every seed is checked for exact edge cover and (for the
table-born ones) for its anchor by exhaustive enumeration, so a
transcription typo cannot survive unnoticed.  Seeds for t > 4 are grown
inductively: the previous seed's non-hub cycles are carried over (petal
ids shift by the two new hub vertices), a relabelled copy of the seed
four sizes down becomes the new hub decomposition, and four fresh cycles
join the new hub pair to the petal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hostgraph import (
    Cycle,
    Decomposition,
    HostGraph,
    canonical_cycle,
    relabel_cycle,
)
from .verify import check_anchor, check_cycles_cover

# Table rows: (cycle in cyclic vertex order, is key cycle).  Mnemonics are
# parsed against the id scheme in the module docstring.

_K9_PETAL = (
    ("a1 a3 a2 s1", True),
    ("a2 a4 a3 b3", False),
    ("a3 b1 a4 b4", False),
    ("a4 b2 b1 a1", False),
    ("b1 s1 b2 a2", False),
    ("b2 b3 s1 a3", False),
    ("s1 b4 b3 a4", False),
    ("b3 a1 b4 b1", False),
    ("b4 a2 a1 b2", False),
)

_COCKTAIL_HUB = {
    1: (),
    2: ("s1 s3 s2 s4",),
    3: (
        "s1 s3 s2 s4",
        "s1 s6 s4 s5",
        "s3 s6 s2 s5",
    ),
    4: (
        "s1 s8 s2 s7",
        "s1 s4 s8 s6",
        "s3 s2 s5 s7",
        "s3 s6 s4 s5",
        "s1 s3 s8 s5",
        "s4 s2 s6 s7",
    ),
}

_COCKTAIL_PETAL = {
    1: (
        ("a1 a2 a3 s2", True),
        ("a1 a3 b1 b3", False),
        ("s1 a2 s2 b2", False),
        ("b1 s2 b3 a4", False),
        ("b1 b2 b3 s1", True),
        ("a1 s1 a3 b4", False),
        ("a1 b2 a3 a4", False),
        ("b1 a2 b3 b4", False),
        ("a4 s1 b4 s2", False),
        ("a2 a4 b2 b4", False),
    ),
    2: (
        ("a1 a2 a3 s2", True),
        ("s1 a3 s3 b2", False),
        ("a2 s3 a4 b3", False),
        ("a3 a4 b1 s4", False),
        ("s3 b1 s2 b4", True),
        ("a4 s2 b2 a1", False),
        ("b1 b2 b3 s1", True),
        ("s2 b3 s4 a2", False),
        ("b2 s4 b4 a3", False),
        ("b3 b4 a1 s3", False),
        ("s4 a1 s1 a4", True),
        ("b4 s1 a2 b1", False),
        ("a2 a4 b2 b4", False),
        ("a3 b1 b3 a1", False),
    ),
    3: (
        ("a1 a2 a3 s2", True),
        ("s1 a3 s3 b2", False),
        ("s6 a1 s5 b1", False),
        ("a3 a4 b1 s4", False),
        ("s3 b1 s2 b4", True),
        ("a4 s2 b2 a1", False),
        ("b1 b2 b3 s1", True),
        ("s2 b3 s4 a2", False),
        ("s6 a3 s5 b3", False),
        ("b3 b4 a1 s3", False),
        ("s4 a1 s1 a4", True),
        ("b4 s1 a2 b1", False),
        ("a2 a4 b2 b4", False),
        ("a3 b1 b3 a1", False),
        ("a2 s3 a4 s6", True),
        ("b2 s4 b4 s5", True),
        ("s6 b2 a3 b4", False),
        ("s5 a2 b3 a4", False),
    ),
    4: (
        ("a1 a2 a3 s4", True),
        ("s1 a3 s3 b2", False),
        ("s6 a1 s5 b1", False),
        ("a3 a4 b1 s2", False),
        ("s3 b1 s4 b4", True),
        ("a4 s4 b2 a1", False),
        ("b1 b2 b3 s1", True),
        ("s4 b3 s2 a2", False),
        ("s6 a3 s5 b3", False),
        ("b3 b4 a1 s3", False),
        ("s2 a1 s1 a4", True),
        ("b4 s1 a2 b1", False),
        ("a2 a4 b2 b4", False),
        ("a3 b1 b3 a1", False),
        ("a2 s3 a4 s6", True),
        ("b2 s2 b4 s5", True),
        ("s8 b2 a3 b4", False),
        ("s7 a2 b3 a4", False),
        ("s8 a1 s7 b1", False),
        ("s8 a2 s5 a4", True),
        ("s8 a3 s7 b3", False),
        ("s7 b2 s6 b4", True),
    ),
}


def _vertex_id(name: str, hub_size: int) -> int:
    kind, idx = name[0], int(name[1:])
    if kind == "s":
        if not 1 <= idx <= hub_size:
            raise ValueError(f"hub vertex {name} out of range for hub {hub_size}")
        return idx - 1
    if kind not in ("a", "b") or not 1 <= idx <= 4:
        raise ValueError(f"bad vertex mnemonic {name!r}")
    return hub_size + 2 * (idx - 1) + (kind == "b")


def _parse_cycle(text: str, hub_size: int) -> Cycle:
    names = text.split()
    if len(names) != 4:
        raise ValueError(f"cycle {text!r} does not have 4 vertices")
    return canonical_cycle(tuple(_vertex_id(n, hub_size) for n in names))


@dataclass(frozen=True)
class AnchoredSeed:
    """A seed decomposition with its petal pins and hub layout.

    ``cycles`` decomposes ``host``; ``sub_cycles`` is the subset living
    entirely on the hub (itself a decomposition of the induced hub graph),
    which the flower assembly shares between petals instead of copying.
    """

    host: HostGraph
    hub_pairs: int  # t for cocktail seeds, 0 for the K_9 seed
    hub_size: int
    cycles: frozenset[Cycle]
    sub_cycles: frozenset[Cycle]
    key_cycles: frozenset[Cycle]
    pin_to_0: tuple[int, ...]
    pin_to_1: tuple[int, ...]

    @property
    def petal_cycles(self) -> frozenset[Cycle]:
        return self.cycles - self.sub_cycles

    def reference_colouring(self) -> tuple[int, ...]:
        """The one colouring compatible with the pins: a-vertices and odd
        hub vertices s_1, s_3, ... get colour 0 (the lonely K_9 hub vertex
        falls on the other side)."""
        n = self.host.vertex_count
        out = []
        for v in range(n):
            if v < self.hub_size:
                out.append(1 if self.hub_size == 1 else v % 2)
            else:
                out.append((v - self.hub_size) % 2)
        return tuple(out)


def _petal_pins(hub_size: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a = tuple(hub_size + 2 * j for j in range(4))
    b = tuple(hub_size + 2 * j + 1 for j in range(4))
    return a, b


def _hub_host(hub_size: int) -> HostGraph:
    return HostGraph.complete(1) if hub_size == 1 else HostGraph.cocktail(hub_size)


def _checked(seed: AnchoredSeed, check_anchor_too: bool) -> AnchoredSeed:
    cover = check_cycles_cover(seed.host, sorted(seed.cycles))
    if not cover.ok:
        raise AssertionError(f"seed table is broken: {cover.problem}")
    if seed.hub_size >= 2:
        sub_cover = check_cycles_cover(_hub_host(seed.hub_size), sorted(seed.sub_cycles))
        if not sub_cover.ok:
            raise AssertionError(f"seed hub table is broken: {sub_cover.problem}")
    if not seed.key_cycles <= seed.petal_cycles:
        raise AssertionError("key cycles must lie outside the hub decomposition")
    if check_anchor_too:
        anchor = check_anchor(
            Decomposition(seed.host, seed.cycles),
            seed.pin_to_0,
            seed.pin_to_1,
            node_limit=10**6,
        )
        if anchor.verdict is not True:
            raise AssertionError("seed table lost its anchor; data is corrupt")
        if anchor.witness != seed.reference_colouring():
            raise AssertionError("seed anchor model disagrees with the reference")
    return seed


def _from_table(
    host: HostGraph,
    hub_pairs: int,
    hub_size: int,
    hub_rows: tuple[str, ...],
    petal_rows: tuple[tuple[str, bool], ...],
) -> AnchoredSeed:
    sub = frozenset(_parse_cycle(row, hub_size) for row in hub_rows)
    petal = frozenset(_parse_cycle(row, hub_size) for row, _ in petal_rows)
    keys = frozenset(_parse_cycle(row, hub_size) for row, star in petal_rows if star)
    if len(sub) != len(hub_rows) or len(petal) != len(petal_rows):
        raise AssertionError("seed table repeats a cycle")
    pin0, pin1 = _petal_pins(hub_size)
    return _checked(
        AnchoredSeed(
            host=host,
            hub_pairs=hub_pairs,
            hub_size=hub_size,
            cycles=sub | petal,
            sub_cycles=sub,
            key_cycles=keys,
            pin_to_0=pin0,
            pin_to_1=pin1,
        ),
        check_anchor_too=True,
    )


@lru_cache(maxsize=None)
def k9_seed() -> AnchoredSeed:
    """The complete-graph seed: K_9 with hub {s_1} and one key cycle."""
    return _from_table(HostGraph.complete(9), 0, 1, (), _K9_PETAL)


@lru_cache(maxsize=None)
def cocktail_seed(t: int) -> AnchoredSeed:
    """The cocktail seed of hub size 2t on 2t + 8 vertices.

    Rows for t <= 4 come straight out of the table.  Larger seeds are
    grown by the induction described in the module docstring; their key
    cycles are the t = 4 key cycles, which persist in every later seed
    with the petal relocated behind the grown hub.
    """
    if t < 1:
        raise ValueError(f"cocktail seed needs t >= 1, got {t}")
    hub = 2 * t
    host = HostGraph.cocktail(hub + 8)
    if t <= 4:
        return _from_table(host, t, hub, _COCKTAIL_HUB[t], _COCKTAIL_PETAL[t])

    base = cocktail_seed(t - 4)
    prev = cocktail_seed(t - 1)

    # base's whole host becomes the new hub: a_i -> s_{2i-1}, b_i -> s_{2i},
    # s_i -> s_{i+8}; in ids, hub vertices shift up by 8 and the petal
    # lands on ids 0..7.
    old_hub = base.hub_size

    def into_hub(u: int) -> int:
        return u + 8 if u < old_hub else u - old_hub

    sub = frozenset(relabel_cycle(c, into_hub) for c in base.cycles)

    # the previous seed's petal cycles carry over; its petal slides up by
    # the two new hub vertices.
    def shift_petal(u: int) -> int:
        return u if u < hub - 2 else u + 2

    carried = frozenset(relabel_cycle(c, shift_petal) for c in prev.petal_cycles)
    bridges = frozenset(
        canonical_cycle((hub - 2, hub + 2 * j, hub - 1, hub + 2 * j + 1))
        for j in range(4)
    )
    cycles = sub | carried | bridges
    if len(cycles) != len(sub) + len(carried) + len(bridges):
        raise AssertionError("seed induction produced overlapping cycles")
    keys = frozenset(
        _parse_cycle(row, hub) for row, star in _COCKTAIL_PETAL[4] if star
    )
    pin0, pin1 = _petal_pins(hub)
    return _checked(
        AnchoredSeed(
            host=host,
            hub_pairs=t,
            hub_size=hub,
            cycles=cycles,
            sub_cycles=sub,
            key_cycles=keys,
            pin_to_0=pin0,
            pin_to_1=pin1,
        ),
        check_anchor_too=False,
    )
