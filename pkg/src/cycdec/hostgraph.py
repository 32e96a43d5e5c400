"""Host graphs, canonical 4-cycles, and decompositions.

Three host families appear.  ``complete n`` is the complete graph K_n on
vertices 0..n-1.  ``cocktail n`` (n even) is K_n minus the perfect matching
{2k, 2k+1}: everyone is adjacent except partners.  ``multipartite s_1 ...
s_r`` is the complete multipartite graph whose parts are consecutive id
ranges of the given sizes; edges join distinct parts only.

A 4-cycle is stored as the tuple (v1, v2, v3, v4) of its vertices in cyclic
order, canonicalised so that v1 is the smallest vertex and v2 < v4 (the
smaller neighbour of v1 comes second).  Of the eight tuples describing the
same cycle, exactly one is canonical.

A decomposition is a host together with a set of canonical 4-cycles; the
intent is that the cycles partition the host's edge set, but that global
property is checked separately (``verify.check_exact_cover``), not here.
Construction only enforces the local invariants: canonical form, ids in
range, and every cycle edge present in the host.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Iterator, Sequence

Cycle = tuple[int, int, int, int]
Edge = tuple[int, int]


def canonical_cycle(quad: Sequence[int]) -> Cycle:
    """Canonical form of the 4-cycle visiting the given vertices in order."""
    a, b, c, d = quad
    if len({a, b, c, d}) != 4:
        raise ValueError(f"cycle {quad!r} repeats a vertex")
    if min(a, b, c, d) < 0:
        raise ValueError(f"cycle {quad!r} has a negative vertex id")
    cyc = (a, b, c, d)
    k = cyc.index(min(cyc))
    first = cyc[k]
    nb1, nb2 = cyc[(k + 1) % 4], cyc[(k - 1) % 4]
    opposite = cyc[(k + 2) % 4]
    return (first, min(nb1, nb2), opposite, max(nb1, nb2))


def is_canonical(cyc: Cycle) -> bool:
    return canonical_cycle(cyc) == tuple(cyc)


def cycle_edges(cyc: Cycle) -> tuple[Edge, Edge, Edge, Edge]:
    """The four edges of the cycle, each as a sorted pair."""
    a, b, c, d = cyc
    return (
        (min(a, b), max(a, b)),
        (min(b, c), max(b, c)),
        (min(c, d), max(c, d)),
        (min(d, a), max(d, a)),
    )


def relabel_cycle(cyc: Cycle, mapping) -> Cycle:
    """Apply a vertex map (callable or indexable) and re-canonicalise."""
    get = mapping if callable(mapping) else mapping.__getitem__
    return canonical_cycle((get(cyc[0]), get(cyc[1]), get(cyc[2]), get(cyc[3])))


@dataclass(frozen=True)
class HostGraph:
    """One of the three host families, determined by ``family``.

    ``n`` is the vertex count; ``part_sizes`` is non-empty only for the
    multipartite family.
    """

    family: str
    n: int
    part_sizes: tuple[int, ...] = ()

    @classmethod
    def complete(cls, n: int) -> HostGraph:
        if n < 1:
            raise ValueError(f"complete host needs n >= 1, got {n}")
        return cls("complete", n)

    @classmethod
    def cocktail(cls, n: int) -> HostGraph:
        if n < 2 or n % 2:
            raise ValueError(f"cocktail host needs even n >= 2, got {n}")
        return cls("cocktail", n)

    @classmethod
    def multipartite(cls, part_sizes: Sequence[int]) -> HostGraph:
        sizes = tuple(int(s) for s in part_sizes)
        if not sizes or any(s < 1 for s in sizes):
            raise ValueError(f"multipartite host needs positive part sizes, got {sizes!r}")
        return cls("multipartite", sum(sizes), sizes)

    def __post_init__(self) -> None:
        if self.family not in ("complete", "cocktail", "multipartite"):
            raise ValueError(f"unknown host family {self.family!r}")
        if self.family == "multipartite":
            if sum(self.part_sizes) != self.n:
                raise ValueError("part sizes do not sum to n")
        elif self.part_sizes:
            raise ValueError(f"{self.family} host takes no part sizes")
        # Offsets make part_of a bisect; computed once, hashable tuple.
        if self.family == "multipartite":
            offs, acc = [], 0
            for s in self.part_sizes:
                offs.append(acc)
                acc += s
            object.__setattr__(self, "_offsets", tuple(offs))

    _offsets: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    @property
    def vertex_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        n = self.n
        if self.family == "complete":
            return n * (n - 1) // 2
        if self.family == "cocktail":
            return n * (n - 2) // 2
        return (n * n - sum(s * s for s in self.part_sizes)) // 2

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for host on {self.n} vertices")

    def part_of(self, v: int) -> int:
        """Index of the part containing v (multipartite only)."""
        if self.family != "multipartite":
            raise ValueError("part_of is only defined for multipartite hosts")
        self.check_vertex(v)
        return bisect_right(self._offsets, v) - 1

    def part_ranges(self) -> tuple[tuple[int, int], ...]:
        """Half-open id ranges (lo, hi) of the parts (multipartite only)."""
        if self.family != "multipartite":
            raise ValueError("part_ranges is only defined for multipartite hosts")
        return tuple(
            (off, off + size) for off, size in zip(self._offsets, self.part_sizes)
        )

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            return False
        if self.family == "complete":
            return True
        if self.family == "cocktail":
            return (u ^ 1) != v
        return self.part_of(u) != self.part_of(v)

    def edges(self) -> Iterator[Edge]:
        """All edges as sorted pairs, in lexicographic order."""
        for u, v in itertools.combinations(range(self.n), 2):
            if self.has_edge(u, v):
                yield (u, v)


@dataclass(frozen=True)
class Decomposition:
    """A host graph plus a set of canonical 4-cycles drawn from it."""

    host: HostGraph
    cycles: frozenset[Cycle]

    def __post_init__(self) -> None:
        for cyc in self.cycles:
            if not is_canonical(cyc):
                raise ValueError(f"cycle {cyc} is not in canonical form")
            for u, v in cycle_edges(cyc):
                if not self.host.has_edge(u, v):
                    raise ValueError(f"cycle {cyc} uses non-host edge ({u}, {v})")

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def sorted_cycles(self) -> list[Cycle]:
        return sorted(self.cycles)

    def relabelled(self, mapping, host: HostGraph | None = None) -> Decomposition:
        """Image under a vertex map, on the same host unless one is given."""
        new = frozenset(relabel_cycle(c, mapping) for c in self.cycles)
        if len(new) != len(self.cycles):
            raise ValueError("vertex map identified two distinct cycles")
        return Decomposition(host if host is not None else self.host, new)


def empty_decomposition(host: HostGraph) -> Decomposition:
    return Decomposition(host, frozenset())
