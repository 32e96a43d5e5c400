"""Machine checks on decompositions: exact cover, colourings, anchors.

Everything here reduces to two primitives.  The combinatorial primitive
checks that the cycles partition the host's edge set.  The logical
primitive hands the cycles to the exhaustive enumerator (``solver``) as
not-all-equal constraints, with one vertex pinned to break the global
colour swap, and inspects the returned model list.

Every 2-colouring of interest is closed under swapping the two colours, so
pinning vertex 0 to colour 0 halves the search and loses nothing: the full
model set is the pinned one plus its complements.  The checks below state
their verdict as True/False only when the underlying enumeration ran to
completion; a truncated search yields verdict None (indeterminate).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .hostgraph import Cycle, Decomposition, HostGraph, cycle_edges
from .solver import SolveOutcome, enumerate_models

Colouring = tuple[int, ...]


# ---------------------------------------------------------------------------
# exact cover


@dataclass(frozen=True)
class CoverResult:
    ok: bool
    problem: str | None = None


def check_cycles_cover(host: HostGraph, cycles: Iterable[Cycle]) -> CoverResult:
    """Do the cycles partition the host's edges?  Reports the first offence.

    Works on a raw cycle list so that duplicated cycles (which a set would
    silently merge) still show up as duplicated edges.
    """
    seen: Counter = Counter()
    for cyc in cycles:
        for u, v in cycle_edges(cyc):
            if not host.has_edge(u, v):
                return CoverResult(False, f"edge ({u}, {v}) is not a host edge")
            seen[(u, v)] += 1
            if seen[(u, v)] > 1:
                return CoverResult(False, f"edge ({u}, {v}) is covered twice")
    if len(seen) != host.edge_count:
        for edge in host.edges():
            if edge not in seen:
                u, v = edge
                return CoverResult(False, f"edge ({u}, {v}) is not covered")
    return CoverResult(True)


def check_exact_cover(decomposition: Decomposition) -> CoverResult:
    return check_cycles_cover(decomposition.host, decomposition.sorted_cycles())


# ---------------------------------------------------------------------------
# colourings as constraint models


def is_valid_colouring(decomposition: Decomposition, colouring: Sequence[int]) -> bool:
    """True when no cycle is monochromatic (every cycle sees both colours)."""
    n = decomposition.host.vertex_count
    if len(colouring) != n:
        raise ValueError(f"colouring length {len(colouring)} != vertex count {n}")
    if any(b not in (0, 1) for b in colouring):
        raise ValueError("colouring must be 0/1 valued")
    for a, b, c, d in decomposition.cycles:
        if colouring[a] == colouring[b] == colouring[c] == colouring[d]:
            return False
    return True


def complement(colouring: Sequence[int]) -> Colouring:
    return tuple(1 - b for b in colouring)


def enumerate_2colourings(
    decomposition: Decomposition,
    pins: Mapping[int, int] | None = None,
    node_limit: int | None = None,
) -> SolveOutcome:
    """All valid colourings consistent with the pins, lexicographic order."""
    return enumerate_models(
        decomposition.host.vertex_count,
        decomposition.sorted_cycles(),
        pins=pins,
        node_limit=node_limit,
    )


@dataclass(frozen=True)
class CertResult:
    """Outcome of a solver-backed check.

    ``verdict`` is None when the search hit its node budget before
    exhausting the space; ``witness`` carries a model backing a True
    verdict where one exists.
    """

    verdict: bool | None
    outcome: SolveOutcome
    witness: Colouring | None = None


def is_uniquely_2colourable(
    decomposition: Decomposition, node_limit: int | None = None
) -> CertResult:
    """Exactly one valid colouring up to the colour swap?

    A decomposition with no cycles constrains nothing, so every colouring
    is valid and the answer is False for any host with at least two
    vertices (and a host this small supports no 4-cycle anyway).
    """
    if decomposition.host.vertex_count < 2 or not decomposition.cycles:
        return CertResult(False, SolveOutcome((), True, 0))
    outcome = enumerate_2colourings(
        decomposition, pins={0: 0}, node_limit=node_limit
    )
    if not outcome.complete:
        return CertResult(None, outcome)
    if len(outcome.models) == 1:
        return CertResult(True, outcome, outcome.models[0])
    return CertResult(False, outcome)


def check_anchor(
    decomposition: Decomposition,
    pin_to_0: Sequence[int],
    pin_to_1: Sequence[int],
    node_limit: int | None = None,
) -> CertResult:
    """Does pinning the two vertex sets apart leave exactly one model?

    The two sets must be disjoint.  With ``pin_to_0 = (v,)`` and an empty
    second set this is exactly the unique-2-colourability test.
    """
    overlap = set(pin_to_0) & set(pin_to_1)
    if overlap:
        raise ValueError(f"anchor sets overlap on {sorted(overlap)}")
    pins = {v: 0 for v in pin_to_0}
    pins.update({v: 1 for v in pin_to_1})
    if not pins:
        raise ValueError("anchor needs at least one pinned vertex")
    outcome = enumerate_2colourings(decomposition, pins=pins, node_limit=node_limit)
    if not outcome.complete:
        return CertResult(None, outcome)
    if len(outcome.models) == 1:
        return CertResult(True, outcome, outcome.models[0])
    return CertResult(False, outcome)


# ---------------------------------------------------------------------------
# alternation predicates over multipartite hosts


def _part_ranges(host: HostGraph) -> tuple[tuple[int, int], ...]:
    if host.family != "multipartite":
        raise ValueError("alternation checks need a multipartite host")
    return host.part_ranges()


def is_alt_on_part(colouring: Sequence[int], lo: int, hi: int) -> bool:
    """Alternation around one part's label cycle (ids lo..hi-1, wrapping)."""
    size = hi - lo
    return all(
        colouring[lo + r] != colouring[lo + (r + 1) % size] for r in range(size)
    )


def is_alt_colouring_of(host: HostGraph, colouring: Sequence[int]) -> bool:
    """Alternating on every part."""
    return all(is_alt_on_part(colouring, lo, hi) for lo, hi in _part_ranges(host))


def is_super_alt_colouring_of(host: HostGraph, colouring: Sequence[int]) -> bool:
    """Alternating on every part, and each part starts with colour 0.

    Equivalently: the colour of every vertex is its label's parity within
    its part, i.e. the one distinguished global alternating colouring.
    """
    ranges = _part_ranges(host)
    return is_alt_colouring_of(host, colouring) and all(
        colouring[lo] == 0 for lo, _ in ranges
    )


def is_partially_alt_colouring_of(host: HostGraph, colouring: Sequence[int]) -> bool:
    """Alternating on at least one part with two or more vertices."""
    return any(
        hi - lo >= 2 and is_alt_on_part(colouring, lo, hi)
        for lo, hi in _part_ranges(host)
    )


def check_exclusively_alt(
    decomposition: Decomposition, node_limit: int | None = None
) -> CertResult:
    """Every valid colouring alternates on every part, and the distinguished
    alternating colouring (or its complement) is among them."""
    host = decomposition.host
    _part_ranges(host)
    outcome = enumerate_2colourings(decomposition, pins={0: 0}, node_limit=node_limit)
    if not outcome.complete:
        return CertResult(None, outcome)
    witness: Colouring | None = None
    for model in outcome.models:
        if not is_alt_colouring_of(host, model):
            return CertResult(False, outcome)
        if witness is None and (
            is_super_alt_colouring_of(host, model)
            or is_super_alt_colouring_of(host, complement(model))
        ):
            witness = model
    if witness is None:
        return CertResult(False, outcome)
    return CertResult(True, outcome, witness)


def check_exclusively_partially_alt(
    decomposition: Decomposition, node_limit: int | None = None
) -> CertResult:
    """Every valid colouring alternates on at least one non-trivial part.

    Vacuously true when there is no valid colouring at all.
    """
    host = decomposition.host
    _part_ranges(host)
    outcome = enumerate_2colourings(decomposition, pins={0: 0}, node_limit=node_limit)
    if not outcome.complete:
        return CertResult(None, outcome)
    for model in outcome.models:
        if not is_partially_alt_colouring_of(host, model):
            return CertResult(False, outcome)
    return CertResult(True, outcome)
