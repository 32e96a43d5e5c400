"""Exhaustive 2-colouring enumeration for 4-cycle systems.

Each 4-cycle imposes a not-all-equal constraint on its four vertices: a
valid 2-colouring gives at least one vertex of each colour to every cycle.
The enumerator is a plain backtracking search over vertex colours with unit
propagation: as soon as three vertices of a cycle share a colour, the
fourth is forced to the other one, and four alike is a conflict.

The search is deterministic by construction.  The branching vertex is
always the lowest-id unassigned vertex, colour 0 is tried before colour 1,
and propagation runs breadth-first in discovery order.  As a consequence
the models are emitted in lexicographic order of the colour string and the
explored node count is reproducible.  A node is one attempted decision
branch (each colour tried at a decision vertex counts once); forced
assignments are free.  When the node budget is exhausted the search stops
and reports itself incomplete.

Two interchangeable search cores exist: a numba-compiled kernel used by
default, and a pure-Python twin that serves as the fallback (numba missing
or ``CYCDEC_PURE_PYTHON=1``) and as a cross-check in the tests.  Both walk
the identical tree and report identical node counts.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .hostgraph import Cycle

try:  # pragma: no cover - exercised implicitly by the import
    import numba
    from numba.typed import List as _NumbaList

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False

NODE_LIMIT_ENV = "CYCDEC_NODE_LIMIT"
PURE_PYTHON_ENV = "CYCDEC_PURE_PYTHON"
DEFAULT_NODE_LIMIT = 10**9


def default_node_limit() -> int:
    raw = os.environ.get(NODE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_NODE_LIMIT
    limit = int(raw)
    if limit < 1:
        raise ValueError(f"{NODE_LIMIT_ENV} must be a positive integer, got {raw!r}")
    return limit


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one enumeration run.

    ``models`` holds every valid assignment found, as 0/1 tuples indexed by
    vertex id, in lexicographic order.  ``complete`` tells whether the
    search space was exhausted; when False the model list is a prefix of
    the true list and proves nothing about the remainder.
    """

    models: tuple[tuple[int, ...], ...]
    complete: bool
    nodes_explored: int


def _check_inputs(
    n_vertices: int, cycles: list[Cycle], pins: Mapping[int, int]
) -> None:
    if n_vertices < 0:
        raise ValueError(f"vertex count must be >= 0, got {n_vertices}")
    for cyc in cycles:
        if len(set(cyc)) != 4:
            raise ValueError(f"cycle {cyc} repeats a vertex")
        for v in cyc:
            if not 0 <= v < n_vertices:
                raise ValueError(f"cycle vertex {v} out of range 0..{n_vertices - 1}")
    for v, colour in pins.items():
        if not 0 <= v < n_vertices:
            raise ValueError(f"pinned vertex {v} out of range 0..{n_vertices - 1}")
        if colour not in (0, 1):
            raise ValueError(f"pin colour for vertex {v} must be 0 or 1, got {colour}")


def enumerate_models(
    n_vertices: int,
    cycles: Iterable[Cycle],
    pins: Mapping[int, int] | None = None,
    node_limit: int | None = None,
    force_python: bool = False,
) -> SolveOutcome:
    """Enumerate all valid 2-colourings consistent with the pins.

    ``cycles`` is consumed in the given order (the order does not affect
    the model set, only which cycle detects a conflict first, which both
    cores treat identically).  ``node_limit`` defaults to the
    ``CYCDEC_NODE_LIMIT`` environment variable, or 10**9.
    """
    cycles = [tuple(c) for c in cycles]
    pins = dict(pins or {})
    _check_inputs(n_vertices, cycles, pins)
    if node_limit is None:
        node_limit = default_node_limit()
    if node_limit < 0:
        raise ValueError(f"node limit must be >= 0, got {node_limit}")

    use_python = (
        force_python or not _HAVE_NUMBA or os.environ.get(PURE_PYTHON_ENV) == "1"
    )
    if use_python:
        models, complete, nodes = _search_python(n_vertices, cycles, pins, node_limit)
    else:
        models, complete, nodes = _search_numba(n_vertices, cycles, pins, node_limit)
    return SolveOutcome(tuple(models), complete, nodes)


def warm_up() -> None:
    """Force JIT compilation of the numba kernel on a toy instance."""
    enumerate_models(4, [(0, 1, 2, 3)], pins={0: 0}, node_limit=64)


# ---------------------------------------------------------------------------
# pure-Python core


def _search_python(n, cycles, pins, limit):
    ncyc = len(cycles)
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, cyc in enumerate(cycles):
        for v in cyc:
            incident[v].append(k)

    colour = [-1] * n
    cnt = [[0, 0] for _ in range(ncyc)]
    trail: list[int] = []
    models: list[tuple[int, ...]] = []

    def assign(v0: int, c0: int) -> bool:
        """Assign v0 := c0 and propagate.  False on conflict (trail keeps
        whatever was placed before the conflict; caller unwinds).  Counter
        updates always run for every cycle of an assigned vertex, even
        after a conflict is known, so that unwinding stays an exact
        inverse."""
        queue = [(v0, c0)]
        head = 0
        while head < len(queue):
            v, c = queue[head]
            head += 1
            if colour[v] != -1:
                if colour[v] != c:
                    return False
                continue
            colour[v] = c
            trail.append(v)
            ok = True
            for k in incident[v]:
                kc = cnt[k]
                kc[c] += 1
                if kc[c] == 4:
                    ok = False
                elif kc[c] == 3 and kc[1 - c] == 0:
                    for w in cycles[k]:
                        if colour[w] == -1:
                            queue.append((w, 1 - c))
                            break
            if not ok:
                return False
        return True

    def unwind(mark: int) -> None:
        while len(trail) > mark:
            v = trail.pop()
            c = colour[v]
            colour[v] = -1
            for k in incident[v]:
                cnt[k][c] -= 1

    for v in sorted(pins):
        if not assign(v, pins[v]):
            return [], True, 0

    nodes = 0
    # decision stack: (vertex, trail mark before the decision, branch tried)
    stack: list[tuple[int, int, int]] = []
    scan_from = 0
    descend = True
    while True:
        if descend:
            v = scan_from
            while v < n and colour[v] != -1:
                v += 1
            if v == n:
                models.append(tuple(colour))
                descend = False
                continue
            if nodes >= limit:
                return models, False, nodes
            nodes += 1
            mark = len(trail)
            ok = assign(v, 0)
            stack.append((v, mark, 0))
            scan_from = v + 1
            descend = ok
        else:
            if not stack:
                return models, True, nodes
            v, mark, branch = stack.pop()
            unwind(mark)
            if branch == 0:
                if nodes >= limit:
                    return models, False, nodes
                nodes += 1
                ok = assign(v, 1)
                stack.append((v, mark, 1))
                scan_from = v + 1
                descend = ok
            # branch == 1: both colours exhausted here, keep backtracking


# ---------------------------------------------------------------------------
# numba core (identical tree, flat arrays)

if _HAVE_NUMBA:

    @numba.njit(cache=True)
    def _kernel(n, cyc, inc_off, inc_cyc, pin_v, pin_c, limit, models):
        ncyc = cyc.shape[0]
        colour = np.full(n, -1, np.int8)
        cnt = np.zeros((ncyc, 2), np.int8)
        trail = np.empty(n, np.int32)
        tlen = 0
        # propagation queue, entries encoded as 2*vertex + colour
        queue = np.empty(2 * ncyc + n + 8, np.int32)

        def assign(v0, c0, tlen):
            # counter updates run for every cycle of an assigned vertex,
            # even once a conflict is known, so unwinding stays exact
            queue[0] = 2 * v0 + c0
            qlen = 1
            head = 0
            while head < qlen:
                item = queue[head]
                head += 1
                v = item >> 1
                c = item & 1
                if colour[v] != -1:
                    if colour[v] != c:
                        return False, tlen
                    continue
                colour[v] = c
                trail[tlen] = v
                tlen += 1
                ok = True
                for p in range(inc_off[v], inc_off[v + 1]):
                    k = inc_cyc[p]
                    cnt[k, c] += 1
                    if cnt[k, c] == 4:
                        ok = False
                    elif cnt[k, c] == 3 and cnt[k, 1 - c] == 0:
                        for q in range(4):
                            w = cyc[k, q]
                            if colour[w] == -1:
                                queue[qlen] = 2 * w + (1 - c)
                                qlen += 1
                                break
                if not ok:
                    return False, tlen
            return True, tlen

        def unwind(mark, tlen):
            while tlen > mark:
                tlen -= 1
                v = trail[tlen]
                c = colour[v]
                colour[v] = -1
                for p in range(inc_off[v], inc_off[v + 1]):
                    cnt[inc_cyc[p], c] -= 1
            return tlen

        for idx in range(pin_v.shape[0]):
            ok, tlen = assign(pin_v[idx], pin_c[idx], tlen)
            if not ok:
                return True, 0

        nodes = 0
        stack_v = np.empty(n + 1, np.int32)
        stack_mark = np.empty(n + 1, np.int32)
        stack_branch = np.empty(n + 1, np.int8)
        depth = 0
        scan_from = 0
        descend = True
        while True:
            if descend:
                v = scan_from
                while v < n and colour[v] != -1:
                    v += 1
                if v == n:
                    models.append(colour.copy())
                    descend = False
                    continue
                if nodes >= limit:
                    return False, nodes
                nodes += 1
                mark = tlen
                ok, tlen = assign(v, 0, tlen)
                stack_v[depth] = v
                stack_mark[depth] = mark
                stack_branch[depth] = 0
                depth += 1
                scan_from = v + 1
                descend = ok
            else:
                if depth == 0:
                    return True, nodes
                depth -= 1
                v = stack_v[depth]
                mark = stack_mark[depth]
                branch = stack_branch[depth]
                tlen = unwind(mark, tlen)
                if branch == 0:
                    if nodes >= limit:
                        return False, nodes
                    nodes += 1
                    ok, tlen = assign(v, 1, tlen)
                    stack_v[depth] = v
                    stack_mark[depth] = mark
                    stack_branch[depth] = 1
                    depth += 1
                    scan_from = v + 1
                    descend = ok


def _search_numba(n, cycles, pins, limit):
    ncyc = len(cycles)
    cyc = np.array(cycles, np.int32).reshape(ncyc, 4)
    # incidence lists in CSR form
    deg = np.zeros(n + 1, np.int32)
    for row in cycles:
        for v in row:
            deg[v + 1] += 1
    inc_off = np.cumsum(deg, dtype=np.int32)
    inc_cyc = np.empty(4 * ncyc, np.int32)
    fill = inc_off[:-1].copy()
    for k, row in enumerate(cycles):
        for v in row:
            inc_cyc[fill[v]] = k
            fill[v] += 1

    pin_items = sorted(pins.items())
    pin_v = np.array([v for v, _ in pin_items], np.int32)
    pin_c = np.array([c for _, c in pin_items], np.int8)

    models = _NumbaList.empty_list(numba.int8[:])
    complete, nodes = _kernel(
        n, cyc, inc_off, inc_cyc, pin_v, pin_c, np.int64(limit), models
    )
    out = [tuple(int(b) for b in m) for m in models]
    return out, bool(complete), int(nodes)
