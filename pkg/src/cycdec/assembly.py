"""Full-size uniquely 2-colourable decompositions from flowers plus cores.

The target hosts are the complete graph K_n (n = 8h + 1) and the cocktail
party graph of order n = 8h + 2t.  Both split into a complete h-partite
"core" on h parts of eight vertices and a residue: h overlapping copies of
a small host that share a common hub (the lone vertex s_1, or the 2t hub
vertices).  The residue is decomposed by a *flower*: one anchored seed
(``seeds``) is replanted into every petal by the id-preserving isomorphism
between petals, with the seed's hub decomposition included only once.

The core is decomposed by the alternation-forcing construction
(``constructions.exclusively_alt``), which pins each part's colouring down
to the alternating one.  The flower then welds the parts' colourings
together: each petal's seed is anchored, so once its a/b classes are
heterochromatic the hub is forced too.  The union is a decomposition of
the whole host with exactly one 2-colouring up to the colour swap.

Vertex layout: hub first (s_j = j - 1; the complete graph has the single
hub vertex 0), then petal i on the next eight ids.  Petal position x
corresponds to the seed's petal position x, so the eight-part core sees
interleaved a/b classes: even positions a, odd positions b.  On cocktail
hosts the missing pairs are exactly {2k, 2k + 1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import exclusively_alt
from .hostgraph import Cycle, Decomposition, HostGraph, relabel_cycle
from .seeds import AnchoredSeed, cocktail_seed, k9_seed


@dataclass(frozen=True)
class FlowerPlan:
    """A seed replanted into ``petals`` hub-sharing copies."""

    seed: AnchoredSeed
    petals: int
    host: HostGraph

    def petal_map(self, petal: int):
        """Vertex map from seed ids into host ids for petal 1..petals."""
        if not 1 <= petal <= self.petals:
            raise ValueError(f"petal {petal} out of range 1..{self.petals}")
        hub = self.seed.hub_size
        base = hub + 8 * (petal - 1)

        def place(u: int) -> int:
            return u if u < hub else base + (u - hub)

        return place


def flower_plan(seed: AnchoredSeed, petals: int) -> FlowerPlan:
    if petals < 1:
        raise ValueError(f"flower needs at least one petal, got {petals}")
    n = seed.hub_size + 8 * petals
    if seed.host.family == "complete":
        host = HostGraph.complete(n)
    else:
        host = HostGraph.cocktail(n)
    return FlowerPlan(seed, petals, host)


def flower(plan: FlowerPlan) -> frozenset[Cycle]:
    """The seed's hub cycles once, plus each petal's image of the rest."""
    seed = plan.seed
    cycles = set(seed.sub_cycles)
    for petal in range(1, plan.petals + 1):
        place = plan.petal_map(petal)
        cycles.update(relabel_cycle(c, place) for c in seed.petal_cycles)
    expected = len(seed.sub_cycles) + plan.petals * len(seed.petal_cycles)
    if len(cycles) != expected:
        raise AssertionError("flower petals overlapped; layout is broken")
    return frozenset(cycles)


def _core_cycles(hub_size: int, petals: int) -> frozenset[Cycle]:
    """The alternation-forcing core, shifted past the hub ids."""
    core = exclusively_alt(petals, [2] * petals)
    return frozenset(
        relabel_cycle(c, lambda u: u + hub_size) for c in core.cycles
    )


def build_complete(n: int) -> Decomposition:
    """Uniquely 2-colourable 4-cycle system of K_n, for n = 8h + 1, h >= 6.

    4-cycle systems of K_n exist only when n = 1 (mod 8); the construction
    additionally needs h >= 6 parts for its core, hence n >= 49.
    """
    if n % 8 != 1:
        raise ValueError(f"a 4-cycle system of K_n needs n = 1 (mod 8), got {n}")
    h = n // 8
    if h < 6:
        raise ValueError(f"the construction needs n >= 49, got {n}")
    plan = flower_plan(k9_seed(), h)
    cycles = flower(plan) | _core_cycles(1, h)
    return Decomposition(HostGraph.complete(n), cycles)


def default_cocktail_split(n: int) -> tuple[int, int]:
    """The (petals, hub pairs) = (h, t) split used for order n.

    t is read off the residue of n mod 8 (with residue 0 mapped to t = 4),
    which keeps 1 <= t <= 4 and makes h maximal.
    """
    if n % 2 or n < 50:
        raise ValueError(f"cocktail construction needs even n >= 50, got {n}")
    residue = n % 8
    t = residue // 2 if residue else 4
    return (n - 2 * t) // 8, t


def build_cocktail(
    n: int, petals: int | None = None, hub_pairs: int | None = None
) -> Decomposition:
    """Uniquely 2-colourable 4-cycle decomposition of the cocktail party
    graph of even order n >= 50.

    The order splits as n = 8h + 2t (h petals, t hub pairs).  By default t
    comes from ``default_cocktail_split``; callers may fix either h or t
    themselves (e.g. to exercise the inductively grown seeds with t > 4),
    subject to h >= 6 and t >= 1.
    """
    if n % 2 or n < 50:
        raise ValueError(f"cocktail construction needs even n >= 50, got {n}")
    h, t = default_cocktail_split(n)
    if hub_pairs is not None:
        t = hub_pairs
    if petals is not None:
        h = petals
    if t < 1:
        raise ValueError(f"need at least one hub pair, got t={t}")
    if 8 * h + 2 * t != n:
        raise ValueError(f"h={h}, t={t} do not split n={n} as 8h + 2t")
    if h < 6:
        raise ValueError(f"the construction needs at least 6 petals, got h={h}")
    plan = flower_plan(cocktail_seed(t), h)
    cycles = flower(plan) | _core_cycles(2 * t, h)
    return Decomposition(HostGraph.cocktail(n), cycles)


def reference_colouring(n: int, hub_size: int) -> tuple[int, ...]:
    """The colouring the builders are rigid around.

    Petal colours alternate with position (a-class 0, b-class 1); hub
    colours alternate with id on cocktail hosts, and the lone K_n hub
    vertex takes colour 1.  ``hub_size`` is 1 for ``build_complete(n)``
    and 2t for ``build_cocktail(n, ..., hub_pairs=t)``.
    """
    if hub_size < 1 or (n - hub_size) % 8:
        raise ValueError(f"hub size {hub_size} does not fit order {n}")
    out = []
    for v in range(n):
        if v < hub_size:
            out.append(1 if hub_size == 1 else v % 2)
        else:
            out.append((v - hub_size) % 2)
    return tuple(out)
