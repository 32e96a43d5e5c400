from __future__ import annotations

import pytest

from cycdec.hostgraph import Decomposition
from cycdec.seeds import AnchoredSeed, cocktail_seed, k9_seed
from cycdec.verify import check_anchor, check_cycles_cover, complement


def all_table_seeds() -> list[AnchoredSeed]:
    return [k9_seed()] + [cocktail_seed(t) for t in (1, 2, 3, 4)]


def test_k9_seed_shape():
    seed = k9_seed()
    assert seed.host.family == "complete"
    assert seed.host.n == 9
    assert seed.hub_size == 1
    assert len(seed.cycles) == 9
    assert len(seed.sub_cycles) == 0
    assert len(seed.key_cycles) == 1


@pytest.mark.parametrize(
    "t, cycles, hub_cycles, keys",
    [(1, 10, 0, 2), (2, 15, 1, 4), (3, 21, 3, 6), (4, 28, 6, 8)],
)
def test_cocktail_seed_shapes(t, cycles, hub_cycles, keys):
    seed = cocktail_seed(t)
    assert seed.host.family == "cocktail"
    assert seed.host.n == 2 * t + 8
    assert seed.hub_size == 2 * t
    assert len(seed.cycles) == cycles
    assert len(seed.sub_cycles) == hub_cycles
    assert len(seed.key_cycles) == keys


def test_seed_cycle_counts_follow_edge_arithmetic():
    for seed in all_table_seeds():
        assert len(seed.cycles) == seed.host.edge_count // 4


def test_seeds_cover_their_hosts_exactly():
    for seed in all_table_seeds():
        assert check_cycles_cover(seed.host, seed.cycles).ok
        # the hub rows use hub vertices only
        for cyc in seed.sub_cycles:
            assert all(v < seed.hub_size for v in cyc)


def test_key_cycles_live_in_the_petal():
    for seed in all_table_seeds():
        assert seed.key_cycles <= seed.petal_cycles
        assert seed.petal_cycles == seed.cycles - seed.sub_cycles


def test_seeds_are_anchored_with_pure_propagation():
    for seed in all_table_seeds():
        d = Decomposition(seed.host, seed.cycles)
        result = check_anchor(d, seed.pin_to_0, seed.pin_to_1)
        assert result.verdict is True
        assert result.witness == seed.reference_colouring()
        # the anchor decides everything without a single search decision
        assert result.outcome.nodes_explored == 0


def test_swapped_anchor_gives_the_complement():
    seed = cocktail_seed(3)
    d = Decomposition(seed.host, seed.cycles)
    result = check_anchor(d, seed.pin_to_1, seed.pin_to_0)
    assert result.verdict is True
    assert result.witness == complement(seed.reference_colouring())


def test_reference_colouring_alternates_petal_partners():
    for seed in all_table_seeds():
        ref = seed.reference_colouring()
        assert len(ref) == seed.host.n
        hub = seed.hub_size
        # petal vertices come in coloured pairs a -> 0, b -> 1
        for v in range(hub, seed.host.n, 2):
            assert ref[v] == 0 and ref[v + 1] == 1


def test_grown_seeds_keep_the_invariants():
    for t in (5, 6, 7):
        seed = cocktail_seed(t)
        n = 2 * t + 8
        assert seed.host.n == n
        assert len(seed.cycles) == n * (n - 2) // 8
        assert len(seed.sub_cycles) == t * (t - 1) // 2
        assert len(seed.key_cycles) == 8
        assert check_cycles_cover(seed.host, seed.cycles).ok
        result = check_anchor(
            Decomposition(seed.host, seed.cycles), seed.pin_to_0, seed.pin_to_1
        )
        assert result.verdict is True
        assert result.witness == seed.reference_colouring()
        assert result.outcome.nodes_explored == 0


def test_growing_folds_the_smaller_seed_into_the_hub():
    from cycdec.hostgraph import relabel_cycle

    base, prev, grown = cocktail_seed(1), cocktail_seed(4), cocktail_seed(5)
    # the whole t=1 seed becomes the new hub: petal ids drop to 0..7 and
    # hub ids shift up by the eight former petal vertices
    into_hub = lambda u: u + 8 if u < base.hub_size else u - base.hub_size
    assert grown.sub_cycles == frozenset(
        relabel_cycle(c, into_hub) for c in base.cycles
    )
    # the t=4 petal carries over behind the two new hub vertices
    shift = lambda u: u if u < grown.hub_size - 2 else u + 2
    carried = frozenset(relabel_cycle(c, shift) for c in prev.petal_cycles)
    assert carried <= grown.petal_cycles
    bridges = grown.petal_cycles - carried
    assert len(bridges) == 4
    # each bridge joins the two new hub vertices to one petal partner pair
    for cyc in bridges:
        assert grown.hub_size - 2 in cyc and grown.hub_size - 1 in cyc


def test_seed_validation():
    with pytest.raises(ValueError):
        cocktail_seed(0)
    with pytest.raises(ValueError):
        cocktail_seed(-1)
