from __future__ import annotations

import itertools

import pytest

from cycdec.constructions import (
    Tournament,
    alpha_beta_core,
    alpha_pair_patch,
    bridge_decomposition,
    exclusiviser,
    exclusively_alt,
    label_host,
    pairing_product,
    patch,
    rank_embedding,
    reverse_bridge,
    toy_three_part,
)
from cycdec.hostgraph import Decomposition, HostGraph
from cycdec.labels import PairKind, alt_colouring, pair_partition
from cycdec.verify import (
    check_cycles_cover,
    check_exact_cover,
    is_alt_colouring_of,
    is_valid_colouring,
)


def test_tournament_orientations():
    asc = Tournament.ascending(4)
    assert asc.has_arc(0, 3) and asc.has_arc(1, 2)
    assert not asc.has_arc(3, 0)
    tri = Tournament.directed_triangle()
    assert tri.has_arc(0, 1) and tri.has_arc(1, 2) and tri.has_arc(2, 0)
    assert not tri.has_arc(1, 0)


def test_tournament_validation():
    with pytest.raises(ValueError):
        Tournament(size=2, arcs=frozenset({(0, 1), (1, 0)}))
    with pytest.raises(ValueError):
        Tournament(size=3, arcs=frozenset({(0, 1)}))


def test_pairing_product_gives_one_cycle_per_pair_of_pairs():
    alpha = pair_partition(1, PairKind.ALPHA)
    cycles = pairing_product(alpha, alpha, rank_embedding(0, 4))
    assert len(cycles) == 4
    cover = check_cycles_cover(HostGraph.multipartite([4, 4]), cycles)
    assert cover.ok


def test_pairing_product_rejects_overlapping_pairs():
    alpha = pair_partition(1, PairKind.ALPHA)
    with pytest.raises(ValueError):
        pairing_product(alpha + alpha[:1], alpha, rank_embedding(0, 4))


def test_pairing_product_rejects_colliding_embeddings():
    alpha = pair_partition(1, PairKind.ALPHA)
    with pytest.raises(ValueError):
        pairing_product(alpha, alpha, rank_embedding(0, 0))


@pytest.mark.parametrize("kind", list(PairKind))
@pytest.mark.parametrize("ells", [(2, 1), (2, 2), (3, 2)])
def test_bridges_decompose_the_complete_bipartite_graph(kind, ells):
    ell0, ell1 = ells
    host = HostGraph.multipartite([4 * ell0, 4 * ell1])
    cycles = bridge_decomposition(kind, ell0, ell1, rank_embedding(0, 4 * ell0))
    assert len(cycles) == 4 * ell0 * ell1
    assert check_cycles_cover(host, cycles).ok


def test_gamma_bridge_needs_a_big_enough_first_side():
    with pytest.raises(ValueError):
        bridge_decomposition(PairKind.GAMMA, 1, 2, rank_embedding(0, 4))


@pytest.mark.parametrize("kind", list(PairKind))
def test_bridges_accept_paired_alternating_colourings(kind):
    ell0 = 2 if kind is PairKind.GAMMA else 1
    host = HostGraph.multipartite([4 * ell0, 4])
    d = Decomposition(
        host, bridge_decomposition(kind, ell0, 1, rank_embedding(0, 4 * ell0))
    )
    for s, t in itertools.product((0, 1), repeat=2):
        assert is_valid_colouring(d, alt_colouring(ell0, s) + alt_colouring(1, t))


def test_gamma_bridge_propagates_alternation():
    # with side 0 alternating, every valid colouring alternates on side 1 too
    host = HostGraph.multipartite([8, 4])
    d = Decomposition(host, bridge_decomposition(PairKind.GAMMA, 2, 1, rank_embedding(0, 8)))
    for s in (0, 1):
        side0 = alt_colouring(2, s)
        for bits in itertools.product((0, 1), repeat=4):
            colouring = side0 + bits
            if is_valid_colouring(d, colouring):
                assert is_alt_colouring_of(host, colouring)


def test_alpha_and_beta_bridges_are_reversal_invariant():
    for kind in (PairKind.ALPHA, PairKind.BETA):
        cycles = bridge_decomposition(kind, 2, 2, rank_embedding(0, 8))
        assert reverse_bridge(cycles, 8) == cycles


def test_gamma_bridge_is_not_reversal_invariant_but_reversal_is_an_involution():
    cycles = bridge_decomposition(PairKind.GAMMA, 2, 2, rank_embedding(0, 8))
    reversed_once = reverse_bridge(cycles, 8)
    assert reversed_once != cycles
    assert reverse_bridge(reversed_once, 8) == cycles


def test_reverse_bridge_validation():
    with pytest.raises(ValueError):
        reverse_bridge([(0, 1, 2, 3)], 0)
    with pytest.raises(ValueError):
        reverse_bridge([(0, 1, 2, 8)], 4)


def test_label_host_part_sizes():
    assert label_host([1, 2]).part_ranges() == ((0, 4), (4, 12))
    with pytest.raises(ValueError):
        label_host([])
    with pytest.raises(ValueError):
        label_host([0])


def test_alpha_pair_patch_covers_the_host():
    d = alpha_pair_patch([2, 2])
    assert d.cycle_count == 16
    assert check_exact_cover(d).ok


def test_patch_with_blocks_covers_the_host():
    half = alpha_pair_patch([1, 1])
    d = patch([2, 2], [half, half], PairKind.BETA, [1, 1, 1, 1])
    assert check_exact_cover(d).ok
    # two 4-cycle blocks of 4 plus four bridged part pairs of 4
    assert d.cycle_count == 4 + 4 + 4 * 4


def test_patch_validation():
    half = alpha_pair_patch([1, 1])
    with pytest.raises(ValueError):
        patch([2, 2], [half], PairKind.BETA, [1, 1, 1, 1])
    with pytest.raises(ValueError):
        patch([2, 3], [half, half], PairKind.BETA, [1, 1, 1, 1])
    with pytest.raises(ValueError):
        patch([2, 0], [half, None], PairKind.BETA, [1, 1])
    with pytest.raises(ValueError):
        # singleton block must not carry cycles
        patch([2, 1, 1], [half, half, None], PairKind.BETA, [1, 1, 1, 1])
    with pytest.raises(ValueError):
        # multi-part block needs a decomposition
        patch([2, 2], [half, None], PairKind.BETA, [1, 1, 1, 1])
    with pytest.raises(ValueError):
        # block decomposition must live on the matching label host
        patch([2, 2], [half, alpha_pair_patch([2, 2])], PairKind.BETA, [1, 1, 1, 1])
    with pytest.raises(ValueError):
        patch([1, 1], [None, None], PairKind.GAMMA, [1, 2])
    with pytest.raises(ValueError):
        patch([1, 1], [None, None], PairKind.ALPHA, [1, 1], Tournament.directed_triangle())


def test_patch_respects_the_tournament_orientation():
    # reversing the single arc swaps which part is the gamma side
    fwd = patch([1, 1], [None, None], PairKind.GAMMA, [2, 2])
    rev = patch(
        [1, 1],
        [None, None],
        PairKind.GAMMA,
        [2, 2],
        Tournament(size=2, arcs=frozenset({(1, 0)})),
    )
    assert fwd.cycles != rev.cycles
    assert reverse_bridge(fwd.cycles, 8) == rev.cycles


def test_exclusiviser_structure():
    core = alpha_pair_patch([2, 2])
    d = exclusiviser(core, [2, 2, 2, 2])
    assert d.host == label_host([2, 2, 2, 2])
    assert check_exact_cover(d).ok


def test_exclusiviser_validation():
    core = alpha_pair_patch([2, 2])
    with pytest.raises(ValueError):
        exclusiviser(core, [2, 2])
    with pytest.raises(ValueError):
        exclusiviser(core, [2, 2, 1, 2])
    with pytest.raises(ValueError):
        exclusiviser(alpha_pair_patch([2, 3]), [2, 2, 2, 2])


def test_alpha_beta_core_covers_four_parts():
    d = alpha_beta_core(1)
    assert d.host == label_host([1, 1, 1, 1])
    assert d.cycle_count == 24
    assert check_exact_cover(d).ok


def test_toy_three_part_shape():
    d = toy_three_part()
    assert d.host.part_sizes == (2, 2, 2)
    assert d.cycle_count == 3
    assert check_exact_cover(d).ok


def test_exclusively_alt_shape():
    d = exclusively_alt(6, [2] * 6)
    assert d.host == label_host([2] * 6)
    assert d.cycle_count == 240
    assert check_exact_cover(d).ok


def test_exclusively_alt_validation():
    with pytest.raises(ValueError):
        exclusively_alt(5, [2] * 5)
    with pytest.raises(ValueError):
        exclusively_alt(6, [2] * 5)
    with pytest.raises(ValueError):
        exclusively_alt(6, [2, 2, 2, 2, 2, 1])
