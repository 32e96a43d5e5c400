from __future__ import annotations

import pytest

from cycdec.assembly import (
    build_cocktail,
    build_complete,
    default_cocktail_split,
    flower,
    flower_plan,
    reference_colouring,
)
from cycdec.seeds import cocktail_seed, k9_seed
from cycdec.verify import check_exact_cover, complement, is_valid_colouring


def test_build_complete_49():
    d = build_complete(49)
    assert d.host.family == "complete"
    assert d.cycle_count == 294
    assert check_exact_cover(d).ok


def test_build_complete_rejects_bad_orders():
    for n in (9, 33, 41, 48, 50):
        with pytest.raises(ValueError):
            build_complete(n)


def test_default_cocktail_split():
    assert default_cocktail_split(50) == (6, 1)
    assert default_cocktail_split(52) == (6, 2)
    assert default_cocktail_split(54) == (6, 3)
    assert default_cocktail_split(56) == (6, 4)
    assert default_cocktail_split(58) == (7, 1)
    assert default_cocktail_split(64) == (7, 4)
    with pytest.raises(ValueError):
        default_cocktail_split(49)
    with pytest.raises(ValueError):
        default_cocktail_split(48)


def test_build_cocktail_50():
    d = build_cocktail(50)
    assert d.host.family == "cocktail"
    assert d.cycle_count == 50 * 48 // 8
    assert check_exact_cover(d).ok


def test_build_cocktail_with_grown_seed_override():
    d = build_cocktail(58, petals=6, hub_pairs=5)
    assert d.cycle_count == 58 * 56 // 8
    assert check_exact_cover(d).ok


def test_build_cocktail_rejects_bad_parameters():
    with pytest.raises(ValueError):
        build_cocktail(49)
    with pytest.raises(ValueError):
        build_cocktail(48)
    with pytest.raises(ValueError):
        # 8*5 + 2*5 = 50 but five petals are too few
        build_cocktail(50, petals=5, hub_pairs=5)
    with pytest.raises(ValueError):
        # split does not add up
        build_cocktail(50, petals=6, hub_pairs=2)
    with pytest.raises(ValueError):
        build_cocktail(58, hub_pairs=0)


def test_flower_joins_disjoint_petal_copies():
    seed = k9_seed()
    plan = flower_plan(seed, 6)
    assert plan.host.n == 49
    # petal images overlap exactly on the hub
    first = {plan.petal_map(1)(u) for u in range(9)}
    second = {plan.petal_map(2)(u) for u in range(9)}
    assert first & second == set(range(seed.hub_size))
    cycles = flower(plan)
    assert len(cycles) == len(seed.sub_cycles) + 6 * len(seed.petal_cycles)


def test_flower_of_cocktail_seed():
    seed = cocktail_seed(2)
    plan = flower_plan(seed, 7)
    assert plan.host.family == "cocktail"
    assert plan.host.n == 4 + 7 * 8
    cycles = flower(plan)
    assert len(cycles) == 1 + 7 * 14


def test_reference_colouring_of_complete_build():
    ref = reference_colouring(49, 1)
    assert len(ref) == 49
    assert ref[0] == 1
    assert ref[1:9] == (0, 1) * 4
    d = build_complete(49)
    assert is_valid_colouring(d, ref)
    assert is_valid_colouring(d, complement(ref))


def test_reference_colouring_of_cocktail_build():
    ref = reference_colouring(50, 2)
    assert ref == tuple(v % 2 for v in range(50))
    d = build_cocktail(50)
    assert is_valid_colouring(d, ref)
    assert is_valid_colouring(d, complement(ref))
