from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cycdec.constructions import toy_three_part
from cycdec.hostgraph import canonical_cycle
from cycdec.seeds import cocktail_seed
from cycdec.solver import enumerate_models


def brute_force(n, cycles):
    """Independent oracle: test every colouring directly."""
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        if all(len({bits[v] for v in cyc}) == 2 for cyc in cycles):
            out.append(bits)
    return out


TOY_CYCLES = sorted(toy_three_part().cycles)


def test_matches_brute_force_on_the_toy_fixture():
    outcome = enumerate_models(6, TOY_CYCLES)
    assert outcome.complete
    assert list(outcome.models) == brute_force(6, TOY_CYCLES)
    assert len(outcome.models) == 44


def test_single_cycle_excludes_exactly_the_monochromatic_colourings():
    outcome = enumerate_models(4, [(0, 1, 2, 3)])
    assert outcome.complete
    assert len(outcome.models) == 14
    assert (0, 0, 0, 0) not in outcome.models
    assert (1, 1, 1, 1) not in outcome.models


def test_no_cycles_means_all_colourings():
    outcome = enumerate_models(3, [])
    assert outcome.complete
    assert len(outcome.models) == 8
    assert outcome.models[0] == (0, 0, 0)


def test_models_are_in_lexicographic_order():
    outcome = enumerate_models(6, TOY_CYCLES)
    assert list(outcome.models) == sorted(outcome.models)


def test_models_closed_under_complement():
    outcome = enumerate_models(6, TOY_CYCLES)
    models = set(outcome.models)
    assert all(tuple(1 - c for c in m) in models for m in models)


def test_pins_restrict_the_unpinned_enumeration():
    full = enumerate_models(6, TOY_CYCLES)
    pinned = enumerate_models(6, TOY_CYCLES, pins={0: 0})
    assert pinned.complete
    assert list(pinned.models) == [m for m in full.models if m[0] == 0]
    both = enumerate_models(6, TOY_CYCLES, pins={0: 0, 5: 1})
    assert list(both.models) == [m for m in full.models if m[0] == 0 and m[5] == 1]


def test_contradictory_pins_give_empty_complete_enumeration():
    outcome = enumerate_models(4, [(0, 1, 2, 3)], pins={0: 1, 1: 1, 2: 1, 3: 1})
    assert outcome.complete
    assert outcome.models == ()
    assert outcome.nodes_explored == 0


def test_fully_pinned_instance_needs_no_decisions():
    outcome = enumerate_models(4, [(0, 1, 2, 3)], pins={0: 0, 1: 0, 2: 0, 3: 1})
    assert outcome.complete
    assert outcome.models == ((0, 0, 0, 1),)
    assert outcome.nodes_explored == 0


def test_node_limit_truncates_to_a_prefix():
    full = enumerate_models(6, TOY_CYCLES)
    assert full.complete
    cut = enumerate_models(6, TOY_CYCLES, node_limit=full.nodes_explored // 2)
    assert not cut.complete
    assert cut.nodes_explored <= full.nodes_explored // 2
    assert list(cut.models) == list(full.models[: len(cut.models)])
    assert len(cut.models) < len(full.models)


def test_both_cores_agree_exactly():
    instances = [
        (6, TOY_CYCLES, None),
        (6, TOY_CYCLES, {0: 0}),
        (4, [(0, 1, 2, 3)], None),
        (10, sorted(cocktail_seed(1).cycles), None),
    ]
    for n, cycles, pins in instances:
        fast = enumerate_models(n, cycles, pins=pins)
        slow = enumerate_models(n, cycles, pins=pins, force_python=True)
        assert fast.models == slow.models
        assert fast.complete == slow.complete
        assert fast.nodes_explored == slow.nodes_explored


def test_pure_python_env_var_selects_the_twin(monkeypatch):
    monkeypatch.setenv("CYCDEC_PURE_PYTHON", "1")
    outcome = enumerate_models(6, TOY_CYCLES)
    assert len(outcome.models) == 44


def test_repeat_runs_are_identical():
    first = enumerate_models(6, TOY_CYCLES)
    second = enumerate_models(6, TOY_CYCLES)
    assert first == second


def test_input_validation():
    with pytest.raises(ValueError):
        enumerate_models(-1, [])
    with pytest.raises(ValueError):
        enumerate_models(4, [(0, 1, 2, 4)])
    with pytest.raises(ValueError):
        enumerate_models(4, [(0, 1, 2, 2)])
    with pytest.raises(ValueError):
        enumerate_models(4, [(0, 1, 2, 3)], pins={4: 0})
    with pytest.raises(ValueError):
        enumerate_models(4, [(0, 1, 2, 3)], pins={0: 2})


quads = st.lists(
    st.integers(min_value=0, max_value=9), min_size=4, max_size=4, unique=True
)


@settings(deadline=None, max_examples=60)
@given(st.lists(quads, min_size=0, max_size=8))
def test_matches_brute_force_on_random_instances(raw_cycles):
    cycles = sorted({canonical_cycle(q) for q in raw_cycles})
    outcome = enumerate_models(10, cycles)
    assert outcome.complete
    assert list(outcome.models) == brute_force(10, cycles)
