import random

import pytest
from hypothesis import given, settings, strategies as st

from mmarg.frames import ArgumentationFrame
from mmarg.preferences import (
    InterPreference,
    IntraPreference,
    PreferenceOrder,
    adjust,
    derive_inter,
)
from mmarg.scenario import state_at

from conftest import random_state


def f(args, attacks=()):
    return ArgumentationFrame.of(args, attacks)


def test_binary_split_orders_guesses_below_facts():
    order = IntraPreference.of(["a1"], ["a1", "a3"]).to_order()
    assert order.strictly_less("a3", "a1")
    assert not order.strictly_less("a1", "a3")


def test_no_facts_means_no_strict_pairs():
    assert IntraPreference.of([], ["a1", "a2"]).to_order().strict == frozenset()


def test_all_facts_means_no_strict_pairs():
    assert IntraPreference.of(["a1", "a2"], ["a1", "a2"]).to_order().strict == frozenset()


def test_factual_outside_universe_rejected():
    with pytest.raises(ValueError):
        IntraPreference.of(["a9"], ["a1"])


def test_adjust_reverses_single_attack():
    order = PreferenceOrder.of([("a1", "a2")])
    assert adjust(f(["a1", "a2"], [("a1", "a2")]), order).attacks == {("a2", "a1")}


def test_adjust_without_strict_pairs_is_identity():
    frame = f(["a1", "a2"], [("a1", "a2")])
    assert adjust(frame, PreferenceOrder.of()) == frame


def test_adjust_collapses_mutual_attack():
    frame = f(["a1", "a3"], [("a1", "a3"), ("a3", "a1")])
    order = IntraPreference.of(["a1"], ["a1", "a3"]).to_order()
    assert adjust(frame, order).attacks == {("a1", "a3")}


def test_from_leq_drops_equivalent_pairs():
    order = PreferenceOrder.from_leq([("a3", "a5"), ("a5", "a3"), ("a1", "a2")])
    assert order.strict == {("a1", "a2")}


@st.composite
def frame_and_split(draw):
    n = draw(st.integers(1, 6))
    args = [f"p{i}" for i in range(n)]
    attacks = draw(st.sets(st.tuples(st.sampled_from(args), st.sampled_from(args)), max_size=12))
    factual = draw(st.sets(st.sampled_from(args)))
    return ArgumentationFrame.of(args, attacks), IntraPreference.of(factual, args).to_order()


@given(frame_and_split())
@settings(max_examples=150, deadline=None)
def test_adjust_invariants(case):
    frame, order = case
    adjusted = adjust(frame, order)
    assert adjusted.args == frame.args
    assert len(adjusted.attacks) <= len(frame.attacks)
    reversed_pairs = {(t, s) for s, t in frame.attacks}
    assert adjusted.attacks <= frame.attacks | reversed_pairs
    assert adjust(adjusted, order) == adjusted


def test_derive_inter_requires_known_agent(mafia):
    with pytest.raises(ValueError):
        derive_inter(mafia.initial, "e9")


def test_equal_trusts_yield_symmetric_leq_and_identity_adjustment(mafia):
    m = state_at(mafia, 4)
    inter = derive_inter(m, "e3")
    assert inter.leq == {("a3", "a5"), ("a5", "a3")}
    assert inter.to_order().strict == frozenset()
    pub = m.public_af
    assert adjust(pub, inter.to_order()) == pub


def test_derived_leq_pairs_are_public_mutual_conflicts():
    rng = random.Random(99)
    for _ in range(20):
        m = random_state(rng)
        for e in sorted(m.agents):
            inter = derive_inter(m, e)
            assert isinstance(inter, InterPreference)
            for a1, a2 in inter.leq:
                assert (a1, a2) in m.public_af.attacks and (a2, a1) in m.public_af.attacks
                assert a1 in m.aware[e].args and a2 in m.aware[e].args
                assert a1 not in m.intra[(e, e)].factual
                assert a2 not in m.intra[(e, e)].factual
