from collections import Counter
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from morsebetti.engine import (
    CONTINUE_ADD_CURRENT,
    STOP_ADD_BOTH,
    STOP_ADD_CURRENT,
    STOP_ADD_NOTHING,
    BettiTable,
    compute_betti_table,
    compute_both,
    compute_multigraded,
    deform,
    init_graph,
    strand_counts,
    step_decision,
)
from morsebetti.faces import face_label, from_mask
from morsebetti.fields import QQ, PrimeField
from morsebetti.monomials import MonomialIdeal
from morsebetti.oracle import oracle_betti_table, oracle_multigraded

from conftest import ideal, ideals, mixed_corpus

POWERS = ideal(2, (2, 0), (1, 1), (0, 2))
TRIANGLE = ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1))
F2 = PrimeField(2)


def koszul(k):
    return MonomialIdeal(k, tuple(tuple(int(a == b) for b in range(k)) for a in range(k)))


def test_init_graph():
    G = init_graph(POWERS)
    assert G.level == 0
    assert G.faces("current") == [()]
    assert G.faces("lower") == [(0,), (1,), (2,)]
    assert G.edges == {}
    assert init_graph(ideal(1, (1,))).faces("lower") == [(0,)]
    assert len(init_graph(TRIANGLE).lower) == 3
    with pytest.raises(ValueError):
        init_graph(MonomialIdeal(2, ()))


def test_strand_counts():
    B = strand_counts([2, 2, 2], 1, (3, 3))
    assert B[1, 1] == 3 and B.sum() == 3
    assert strand_counts([0], 0, (2, 2))[0, 0] == 1
    assert not strand_counts([], 2, (2, 3)).any()
    with pytest.raises(AssertionError):
        strand_counts([9], 1, (3, 3))


@pytest.mark.parametrize("i,r,n,cur,low,expected", [
    (2, 3, 5, {1}, {1}, STOP_ADD_BOTH),
    (3, 6, 3, {1}, {1}, STOP_ADD_CURRENT),
    (1, 6, 5, set(), {1}, STOP_ADD_NOTHING),
    (1, 6, 5, {1}, set(), STOP_ADD_CURRENT),
    (1, 6, 5, {1}, {1}, CONTINUE_ADD_CURRENT),
])
def test_step_decision(i, r, n, cur, low, expected):
    assert step_decision(i, r, n, cur, low) == expected


@pytest.mark.parametrize("start", ["taylor", "lyubeznik"])
def test_deform_powers(start):
    G = init_graph(POWERS, start)
    deform(G)
    assert G.faces("lower") == [(0, 1), (0, 2), (1, 2)]
    deform(G)
    assert G.level == 2
    assert G.faces("current") == [(0, 1), (1, 2)]
    assert G.lower == set()
    assert G.cancellations == 1


def test_deform_triangle_lyubeznik():
    G = init_graph(TRIANGLE, "lyubeznik")
    deform(G)
    assert G.faces("lower") == [(0, 1), (0, 2)]
    deform(G)
    assert G.faces("current") == [(0, 1), (0, 2)]
    assert G.cancellations == 0


def test_deform_koszul_never_cancels():
    G = init_graph(koszul(2), "taylor")
    deform(G)
    assert G.faces("current") == [(0,), (1,)]
    assert G.faces("lower") == [(0, 1)]
    assert G.cancellations == 0


def test_betti_examples():
    assert compute_betti_table(POWERS).entries() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert compute_betti_table(TRIANGLE).entries() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert compute_betti_table(koszul(3)).entries() == {(i, i): comb(3, i) for i in range(4)}


def test_zero_and_principal_ideals():
    assert compute_betti_table(MonomialIdeal(3, ())).entries() == {(0, 0): 1}
    assert compute_betti_table(ideal(1, (1,))).entries() == {(0, 0): 1, (1, 1): 1}
    assert compute_multigraded(MonomialIdeal(2, ())) == {(0, (0, 0)): 1}


def test_multigraded_examples():
    mb = compute_multigraded(ideal(3, (1, 1, 0), (0, 1, 1)))
    assert mb.at(1, (1, 1, 0)) == 1 and mb.at(1, (0, 1, 1)) == 1 and mb.at(2, (1, 1, 1)) == 1
    assert compute_multigraded(ideal(1, (1,))).at(1, (1,)) == 1
    mb = compute_multigraded(POWERS)
    assert mb.at(2, (2, 1)) == 1 and mb.at(2, (1, 2)) == 1
    assert dict(mb) == dict(oracle_multigraded(POWERS))


def test_table_allocated_at_bound():
    t = compute_betti_table(POWERS)
    assert t.data.shape == (3, 3)  # b = 2*(2-1)+1 strands, a = 2+1 columns
    assert t.projdim == 2 and t.regularity == 1


@given(ideals(max_n=4, max_r=6))
def test_matches_oracle(I):
    for field in (QQ, F2):
        want = oracle_betti_table(I, field)
        for start in ("taylor", "lyubeznik"):
            assert compute_betti_table(I, field, start) == want


@given(ideals(max_n=4, max_r=6), st.randoms(use_true_random=False))
def test_order_invariance(I, rnd):
    order = list(range(I.r))
    rnd.shuffle(order)
    assert compute_betti_table(I.permuted(order)) == compute_betti_table(I)


def test_backends_give_same_tables(backend):
    for I in mixed_corpus(30, seed=11, n_range=(3, 7), r_range=(3, 9)):
        assert compute_betti_table(I, backend=backend) == oracle_betti_table(I)


def test_candidate_source_does_not_change_output():
    # expanding from the surviving faces only, instead of every admissible face
    for I in mixed_corpus(150, seed=3):
        for start in ("taylor", "lyubeznik"):
            assert compute_betti_table(I, start=start, expand_from="survivors") == \
                compute_betti_table(I, start=start)


def _labels(G, masks):
    return Counter(face_label(from_mask(m), G.ideal) for m in masks)


@pytest.mark.parametrize("start", ["taylor", "lyubeznik"])
def test_pass_invariants(start):
    """Each pass only prunes the layer below and pairs faces of equal label."""
    for I in mixed_corpus(40, seed=5, r_range=(3, 8)):
        G = init_graph(I, start)
        while G.lower and G.level < min(I.r, I.n):
            old_lower, done = set(G.lower), G.cancellations
            deform(G)
            assert G.current <= old_lower
            removed_lower = old_lower - G.current
            removed_upper = set(G.lower_layer.masks) - G.lower
            assert len(removed_lower) == len(removed_upper) == G.cancellations - done
            assert _labels(G, removed_lower) == _labels(G, removed_upper)
            assert G.edges == {}


def test_weights_stay_exact_over_rationals():
    # dense cancellation: all degree-3 monomials in 3 variables
    gens = [(a, b, 3 - a - b) for a in range(4) for b in range(4 - a)]
    I = MonomialIdeal.from_generators(3, gens)
    t = compute_betti_table(I, QQ, "taylor")
    assert t == oracle_betti_table(I, QQ)
    assert t.entries() == {(0, 0): 1, (1, 3): 10, (2, 4): 15, (3, 5): 6}


def test_table_equality_ignores_padding():
    a = BettiTable(np.array([[1, 0, 0], [0, 3, 2], [0, 0, 0]]))
    b = BettiTable(np.array([[1, 0, 0], [0, 3, 2]]))
    assert a == b
    assert a.totals() == [1, 3, 2]
    assert BettiTable.from_entries({(0, 0): 1, (1, 2): 3, (2, 3): 2}) == a
