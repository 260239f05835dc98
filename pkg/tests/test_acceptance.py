"""End-to-end acceptance checks; each test records one PASS/FAIL line."""
import random
import time
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

import pytest

from morsebetti.bench import Cell, run_cell
from morsebetti.engine import BettiTable, compute_betti_table, compute_both
from morsebetti.fields import QQ, PrimeField
from morsebetti.homology import NonfaceComplex, homology_dict, homology_dims
from morsebetti.invariants import check_bounds, pr_invariants, verify_vanishing
from morsebetti.monomials import MonomialIdeal
from morsebetti.oracle import oracle_betti_table, reduced_cohomology
from morsebetti.random_ideals import random_squarefree_ideal

from conftest import ideal, mixed_corpus, record_criterion

F2 = PrimeField(2)
FIELDS = (QQ, F2)
STARTS = ("taylor", "lyubeznik")


def koszul(k):
    return MonomialIdeal(k, tuple(tuple(int(a == b) for b in range(k)) for a in range(k)))


def check(number, detail, ok):
    record_criterion(number, ok, detail)
    assert ok, detail


@lru_cache(maxsize=None)
def corpus():
    return tuple(mixed_corpus(200, seed=2024))


@lru_cache(maxsize=None)
def fixtures():
    return (ideal(2, (2, 0), (1, 1), (0, 2)), ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1))) + \
        tuple(koszul(k) for k in range(1, 6))


@lru_cache(maxsize=None)
def permuted_pairs():
    rng = random.Random(99)
    pairs = []
    for I in mixed_corpus(20, seed=7, r_range=(3, 7)):
        orders = list(permutations(range(I.r)))
        for order in rng.sample(orders, min(5, len(orders))):
            pairs.append((I, I.permuted(list(order))))
    return tuple(pairs)


def test_criterion_1_oracle_equivalence():
    ideals = corpus()
    assert {I.n for I in ideals} == set(range(2, 7))
    assert {I.r for I in ideals} == set(range(1, 8))
    assert max(I.max_degree for I in ideals) == 4
    t0 = time.perf_counter()
    bad = []
    for I in ideals:
        for field in FIELDS:
            want = oracle_betti_table(I, field)
            for start in STARTS:
                if compute_betti_table(I, field, start) != want:
                    bad.append((str(I), field.name, start))
    elapsed = time.perf_counter() - t0
    check(1, f"{len(ideals)} ideals x 2 fields x 2 starts, {len(bad)} mismatches, {elapsed:.1f}s (limit 60s)",
          not bad and elapsed < 60)


def test_criterion_2_hand_traced_fixtures():
    powers, triangle, *kos = fixtures()
    expected = {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    ok = compute_betti_table(powers).entries() == expected
    ok &= compute_betti_table(triangle).entries() == expected
    for k, I in enumerate(kos, 1):
        for start in STARTS:
            ok &= compute_betti_table(I, start=start).entries() == {(i, i): comb(k, i) for i in range(k + 1)}
    check(2, "(x^2,xy,y^2), (xy,yz,xz) and Koszul k<=5 exact", ok)


def test_criterion_3_order_invariance():
    pairs = permuted_pairs()
    diff = sum(compute_betti_table(a) != compute_betti_table(b) for a, b in pairs)
    check(3, f"{len(pairs)} permuted copies of 20 ideals, {diff} differ", diff == 0 and len(pairs) >= 90)


def test_criterion_4_vanishing():
    ideals = list(corpus()) + list(fixtures()) + [b for _, b in permuted_pairs()]
    count = 0
    violations = []
    for I in ideals:
        for field in FIELDS:
            t, mb = compute_both(I, field)
            violations += verify_vanishing(t, I) + verify_vanishing(mb, I)
            count += 1
    K = koszul(3)
    ent = compute_betti_table(K).entries()
    ent[(2, 5)] = 1
    caught = bool(verify_vanishing(BettiTable.from_entries(ent), K))
    check(4, f"{count} tables (graded and multigraded) with {len(violations)} violations; "
             f"negative control {'caught' if caught else 'missed'}", not violations and caught)


def test_criterion_5_bounds():
    fails = []
    for I in corpus():
        rep = pr_invariants(I)
        if not check_bounds(compute_betti_table(I), rep):
            fails.append(str(I))
    check(5, f"projdim >= p and reg >= r on {len(corpus())} ideals, {len(fails)} failures", not fails)


@pytest.mark.parametrize("t", [2, 3])
def test_criterion_6_disjoint_edges(t):
    n = 2 * t
    I = MonomialIdeal(n, tuple(tuple(int(v in (2 * e, 2 * e + 1)) for v in range(n)) for e in range(t)))
    table = compute_betti_table(I)
    ok = table.projdim == t and table.regularity >= t
    ok &= table.entries() == {(i, 2 * i): comb(t, i) for i in range(t + 1)}
    check(6, f"t={t} disjoint edges: projdim={table.projdim} reg={table.regularity}", ok)


def test_criterion_7_hochster():
    bad = 0
    checked = 0
    for s in range(50):
        rng = random.Random(s)
        n = rng.randint(2, 6)
        I = random_squarefree_ideal(n, rng.randint(1, 6), seed=[s, n])
        cx = NonfaceComplex(n, tuple(tuple(v for v in range(n) if g[v]) for g in I.generators))
        _, mb = compute_both(I)
        coh = reduced_cohomology(cx.faces())
        dims = homology_dims(cx)
        for i in range(-1, n):
            checked += 1
            if not dims[i + 1] == mb.at(n - i - 1, (1,) * n) == coh.get(i, 0):
                bad += 1
    check(7, f"50 squarefree ideals, {checked} homology dimensions, {bad} disagreements", bad == 0)


def test_criterion_8_characteristic():
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
              (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5)]
    cx = NonfaceComplex(6, tuple(f for f in combinations(range(6), 3) if f not in facets))
    I = cx.stanley_reisner_ideal()
    tq, t2 = compute_betti_table(I, QQ), compute_betti_table(I, F2)
    hq, h2 = homology_dict(homology_dims(cx, QQ)), homology_dict(homology_dims(cx, F2))
    ok = tq != t2 and tq == oracle_betti_table(I, QQ) and t2 == oracle_betti_table(I, F2)
    ok &= hq[1] == 0 and h2[1] == 1
    ok &= hq[1] == reduced_cohomology(cx.faces(), QQ).get(1, 0)
    ok &= h2[1] == reduced_cohomology(cx.faces(), F2).get(1, 0)
    check(8, f"projective plane: H~_1 = {hq[1]} over QQ, {h2[1]} over F2; tables differ: {tq != t2}", ok)


@pytest.mark.parametrize("cell,limit", [(Cell(10, 12, 2), 1.0), (Cell(15, 15, 4), 10.0)])
def test_criterion_9_performance(cell, limit):
    res = run_cell(cell, reps=10, seed=0)
    worst = max(res.times) if res.times else float("inf")
    check(9, f"cell ({cell.n},{cell.r},{cell.d}): 10 instances, {len(res.failures)} failures, "
             f"mean {res.mean or 0:.3f}s, max {worst:.3f}s (limit {limit}s)",
          not res.failures and len(res.times) == 10 and worst < limit)


def test_criterion_10_multigraded_coherence():
    ideals = list(corpus()) + list(fixtures())
    bad = 0
    for I in ideals:
        for field in FIELDS:
            t, mb = compute_both(I, field)
            bad += mb.graded() != t
    check(10, f"{2 * len(ideals)} multigraded maps summed by total degree, {bad} mismatches", bad == 0)
