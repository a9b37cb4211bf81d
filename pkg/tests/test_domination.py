from __future__ import annotations

import random

import pytest

from dpdp.catalog import complete, cycle, path
from dpdp.domination import (
    DpPair,
    enumerate_dp_pairs,
    find_dp_pair,
    has_perfect_matching_on,
    is_dominating,
    is_dp_pair,
    is_dpdp,
    is_paired_dominating,
)
from dpdp.graph import Multigraph

from helpers import oracle_dp_partitions, oracle_pairing_exists


def test_is_dominating_examples():
    k3 = complete(3)
    assert all(is_dominating(k3, {v}) for v in range(3))
    assert not is_dominating(path(4), {0})
    for g in (path(5), cycle(4)):
        assert is_dominating(g, set(range(g.n)))


def test_matching_examples():
    p4 = path(4)
    assert has_perfect_matching_on(p4, {1, 2}) == (1,)
    assert has_perfect_matching_on(p4, {0, 1, 2}) is None
    # frozen from the exhaustive pairing oracle: C6 pairs completely
    assert oracle_pairing_exists(cycle(6), set(range(6)))
    assert has_perfect_matching_on(cycle(6), frozenset(range(6))) is not None


def test_matching_never_uses_loops():
    g = Multigraph(2, [(0, 0), (1, 1), (0, 1)])
    m = has_perfect_matching_on(g, {0, 1})
    assert m == (2,)
    lonely = Multigraph(1, [(0, 0)])
    assert has_perfect_matching_on(lonely, {0}) is None


def test_matching_agrees_with_pairing_oracle():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(2, 12)
        m = rng.randint(1, 2 * n)
        g = Multigraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])
        s = {v for v in range(n) if rng.random() < 0.6}
        got = has_perfect_matching_on(g, s)
        assert (got is not None) == oracle_pairing_exists(g, s)
        if got is not None:
            covered = set()
            for eid in got:
                e = g.edges[eid]
                assert not e.is_loop() and e.u in s and e.v in s
                assert e.u not in covered and e.v not in covered
                covered |= {e.u, e.v}
            assert covered == s


def test_dp_pair_examples():
    p4 = path(4)
    pair = DpPair(frozenset({0, 3}), frozenset({1, 2}), (1,))
    assert is_dp_pair(p4, pair)
    k3 = complete(3)
    assert is_dp_pair(k3, DpPair(frozenset({0}), frozenset({1, 2}), (2,)))
    # C5 admits no valid pair at all
    assert enumerate_dp_pairs(cycle(5), cap=50) == []


def test_is_dp_pair_rejects_bad_certificates():
    p4 = path(4)
    assert not is_dp_pair(p4, DpPair(frozenset({0, 1}), frozenset({1, 2}), (1,)))
    assert not is_dp_pair(p4, DpPair(frozenset({0, 3}), frozenset({1, 2}), ()))
    assert not is_dp_pair(p4, DpPair(frozenset({1, 2}), frozenset({0, 3}), (0,)))


def test_is_paired_dominating():
    assert is_paired_dominating(cycle(6), frozenset(range(6)))
    assert not is_paired_dominating(path(4), frozenset({1}))


def test_path_table():
    for n in range(1, 21):
        assert is_dpdp(path(n)) == (n not in (1, 2, 3, 5, 6, 9)), n


def test_cycle_table():
    for n in range(3, 21):
        assert is_dpdp(cycle(n)) == (n != 5), n
    assert not is_dpdp(cycle(1)) and not is_dpdp(cycle(2))


def test_k4_is_dpdp():
    assert is_dpdp(complete(4))


def test_enumerate_p4_unique_pair():
    pairs = enumerate_dp_pairs(path(4), cap=10)
    assert len(pairs) == 1
    assert pairs[0].partition() == (frozenset({0, 3}), frozenset({1, 2}))


def test_enumerate_k3_three_pairs():
    pairs = enumerate_dp_pairs(complete(3), cap=10)
    assert len(pairs) == 3
    assert len({p.d for p in pairs}) == 3


def test_enumerate_cap_and_determinism():
    c6 = cycle(6)
    all_pairs = enumerate_dp_pairs(c6, cap=100)
    assert [p.d for p in enumerate_dp_pairs(c6, cap=2)] == [p.d for p in all_pairs[:2]]
    assert enumerate_dp_pairs(c6, cap=100) == all_pairs
    with pytest.raises(ValueError):
        enumerate_dp_pairs(c6, cap=0)


def test_every_result_respects_leaf_support_forcing():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(1, 9)
        m = rng.randint(0, 12)
        g = Multigraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])
        for pair in enumerate_dp_pairs(g, cap=4):
            assert g.leaves() <= pair.d
            assert g.supports() <= pair.p
            assert is_dp_pair(g, pair)


def test_isolated_vertex_never_dpdp():
    g = Multigraph(3, [(0, 1)])
    assert not is_dpdp(g)


def test_empty_graph_vacuous():
    g = Multigraph(0, [])
    pairs = enumerate_dp_pairs(g, cap=3)
    assert pairs == [DpPair(frozenset(), frozenset(), ())]
    assert is_dp_pair(g, pairs[0])


def test_supergraph_monotonicity_fuzz():
    # adding any edge to a DPDP-graph keeps it DPDP
    rng = random.Random(23)
    checked = 0
    while checked < 60:
        n = rng.randint(3, 8)
        m = rng.randint(2, 12)
        g = Multigraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])
        if not is_dpdp(g):
            continue
        u, v = rng.randrange(n), rng.randrange(n)
        bigger = g.add_edges([(u, v)])
        assert is_dpdp(bigger), (g.edge_multiset(), (u, v))
        checked += 1


def test_search_agrees_with_exhaustive_partitions_small():
    rng = random.Random(99)
    for _ in range(60):
        n = rng.randint(1, 7)
        m = rng.randint(0, 10)
        g = Multigraph(n, [(rng.randrange(n), rng.randrange(n)) for _ in range(m)])
        want = oracle_dp_partitions(g)
        got = sorted((p.d for p in enumerate_dp_pairs(g, cap=200)), key=sorted)
        assert got == want, g.edge_multiset()
