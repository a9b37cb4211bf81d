from __future__ import annotations

import pytest

from dpdp.catalog import complete, corona, cycle, enumerate_connected_simple, path
from dpdp.domination import enumerate_dp_pairs, is_dpdp
from dpdp.goodsub import find_good_subgraph
from dpdp.graph import Multigraph
from dpdp.minimality import (
    check_reducible_pattern,
    classify,
    deletion_witness,
    is_minimal_by_deletion,
    is_small_cycle_369,
    minimal_pair_properties,
    minimal_spanning_dpdp_subgraph,
    xcheck,
)
from dpdp.subdivision import build_s2


def test_minimal_path_table():
    for n in range(1, 16):
        assert is_minimal_by_deletion(path(n)) == (n in (4, 7, 10, 13)), n


def test_minimal_cycle_table():
    for m in range(1, 13):
        assert is_minimal_by_deletion(cycle(m)) == (m in (3, 6, 9)), m


def test_complete_graphs():
    assert is_minimal_by_deletion(complete(3))
    assert not is_minimal_by_deletion(complete(4))
    assert deletion_witness(complete(4)) is not None


def test_deletion_witness():
    assert deletion_witness(path(4)) is None  # minimal
    assert deletion_witness(path(5)) is None  # not DPDP at all
    w = deletion_witness(path(8))
    assert w is not None
    smaller, _ = path(8).delete_edge(w)
    assert is_dpdp(smaller)


def test_reducible_pattern_examples():
    assert check_reducible_pattern(path(6)) == (2, 3, 1, 4)
    assert check_reducible_pattern(path(4)) is None
    assert check_reducible_pattern(cycle(4)) is not None
    assert check_reducible_pattern(cycle(3)) is None
    with pytest.raises(ValueError):
        check_reducible_pattern(Multigraph(2, [(0, 0)]))


def test_reducible_pattern_implies_nonminimal_s2(multigraphs_le5):
    for h in multigraphs_le5:
        if check_reducible_pattern(h) is not None:
            g, _ = build_s2(h)
            assert not is_minimal_by_deletion(g), h.edge_multiset()


def test_minimal_spanning_subgraph():
    assert minimal_spanning_dpdp_subgraph(path(4)) == path(4)
    assert minimal_spanning_dpdp_subgraph(cycle(5)) is None
    r = minimal_spanning_dpdp_subgraph(cycle(12))
    assert r is not None and r.n == 12
    assert is_minimal_by_deletion(r)
    # component sizes are forced: minimal DPDP paths summing to 12
    assert sorted(len(c) for c in r.connected_components()) == [4, 4, 4]


def test_minimal_spanning_subgraph_is_deterministic():
    a = minimal_spanning_dpdp_subgraph(complete(4))
    b = minimal_spanning_dpdp_subgraph(complete(4))
    assert a == b and is_minimal_by_deletion(a)


def test_small_cycle_detection():
    assert is_small_cycle_369(cycle(3))
    assert is_small_cycle_369(cycle(6))
    assert is_small_cycle_369(cycle(9))
    assert not is_small_cycle_369(cycle(12))
    assert not is_small_cycle_369(path(6))
    assert not is_small_cycle_369(Multigraph(3, [(0, 1), (0, 1), (1, 2)]))


def test_classify_p3_all_minimal():
    g, _ = build_s2(path(3))  # P7
    report = classify(g)
    assert report.is_dpdp and report.minimal_by_deletion
    assert report.inversion is not None
    assert report.good_subgraph is None
    assert report.dp_pair_count_capped == 1
    assert report.verdicts_consistent


def test_classify_p6_all_nonminimal():
    g, _ = build_s2(path(6))  # P16
    report = classify(g)
    assert report.is_dpdp and not report.minimal_by_deletion
    assert report.inversion is not None
    assert report.good_subgraph is not None
    assert report.dp_pair_count_capped == 2
    assert report.verdicts_consistent


def test_classify_c3_cycle_clause():
    g, _ = build_s2(cycle(1))  # C3
    report = classify(g)
    assert report.minimal_by_deletion
    assert len(enumerate_dp_pairs(g, cap=10)) == 3  # uniqueness clause unusable
    assert report.verdicts_consistent


def test_classify_non_subdivision():
    report = classify(path(5))
    assert not report.is_dpdp
    assert report.inversion is None
    assert report.verdicts_consistent


def test_xcheck_examples():
    assert xcheck(path(3)).consistent
    assert xcheck(path(6)).consistent
    r = xcheck(cycle(1))
    assert r.consistent and r.minimal_by_deletion
    with pytest.raises(ValueError):
        xcheck(Multigraph(4, [(0, 1), (2, 3)]))


def test_xcheck_simple_connected_6_vertices():
    # Theorem three-way agreement over every simple connected base, n <= 6
    for n in range(2, 7):
        for h in enumerate_connected_simple(n):
            assert xcheck(h).consistent, (n, h.edge_multiset())


def test_minimal_pair_properties_on_examples():
    p4 = path(4)
    for pair in enumerate_dp_pairs(p4, cap=10):
        assert minimal_pair_properties(p4, pair) == (True, True, True)
    # a DP-pair of a non-minimal graph may break them: K4 has adjacent D
    k4 = complete(4)
    broken = [
        minimal_pair_properties(k4, pair) for pair in enumerate_dp_pairs(k4, cap=100)
    ]
    assert any(not all(props) for props in broken)


def test_corona_minimal_spot():
    h = corona(complete(3))
    g, _ = build_s2(h)
    assert is_minimal_by_deletion(g)
    assert find_good_subgraph(h) is None


def test_spanning_minimal_subgraph_of_dpdp_tree():
    # the extracted spanning minimal subgraph of a DPDP tree is always the
    # 2-subdivision of a forest without isolated vertices or good subgraphs
    import random

    from dpdp.catalog import random_tree
    from dpdp.subdivision import invert_s2

    rng = random.Random(77)
    checked = 0
    while checked < 25:
        t = random_tree(rng.randint(2, 12), rng)
        if not is_dpdp(t):
            continue
        r = minimal_spanning_dpdp_subgraph(t)
        assert is_minimal_by_deletion(r)
        inv = invert_s2(r)
        assert inv is not None, r.edge_multiset()
        base, _, _ = inv
        assert all(base.degree(v) > 0 for v in range(base.n))
        assert find_good_subgraph(base) is None
        checked += 1
