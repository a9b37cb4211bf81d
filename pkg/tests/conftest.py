from __future__ import annotations

import pytest

from dpdp.catalog import enumerate_connected_multigraphs, enumerate_connected_simple
from dpdp.domination import enumerate_dp_pairs
from dpdp.goodsub import find_good_subgraph
from dpdp.minimality import is_minimal_by_deletion
from dpdp.subdivision import build_s2


@pytest.fixture(scope="session")
def multigraphs_le5():
    return enumerate_connected_multigraphs(5)


@pytest.fixture(scope="session")
def simple_connected():
    """{n: classes} for n = 1..7."""
    return {n: enumerate_connected_simple(n) for n in range(1, 8)}


class SweepData:
    """Rows of the Theorem 3.1 sweep plus the wall time spent building them
    (charged against the cross-validation criterion's budget)."""

    def __init__(self, rows: list[dict], build_seconds: float):
        self.rows = rows
        self.build_seconds = build_seconds

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


@pytest.fixture(scope="session")
def sweep_le5(multigraphs_le5):
    """Everything the Theorem 3.1 sweep needs, computed once per session:
    for each connected multigraph with up to 5 edges, its 2-subdivision,
    labeling, deletion-minimality, good-subgraph certificate, and the
    first two DP-pairs."""
    import time

    t0 = time.perf_counter()
    rows = []
    for h in multigraphs_le5:
        g, lab = build_s2(h)
        rows.append(
            {
                "h": h,
                "g": g,
                "lab": lab,
                "minimal": is_minimal_by_deletion(g),
                "cert": find_good_subgraph(h),
                "pairs2": enumerate_dp_pairs(g, cap=2),
            }
        )
    return SweepData(rows, time.perf_counter() - t0)
