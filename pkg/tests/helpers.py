"""Independent brute-force oracles for the test suite.

Everything here recomputes from raw edge data with its own naive
algorithms; none of it calls the library's search or matching code, so
engine results can be checked against a genuinely independent path.
"""

from __future__ import annotations

from itertools import combinations

from dpdp.graph import Multigraph


def adjacency(g: Multigraph) -> list[set[int]]:
    """Neighbour sets from raw edge records (loops ignored: they never
    matter for domination or matching)."""
    adj: list[set[int]] = [set() for _ in range(g.n)]
    for e in g.edges:
        if e.u != e.v:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
    return adj


def oracle_dominating(g: Multigraph, s: set[int]) -> bool:
    adj = adjacency(g)
    return all(v in s or adj[v] & s for v in range(g.n))


def oracle_pairing_exists(g: Multigraph, s: set[int]) -> bool:
    """Exhaustive pairing: match the lowest unmatched vertex against every
    neighbour in turn."""
    if len(s) % 2:
        return False
    adj = adjacency(g)

    def rec(rem: frozenset[int]) -> bool:
        if not rem:
            return True
        u = min(rem)
        rest = rem - {u}
        return any(rec(rest - {w}) for w in adj[u] if w in rest)

    return rec(frozenset(s))


def oracle_dp_partitions(g: Multigraph) -> list[frozenset[int]]:
    """All D-sets of valid DP-pairs by full 2^n enumeration (P is the
    complement).  Returns sorted tuples of D for deterministic compare."""
    vs = list(range(g.n))
    hits = []
    for r in range(g.n + 1):
        for combo in combinations(vs, r):
            d = set(combo)
            p = set(vs) - d
            if len(p) % 2:
                continue
            if not oracle_dominating(g, d) or not oracle_dominating(g, p):
                continue
            if oracle_pairing_exists(g, p):
                hits.append(frozenset(d))
    return sorted(hits, key=sorted)


def edge_list_text(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{e.u} {e.v}" for e in g.edges]
    return "\n".join(lines) + "\n"
