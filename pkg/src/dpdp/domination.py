"""Dominating sets, paired-dominating sets, DP-pairs, DPDP recognition.

A DP-pair is a partition (D, P) of the vertex set where D is dominating
and P is paired-dominating (dominating plus a perfect matching inside P).
The search assigns vertices to D or P depth-first in BFS order from
vertex 0, after forcing leaves into D and supports into P; matching
feasibility on P is checked exactly at complete assignments only.

Two pairs are the same iff their (D, P) partitions agree; matchings are
witnesses, not identity.  Every positive verdict carries a pair that
re-verifies under is_dp_pair.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Multigraph

_UNSET, _D, _P = 0, 1, 2


@dataclass(frozen=True)
class DpPair:
    """Certificate of DPDP-ness: the partition plus a matching on P."""

    d: frozenset[int]
    p: frozenset[int]
    matching: tuple[int, ...]

    def partition(self) -> tuple[frozenset[int], frozenset[int]]:
        return (self.d, self.p)


def is_dominating(g: Multigraph, s: frozenset[int] | set[int]) -> bool:
    """True iff every vertex outside s has a neighbor in s."""
    ss = frozenset(s)
    return all(
        v in ss or g.neighborhood(v) & ss for v in range(g.n)
    )


def has_perfect_matching_on(
    g: Multigraph, s: frozenset[int] | set[int]
) -> tuple[int, ...] | None:
    """A perfect matching of the subgraph induced by s, as edge ids, or None.

    Loops never belong to a matching.  Exact memoised backtracking; agrees
    with exhaustive pairing for |s| <= 12 (oracle-tested).
    """
    ss = frozenset(s)
    if len(ss) % 2:
        return None
    if not ss:
        return ()
    partners = {u: sorted(g.plain_neighbors(u) & ss) for u in ss}
    dead: set[frozenset[int]] = set()

    def pair_up(remaining: frozenset[int], acc: list[int]) -> bool:
        if not remaining:
            return True
        if remaining in dead:
            return False
        u = min(remaining)
        rest = remaining - {u}
        for w in partners[u]:
            if w in rest:
                acc.append(g.edge_between(u, w))
                if pair_up(rest - {w}, acc):
                    return True
                acc.pop()
        dead.add(remaining)
        return False

    acc: list[int] = []
    if pair_up(ss, acc):
        return tuple(sorted(acc))
    return None


def is_paired_dominating(g: Multigraph, s: frozenset[int] | set[int]) -> bool:
    return is_dominating(g, s) and has_perfect_matching_on(g, s) is not None


def is_dp_pair(g: Multigraph, pair: DpPair) -> bool:
    """Literal check of every DP-pair invariant against g."""
    d, p = pair.d, pair.p
    if d & p or (d | p) != frozenset(range(g.n)):
        return False
    if len(p) % 2:
        return False
    if not is_dominating(g, d) or not is_dominating(g, p):
        return False
    covered: set[int] = set()
    for eid in pair.matching:
        if not (0 <= eid < g.m):
            return False
        e = g.edges[eid]
        if e.is_loop():
            return False
        if e.u not in p or e.v not in p:
            return False
        if e.u in covered or e.v in covered:
            return False
        covered.add(e.u)
        covered.add(e.v)
    return covered == set(p)


def enumerate_dp_pairs(g: Multigraph, cap: int) -> list[DpPair]:
    """All distinct DP-pair partitions, up to cap, in deterministic order.

    Order: depth-first over vertices in BFS order from vertex 0, trying D
    before P at every branch.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if g.n == 0:
        return [DpPair(frozenset(), frozenset(), ())]
    if any(g.degree(v) == 0 for v in range(g.n)):
        return []

    n = g.n
    nbrs = [sorted(g.plain_neighbors(v)) for v in range(n)]
    state = [_UNSET] * n
    # cnt[v] = [assigned-D neighbors, assigned-P neighbors, unassigned neighbors]
    cnt = [[0, 0, len(nbrs[v])] for v in range(n)]
    trail: list[int] = []
    results: list[DpPair] = []
    leaves = g.leaves()
    supports = g.supports()

    def can_be(v: int, side: int) -> bool:
        dcnt, pcnt, ucnt = cnt[v]
        if side == _D:
            return pcnt + ucnt >= 1
        return dcnt + ucnt >= 1 and pcnt + ucnt >= 1

    def violated(v: int) -> bool:
        dcnt, pcnt, ucnt = cnt[v]
        if state[v] == _D:
            return pcnt + ucnt < 1
        if state[v] == _P:
            return dcnt + ucnt < 1 or pcnt + ucnt < 1
        return not (can_be(v, _D) or can_be(v, _P))

    def forced_moves(v: int) -> list[tuple[int, int]]:
        moves = []
        dcnt, pcnt, ucnt = cnt[v]
        if state[v] == _UNSET:
            d_ok, p_ok = can_be(v, _D), can_be(v, _P)
            if d_ok and not p_ok:
                moves.append((v, _D))
            elif p_ok and not d_ok:
                moves.append((v, _P))
        elif ucnt == 1:
            u = next(w for w in nbrs[v] if state[w] == _UNSET)
            if state[v] == _D and pcnt == 0:
                moves.append((u, _P))
            elif state[v] == _P:
                # if both needs point at u the queued pair conflicts and
                # assign() reports the contradiction
                if dcnt == 0:
                    moves.append((u, _D))
                if pcnt == 0:
                    moves.append((u, _P))
        return moves

    def assign(v: int, side: int) -> bool:
        """Assign with unit propagation; False on contradiction."""
        queue = [(v, side)]
        while queue:
            x, s = queue.pop()
            if state[x] != _UNSET:
                if state[x] != s:
                    return False
                continue
            state[x] = s
            trail.append(x)
            for u in nbrs[x]:
                cnt[u][2] -= 1
                cnt[u][s - 1] += 1
            if violated(x):
                return False
            for u in nbrs[x]:
                if violated(u):
                    return False
                queue.extend(forced_moves(u))
            queue.extend(forced_moves(x))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            x = trail.pop()
            s = state[x]
            state[x] = _UNSET
            for u in nbrs[x]:
                cnt[u][2] += 1
                cnt[u][s - 1] -= 1

    def emit() -> None:
        p = frozenset(v for v in range(n) if state[v] == _P)
        matching = has_perfect_matching_on(g, p)
        if matching is None:
            return
        d = frozenset(v for v in range(n) if state[v] == _D)
        pair = DpPair(d, p, matching)
        # Obs 4.2 containments and the full invariant, re-checked on every hit
        assert leaves <= d and supports <= p
        assert is_dp_pair(g, pair)
        results.append(pair)

    order = g.bfs_order(0)

    def dfs(pos: int) -> None:
        if len(results) >= cap:
            return
        while pos < n and state[order[pos]] != _UNSET:
            pos += 1
        if pos == n:
            emit()
            return
        v = order[pos]
        for side in (_D, _P):
            mark = len(trail)
            if assign(v, side):
                dfs(pos + 1)
            undo(mark)
            if len(results) >= cap:
                return

    mark = len(trail)
    ok = True
    for leaf in sorted(leaves):
        ok = ok and assign(leaf, _D)
    for s in sorted(supports):
        ok = ok and assign(s, _P)
    if ok:
        dfs(0)
    undo(mark)
    return results


def find_dp_pair(g: Multigraph) -> DpPair | None:
    """A verified DP-pair if one exists, else None."""
    pairs = enumerate_dp_pairs(g, cap=1)
    return pairs[0] if pairs else None


def is_dpdp(g: Multigraph) -> bool:
    return find_dp_pair(g) is not None
