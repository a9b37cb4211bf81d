"""Exact isomorphism testing for small multigraphs.

Dedup strategy for the enumerations: bucket candidates by an
isomorphism-invariant key (refined vertex colors), then confirm with a
backtracking isomorphism test inside each bucket.  Exact and
dependency-free; fine at desk scale (n <= 10).
"""

from __future__ import annotations

from collections import Counter

from .graph import Multigraph


def _multiplicity(g: Multigraph) -> tuple[dict[tuple[int, int], int], list[int]]:
    """Non-loop edge multiplicities keyed by (min, max), and loop counts."""
    mult: Counter[tuple[int, int]] = Counter()
    loops = [0] * g.n
    for e in g.edges:
        if e.is_loop():
            loops[e.u] += 1
        else:
            mult[e.key()] += 1
    return dict(mult), loops


def refined_colors(g: Multigraph) -> tuple[int, ...]:
    """Stable vertex colouring: degree/loop counts refined by neighbour
    colour multisets (with edge multiplicities) until the partition stops
    splitting.  Isomorphic graphs get identical colour multisets."""
    mult, loops = _multiplicity(g)
    color: list = [(g.degree(v), loops[v]) for v in range(g.n)]
    for _ in range(g.n):
        sig = []
        for v in range(g.n):
            around = sorted(
                (color[u], mult[(min(u, v), max(u, v))]) for u in g.plain_neighbors(v)
            )
            sig.append((color[v], tuple(around)))
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new_color = [ranking[s] for s in sig]
        if len(set(new_color)) == len(set(color)):
            color = new_color
            break
        color = new_color
    return tuple(color)


def invariant_key(g: Multigraph) -> tuple:
    return (g.n, g.m, tuple(sorted(refined_colors(g))))


def is_isomorphic(a: Multigraph, b: Multigraph) -> bool:
    """Exact multigraph isomorphism (loops and multiplicities respected)."""
    if a.n != b.n or a.m != b.m:
        return False
    ca, cb = refined_colors(a), refined_colors(b)
    if sorted(ca) != sorted(cb):
        return False
    mult_a, loops_a = _multiplicity(a)
    mult_b, loops_b = _multiplicity(b)
    n = a.n
    by_color_b: dict[int, list[int]] = {}
    for v in range(n):
        by_color_b.setdefault(cb[v], []).append(v)
    # map rare colours first to fail fast
    order = sorted(range(n), key=lambda v: (len(by_color_b.get(ca[v], ())), ca[v], v))
    mapping = [-1] * n
    used = [False] * n

    def ok(v: int, w: int) -> bool:
        if loops_a[v] != loops_b[w]:
            return False
        for u in a.plain_neighbors(v):
            x = mapping[u]
            if x >= 0:
                if mult_a[(min(u, v), max(u, v))] != mult_b.get(
                    (min(x, w), max(x, w)), 0
                ):
                    return False
        return True

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color_b.get(ca[v], ()):
            if used[w]:
                continue
            if ok(v, w):
                mapping[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return place(0)


def classes_by_isomorphism(candidates: list[Multigraph]) -> list[Multigraph]:
    """One representative per isomorphism class, in a deterministic order
    sorted by (n, m, degree sequence, representative edge multiset)."""
    buckets: dict[tuple, list[Multigraph]] = {}
    for g in candidates:
        key = invariant_key(g)
        reps = buckets.setdefault(key, [])
        if not any(is_isomorphic(g, r) for r in reps):
            reps.append(g)
    out = [g for reps in buckets.values() for g in reps]
    out.sort(
        key=lambda g: (
            g.n,
            g.m,
            tuple(sorted(g.degree(v) for v in range(g.n))),
            g.edge_multiset(),
        )
    )
    return out
