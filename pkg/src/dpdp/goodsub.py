"""Good subgraphs: certificates, exhaustive search, constructive reduction.

A good subgraph of a host H is a subgraph Q (no isolated vertex) together
with an edge set E between the boundary of Q and all of E_H - E_Q, an
orientation of E, and a family of arc-disjoint oriented paths, one
starting at each vertex of Q, that jointly cover every arc exactly once
and satisfy three degree conditions:

  (1) each Q-vertex v has out-degree 1 and in-degree d_H(v) - d_Q(v) - 1,
  (2) each inner path vertex x has out-degree 1 and in-degree d_H(x) - 1,
  (3) each path end x has in-degree strictly below d_H(x).

Degrees here count arcs only; an oriented loop may appear solely as the
final arc of a path and adds 1 to both the out- and in-degree of its
vertex.  Out-degree is capped at 1 globally.  The existence of a good
subgraph certifies that the 2-subdivision graph of H is not minimal; the
reduction below turns a certificate into an explicit proper spanning
subgraph with a verifying DP-pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .domination import DpPair, is_dp_pair
from .graph import Multigraph
from .subdivision import build_s2


@dataclass
class GoodSubgraphCertificate:
    """Witness of non-minimality of the 2-subdivision of the host."""

    q_vertices: frozenset[int]
    q_edges: frozenset[int]
    e_set: frozenset[int]
    arcs: dict[int, tuple[int, int]]  # edge id -> (tail, head)
    paths: dict[int, tuple[int, ...]]  # Q-vertex -> arc ids in order


@dataclass
class ReductionPlan:
    """Edges to remove from the 2-subdivision plus the DP-pair of the
    reduced graph (matching ids refer to the reduced graph)."""

    removed_edges: frozenset[int]
    d_prime: frozenset[int]
    p_prime: frozenset[int]
    matching: tuple[int, ...]


def edge_boundary(h: Multigraph, q_edges: Iterable[int]) -> frozenset[int]:
    """E_Q^-: edges outside Q incident with at least one vertex of Q."""
    qe = frozenset(q_edges)
    qv = set()
    for eid in qe:
        e = h.edges[eid]
        qv.add(e.u)
        qv.add(e.v)
    return frozenset(
        e.id for e in h.edges if e.id not in qe and (e.u in qv or e.v in qv)
    )


def _q_degree(h: Multigraph, q_edges: frozenset[int], v: int) -> int:
    d = 0
    for eid in q_edges:
        e = h.edges[eid]
        if e.is_loop():
            d += 2 if e.u == v else 0
        else:
            d += (e.u == v) + (e.v == v)
    return d


def _path_vertex_seq(
    h: Multigraph, cert: GoodSubgraphCertificate, v: int
) -> tuple[list[int], int, str | None]:
    """(inner-candidate sequence, end vertex) of P_v, or a violation.

    No vertex may repeat, with two exceptions at the final arc: a loop
    ends the path where it stands, and the head may close the walk back
    onto the start vertex v (this happens around parallel edges; the
    start then counts as the end, not as an inner vertex).
    """
    arcs = cert.paths[v]
    if not arcs:
        return [], v, f"path at {v} is empty"
    visited = [v]
    end = None
    for k, eid in enumerate(arcs):
        if eid not in cert.arcs:
            return [], v, f"path at {v} uses edge {eid} without an orientation"
        t, head = cert.arcs[eid]
        if t != visited[-1]:
            return [], v, f"path at {v}: arc {eid} does not chain head-to-tail"
        last = k == len(arcs) - 1
        if t == head:
            if not last:
                return [], v, f"path at {v}: loop arc {eid} is not the final arc"
            end = t
        elif head == v and last:
            end = v
        else:
            if head in visited:
                return [], v, f"path at {v} repeats vertex {head}"
            visited.append(head)
            if last:
                end = head
    return visited, end, None


def verify_good_certificate(
    h: Multigraph, cert: GoodSubgraphCertificate
) -> tuple[bool, str | None]:
    """Check every certificate invariant; name the first violated clause."""
    for v in cert.q_vertices:
        if not (0 <= v < h.n):
            raise ValueError(f"malformed vertex id {v}")
    for eid in cert.q_edges | cert.e_set:
        if not (0 <= eid < h.m):
            raise ValueError(f"malformed edge id {eid}")

    if not cert.q_vertices:
        return False, "Q is empty"
    endpoints = set()
    for eid in cert.q_edges:
        e = h.edges[eid]
        endpoints.add(e.u)
        endpoints.add(e.v)
        if e.u not in cert.q_vertices or e.v not in cert.q_vertices:
            return False, f"Q-edge {eid} leaves the Q vertex set"
    if endpoints != set(cert.q_vertices):
        return False, "Q has an isolated vertex"

    if cert.q_edges & cert.e_set:
        return False, "E intersects the Q edges"
    if not edge_boundary(h, cert.q_edges) <= cert.e_set:
        return False, "E misses part of the Q boundary"
    if set(cert.arcs) != set(cert.e_set):
        return False, "arcs and E disagree"
    for eid, (t, head) in cert.arcs.items():
        e = h.edges[eid]
        if tuple(sorted((t, head))) != e.key():
            return False, f"arc {eid} does not orient its own edge"

    if set(cert.paths) != set(cert.q_vertices):
        return False, "paths are not indexed by the Q vertices"

    ends: list[int] = []
    inners: set[int] = set()
    used: list[int] = []
    for v in sorted(cert.q_vertices):
        visited, end, err = _path_vertex_seq(h, cert, v)
        if err:
            return False, err
        used.extend(cert.paths[v])
        ends.append(end)
        inners.update(x for x in visited[1:] if x != end)
    if len(used) != len(set(used)):
        return False, "paths are not arc-disjoint"
    if set(used) != set(cert.e_set):
        return False, "paths do not cover the arcs exactly"

    d_out = [0] * h.n
    d_in = [0] * h.n
    for t, head in cert.arcs.values():
        d_out[t] += 1
        d_in[head] += 1

    for x in range(h.n):
        if d_out[x] > 1:
            return False, f"vertex {x} has out-degree above 1"
    for v in sorted(cert.q_vertices):
        if d_out[v] != 1:
            return False, f"condition (1): out-degree at Q-vertex {v}"
        if d_in[v] != h.degree(v) - _q_degree(h, cert.q_edges, v) - 1:
            return False, f"condition (1): in-degree at Q-vertex {v}"
    for x in sorted(inners):
        if d_out[x] != 1:
            return False, f"condition (2): out-degree at inner vertex {x}"
        if d_in[x] != h.degree(x) - 1:
            return False, f"condition (2): in-degree at inner vertex {x}"
    for x in ends:
        if not d_in[x] < h.degree(x):
            return False, f"condition (3): in-degree at end vertex {x}"
    return True, None


def _q_component_count(h: Multigraph, q_edges: tuple[int, ...]) -> int:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in q_edges:
        e = h.edges[eid]
        for w in (e.u, e.v):
            parent.setdefault(w, w)
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[ru] = rv
    return len({find(x) for x in parent})


def find_good_subgraph(h: Multigraph) -> GoodSubgraphCertificate | None:
    """Exhaustive search for a good subgraph; returns a verified
    certificate or None.

    Q candidates avoid leaves and supports (they never belong to a good
    subgraph) and are tried smallest first, connected before disconnected;
    paths grow depth-first with arcs in edge-id order, termination
    offered before extension.  Output is deterministic.
    """
    if any(h.degree(v) == 0 for v in range(h.n)):
        raise ValueError("host graph must have no isolated vertex")
    allowed = frozenset(range(h.n)) - h.leaves() - h.supports()
    eligible = [
        e.id for e in h.edges if e.u in allowed and e.v in allowed
    ]
    if not eligible:
        return None

    subsets: list[tuple[int, int, tuple[int, ...]]] = []
    for size in range(1, len(eligible) + 1):
        for combo in combinations(eligible, size):
            subsets.append((size, _q_component_count(h, combo), combo))
    subsets.sort()

    for _, _, combo in subsets:
        q_edges = frozenset(combo)
        q_vertices = set()
        for eid in combo:
            e = h.edges[eid]
            q_vertices.add(e.u)
            q_vertices.add(e.v)
        # every Q-vertex still needs one outgoing arc: an edge-end budget check
        if any(_q_degree(h, q_edges, v) + 1 > h.degree(v) for v in q_vertices):
            continue
        # arcs have pairwise distinct tails (out-degree is capped at 1), so at
        # most n edges ever get oriented; the Q boundary must fit inside that
        if len(edge_boundary(h, q_edges)) > h.n:
            continue
        cert = _search_paths(h, frozenset(q_vertices), q_edges)
        if cert is not None:
            return cert
    return None


def _search_paths(
    h: Multigraph, q_vertices: frozenset[int], q_edges: frozenset[int]
) -> GoodSubgraphCertificate | None:
    """Grow one oriented path per Q-vertex (ascending) over non-Q edges;
    full certificate verification decides at every complete family."""
    qvs = sorted(q_vertices)
    qdeg = {v: _q_degree(h, q_edges, v) for v in range(h.n)}
    d_out = [0] * h.n
    d_in = [0] * h.n
    oriented: dict[int, tuple[int, int]] = {}
    paths: dict[int, tuple[int, ...]] = {}
    hit: list[GoodSubgraphCertificate] = []

    def ends_left(x: int) -> int:
        return h.degree(x) - qdeg[x] - d_in[x] - d_out[x]

    def finish() -> bool:
        cert = GoodSubgraphCertificate(
            q_vertices=q_vertices,
            q_edges=q_edges,
            e_set=frozenset(oriented),
            arcs=dict(oriented),
            paths=dict(paths),
        )
        ok, _ = verify_good_certificate(h, cert)
        if ok:
            hit.append(cert)
        return ok

    def start_next(i: int) -> bool:
        if i == len(qvs):
            return finish()
        v = qvs[i]
        if d_out[v]:
            return False
        return grow(i, v, [], {v})

    def grow(i: int, pos: int, arcs_acc: list[int], visited: set[int]) -> bool:
        v = qvs[i]
        if arcs_acc:
            paths[v] = tuple(arcs_acc)
            if start_next(i + 1):
                return True
            del paths[v]
            if pos in q_vertices:
                return False  # a path reaching a Q-vertex must stop there
        if d_out[pos]:
            return False
        for eid in h.incident_edges(pos):
            if eid in oriented or eid in q_edges:
                continue
            e = h.edges[eid]
            if e.is_loop():
                # a loop arc is only ever required at a Q-vertex (it lies in
                # the Q boundary there); elsewhere dropping it keeps the
                # certificate valid, so the search skips it
                if pos not in q_vertices or ends_left(pos) < 2:
                    continue
                oriented[eid] = (pos, pos)
                d_out[pos] += 1
                d_in[pos] += 1
                arcs_acc.append(eid)
                paths[v] = tuple(arcs_acc)
                done = start_next(i + 1)
                if not done:
                    del paths[v]
                arcs_acc.pop()
                d_out[pos] -= 1
                d_in[pos] -= 1
                del oriented[eid]
                if done:
                    return True
            else:
                nxt = e.other(pos)
                closing = nxt == v  # walk may close back onto its start
                if (nxt in visited and not closing) or ends_left(pos) < 1 or ends_left(nxt) < 1:
                    continue
                oriented[eid] = (pos, nxt)
                d_out[pos] += 1
                d_in[nxt] += 1
                arcs_acc.append(eid)
                if closing:
                    paths[v] = tuple(arcs_acc)
                    done = start_next(i + 1)
                    if not done:
                        del paths[v]
                else:
                    visited.add(nxt)
                    done = grow(i, nxt, arcs_acc, visited)
                    visited.discard(nxt)
                arcs_acc.pop()
                d_out[pos] -= 1
                d_in[nxt] -= 1
                del oriented[eid]
                if done:
                    return True
        return False

    if start_next(0):
        return hit[0]
    return None


def _normalize_certificate(
    h: Multigraph, cert: GoodSubgraphCertificate
) -> GoodSubgraphCertificate:
    """Drop terminal loop arcs sitting at non-Q vertices.

    Such loops are never in the Q boundary, so the shortened certificate
    is still valid for the same Q, and afterwards every vertex with an
    outgoing arc has all of its non-Q edges oriented, which the reduction
    formulas rely on.
    """
    drop: set[int] = set()
    paths = dict(cert.paths)
    for v, arcs in cert.paths.items():
        last = arcs[-1]
        t, head = cert.arcs[last]
        if t == head and t not in cert.q_vertices:
            drop.add(last)
            paths[v] = arcs[:-1]
    if not drop:
        return cert
    out = GoodSubgraphCertificate(
        q_vertices=cert.q_vertices,
        q_edges=cert.q_edges,
        e_set=cert.e_set - drop,
        arcs={e: a for e, a in cert.arcs.items() if e not in drop},
        paths=paths,
    )
    ok, why = verify_good_certificate(h, out)
    assert ok, f"normalised certificate stopped verifying: {why}"
    return out


def reduce_via_good_subgraph(
    h: Multigraph, alpha: dict[int, int] | None, cert: GoodSubgraphCertificate
) -> ReductionPlan:
    """Materialise the certificate as a reduction of the 2-subdivision:
    remove the middle edge of every Q-edge gadget and the third edge of
    every last-arc gadget, then return the DP-pair of the reduced graph.

    The plan's sets refer to build_s2(h, alpha); the matching uses the
    edge ids of the reduced graph.  Raises if the certificate is invalid.
    """
    ok, why = verify_good_certificate(h, cert)
    if not ok:
        raise ValueError(f"certificate fails verification: {why}")
    cert = _normalize_certificate(h, cert)
    g, lab = build_s2(h, alpha)
    leaves = h.leaves()

    def side_of(eid: int, vertex: int, at_tail: bool) -> int:
        e = h.edges[eid]
        if e.is_loop():
            return 1 if at_tail else 2
        return 1 if vertex == e.u else 2

    removed: set[int] = set()
    for eid in cert.q_edges:
        removed.add(lab.middle_edge[eid])
    for v in sorted(cert.q_vertices):
        last = cert.paths[v][-1]
        t, head = cert.arcs[last]
        head_side = side_of(last, head, at_tail=False)
        removed.add(lab.attach_edges[(last, head_side)][0])

    d_out = [0] * h.n
    for t, head in cert.arcs.values():
        d_out[t] += 1
    h0_vertices = [x for x in range(h.n) if d_out[x] == 0]
    h0_edges = [
        e.id
        for e in h.edges
        if e.id not in cert.e_set
        and e.id not in cert.q_edges
        and d_out[e.u] == 0
        and d_out[e.v] == 0
    ]

    d_prime: set[int] = set()
    p_prime: set[int] = set()
    matching_old: list[int] = []
    for x in h0_vertices:
        if x in leaves:
            d_prime.update(lab.copy_vertices[x])
        else:
            d_prime.add(lab.old_vertex[x])
    for eid, (t, head) in cert.arcs.items():
        tail_side = side_of(eid, t, at_tail=True)
        head_side = 3 - tail_side if not h.edges[eid].is_loop() else 2
        d_prime.add(lab.new_vertex[(eid, head_side)])
        p_prime.add(lab.old_vertex[t])
        p_prime.add(lab.new_vertex[(eid, tail_side)])
        matching_old.append(lab.attach_edges[(eid, tail_side)][0])
    for eid in cert.q_edges:
        d_prime.add(lab.new_vertex[(eid, 1)])
        d_prime.add(lab.new_vertex[(eid, 2)])
    for eid in h0_edges:
        p_prime.add(lab.new_vertex[(eid, 1)])
        p_prime.add(lab.new_vertex[(eid, 2)])
        matching_old.append(lab.middle_edge[eid])

    assert not d_prime & p_prime and len(d_prime) + len(p_prime) == g.n
    reduced, id_map = g.delete_edges(removed)
    matching = tuple(sorted(id_map[eid] for eid in matching_old))
    pair = DpPair(frozenset(d_prime), frozenset(p_prime), matching)
    assert is_dp_pair(reduced, pair)
    return ReductionPlan(
        removed_edges=frozenset(removed),
        d_prime=pair.d,
        p_prime=pair.p,
        matching=matching,
    )


def apply_reduction(g_s2: Multigraph, plan: ReductionPlan) -> Multigraph:
    """The reduced graph the plan's DP-pair lives in."""
    reduced, _ = g_s2.delete_edges(plan.removed_edges)
    return reduced


# -- trees and forests ---------------------------------------------------------


def _is_forest(h: Multigraph) -> bool:
    return h.is_simple() and h.m == h.n - len(h.connected_components())


def tree_find_good_subtree(h: Multigraph) -> frozenset[int] | None:
    """On a tree: a connected vertex set S, |S| >= 2, where every member
    has exactly one neighbour outside S and that neighbour has degree at
    least 2.  Equivalent to hosting a good subgraph (the induced subtree);
    agrees with find_good_subgraph on trees by construction and by test.
    """
    if not (_is_forest(h) and h.is_connected() and h.n >= 1):
        raise ValueError("input is not a tree")
    allowed = sorted(frozenset(range(h.n)) - h.leaves() - h.supports())
    candidates = []
    for size in range(2, len(allowed) + 1):
        for combo in combinations(allowed, size):
            candidates.append(combo)
    for combo in candidates:
        s = frozenset(combo)
        if not _connected_in(h, s):
            continue
        good = True
        for x in s:
            outside = h.plain_neighbors(x) - s
            if len(outside) != 1 or h.degree(next(iter(outside))) < 2:
                good = False
                break
        if good:
            return s
    return None


def _connected_in(h: Multigraph, s: frozenset[int]) -> bool:
    start = min(s)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for u in h.plain_neighbors(x):
            if u in s and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == s


def forest_good_decomposition_check(
    h: Multigraph, cert: GoodSubgraphCertificate
) -> int:
    """Index (components of Q ordered by smallest vertex) of a component
    of Q that is a good subgraph of h on its own.  Existence is
    guaranteed for forests; absence is an internal error."""
    if not _is_forest(h):
        raise ValueError("host is not a forest")
    ok, why = verify_good_certificate(h, cert)
    if not ok:
        raise ValueError(f"Q is not a good subgraph: {why}")

    comp_of: dict[int, int] = {}
    comps: list[set[int]] = []
    for v in sorted(cert.q_vertices):
        if v in comp_of:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for eid in cert.q_edges:
                e = h.edges[eid]
                if e.u == x and e.v not in comp and e.v in cert.q_vertices:
                    comp.add(e.v)
                    stack.append(e.v)
                elif e.v == x and e.u not in comp and e.u in cert.q_vertices:
                    comp.add(e.u)
                    stack.append(e.u)
        for x in comp:
            comp_of[x] = len(comps)
        comps.append(comp)

    for idx, comp in enumerate(comps):
        sub_vertices = frozenset(comp)
        sub_edges = frozenset(
            eid
            for eid in cert.q_edges
            if h.edges[eid].u in comp and h.edges[eid].v in comp
        )
        sub_paths = {v: cert.paths[v] for v in sorted(sub_vertices)}
        sub_arc_ids = frozenset(a for arcs in sub_paths.values() for a in arcs)
        sub = GoodSubgraphCertificate(
            q_vertices=sub_vertices,
            q_edges=sub_edges,
            e_set=sub_arc_ids,
            arcs={a: cert.arcs[a] for a in sub_arc_ids},
            paths=sub_paths,
        )
        ok, _ = verify_good_certificate(h, sub)
        if ok:
            return idx
    raise AssertionError("no component of a good forest re-verified alone")
