"""Shared test helpers: independent brute-force oracles and gadget graphs.

The brute oracles deliberately re-derive everything from definitions
(pair scans, exhaustive DFS) so they share no logic with the package
internals they check.
"""

from itertools import combinations

import pytest

import strongcolor as sc


def brute_conflicts(b: sc.BipartiteGraph, e: int) -> set:
    """Conflict set of e straight from the definition, by scanning all pairs."""
    g = b.graph
    out = set()
    eu, ev = g.endpoints(e)
    for f in range(g.edge_count):
        if f == e:
            continue
        fu, fv = g.endpoints(f)
        if {eu, ev} & {fu, fv}:
            out.add(f)
            continue
        for _, (gu, gv) in enumerate(g.edges):
            if ({gu, gv} & {eu, ev}) and ({gu, gv} & {fu, fv}):
                out.add(f)
                break
    return out


def brute_girth(g: sc.Multigraph):
    """Length of a shortest cycle by exhaustive walk enumeration (small graphs)."""
    best = None
    # parallel edges form 2-cycles
    seen_pairs = {}
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        if key in seen_pairs:
            return 2
        seen_pairs[key] = True

    def dfs(start, current, visited, first_edge, length):
        nonlocal best
        if best is not None and length >= best:
            return
        for eid, w in g.adj[current]:
            if eid == first_edge and length == 1:
                continue
            if w == start and length >= 2:
                if best is None or length + 1 < best:
                    best = length + 1
            elif w not in visited and w > start:
                visited.add(w)
                dfs(start, w, visited, first_edge, length + 1)
                visited.remove(w)

    for start in range(g.vertex_count):
        for eid, w in g.adj[start]:
            if w > start:
                dfs(start, w, {w}, eid, 1)
    return best


def assert_valid_strong(b, L, pc, total=True):
    violations = sc.verify_strong(b, L, pc, require_total=total)
    assert violations == [], violations


def c4_gadget():
    """4-cycle u-v-w-x with distinct pendants at v and x; nothing else."""
    pairs = [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (3, 5)]
    return sc.infer_parts(sc.build_multigraph(6, pairs))


def c6_gadget():
    """6-cycle with pendants at its three degree-3 vertices."""
    pairs = [(i, (i + 1) % 6) for i in range(6)] + [(1, 6), (3, 7), (5, 8)]
    return sc.infer_parts(sc.build_multigraph(9, pairs))


def cycle_gadget(n: int):
    """n-cycle with a pendant at every odd position (n even >= 8)."""
    pairs = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for i in range(1, n, 2):
        pairs.append((i, nxt))
        nxt += 1
    return sc.infer_parts(sc.build_multigraph(nxt, pairs))


def five_path_graph():
    """The seed configuration as an actual graph (vertex ids 0..6)."""
    pairs = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6)]
    return sc.infer_parts(sc.build_multigraph(7, pairs))


def odd_path_graph(n: int):
    """The pendant-path configuration as an actual graph (standalone ids)."""
    pairs = [(i, i + 1) for i in range(n - 1)]
    nxt = n
    for j in range(2, n, 2):
        pairs.append((j - 1, nxt))
        nxt += 1
    return sc.infer_parts(sc.build_multigraph(nxt, pairs))


def rand_b23(na: int, nb: int, seed: int) -> sc.BipartiteGraph:
    """random_23_bipartite with nb raised to meet the stub-capacity bound."""
    return sc.random_23_bipartite(na, max(nb, (2 * na + 2) // 3), seed)


@pytest.fixture
def k23():
    return sc.named("k23")
