"""Graph representations, structural queries, and the subdivision transform.

The two central types are :class:`Multigraph` (loopless, parallel edges
allowed) and :class:`BipartiteGraph` (simple, two-part labeled).  Edge ids
are dense integers ``0..m-1`` assigned in input order, so colorings and
color lists can be stored in flat maps.

All types are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import (
    BadEdgeId,
    BadVertexId,
    InternalInvariant,
    LoopEdge,
    NotBipartite,
    NotTwoThree,
)

PART_A = "A"
PART_B = "B"


class Incidence(NamedTuple):
    """A (vertex, edge) pair where the vertex is an endpoint of the edge."""

    vertex: int
    edge: int


class Multigraph:
    """Loopless undirected multigraph with dense integer vertex and edge ids."""

    __slots__ = ("vertex_count", "edges", "adj")

    def __init__(self, vertex_count: int, edges: tuple, adj: tuple):
        self.vertex_count = vertex_count
        self.edges = edges  # edge id -> (u, v)
        self.adj = adj  # vertex -> tuple of (edge id, neighbor)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple:
        if not 0 <= e < len(self.edges):
            raise BadEdgeId(f"edge {e} not in graph with {len(self.edges)} edges")
        return self.edges[e]

    def other_endpoint(self, e: int, v: int) -> int:
        u, w = self.endpoints(e)
        return w if v == u else u

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def incidences(self) -> Iterator[Incidence]:
        for e, (u, v) in enumerate(self.edges):
            yield Incidence(u, e)
            yield Incidence(v, e)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.vertex_count}, m={self.edge_count})"


def build_multigraph(vertex_count: int, endpoint_pairs: Sequence) -> Multigraph:
    """Validate and build a multigraph; edge ids follow input order."""
    edges = []
    adj: list = [[] for _ in range(vertex_count)]
    for eid, (u, v) in enumerate(endpoint_pairs):
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise BadVertexId(f"edge {eid} endpoints ({u}, {v}) out of range 0..{vertex_count - 1}")
        if u == v:
            raise LoopEdge(f"edge {eid} is a loop at vertex {u}")
        edges.append((u, v))
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    return Multigraph(vertex_count, tuple(edges), tuple(tuple(a) for a in adj))


class BipartiteGraph:
    """A simple multigraph together with an A/B vertex labeling.

    Construction checks that every edge crosses the parts and that the graph
    is simple; parallel edges are rejected because the strong-conflict
    counting this package relies on is unsound in their presence.
    Degree caps are checked separately by :meth:`validate_23`.
    """

    __slots__ = ("graph", "part_of")

    def __init__(self, graph: Multigraph, part_of: Sequence[str]):
        if len(part_of) != graph.vertex_count:
            raise NotBipartite("part labeling does not cover the vertex set")
        part_of = tuple(part_of)
        for p in part_of:
            if p not in (PART_A, PART_B):
                raise NotBipartite(f"unknown part label {p!r}")
        seen = set()
        for eid, (u, v) in enumerate(graph.edges):
            if part_of[u] == part_of[v]:
                raise NotBipartite(f"edge {eid} joins two {part_of[u]}-vertices")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise NotTwoThree(f"parallel edge {eid} between {u} and {v}")
            seen.add(key)
        self.graph = graph
        self.part_of = part_of

    def part(self, v: int) -> str:
        return self.part_of[v]

    def a_vertices(self) -> list:
        return [v for v in range(self.graph.vertex_count) if self.part_of[v] == PART_A]

    def b_vertices(self) -> list:
        return [v for v in range(self.graph.vertex_count) if self.part_of[v] == PART_B]

    def validate_23(self) -> "BipartiteGraph":
        """Check the (2,3) degree caps; returns self for chaining."""
        for v in range(self.graph.vertex_count):
            d = self.graph.degree(v)
            cap = 2 if self.part_of[v] == PART_A else 3
            if d > cap:
                raise NotTwoThree(
                    f"vertex {v} in part {self.part_of[v]} has degree {d} > {cap}"
                )
        return self

    def __repr__(self) -> str:
        return (
            f"BipartiteGraph(n={self.graph.vertex_count}, m={self.graph.edge_count}, "
            f"|A|={len(self.a_vertices())}, |B|={len(self.b_vertices())})"
        )


def components(g: Multigraph) -> list:
    """Connected components as sorted vertex lists, in ascending order of minimum id."""
    seen = [False] * g.vertex_count
    out = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for _, w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    frontier.append(w)
        comp.sort()
        out.append(comp)
    return out


@dataclass(frozen=True)
class SubdivisionMap:
    """Result of subdividing every edge once.

    Original vertices keep their ids and land in part B; the midpoint of
    original edge ``e`` is vertex ``n + e`` in part A.  The incidence
    ``(v, e)`` of the original graph corresponds to the new edge joining
    ``v`` and the midpoint of ``e``; that bijection is what transports
    incidence colorings to strong edge-colorings.
    """

    bipartite: BipartiteGraph
    incidence_to_edge: dict
    edge_to_mid: tuple

    def edge_to_incidence(self, new_edge: int) -> Incidence:
        u, v = self.bipartite.graph.endpoints(new_edge)
        n = len(self.edge_to_mid)
        # midpoint ids start at the original vertex count
        orig_n = self.bipartite.graph.vertex_count - n
        orig_vertex = u if u < orig_n else v
        mid = v if u < orig_n else u
        return Incidence(orig_vertex, mid - orig_n)


def subdivide(g: Multigraph) -> SubdivisionMap:
    """Subdivide each edge of ``g`` exactly once.

    The result is simple even when ``g`` has parallel edges (each parallel
    edge gets its own midpoint), has ``|V| + |E|`` vertices and ``2|E|``
    edges, and midpoints all have degree 2.
    """
    n, m = g.vertex_count, g.edge_count
    pairs = []
    incidence_to_edge = {}
    for e, (u, v) in enumerate(g.edges):
        mid = n + e
        incidence_to_edge[Incidence(u, e)] = len(pairs)
        pairs.append((u, mid))
        incidence_to_edge[Incidence(v, e)] = len(pairs)
        pairs.append((v, mid))
    sg = build_multigraph(n + m, pairs)
    part_of = [PART_B] * n + [PART_A] * m
    bip = BipartiteGraph(sg, part_of)
    if sg.vertex_count != n + m or sg.edge_count != 2 * m:
        raise InternalInvariant("subdivision size mismatch")
    for e in range(m):
        if sg.degree(n + e) != 2:
            raise InternalInvariant(f"midpoint of edge {e} has degree {sg.degree(n + e)}")
    return SubdivisionMap(bip, incidence_to_edge, tuple(n + e for e in range(m)))


def infer_parts(g: Multigraph) -> BipartiteGraph:
    """Recover a part labeling with Δ(A) ≤ 2 and Δ(B) ≤ 3.

    Each component is two-colored from its lowest-id vertex; of the two
    labelings the one placing that anchor in B is preferred when both fit
    the degree caps.  Degree-3 vertices are thereby forced into B wherever
    a valid labeling exists.
    """
    n = g.vertex_count
    color = [-1] * n  # 0 = anchor side, 1 = other side
    for comp in components(g):
        anchor = comp[0]
        color[anchor] = 0
        queue = [anchor]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for _, w in g.adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    raise NotBipartite(f"odd cycle through vertices {v} and {w}")

        def fits(anchor_part: str) -> bool:
            for v in comp:
                p = anchor_part if color[v] == 0 else (PART_A if anchor_part == PART_B else PART_B)
                cap = 2 if p == PART_A else 3
                if g.degree(v) > cap:
                    return False
            return True

        if fits(PART_B):
            anchor_part, other_part = PART_B, PART_A
        elif fits(PART_A):
            anchor_part, other_part = PART_A, PART_B
        else:
            raise NotTwoThree(f"component of vertex {anchor} admits no (2,3) labeling")
        for v in comp:
            # encode the final label (2 = B, 3 = A) without clashing with 0/1
            part = anchor_part if color[v] == 0 else other_part
            color[v] = 2 if part == PART_B else 3
    part_of = [PART_B if c == 2 else PART_A for c in color]
    return BipartiteGraph(g, part_of)


@dataclass(frozen=True)
class CycleDescriptor:
    """A cycle plus the pendant map of its degree-3 vertices.

    ``vertices`` is normalized so the first vertex is the lowest-id
    A-vertex on the cycle and A/B alternate (A at even 0-based positions).
    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i+1) % n]``.
    ``pendant`` maps each degree-3 cycle vertex to ``(third neighbor, edge id)``.
    """

    vertices: tuple
    edges: tuple
    pendant: dict

    def __len__(self) -> int:
        return len(self.vertices)


def _cycle_through(start, adj, alive, cap):
    """Shortest cycle through ``start`` as (length, vertex list), or (None, None).

    BFS records a candidate only on non-tree edges pointing one level down,
    so candidates seen while popping level d close cycles of length exactly
    2d and the first one found is minimal through ``start``.  Levels beyond
    ``cap`` cannot improve on the caller's current best and are skipped.
    If the two tree paths of the first candidate overlap, the closed walk
    strictly contains a shorter cycle, which some other start will find, so
    the candidate is dropped.
    """
    dist = {start: 0}
    parent_vertex = {}
    parent_edge = {start: -1}
    queue = [start]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        du = dist[u]
        if du > cap:
            return None, None
        for eid, w in adj[u]:
            if not alive[eid]:
                continue
            dw = dist.get(w)
            if dw is None:
                dist[w] = du + 1
                parent_edge[w] = eid
                parent_vertex[w] = u
                queue.append(w)
            elif dw == du - 1 and eid != parent_edge[u]:
                pu = [u]
                while dist[pu[-1]] > 0:
                    pu.append(parent_vertex[pu[-1]])
                pu.reverse()  # start .. u
                pw = [w]
                while dist[pw[-1]] > 0:
                    pw.append(parent_vertex[pw[-1]])
                pw.reverse()  # start .. w
                if set(pu[1:]) & set(pw[1:]):
                    return None, None
                return du + dw + 1, pu + pw[:0:-1]
    return None, None


def _residual_shortest_cycle(b: BipartiteGraph, alive, deg, vertex_order):
    """Shortest alive cycle as (length, vertices), or None.

    Starts are scanned in the given ascending order; the first cycle
    achieving the minimum length wins.
    """
    g = b.graph
    best = None
    for s in vertex_order:
        if deg[s] < 2:
            continue
        cap = (best[0] - 2) // 2 if best is not None else g.vertex_count
        length, cyc = _cycle_through(s, g.adj, alive, cap)
        if length is not None and (best is None or length < best[0]):
            best = (length, tuple(cyc))
    return best


def _descriptor_from_cycle(b: BipartiteGraph, cyc, alive) -> CycleDescriptor:
    g = b.graph
    n = len(cyc)
    if n % 2 != 0:
        raise InternalInvariant(f"odd cycle of length {n} in a bipartite graph")
    # normalize rotation: lowest-id A-vertex first, lower-id neighbor second
    a_positions = [i for i, v in enumerate(cyc) if b.part_of[v] == PART_A]
    if not a_positions:
        raise InternalInvariant("cycle without A-vertices")
    start_pos = min(a_positions, key=lambda i: cyc[i])
    before = cyc[(start_pos - 1) % n]
    after = cyc[(start_pos + 1) % n]
    ordered = [cyc[(start_pos + k) % n] for k in range(n)]
    if before < after:
        ordered = [ordered[0]] + ordered[:0:-1]
    edge_of = {}
    for v in ordered:
        for eid, w in g.adj[v]:
            if alive[eid]:
                edge_of[(v, w)] = eid
    cyc_edges = []
    cyc_set = set(ordered)
    pos = {v: i for i, v in enumerate(ordered)}
    for i, v in enumerate(ordered):
        w = ordered[(i + 1) % n]
        if (v, w) not in edge_of:
            raise InternalInvariant(f"cycle vertices {v},{w} not adjacent")
        cyc_edges.append(edge_of[(v, w)])
    pendant = {}
    for v in ordered:
        if b.part_of[v] != PART_B:
            continue
        i = pos[v]
        on_cycle = {cyc_edges[i], cyc_edges[i - 1]}
        third = [(eid, w) for eid, w in g.adj[v] if alive[eid] and eid not in on_cycle]
        if len(third) > 1:
            raise InternalInvariant(f"cycle vertex {v} has {len(third) + 2} alive edges")
        if third:
            eid, w = third[0]
            if w in cyc_set:
                raise InternalInvariant(f"pendant neighbor {w} of {v} lies on the cycle")
            pendant[v] = (w, eid)
    if n >= 6:
        seen = {}
        for v, (w, _) in pendant.items():
            if w in seen:
                raise InternalInvariant(
                    f"pendant neighbors of {seen[w]} and {v} coincide on a {n}-cycle"
                )
            seen[w] = v
    for i, v in enumerate(ordered):
        expected = PART_A if i % 2 == 0 else PART_B
        if b.part_of[v] != expected:
            raise InternalInvariant("cycle does not alternate between parts")
    return CycleDescriptor(tuple(ordered), tuple(cyc_edges), pendant)


def shortest_cycle(b: BipartiteGraph) -> Optional[CycleDescriptor]:
    """Shortest cycle of a validated (2,3)-bipartite graph, or None for forests."""
    b.validate_23()
    g = b.graph
    alive = [True] * g.edge_count
    deg = [g.degree(v) for v in range(g.vertex_count)]
    hit = _residual_shortest_cycle(b, alive, deg, range(g.vertex_count))
    if hit is None:
        return None
    _, cyc = hit
    return _descriptor_from_cycle(b, list(cyc), alive)
