"""The strong-adjacency (conflict) relation on edges and incidences.

Two edges conflict when they share an endpoint or when some third edge
joins an endpoint of one to an endpoint of the other; a strong edge-coloring
must give conflicting edges distinct colors.  Incidence adjacency is the
analogous relation on (vertex, edge) pairs.

Verifiers return violations as data rather than raising, so they double as
test assertions and as the CLI ``verify`` command.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Mapping, Optional

from .errors import BadEdgeId
from .graph import BipartiteGraph, Incidence, Multigraph


@dataclass(frozen=True)
class ListAssignment:
    """Per-edge color lists L(e); colors are non-negative integers."""

    lists: Dict[int, FrozenSet[int]]

    @staticmethod
    def from_mapping(mapping: Mapping[int, Iterable[int]]) -> "ListAssignment":
        return ListAssignment({int(e): frozenset(cs) for e, cs in mapping.items()})

    @staticmethod
    def uniform(edge_ids: Iterable[int], k: int) -> "ListAssignment":
        """Identical lists {1..k} on the given edges."""
        palette = frozenset(range(1, k + 1))
        return ListAssignment({e: palette for e in edge_ids})

    def __getitem__(self, e: int) -> FrozenSet[int]:
        return self.lists[e]

    def get(self, e: int) -> FrozenSet[int]:
        return self.lists.get(e, frozenset())

    def size(self, e: int) -> int:
        return len(self.lists.get(e, ()))


class PartialColoring:
    """Mutable edge-id -> color map; single writer, read-only sharing is safe."""

    __slots__ = ("assigned",)

    def __init__(self, assigned: Optional[Mapping[int, int]] = None):
        self.assigned: Dict[int, int] = dict(assigned or {})

    def get(self, e: int) -> Optional[int]:
        return self.assigned.get(e)

    def set(self, e: int, color: int) -> None:
        self.assigned[e] = color

    def copy(self) -> "PartialColoring":
        return PartialColoring(self.assigned)

    def __len__(self) -> int:
        return len(self.assigned)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialColoring) and self.assigned == other.assigned


@dataclass(frozen=True)
class ConflictGraph:
    """Precomputed conflict sets, sorted per edge for deterministic scans."""

    conflicts: tuple

    def __getitem__(self, e: int) -> tuple:
        return self.conflicts[e]

    def __len__(self) -> int:
        return len(self.conflicts)


def conflict_edges(b: BipartiteGraph, e: int) -> set:
    """All edges f != e sharing an endpoint with e or joined to e by a third edge."""
    g = b.graph
    u, v = g.endpoints(e)  # raises BadEdgeId
    out = set()
    for endpoint in (u, v):
        for eid, w in g.adj[endpoint]:
            if eid != e:
                out.add(eid)
            # edges at the far end of any edge leaving e are joined to e by it
            for fid, _ in g.adj[w]:
                if fid != e and fid != eid:
                    out.add(fid)
    out.discard(e)
    return out


def build_conflict_graph(b: BipartiteGraph) -> ConflictGraph:
    sets = [conflict_edges(b, e) for e in range(b.graph.edge_count)]
    for e, cs in enumerate(sets):
        for f in cs:
            if e not in sets[f]:
                raise AssertionError(f"conflict relation not symmetric on ({e}, {f})")
    return ConflictGraph(tuple(tuple(sorted(cs)) for cs in sets))


def available(
    e: int, L: ListAssignment, pc: PartialColoring, cg: ConflictGraph
) -> set:
    """L(e) minus the colors of assigned conflicting edges."""
    used = {pc.assigned[f] for f in cg[e] if f in pc.assigned}
    return set(L[e]) - used


@dataclass(frozen=True)
class Violation:
    """One verifier finding; ``where`` names the offending edge pair, edge, or incidence pair."""

    kind: str  # "conflict" | "list" | "uncolored"
    where: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} {self.where}: {self.detail}"


def verify_strong(
    b: BipartiteGraph,
    L: Optional[ListAssignment],
    pc: PartialColoring,
    require_total: bool = False,
    cg: Optional[ConflictGraph] = None,
) -> list:
    """Empty list iff pc is a valid (and, if required, total) strong list coloring."""
    cg = cg or build_conflict_graph(b)
    out = []
    for e, c in sorted(pc.assigned.items()):
        if e < 0 or e >= b.graph.edge_count:
            out.append(Violation("list", (e,), f"unknown edge id {e}"))
            continue
        if L is not None and c not in L.get(e):
            out.append(Violation("list", (e,), f"color {c} not in list of edge {e}"))
        for f in cg[e]:
            if f > e and pc.assigned.get(f) == c:
                out.append(
                    Violation("conflict", (e, f), f"edges {e} and {f} share color {c}")
                )
    if require_total:
        for e in range(b.graph.edge_count):
            if e not in pc.assigned:
                out.append(Violation("uncolored", (e,), f"edge {e} has no color"))
    return out


def incidence_adjacent(g: Multigraph, i1: Incidence, i2: Incidence) -> bool:
    """Adjacency of two distinct incidences: same vertex, same edge, or the
    edge joining their vertices is one of the two edges."""
    if i1 == i2:
        return False
    v, e = i1
    w, f = i2
    if v == w or e == f:
        return True
    return set(g.endpoints(e)) == {v, w} or set(g.endpoints(f)) == {v, w}


def _incidence_neighbors(g: Multigraph, inc: Incidence):
    """All incidences adjacent to ``inc`` (constant work per degree)."""
    v, e = inc
    u = g.other_endpoint(e, v)
    out = set()
    for fid, x in g.adj[v]:
        if fid != e:
            out.add(Incidence(v, fid))
            out.add(Incidence(x, fid))  # the joining edge is fid itself
    for fid, _ in g.adj[u]:
        out.add(Incidence(u, fid))
    out.discard(inc)
    return out


def verify_incidence(
    g: Multigraph,
    coloring: Mapping[Incidence, int],
    L: Optional[Mapping[Incidence, Iterable[int]]] = None,
    require_total: bool = False,
) -> list:
    """Empty list iff adjacent colored incidences always differ (and lists are respected)."""
    out = []
    for inc in sorted(coloring):
        c = coloring[inc]
        v, e = inc
        if not 0 <= e < g.edge_count or v not in g.endpoints(e):
            out.append(Violation("list", (inc,), f"{inc} is not an incidence of the graph"))
            continue
        if L is not None and c not in set(L[inc]):
            out.append(Violation("list", (inc,), f"color {c} not in list of {inc}"))
        for nb in sorted(_incidence_neighbors(g, inc)):
            if nb > inc and coloring.get(nb) == c:
                out.append(
                    Violation("conflict", (inc, nb), f"incidences {inc} and {nb} share color {c}")
                )
    if require_total:
        for inc in g.incidences():
            if inc not in coloring:
                out.append(Violation("uncolored", (inc,), f"{inc} has no color"))
    return out
