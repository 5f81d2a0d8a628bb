"""Constructive strong list edge-coloring of (2,3)-bipartite graphs.

The solver peels away edges at low-degree vertices, carves shortest cycles
out of the (2,3)-biregular residue, and colors everything in reverse
(LIFO) order: each peeled edge greedily, each carved cycle by a dedicated
extension procedure driven by the current available lists.

Extension entry sizes are guaranteed by degree counting:

* a cycle edge of a carved shortest cycle sees at most one colored
  conflict (through its single pendant's far end, an A-vertex of degree
  at most 2), so at least 5 of its 6 list colors survive;
* a pendant edge sees at most three (one at its far endpoint plus two
  beyond), so at least 3 survive;
* an edge peeled at an A-endpoint of degree <= 1 has at most 4 conflicts
  in the residue at peel time, one peeled at a B-endpoint of degree <= 2
  at most 5 - both below the list size 6, so the greedy unwind never runs
  out of colors.

At entry to every extension and path procedure the available lists are
truncated (smallest colors kept) to the exact sizes the counting steps
assume; a coloring from truncated lists is valid for the originals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from heapq import heapify, heappop, heappush
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .conflict import (
    ConflictGraph,
    ListAssignment,
    PartialColoring,
    available,
    build_conflict_graph,
    verify_incidence,
    verify_strong,
)
from .errors import DegreeTooHigh, InternalInvariant, ListTooSmall
from .graph import (
    PART_A,
    BipartiteGraph,
    CycleDescriptor,
    Incidence,
    Multigraph,
    _descriptor_from_cycle,
    _residual_shortest_cycle,
    components,
    subdivide,
)
from .matching import SdrProblem, rainbow_sdr

logger = logging.getLogger("strongcolor")

_FALLBACK_NODE_CAP = 10_000_000


@dataclass
class SolveStats:
    """Counters describing which parts of the case machinery a solve used."""

    peeled_edges: int = 0
    c4_extensions: int = 0
    c6_extensions: int = 0
    long_cycle_extensions: int = 0
    k23_base_cases: int = 0
    fallback_uses: int = 0
    sdr_calls: int = 0

    def merge(self, other: "SolveStats") -> None:
        for name in self.__dataclass_fields__:
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def as_dict(self) -> Dict[str, int]:
        return {name: getattr(self, name) for name in self.__dataclass_fields__}


# ---------------------------------------------------------------------------
# peeling


def _qualifies(b: BipartiteGraph, deg: list, v: int) -> bool:
    if deg[v] < 1:
        return False
    cap = 1 if b.part_of[v] == PART_A else 2
    return deg[v] <= cap


def _remove_edge(b: BipartiteGraph, alive: list, deg: list, heap: list, e: int) -> None:
    alive[e] = False
    for v in b.graph.endpoints(e):
        deg[v] -= 1
        if _qualifies(b, deg, v):
            heappush(heap, v)


@dataclass
class PeelState:
    """Residual subgraph plus the deferred-edge stack for peeling."""

    alive: list
    deg: list
    heap: list
    stack: list

    @staticmethod
    def for_graph(b: BipartiteGraph) -> "PeelState":
        g = b.graph
        alive = [True] * g.edge_count
        deg = [g.degree(v) for v in range(g.vertex_count)]
        heap = [v for v in range(g.vertex_count) if _qualifies(b, deg, v)]
        heapify(heap)
        return PeelState(alive, deg, heap, [])


def peel_step(b: BipartiteGraph, state: PeelState) -> Optional[int]:
    """Remove and return one deferrable edge, or None at the (2,3)-regular core.

    An edge is deferrable when its A-endpoint has residual degree <= 1 or
    its B-endpoint degree <= 2; the lowest qualifying vertex and then the
    lowest incident edge id win.
    """
    while state.heap:
        v = heappop(state.heap)
        if not _qualifies(b, state.deg, v):
            continue
        e = min(eid for eid, _ in b.graph.adj[v] if state.alive[eid])
        _remove_edge(b, state.alive, state.deg, state.heap, e)
        state.stack.append(e)
        return e
    return None


def greedy_unwind(
    stack: list,
    b: BipartiteGraph,
    L: ListAssignment,
    pc: PartialColoring,
    cg: Optional[ConflictGraph] = None,
    stats: Optional[SolveStats] = None,
) -> PartialColoring:
    """Pop deferred edges LIFO, assigning each the smallest available color.

    Sound because every deferred edge had at most 5 conflicts in the
    residual subgraph it was peeled from, and only those edges are colored
    when it is popped.
    """
    cg = cg or build_conflict_graph(b)
    while stack:
        e = stack.pop()
        avail = available(e, L, pc, cg)
        if not avail:
            raise InternalInvariant(f"peeled edge {e} has no available color at unwind")
        pc.set(e, min(avail))
    return pc


# ---------------------------------------------------------------------------
# role-keyed bookkeeping for the abstract path configurations


class _RoleState:
    """Available lists keyed by role with conflict propagation and an
    assignment log.  Roles disappear from ``avail`` once assigned."""

    def __init__(self, lists: Mapping, conflicts: Mapping):
        self.avail = {r: set(cs) for r, cs in lists.items()}
        self.conflicts = conflicts
        self.order: list = []

    def truncate(self, role, k: int) -> None:
        cur = self.avail[role]
        if len(cur) < k:
            raise InternalInvariant(f"role {role} has {len(cur)} colors, needs {k}")
        self.avail[role] = set(sorted(cur)[:k])

    def assign(self, role, color: int) -> None:
        if role not in self.avail or color not in self.avail[role]:
            raise InternalInvariant(f"color {color} unavailable for role {role}")
        del self.avail[role]
        for f in self.conflicts[role]:
            if f in self.avail:
                self.avail[f].discard(color)
        self.order.append((role, color))

    def assign_min(self, role) -> None:
        cur = self.avail.get(role)
        if not cur:
            raise InternalInvariant(f"role {role} ran out of colors in a greedy step")
        self.assign(role, min(cur))

    def common(self, r1, r2) -> set:
        return self.avail[r1] & self.avail[r2]

    def sdr(self, roles: Sequence, stats: Optional[SolveStats]) -> None:
        if stats is not None:
            stats.sdr_calls += 1
        items = tuple(range(len(roles)))
        lists = {i: frozenset(self.avail[r]) for i, r in enumerate(roles)}
        chosen = rainbow_sdr(SdrProblem(items, lists))
        if chosen is None:
            raise InternalInvariant(f"rainbow choice missing for roles {list(roles)}")
        for i, r in enumerate(roles):
            self.assign(r, chosen[i])


# ---------------------------------------------------------------------------
# five-vertex path with two pendants: the precoloring seed


_FIVE_ROLES = ("uv", "vw", "wx", "xy", "vz", "xt")
_FIVE_SIZES = {"uv": 5, "vw": 5, "wx": 5, "xy": 5, "vz": 3, "xt": 3}
_FIVE_CONFLICTS = {
    "uv": ("vw", "wx", "vz"),
    "vw": ("uv", "wx", "xy", "vz", "xt"),
    "wx": ("uv", "vw", "xy", "vz", "xt"),
    "xy": ("vw", "wx", "xt"),
    "vz": ("uv", "vw", "wx"),
    "xt": ("vw", "wx", "xy"),
}


@dataclass(frozen=True)
class FivePathConfig:
    """Path u-v-w-x-y plus pendants v-z and x-t, with color lists.

    ``edge_ids`` maps each role ("uv", "vw", "wx", "xy", "vz", "xt") to the
    real edge id; ``lists`` maps edge ids to their current available colors
    (sizes at least 5,5,5,5,3,3 in role order).
    """

    vertices: Tuple[int, ...]  # u, v, w, x, y, z, t
    edge_ids: Mapping[str, int]
    lists: Mapping[int, FrozenSet[int]]

    def __post_init__(self):
        if len(set(self.vertices)) != 7:
            raise ValueError("the seven configuration vertices must be distinct")
        for role in _FIVE_ROLES:
            if role not in self.edge_ids:
                raise ValueError(f"missing edge role {role}")
            if len(self.lists[self.edge_ids[role]]) < _FIVE_SIZES[role]:
                raise ListTooSmall(
                    f"role {role} needs {_FIVE_SIZES[role]} colors, "
                    f"got {len(self.lists[self.edge_ids[role]])}"
                )

    @staticmethod
    def standalone(lists_by_role: Mapping[str, Iterable[int]]) -> "FivePathConfig":
        """Abstract instance on vertices 0..6 and edge ids 0..5, for direct tests."""
        edge_ids = {role: i for i, role in enumerate(_FIVE_ROLES)}
        lists = {edge_ids[r]: frozenset(lists_by_role[r]) for r in _FIVE_ROLES}
        return FivePathConfig(tuple(range(7)), edge_ids, lists)


def precolor_five_path(
    cfg: FivePathConfig, stats: Optional[SolveStats] = None
) -> List[Tuple[int, int]]:
    """Color uv, vz, xy, xt so the middle edges keep |L(vw)| >= 3, |L(wx)| >= 2.

    Returns the assignments in the order they must be applied.
    """
    state = _RoleState(
        {r: cfg.lists[cfg.edge_ids[r]] for r in _FIVE_ROLES}, _FIVE_CONFLICTS
    )
    for role, k in _FIVE_SIZES.items():
        state.truncate(role, k)

    pend_common = state.common("vz", "xt")
    if pend_common:
        # same color on both pendants costs each middle edge one color
        alpha = min(pend_common)
        state.assign("vz", alpha)
        state.assign("xt", alpha)
        end_common = state.common("uv", "xy")
        if end_common:
            beta = min(end_common)
            state.assign("uv", beta)
            state.assign("xy", beta)
        else:
            # disjoint 4-lists: their union beats |L(vw)|, so one end edge
            # can be colored without touching vw at all
            union = sorted((state.avail["uv"] | state.avail["xy"]) - state.avail["vw"])
            if not union:
                raise InternalInvariant("pigeonhole failed on the end edges")
            gamma = union[0]
            e3 = "uv" if gamma in state.avail["uv"] else "xy"
            e4 = "xy" if e3 == "uv" else "uv"
            state.assign(e3, gamma)
            state.assign_min(e4)
    else:
        # pendant lists disjoint: their union has 6 colors, one avoids vw
        union = sorted((state.avail["vz"] | state.avail["xt"]) - state.avail["vw"])
        if not union:
            raise InternalInvariant("pigeonhole failed on the pendant edges")
        alpha = union[0]
        e1 = "vz" if alpha in state.avail["vz"] else "xt"
        e2 = "xt" if e1 == "vz" else "vz"
        state.assign(e1, alpha)
        end_common = state.common("uv", "xy")
        if end_common:
            beta = min(end_common)
            state.assign("uv", beta)
            state.assign("xy", beta)
            state.assign_min(e2)
        else:
            union2 = sorted((state.avail["uv"] | state.avail["xy"]) - state.avail["vw"])
            if not union2:
                raise InternalInvariant("pigeonhole failed on the end edges")
            gamma = union2[0]
            e3 = "uv" if gamma in state.avail["uv"] else "xy"
            e4 = "xy" if e3 == "uv" else "uv"
            state.assign(e3, gamma)
            # e4 has >= 4 colors while wx has >= 3: some choice keeps wx at 3
            beta = next(
                (c for c in sorted(state.avail[e4]) if len(state.avail["wx"] - {c}) >= 3),
                None,
            )
            if beta is None:
                raise InternalInvariant("pigeonhole failed protecting wx")
            state.assign(e4, beta)
            state.assign_min(e2)

    if len(state.avail["vw"]) < 3 or len(state.avail["wx"]) < 2:
        raise InternalInvariant(
            f"postcondition failed: |vw|={len(state.avail['vw'])}, "
            f"|wx|={len(state.avail['wx'])}"
        )
    return [(cfg.edge_ids[role], color) for role, color in state.order]


# ---------------------------------------------------------------------------
# odd path with pendants at even positions: total coloring by induction


def _odd_required_sizes(n: int) -> Dict[tuple, int]:
    req = {
        ("p", 1): 3,
        ("q", 2): 2,
        ("p", 2): 4,
        ("p", n - 2): 4,
        ("q", n - 1): 2,
        ("p", n - 1): 3,
    }
    for i in range(3, n - 2):
        req.setdefault(("p", i), 5)
    for j in range(4, n - 2, 2):
        req.setdefault(("q", j), 3)
    return req


def _odd_conflicts(n: int) -> Dict[tuple, tuple]:
    con = {}
    for i in range(1, n):
        cs = [("p", j) for j in range(1, n) if j != i and abs(i - j) <= 2]
        cs += [("q", j) for j in range(2, n, 2) if j - 2 <= i <= j + 1]
        con[("p", i)] = tuple(cs)
    for j in range(2, n, 2):
        con[("q", j)] = tuple(("p", i) for i in range(1, n) if j - 2 <= i <= j + 1)
    return con


@dataclass(frozen=True)
class OddPathConfig:
    """Path v_1..v_n (n odd >= 5) with a pendant at every even position.

    ``path_edges[i-1]`` joins v_i and v_{i+1}; ``pendant_edges[i]`` joins
    v_i and its pendant neighbor.  ``lists`` maps edge ids to available
    colors meeting the size table (3,2,4 at each end, 5 and 3 in the
    middle).
    """

    path_vertices: Tuple[int, ...]
    pendant_vertices: Mapping[int, int]
    path_edges: Tuple[int, ...]
    pendant_edges: Mapping[int, int]
    lists: Mapping[int, FrozenSet[int]]

    @property
    def n(self) -> int:
        return len(self.path_vertices)

    def __post_init__(self):
        n = self.n
        if n < 5 or n % 2 == 0:
            raise ValueError(f"path length must be odd and >= 5, got {n}")
        if len(self.path_edges) != n - 1:
            raise ValueError("path edge count mismatch")
        evens = list(range(2, n, 2))
        if sorted(self.pendant_edges) != evens or sorted(self.pendant_vertices) != evens:
            raise ValueError("pendants must sit exactly at the even positions")
        names = list(self.path_vertices) + [self.pendant_vertices[j] for j in evens]
        if len(set(names)) != len(names):
            raise ValueError("configuration vertices must be distinct")
        for (kind, i), size in _odd_required_sizes(n).items():
            e = self.path_edges[i - 1] if kind == "p" else self.pendant_edges[i]
            if len(self.lists[e]) < size:
                raise ListTooSmall(
                    f"edge {kind}{i} needs {size} colors, got {len(self.lists[e])}"
                )

    def edge_for(self, role: tuple) -> int:
        kind, i = role
        return self.path_edges[i - 1] if kind == "p" else self.pendant_edges[i]

    @staticmethod
    def standalone(n: int, lists_by_role: Mapping[tuple, Iterable[int]]) -> "OddPathConfig":
        """Abstract instance for direct tests: vertices 0..n-1, pendants after."""
        path_vertices = tuple(range(n))
        pendant_vertices = {j: n - 1 + j // 2 for j in range(2, n, 2)}
        path_edges = tuple(range(n - 1))
        pendant_edges = {j: n - 2 + j // 2 for j in range(2, n, 2)}
        lists = {}
        for role, cs in lists_by_role.items():
            kind, i = role
            e = path_edges[i - 1] if kind == "p" else pendant_edges[i]
            lists[e] = frozenset(cs)
        return OddPathConfig(path_vertices, pendant_vertices, path_edges, pendant_edges, lists)


# Base-case pairing orders.  Each entry pairs two mutually compatible edges
# with one shared color; the complementary compatible pair is what remains
# besides the two middle edges.  The "A" order is sound for the entry shape
# (end 3, pendant 2); the "B" order for the shape (end 2, pendant 3) that
# the reduction step leaves behind.  Soundness of each step uses only the
# disjointness of the pairs tried before it.
_BASE_ORDERS = {
    "A": (("p1", "p2"), ("a1", "p2"), ("p1", "a2"), ("a1", "a2")),
    "B": (("a1", "p2"), ("p1", "p2"), ("a1", "a2"), ("p1", "a2")),
}
_BASE_COMPLEMENT = {
    frozenset(("p1", "p2")): ("a1", "a2"),
    frozenset(("a1", "p2")): ("p1", "a2"),
    frozenset(("p1", "a2")): ("a1", "p2"),
    frozenset(("a1", "a2")): ("p1", "p2"),
}


def _odd_base(state: _RoleState, lo: int, shape: str, stats: Optional[SolveStats]) -> None:
    """Color the final five-vertex window (six edges)."""
    names = {
        "a1": ("p", lo),
        "m1": ("p", lo + 1),
        "m2": ("p", lo + 2),
        "a2": ("p", lo + 3),
        "p1": ("q", lo + 1),
        "p2": ("q", lo + 3),
    }
    for e_name, f_name in _BASE_ORDERS[shape]:
        e, f = names[e_name], names[f_name]
        shared = state.common(e, f)
        if shared:
            alpha = min(shared)
            state.assign(e, alpha)
            state.assign(f, alpha)
            o1, o2 = (names[r] for r in _BASE_COMPLEMENT[frozenset((e_name, f_name))])
            shared2 = state.common(o1, o2)
            if shared2:
                beta = min(shared2)
                state.assign(o1, beta)
                state.assign(o2, beta)
                state.assign_min(names["m1"])
                state.assign_min(names["m2"])
            else:
                state.sdr((o1, o2, names["m1"], names["m2"]), stats)
            return
    # every compatible pair has disjoint lists: a rainbow choice exists
    state.sdr(tuple(names[r] for r in ("a1", "m1", "m2", "a2", "p1", "p2")), stats)


def _odd_reduce(state: _RoleState, lo: int, shape: str) -> None:
    """Shrink the window by two vertices from the left end.

    The second path edge takes a color that leaves the next pendant with 3
    colors; then the end pendant and end edge are colored greedily (end
    edge first when the entry shape gives it only 2 colors).
    """
    second = ("p", lo + 1)
    protect = ("q", lo + 3)
    alpha = next(
        (c for c in sorted(state.avail[second]) if len(state.avail[protect] - {c}) >= 3),
        None,
    )
    if alpha is None:
        raise InternalInvariant(f"pigeonhole failed protecting {protect}")
    state.assign(second, alpha)
    if shape == "A":
        state.assign_min(("q", lo + 1))
        state.assign_min(("p", lo))
    else:
        state.assign_min(("p", lo))
        state.assign_min(("q", lo + 1))


def color_odd_path(
    cfg: OddPathConfig, stats: Optional[SolveStats] = None
) -> List[Tuple[int, int]]:
    """Totally color the configuration; returns assignments in apply order."""
    n = cfg.n
    req = _odd_required_sizes(n)
    state = _RoleState({r: cfg.lists[cfg.edge_for(r)] for r in req}, _odd_conflicts(n))
    for role, k in req.items():
        state.truncate(role, k)
    lo, shape = 1, "A"
    while n - lo + 1 > 5:
        _odd_reduce(state, lo, shape)
        lo += 2
        shape = "B"
    _odd_base(state, lo, shape, stats)
    return [(cfg.edge_for(role), color) for role, color in state.order]


# ---------------------------------------------------------------------------
# extension regions over real edges


class _Region:
    """Available-list bookkeeping for the uncolored edges of one extension.

    Assignments are validated against and propagated through the real
    conflict graph, so a mismatch between an abstract configuration and
    the actual graph surfaces immediately instead of corrupting the
    coloring.
    """

    def __init__(self, b, L, pc, cg, edge_ids):
        self.pc = pc
        self.cg = cg
        self.edges = list(edge_ids)
        self.avail = {}
        for e in self.edges:
            used = {pc.assigned[f] for f in cg[e] if f in pc.assigned}
            self.avail[e] = set(L[e]) - used
        self.order: list = []

    def truncate(self, e: int, k: int) -> None:
        cur = self.avail[e]
        if len(cur) < k:
            raise InternalInvariant(f"edge {e} entered an extension with {len(cur)} < {k} colors")
        self.avail[e] = set(sorted(cur)[:k])

    def assign(self, e: int, color: int) -> None:
        if e not in self.avail or color not in self.avail[e]:
            raise InternalInvariant(f"color {color} unavailable for edge {e}")
        del self.avail[e]
        self.pc.set(e, color)
        for f in self.cg[e]:
            if f in self.avail:
                self.avail[f].discard(color)
        self.order.append(e)

    def assign_min(self, e: int) -> None:
        cur = self.avail.get(e)
        if not cur:
            raise InternalInvariant(f"edge {e} ran out of colors in a greedy step")
        self.assign(e, min(cur))

    def sdr(self, edge_ids: Sequence[int], stats: Optional[SolveStats]) -> None:
        if stats is not None:
            stats.sdr_calls += 1
        p = SdrProblem(tuple(edge_ids), {e: frozenset(self.avail[e]) for e in edge_ids})
        chosen = rainbow_sdr(p)
        if chosen is None:
            raise InternalInvariant(f"rainbow choice missing for edges {list(edge_ids)}")
        for e in edge_ids:
            self.assign(e, chosen[e])

    def undo(self) -> None:
        for e in self.order:
            del self.pc.assigned[e]
        self.order = []


def _exhaustive_region(b, L, pc, cg, edge_ids) -> bool:
    """Depth-first search over a small region, colors ascending.

    Used only as a flagged fallback when an extension chain raises; works
    on the untruncated available lists for maximum slack.
    """
    avail = {}
    for e in edge_ids:
        used = {pc.assigned[f] for f in cg[e] if f in pc.assigned}
        avail[e] = sorted(set(L[e]) - used)
    region_set = set(edge_ids)
    chosen: Dict[int, int] = {}
    nodes = 0

    def options(e):
        blocked = {chosen[f] for f in cg[e] if f in chosen}
        return [c for c in avail[e] if c not in blocked]

    def dfs() -> bool:
        nonlocal nodes
        if len(chosen) == len(region_set):
            return True
        nodes += 1
        if nodes > _FALLBACK_NODE_CAP:
            raise InternalInvariant("fallback search budget exhausted")
        pending = [(len(options(e)), e) for e in sorted(region_set) if e not in chosen]
        count, e = min(pending)
        if count == 0:
            return False
        for c in options(e):
            chosen[e] = c
            if dfs():
                return True
            del chosen[e]
        return False

    if not dfs():
        return False
    for e in sorted(chosen):
        pc.set(e, chosen[e])
    return True


def _run_with_fallback(b, L, pc, cg, stats, region, chain) -> None:
    try:
        chain(region)
    except InternalInvariant as exc:
        region.undo()
        stats.fallback_uses += 1
        logger.warning("extension chain failed (%s); using exhaustive fallback", exc)
        if not _exhaustive_region(b, L, pc, cg, region.edges):
            raise InternalInvariant(
                f"fallback found no coloring for edges {region.edges}"
            ) from exc


# ---------------------------------------------------------------------------
# 4-cycle extension


def extend_c4(
    b: BipartiteGraph,
    L: ListAssignment,
    pc: PartialColoring,
    cycle: CycleDescriptor,
    cg: Optional[ConflictGraph] = None,
    stats: Optional[SolveStats] = None,
) -> PartialColoring:
    """Color the six uncolored edges around a shortest 4-cycle u-v-w-x.

    If the pendant neighbors of v and x coincide the component is exactly
    K_{2,3}: all six lists are intact 6-lists and a rainbow choice always
    exists.  Otherwise either the two pendant lists jointly hold 6 colors
    (rainbow choice by Hall) or they share a color, which colors both
    pendants at the price of one color per cycle edge.
    """
    cg = cg or build_conflict_graph(b)
    stats = stats if stats is not None else SolveStats()
    u, v, w, x = cycle.vertices
    e_uv, e_vw, e_wx, e_xu = cycle.edges
    if v not in cycle.pendant or x not in cycle.pendant:
        raise InternalInvariant("4-cycle extension needs pendants at both B-vertices")
    vp, e_vp = cycle.pendant[v]
    xp, e_xp = cycle.pendant[x]
    edge_ids = [e_uv, e_vw, e_wx, e_xu, e_vp, e_xp]
    region = _Region(b, L, pc, cg, edge_ids)

    if vp == xp:
        stats.k23_base_cases += 1
        for e in edge_ids:
            if len(region.avail[e]) < 6:
                raise InternalInvariant(f"K_2,3 component edge {e} has a reduced list")
        region.sdr(edge_ids, stats)
        return pc

    stats.c4_extensions += 1

    def chain(region: _Region) -> None:
        for e in (e_vp, e_xp):
            region.truncate(e, 3)
        for e in (e_uv, e_vw, e_wx, e_xu):
            region.truncate(e, 5)
        if len(region.avail[e_vp] | region.avail[e_xp]) >= 6:
            region.sdr(edge_ids, stats)
        else:
            # |union| <= 5 with two 3-lists forces a shared color
            alpha = min(region.avail[e_vp] & region.avail[e_xp])
            region.assign(e_vp, alpha)
            region.assign(e_xp, alpha)
            for e in (e_uv, e_vw, e_wx, e_xu):
                region.assign_min(e)

    _run_with_fallback(b, L, pc, cg, stats, region, chain)
    return pc


# ---------------------------------------------------------------------------
# 6-cycle extension


@dataclass(frozen=True)
class _C6Frame:
    """The nine region edges named after the rotated cycle u-v-w-x-y-z,
    where u, w, y carry the pendants."""

    uv: int
    vw: int
    wx: int
    xy: int
    yz: int
    zu: int
    up: int
    wp: int
    yp: int


def _c6_frame(cycle: CycleDescriptor, rot: int) -> _C6Frame:
    d, ce = cycle.vertices, cycle.edges

    def at(k):
        return (k + 2 * rot) % 6

    pend = cycle.pendant
    return _C6Frame(
        uv=ce[at(1)],
        vw=ce[at(2)],
        wx=ce[at(3)],
        xy=ce[at(4)],
        yz=ce[at(5)],
        zu=ce[at(0)],
        up=pend[d[at(1)]][1],
        wp=pend[d[at(3)]][1],
        yp=pend[d[at(5)]][1],
    )


def _c6_shared_color_chain(region: _Region, f: _C6Frame, stats) -> None:
    """Case of a shared color on the opposite pair (uv, xy).

    Each later pairing relies on the disjointness of the pairs tried
    before it; the greedy orders are chosen so every step keeps a color.
    """
    alpha = min(region.avail[f.uv] & region.avail[f.xy])
    region.assign(f.uv, alpha)
    region.assign(f.xy, alpha)
    pairings = (
        (f.up, f.yp, (f.wp, f.vw, f.wx, f.yz, f.zu)),
        (f.wp, f.yp, (f.up, f.vw, f.zu, f.yz, f.wx)),
        (f.wp, f.up, (f.yp, f.wx, f.yz, f.zu, f.vw)),
        (f.up, f.wx, (f.yp, f.yz, f.zu, f.vw, f.wp)),
        (f.yp, f.vw, (f.up, f.zu, f.yz, f.wx, f.wp)),
        (f.wp, f.yz, (f.up, f.yp, f.zu, f.vw, f.wx)),
        (f.wp, f.zu, (f.yp, f.up, f.yz, f.wx, f.vw)),
    )
    for e1, e2, rest in pairings:
        shared = region.avail[e1] & region.avail[e2]
        if shared:
            beta = min(shared)
            region.assign(e1, beta)
            region.assign(e2, beta)
            for e in rest:
                region.assign_min(e)
            return
    region.sdr((f.up, f.wp, f.yp, f.vw, f.wx, f.yz, f.zu), stats)


def _c6_equal_pendants(region: _Region, f: _C6Frame) -> None:
    """All three pendant lists equal: one color serves all pendants.

    Every opposite cycle pair is disjoint here, so the shared pendant
    color misses at least one edge of each pair; the cycle is colored
    greedily ending at such an edge.
    """
    gamma = min(region.avail[f.up])
    for e in (f.up, f.wp, f.yp):
        region.assign(e, gamma)
    walk = [f.uv, f.vw, f.wx, f.xy, f.yz, f.zu]
    star = next((e for e in walk if len(region.avail[e]) == 5), None)
    if star is None:
        raise InternalInvariant("no cycle edge kept its five colors")
    i = walk.index(star)
    for e in walk[i + 1 :] + walk[: i + 1]:
        region.assign_min(e)


def extend_c6(
    b: BipartiteGraph,
    L: ListAssignment,
    pc: PartialColoring,
    cycle: CycleDescriptor,
    cg: Optional[ConflictGraph] = None,
    stats: Optional[SolveStats] = None,
) -> PartialColoring:
    """Color the nine uncolored edges around a shortest 6-cycle."""
    cg = cg or build_conflict_graph(b)
    stats = stats if stats is not None else SolveStats()
    d = cycle.vertices
    frames = [_c6_frame(cycle, r) for r in range(3)]
    f0 = frames[0]
    edge_ids = [f0.uv, f0.vw, f0.wx, f0.xy, f0.yz, f0.zu, f0.up, f0.wp, f0.yp]
    region = _Region(b, L, pc, cg, edge_ids)
    stats.c6_extensions += 1

    def chain(region: _Region) -> None:
        for e in (f0.up, f0.wp, f0.yp):
            region.truncate(e, 3)
        for e in (f0.uv, f0.vw, f0.wx, f0.xy, f0.yz, f0.zu):
            region.truncate(e, 5)
        for f in frames:
            if region.avail[f.uv] & region.avail[f.xy]:
                _c6_shared_color_chain(region, f, stats)
                return
        if region.avail[f0.up] == region.avail[f0.wp] == region.avail[f0.yp]:
            _c6_equal_pendants(region, f0)
        else:
            region.sdr(edge_ids, stats)

    _run_with_fallback(b, L, pc, cg, stats, region, chain)
    return pc


# ---------------------------------------------------------------------------
# long-cycle extension (length >= 8)


def extend_long_cycle(
    b: BipartiteGraph,
    L: ListAssignment,
    pc: PartialColoring,
    cycle: CycleDescriptor,
    cg: Optional[ConflictGraph] = None,
    stats: Optional[SolveStats] = None,
) -> PartialColoring:
    """Color the 3n/2 uncolored edges around a shortest cycle of length >= 8.

    Three steps: precolor the first five-vertex stretch, totally color the
    odd pendant path around the rest of the cycle, then finish the two
    middle edges of the stretch.  No fallback: the path procedures are
    guaranteed to succeed at their entry sizes.
    """
    cg = cg or build_conflict_graph(b)
    stats = stats if stats is not None else SolveStats()
    d = cycle.vertices
    ce = cycle.edges
    n = len(d)
    if n < 8 or n % 2 != 0:
        raise InternalInvariant(f"long-cycle extension on length {n}")
    for i in range(1, n, 2):
        if d[i] not in cycle.pendant:
            raise InternalInvariant(f"cycle vertex {d[i]} lacks a pendant")
    pend_edge = {i: cycle.pendant[d[i]][1] for i in range(1, n, 2)}
    pend_vertex = {i: cycle.pendant[d[i]][0] for i in range(1, n, 2)}
    edge_ids = list(ce) + [pend_edge[i] for i in range(1, n, 2)]
    region = _Region(b, L, pc, cg, edge_ids)
    stats.long_cycle_extensions += 1
    for e in ce:
        region.truncate(e, 5)
    for i in range(1, n, 2):
        region.truncate(pend_edge[i], 3)

    # step 1: seed on v1..v5 (= d[0..4]) with pendants at v2 and v4
    cfg1 = FivePathConfig(
        vertices=(d[0], d[1], d[2], d[3], d[4], pend_vertex[1], pend_vertex[3]),
        edge_ids={
            "uv": ce[0],
            "vw": ce[1],
            "wx": ce[2],
            "xy": ce[3],
            "vz": pend_edge[1],
            "xt": pend_edge[3],
        },
        lists={e: frozenset(region.avail[e]) for e in
               (ce[0], ce[1], ce[2], ce[3], pend_edge[1], pend_edge[3])},
    )
    for e, c in precolor_five_path(cfg1, stats):
        region.assign(e, c)

    # step 2: odd path v5, v6, ..., vn, v1 with pendants at v6, v8, ..., vn
    n2 = n - 3
    path_vertices = tuple(d[4 + k - 1] for k in range(1, n2)) + (d[0],)
    path_edges = tuple(ce[3 + k] for k in range(1, n2 - 1)) + (ce[n - 1],)
    pendant_vertices = {k: pend_vertex[3 + k] for k in range(2, n2, 2)}
    pendant_edges = {k: pend_edge[3 + k] for k in range(2, n2, 2)}
    cfg2 = OddPathConfig(
        path_vertices,
        pendant_vertices,
        path_edges,
        pendant_edges,
        {e: frozenset(region.avail[e]) for e in list(path_edges) + list(pendant_edges.values())},
    )
    for e, c in color_odd_path(cfg2, stats):
        region.assign(e, c)

    # step 3: the two remaining middle edges of the seed
    if len(region.avail[ce[1]]) < 2 or len(region.avail[ce[2]]) < 1:
        raise InternalInvariant(
            f"middle edges have {len(region.avail[ce[1]])} and "
            f"{len(region.avail[ce[2]])} colors before the final step"
        )
    region.assign_min(ce[2])
    region.assign_min(ce[1])
    return pc


# ---------------------------------------------------------------------------
# the full solver


def _assign_greedy(b, L, pc, cg, e) -> None:
    avail = available(e, L, pc, cg)
    if not avail:
        raise InternalInvariant(f"deferred edge {e} has no available color")
    pc.set(e, min(avail))


def _solve_component(b, L, cg, comp, alive, deg, pc, stats) -> None:
    g = b.graph
    heap = [v for v in comp if _qualifies(b, deg, v)]
    heapify(heap)
    entries: list = []
    while True:
        while heap:
            v = heappop(heap)
            if not _qualifies(b, deg, v):
                continue
            e = min(eid for eid, _ in g.adj[v] if alive[eid])
            _remove_edge(b, alive, deg, heap, e)
            entries.append(("edge", e))
            stats.peeled_edges += 1
        found = _residual_shortest_cycle(b, alive, deg, comp)
        if found is None:
            if any(deg[v] for v in comp):
                raise InternalInvariant("stable residue has edges but no cycle")
            break
        _, cyc = found
        desc = _descriptor_from_cycle(b, list(cyc), alive)
        for v in desc.vertices:
            for eid, _ in g.adj[v]:
                if alive[eid]:
                    _remove_edge(b, alive, deg, heap, eid)
        n = len(desc)
        kind = "c4" if n == 4 else ("c6" if n == 6 else "long")
        entries.append((kind, desc))
    for kind, payload in reversed(entries):
        if kind == "edge":
            _assign_greedy(b, L, pc, cg, payload)
        elif kind == "c4":
            extend_c4(b, L, pc, payload, cg=cg, stats=stats)
        elif kind == "c6":
            extend_c6(b, L, pc, payload, cg=cg, stats=stats)
        else:
            extend_long_cycle(b, L, pc, payload, cg=cg, stats=stats)


def color_strong_23(
    b: BipartiteGraph, L: ListAssignment
) -> Tuple[PartialColoring, SolveStats]:
    """Strong list edge-coloring of a simple (2,3)-bipartite graph.

    Every list must hold at least 6 colors; the result is total, uses each
    edge's own list, and is deterministic for fixed input.
    """
    b.validate_23()
    g = b.graph
    for e in range(g.edge_count):
        if L.size(e) < 6:
            raise ListTooSmall(f"edge {e} has a list of size {L.size(e)}, need 6")
    cg = build_conflict_graph(b)
    pc = PartialColoring()
    stats = SolveStats()
    alive = [True] * g.edge_count
    deg = [g.degree(v) for v in range(g.vertex_count)]
    for comp in components(g):
        _solve_component(b, L, cg, comp, alive, deg, pc, stats)
    bad = verify_strong(b, L, pc, require_total=True, cg=cg)
    if bad:
        raise InternalInvariant(f"solver produced an invalid coloring: {bad[:3]}")
    return pc, stats


def uniform_incidence_lists(g: Multigraph, k: int) -> Dict[Incidence, FrozenSet[int]]:
    palette = frozenset(range(1, k + 1))
    return {inc: palette for inc in g.incidences()}


def color_incidence(
    g: Multigraph, L: Mapping[Incidence, Iterable[int]]
) -> Tuple[Dict[Incidence, int], SolveStats]:
    """Incidence coloring of a loopless multigraph with maximum degree <= 3.

    Transported through the subdivision: the incidence (v, e) becomes the
    edge joining v to the midpoint of e, and a strong edge-coloring of the
    subdivision is exactly an incidence coloring of the original.
    """
    if g.max_degree() > 3:
        raise DegreeTooHigh(f"maximum degree {g.max_degree()} exceeds 3")
    sub = subdivide(g)
    lists = {}
    for inc, eid in sub.incidence_to_edge.items():
        colors = frozenset(L.get(inc, ()))
        if len(colors) < 6:
            raise ListTooSmall(f"incidence {inc} has a list of size {len(colors)}, need 6")
        lists[eid] = colors
    pc, stats = color_strong_23(sub.bipartite, ListAssignment(lists))
    coloring = {inc: pc.assigned[eid] for inc, eid in sub.incidence_to_edge.items()}
    bad = verify_incidence(g, coloring, require_total=True)
    if bad:
        raise InternalInvariant(f"transported coloring invalid: {bad[:3]}")
    return coloring, stats
