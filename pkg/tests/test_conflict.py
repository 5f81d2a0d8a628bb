import pytest

import strongcolor as sc
from strongcolor import Incidence, ListAssignment, PartialColoring

from conftest import brute_conflicts, rand_b23


def path_graph(n):
    return sc.infer_parts(sc.build_multigraph(n, [(i, i + 1) for i in range(n - 1)]))


class TestConflictEdges:
    def test_path_second_neighborhood(self):
        b = path_graph(4)  # edges 0: a-b, 1: b-c, 2: c-d
        assert sc.conflict_edges(b, 0) == {1, 2}

    def test_k23_all_pairs(self, k23):
        for e in range(6):
            got = sc.conflict_edges(k23, e)
            assert got == brute_conflicts(k23, e)
            assert got == set(range(6)) - {e}

    def test_disjoint_edges_no_conflict(self):
        g = sc.build_multigraph(4, [(0, 1), (2, 3)])
        b = sc.BipartiteGraph(g, ["A", "B", "A", "B"])
        assert sc.conflict_edges(b, 0) == set()

    def test_bad_edge_id(self, k23):
        with pytest.raises(sc.BadEdgeId):
            sc.conflict_edges(k23, 99)


class TestBuildConflictGraph:
    def test_p4_is_triangle(self):
        cg = sc.build_conflict_graph(path_graph(4))
        assert [cg[e] for e in range(3)] == [(1, 2), (0, 2), (0, 1)]

    def test_c8_four_each(self):
        b = sc.infer_parts(sc.named("c8"))
        cg = sc.build_conflict_graph(b)
        for e in range(8):
            assert len(cg[e]) == 4
            assert set(cg[e]) == brute_conflicts(b, e)

    def test_k23_is_k6(self, k23):
        cg = sc.build_conflict_graph(k23)
        assert all(len(cg[e]) == 5 for e in range(6))

    def test_symmetry_and_bound_on_corpus(self):
        for seed in range(150):
            b = rand_b23(2 + seed % 9, 2 + seed % 7, seed)
            cg = sc.build_conflict_graph(b)
            for e in range(b.graph.edge_count):
                assert len(cg[e]) <= 7
                for f in cg[e]:
                    assert e in cg[f]


class TestIncidenceAdjacent:
    def setup_method(self):
        # path v-w plus edges v-u, w-x
        self.g = sc.build_multigraph(4, [(0, 1), (0, 2), (1, 3)])
        # edge 0 = vw, edge 1 = vu, edge 2 = wx  (v=0, w=1, u=2, x=3)

    def test_same_vertex(self):
        assert sc.incidence_adjacent(self.g, Incidence(0, 0), Incidence(0, 1))

    def test_same_edge(self):
        assert sc.incidence_adjacent(self.g, Incidence(0, 0), Incidence(1, 0))

    def test_joining_edge_is_one_of_the_two(self):
        # (v, vw) vs (w, wx): the edge vw joining the vertices is e itself
        assert sc.incidence_adjacent(self.g, Incidence(0, 0), Incidence(1, 2))

    def test_third_edge_does_not_count(self):
        # (v, vu) vs (w, wx): vw exists but is neither e nor f
        assert not sc.incidence_adjacent(self.g, Incidence(0, 1), Incidence(1, 2))

    def test_not_reflexive(self):
        assert not sc.incidence_adjacent(self.g, Incidence(0, 0), Incidence(0, 0))


class TestAvailable:
    def test_no_conflicts_assigned(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        cg = sc.build_conflict_graph(k23)
        assert sc.available(0, L, PartialColoring(), cg) == set(range(1, 7))

    def test_two_conflicting_colors_removed(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        cg = sc.build_conflict_graph(k23)
        pc = PartialColoring({1: 1, 2: 2})
        assert sc.available(0, L, pc, cg) == {3, 4, 5, 6}

    def test_shrinks_by_at_most_one_per_assignment(self):
        b = sc.subdivide(sc.named("k4")).bipartite
        L = ListAssignment.uniform(range(b.graph.edge_count), 6)
        cg = sc.build_conflict_graph(b)
        pc = PartialColoring()
        pc_sizes = {e: len(sc.available(e, L, pc, cg)) for e in range(b.graph.edge_count)}
        for step, e in enumerate(range(b.graph.edge_count)):
            avail = sc.available(e, L, pc, cg)
            if not avail:
                break
            pc.set(e, min(avail))
            for f in range(b.graph.edge_count):
                if f in pc.assigned:
                    continue
                new_size = len(sc.available(f, L, pc, cg))
                assert new_size >= pc_sizes[f] - 1
                pc_sizes[f] = new_size


class TestVerifyStrong:
    def test_k23_six_distinct_ok(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        pc = PartialColoring({e: e + 1 for e in range(6)})
        assert sc.verify_strong(k23, L, pc, require_total=True) == []

    def test_k23_repeat_names_the_pair(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        pc = PartialColoring({0: 1, 3: 1})
        violations = sc.verify_strong(k23, L, pc)
        assert len(violations) == 1
        assert violations[0].kind == "conflict" and violations[0].where == (0, 3)

    def test_color_outside_list(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        pc = PartialColoring({0: 99})
        violations = sc.verify_strong(k23, L, pc)
        assert any(v.kind == "list" for v in violations)

    def test_totality_flag(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        pc = PartialColoring({0: 1})
        assert sc.verify_strong(k23, L, pc) == []
        assert any(
            v.kind == "uncolored" for v in sc.verify_strong(k23, L, pc, require_total=True)
        )


class TestVerifyIncidence:
    def test_c3_matches_definition_oracle(self):
        g = sc.build_multigraph(3, [(0, 1), (1, 2), (2, 0)])
        incs = sorted(g.incidences())

        def brute_ok(coloring):
            for i1 in incs:
                for i2 in incs:
                    if i1 < i2 and sc.incidence_adjacent(g, i1, i2):
                        if coloring[i1] == coloring[i2]:
                            return False
            return True

        # a known 4-coloring scheme of C3 incidences and a broken variant
        for attempt in range(200):
            rng = sc.SplitMix64(attempt)
            coloring = {inc: rng.below(4) for inc in incs}
            assert (sc.verify_incidence(g, coloring) == []) == brute_ok(coloring)

    def test_shared_vertex_violation(self):
        g = sc.build_multigraph(3, [(0, 1), (0, 2)])
        coloring = {Incidence(0, 0): 1, Incidence(0, 1): 1}
        violations = sc.verify_incidence(g, coloring)
        assert len(violations) == 1 and violations[0].kind == "conflict"

    def test_empty_graph_ok(self):
        g = sc.build_multigraph(0, [])
        assert sc.verify_incidence(g, {}, require_total=True) == []


class TestCorrespondence:
    def test_incidence_adjacency_equals_subdivision_conflict(self):
        for name in ("k4", "double-edge", "tree", "petersen"):
            g = sc.named(name)
            sub = sc.subdivide(g)
            cg = sc.build_conflict_graph(sub.bipartite)
            incs = sorted(sub.incidence_to_edge)
            for i1 in incs:
                e1 = sub.incidence_to_edge[i1]
                for i2 in incs:
                    if i2 <= i1:
                        continue
                    e2 = sub.incidence_to_edge[i2]
                    assert sc.incidence_adjacent(g, i1, i2) == (e2 in cg[e1])

    def test_verifiers_agree_through_transport(self):
        g = sc.named("k4")
        sub = sc.subdivide(g)
        rng = sc.SplitMix64(5)
        for _ in range(100):
            inc_coloring = {inc: rng.below(6) for inc in sub.incidence_to_edge}
            edge_coloring = PartialColoring(
                {sub.incidence_to_edge[inc]: c for inc, c in inc_coloring.items()}
            )
            ok_inc = sc.verify_incidence(g, inc_coloring) == []
            ok_strong = sc.verify_strong(sub.bipartite, None, edge_coloring) == []
            assert ok_inc == ok_strong
