import pytest

import strongcolor as sc
from strongcolor import ListAssignment, PartialColoring, PeelState, SolveStats
from strongcolor.generate import SplitMix64

from conftest import assert_valid_strong, c4_gadget, c6_gadget, cycle_gadget, rand_b23


class TestPeelStep:
    def test_path_peels_completely(self):
        b = sc.infer_parts(sc.named("p5"))
        state = PeelState.for_graph(b)
        peeled = []
        while (e := sc.peel_step(b, state)) is not None:
            peeled.append(e)
        assert sorted(peeled) == list(range(4))

    def test_even_cycle_peels_completely(self):
        b = sc.infer_parts(sc.named("c8"))
        state = PeelState.for_graph(b)
        count = 0
        while sc.peel_step(b, state) is not None:
            count += 1
        assert count == 8

    def test_biregular_core_returns_none(self):
        b = sc.subdivide(sc.named("k4")).bipartite
        state = PeelState.for_graph(b)
        assert sc.peel_step(b, state) is None


class TestGreedyUnwind:
    def test_path_smallest_colors(self):
        b = sc.infer_parts(sc.named("p5"))
        L = ListAssignment.uniform(range(4), 6)
        state = PeelState.for_graph(b)
        while sc.peel_step(b, state) is not None:
            pass
        pc = sc.greedy_unwind(state.stack, b, L, PartialColoring())
        assert_valid_strong(b, L, pc)
        assert min(pc.assigned.values()) == 1

    def test_subdivided_star(self):
        b = sc.subdivide(sc.named("star")).bipartite
        L = ListAssignment.uniform(range(b.graph.edge_count), 6)
        state = PeelState.for_graph(b)
        while sc.peel_step(b, state) is not None:
            pass
        pc = sc.greedy_unwind(state.stack, b, L, PartialColoring())
        assert_valid_strong(b, L, pc)

    def test_a_rule_edges_keep_two_colors(self):
        # an edge deferred at an A-endpoint of degree <= 1 has at most 4
        # conflicts in its residue, so 6-lists keep at least 2 colors
        rng = SplitMix64(77)
        for trial in range(60):
            b = rand_b23(4 + rng.below(10), 3 + rng.below(8), rng.next_u64())
            m = b.graph.edge_count
            if m == 0:
                continue
            L = ListAssignment.uniform(range(m), 6)
            state = PeelState.for_graph(b)
            rules = {}
            while True:
                qualifying = [
                    v
                    for v in range(b.graph.vertex_count)
                    if state.deg[v] >= 1
                    and state.deg[v] <= (1 if b.part_of[v] == "A" else 2)
                ]
                e = sc.peel_step(b, state)
                if e is None:
                    break
                rules[e] = b.part_of[min(qualifying)]
            cg = sc.build_conflict_graph(b)
            pc = PartialColoring()
            while state.stack:
                e = state.stack.pop()
                avail = sc.available(e, L, pc, cg)
                if rules[e] == "A":
                    assert len(avail) >= 2
                else:
                    assert len(avail) >= 1
                pc.set(e, min(avail))
            assert_valid_strong(b, L, pc, total=(len(pc.assigned) == m))


def _c6_lists(b, by_role):
    """Build a ListAssignment for the c6 gadget keyed by frame-0 role names."""
    edge_of = {
        "zu": 0, "uv": 1, "vw": 2, "wx": 3, "xy": 4, "yz": 5,
        "up": 6, "wp": 7, "yp": 8,
    }
    return ListAssignment({edge_of[r]: frozenset(cs) for r, cs in by_role.items()})


CYCLE5 = {0, 10, 11, 12, 13}


class TestExtendC4:
    def setup_method(self):
        self.b = c4_gadget()
        self.cycle = sc.shortest_cycle(self.b)
        self.cg = sc.build_conflict_graph(self.b)
        # gadget edge ids: cycle edges 0..3, pendant edges 4 (at v=1), 5 (at x=3)
        self.pend = sorted(eid for _, eid in self.cycle.pendant.values())
        self.cyc = list(self.cycle.edges)

    def run(self, L):
        pc = PartialColoring()
        stats = SolveStats()
        sc.extend_c4(self.b, L, pc, self.cycle, cg=self.cg, stats=stats)
        assert_valid_strong(self.b, L, pc)
        assert len(pc.assigned) == 6
        return pc, stats

    def test_shared_pendant_color_then_greedy(self):
        lists = {e: {1, 2, 3, 4, 5} for e in self.cyc}
        lists.update({e: {1, 2, 3} for e in self.pend})
        pc, stats = self.run(ListAssignment(lists))
        assert pc.get(self.pend[0]) == pc.get(self.pend[1])
        assert stats.c4_extensions == 1 and stats.fallback_uses == 0

    def test_disjoint_pendants_rainbow(self):
        lists = {e: {1, 2, 3, 4, 5} for e in self.cyc}
        lists[self.pend[0]] = {1, 2, 3}
        lists[self.pend[1]] = {4, 5, 6}
        pc, stats = self.run(ListAssignment(lists))
        assert len(set(pc.assigned.values())) == 6
        assert stats.sdr_calls == 1

    def test_random_exact_entry_sizes(self):
        rng = SplitMix64(9)
        for trial in range(300):
            palette = 6 + rng.below(7)
            lists = {e: set(rng.subset(5, palette)) for e in self.cyc}
            lists.update({e: set(rng.subset(3, palette)) for e in self.pend})
            _, stats = self.run(ListAssignment(lists))
            assert stats.fallback_uses == 0


class TestExtendC4Coincident:
    def test_k23_component_rainbow(self, k23):
        cycle = sc.shortest_cycle(k23)
        L = ListAssignment.uniform(range(6), 6)
        pc = PartialColoring()
        stats = SolveStats()
        sc.extend_c4(k23, L, pc, cycle, stats=stats)
        assert_valid_strong(k23, L, pc, total=True)
        assert sorted(pc.assigned.values()) == [1, 2, 3, 4, 5, 6]
        assert stats.k23_base_cases == 1 and stats.c4_extensions == 0


class TestExtendC6:
    def setup_method(self):
        self.b = c6_gadget()
        self.cycle = sc.shortest_cycle(self.b)
        self.cg = sc.build_conflict_graph(self.b)

    def run(self, by_role, expect_fallback=0):
        L = _c6_lists(self.b, by_role)
        pc = PartialColoring()
        stats = SolveStats()
        sc.extend_c6(self.b, L, pc, self.cycle, cg=self.cg, stats=stats)
        assert_valid_strong(self.b, L, pc)
        assert len(pc.assigned) == 9
        assert stats.fallback_uses == expect_fallback
        return pc, stats

    def base(self, **overrides):
        by_role = {
            "uv": {0, 30, 31, 32, 33},
            "xy": {0, 40, 41, 42, 43},
            "vw": set(CYCLE5),
            "wx": set(CYCLE5),
            "yz": set(CYCLE5),
            "zu": set(CYCLE5),
            "up": {0, 1, 2},
            "wp": {0, 3, 4},
            "yp": {0, 5, 6},
        }
        by_role.update(overrides)
        return by_role

    def test_pairing_up_yp(self):
        pc, _ = self.run(self.base(yp={0, 1, 9}))
        assert pc.get(6) == pc.get(8) == 1

    def test_pairing_wp_yp(self):
        pc, _ = self.run(self.base(yp={0, 3, 9}))
        assert pc.get(7) == pc.get(8) == 3

    def test_pairing_wp_up(self):
        pc, _ = self.run(self.base(wp={0, 1, 9}))
        assert pc.get(7) == pc.get(6) == 1

    def test_pairing_up_wx(self):
        pc, _ = self.run(self.base(wx={0, 1, 10, 11, 12}))
        assert pc.get(6) == pc.get(3) == 1

    def test_pairing_yp_vw(self):
        pc, _ = self.run(self.base(vw={0, 5, 10, 11, 12}))
        assert pc.get(8) == pc.get(2) == 5

    def test_pairing_wp_yz(self):
        pc, _ = self.run(self.base(yz={0, 3, 10, 11, 12}))
        assert pc.get(7) == pc.get(5) == 3

    def test_pairing_wp_zu(self):
        pc, _ = self.run(self.base(zu={0, 3, 10, 11, 12}))
        assert pc.get(7) == pc.get(0) == 3

    def test_terminal_rainbow_on_seven(self):
        _, stats = self.run(self.base())
        assert stats.sdr_calls == 1

    def test_hall_corner_uses_fallback(self):
        # all compatible pairs disjoint after the shared color, yet the seven
        # remaining lists live inside six colors: no rainbow choice exists
        by_role = self.base(
            uv={0, 7, 8, 9, 10},
            xy={0, 7, 8, 9, 10},
            vw={0, 1, 2, 3, 4},
            wx={0, 3, 4, 5, 6},
            yz={0, 1, 2, 5, 6},
            zu={0, 1, 2, 5, 6},
        )
        self.run(by_role, expect_fallback=1)

    def test_rotated_opposite_pair(self):
        # (uv, xy) disjoint but the rotated pair (vw, yz) shares a color
        by_role = self.base(
            uv={1, 2, 3, 4, 5},
            xy={6, 7, 8, 9, 10},
            vw={0, 11, 12, 13, 14},
            yz={0, 15, 16, 17, 18},
            wx={21, 22, 23, 24, 25},
            zu={26, 27, 28, 29, 30},
            up={31, 32, 33},
            wp={34, 35, 36},
            yp={37, 38, 39},
        )
        pc, _ = self.run(by_role)
        assert pc.get(2) == pc.get(5) == 0

    def test_prefix_lists_extend_validly(self):
        # identical prefix lists everywhere: the first shared-color case fires
        by_role = {r: {1, 2, 3, 4, 5} for r in ("uv", "vw", "wx", "xy", "yz", "zu")}
        by_role.update({r: {1, 2, 3} for r in ("up", "wp", "yp")})
        self.run(by_role)

    def test_second_rotation_fires(self):
        # only the pair (wx, zu) shares a color: frame 2 handles it
        by_role = self.base(
            uv={1, 2, 3, 4, 5},
            xy={6, 7, 8, 9, 10},
            vw={11, 12, 13, 14, 15},
            yz={16, 17, 18, 19, 20},
            wx={0, 21, 22, 23, 24},
            zu={0, 25, 26, 27, 28},
            up={31, 32, 33},
            wp={34, 35, 36},
            yp={37, 38, 39},
        )
        pc, _ = self.run(by_role)
        assert pc.get(3) == pc.get(0) == 0

    def test_equal_pendants_one_color(self):
        by_role = {
            "uv": {1, 2, 3, 4, 5},
            "vw": {1, 2, 3, 4, 5},
            "wx": {1, 2, 3, 4, 5},
            "xy": {6, 7, 8, 9, 10},
            "yz": {6, 7, 8, 9, 10},
            "zu": {6, 7, 8, 9, 10},
            "up": {11, 12, 13},
            "wp": {11, 12, 13},
            "yp": {11, 12, 13},
        }
        pc, stats = self.run(by_role)
        assert pc.get(6) == pc.get(7) == pc.get(8) == 11
        assert stats.sdr_calls == 0

    def test_unequal_pendants_rainbow_on_nine(self):
        by_role = {
            "uv": {1, 2, 3, 4, 5},
            "vw": {1, 2, 3, 4, 5},
            "wx": {1, 2, 3, 4, 5},
            "xy": {6, 7, 8, 9, 10},
            "yz": {6, 7, 8, 9, 10},
            "zu": {6, 7, 8, 9, 10},
            "up": {11, 12, 13},
            "wp": {11, 12, 13},
            "yp": {11, 12, 14},
        }
        _, stats = self.run(by_role)
        assert stats.sdr_calls == 1

    def test_nine_list_hall_failure_uses_fallback(self):
        by_role = {
            "uv": {1, 2, 3, 4, 5},
            "vw": {1, 2, 3, 4, 5},
            "wx": {1, 2, 3, 4, 5},
            "xy": {6, 7, 8, 9, 10},
            "yz": {6, 7, 8, 9, 10},
            "zu": {6, 7, 8, 9, 10},
            "up": {1, 2, 3},
            "wp": {1, 2, 3},
            "yp": {1, 2, 4},
        }
        self.run(by_role, expect_fallback=1)

    def test_random_exact_entry_sizes(self):
        rng = SplitMix64(6)
        for trial in range(300):
            palette = 6 + rng.below(7)
            by_role = {r: set(rng.subset(5, palette)) for r in ("uv", "vw", "wx", "xy", "yz", "zu")}
            by_role.update({r: set(rng.subset(3, palette)) for r in ("up", "wp", "yp")})
            self.run(by_role)


class TestExtendLongCycle:
    @pytest.mark.parametrize("n", [8, 10, 12, 16])
    def test_exact_entry_sizes(self, n):
        b = cycle_gadget(n)
        cycle = sc.shortest_cycle(b)
        cg = sc.build_conflict_graph(b)
        sizes = {e: 5 for e in cycle.edges}
        for _, eid in cycle.pendant.values():
            sizes[eid] = 3
        rng = SplitMix64(n)
        for trial in range(200):
            palette = 6 + rng.below(7)
            L = ListAssignment({e: frozenset(rng.subset(k, palette)) for e, k in sizes.items()})
            pc = PartialColoring()
            stats = SolveStats()
            sc.extend_long_cycle(b, L, pc, cycle, cg=cg, stats=stats)
            assert_valid_strong(b, L, pc, total=True)
            assert stats.fallback_uses == 0

    def test_rejects_short_cycle(self):
        b = c6_gadget()
        cycle = sc.shortest_cycle(b)
        L = ListAssignment.uniform(range(9), 6)
        with pytest.raises(sc.InternalInvariant):
            sc.extend_long_cycle(b, L, PartialColoring(), cycle)


class TestColorStrong23:
    def test_k23_uses_six_distinct(self, k23):
        L = ListAssignment.uniform(range(6), 6)
        pc, stats = sc.color_strong_23(k23, L)
        assert_valid_strong(k23, L, pc, total=True)
        assert sorted(pc.assigned.values()) == [1, 2, 3, 4, 5, 6]
        assert stats.k23_base_cases == 1

    def test_edgeless(self):
        b = sc.BipartiteGraph(sc.build_multigraph(3, []), ["A", "B", "A"])
        pc, _ = sc.color_strong_23(b, ListAssignment({}))
        assert pc.assigned == {}

    def test_petersen_subdivision_random_lists_oracle_feasible(self):
        b = sc.subdivide(sc.named("petersen")).bipartite
        L = sc.random_lists(range(b.graph.edge_count), 6, 12, 2024)
        pc, stats = sc.color_strong_23(b, L)
        assert_valid_strong(b, L, pc, total=True)
        assert stats.long_cycle_extensions >= 1
        oracle = sc.backtrack_color(b, L, sc.OracleBudget(max_edges=30, max_nodes=10**7))
        assert oracle is not None

    def test_list_too_small(self, k23):
        with pytest.raises(sc.ListTooSmall):
            sc.color_strong_23(k23, ListAssignment.uniform(range(6), 5))

    def test_not_two_three(self):
        star = sc.build_multigraph(4, [(0, 1), (0, 2), (0, 3)])
        b = sc.BipartiteGraph(star, ["A", "B", "B", "B"])
        with pytest.raises(sc.NotTwoThree):
            sc.color_strong_23(b, ListAssignment.uniform(range(3), 6))

    def test_multiple_components(self):
        # two disjoint copies of K_{2,3}
        pairs = [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]
        shifted = [(u + 5, v + 5) for u, v in pairs]
        g = sc.build_multigraph(10, pairs + shifted)
        b = sc.BipartiteGraph(g, ["A"] * 3 + ["B"] * 2 + ["A"] * 3 + ["B"] * 2)
        L = ListAssignment.uniform(range(12), 6)
        pc, stats = sc.color_strong_23(b, L)
        assert_valid_strong(b, L, pc, total=True)
        assert stats.k23_base_cases == 2

    def test_deterministic_coloring_and_stats(self):
        b = sc.subdivide(sc.named("heawood")).bipartite
        L = sc.random_lists(range(b.graph.edge_count), 6, 12, 5)
        first = sc.color_strong_23(b, L)
        second = sc.color_strong_23(b, L)
        assert first[0].assigned == second[0].assigned
        assert first[1].as_dict() == second[1].as_dict()

    def test_every_color_from_own_list(self):
        rng = SplitMix64(88)
        for trial in range(50):
            b = rand_b23(3 + rng.below(12), 3 + rng.below(9), rng.next_u64())
            L = sc.random_lists(range(b.graph.edge_count), 6, 6 + rng.below(8), rng.next_u64())
            pc, _ = sc.color_strong_23(b, L)
            for e, c in pc.assigned.items():
                assert c in L[e]


class TestColorIncidence:
    def test_k4_at_most_six(self):
        g = sc.named("k4")
        coloring, _ = sc.color_incidence(g, sc.uniform_incidence_lists(g, 6))
        assert sc.verify_incidence(g, coloring, require_total=True) == []
        assert len(set(coloring.values())) <= 6

    def test_double_edge_multigraph(self):
        g = sc.named("double-edge")
        coloring, _ = sc.color_incidence(g, sc.uniform_incidence_lists(g, 6))
        assert sc.verify_incidence(g, coloring, require_total=True) == []

    def test_c5_valid_and_oracle_minimum(self):
        g = sc.build_multigraph(5, [(i, (i + 1) % 5) for i in range(5)])
        coloring, _ = sc.color_incidence(g, sc.uniform_incidence_lists(g, 6))
        assert sc.verify_incidence(g, coloring, require_total=True) == []
        assert sc.incidence_chromatic_number(g) == 4

    def test_degree_cap(self):
        k5 = sc.build_multigraph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        with pytest.raises(sc.DegreeTooHigh):
            sc.color_incidence(k5, sc.uniform_incidence_lists(k5, 6))

    def test_small_lists_rejected(self):
        g = sc.named("k4")
        with pytest.raises(sc.ListTooSmall):
            sc.color_incidence(g, sc.uniform_incidence_lists(g, 5))

    def test_random_cubic_transport(self):
        rng = SplitMix64(55)
        for trial in range(30):
            g = sc.random_cubic(4 + 2 * rng.below(10), rng.next_u64())
            lists = {
                inc: frozenset(rng.subset(6, 6 + rng.below(7))) for inc in g.incidences()
            }
            coloring, _ = sc.color_incidence(g, lists)
            assert sc.verify_incidence(g, coloring, lists, require_total=True) == []


class TestPathCoverage:
    def test_fixture_battery_drives_all_counters(self):
        total = SolveStats()
        for name in ("tree", "p4", "p5", "k23", "triple-edge", "domino", "k4", "petersen", "heawood"):
            fixture = sc.named(name)
            if isinstance(fixture, sc.BipartiteGraph):
                b = fixture
            else:
                b = sc.subdivide(fixture).bipartite
            L = ListAssignment.uniform(range(b.graph.edge_count), 6)
            _, stats = sc.color_strong_23(b, L)
            total.merge(stats)
        assert total.peeled_edges >= 1
        assert total.k23_base_cases >= 1
        assert total.c4_extensions >= 1
        assert total.c6_extensions >= 1
        assert total.long_cycle_extensions >= 1
        assert total.fallback_uses == 0
