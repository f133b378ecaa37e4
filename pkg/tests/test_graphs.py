import itertools

import pytest

import toricgraph as tg
from toricgraph import oracle
from toricgraph.errors import GraphFormatError
from toricgraph.graphs import induced_cycles


class TestParse:
    def test_triangle(self):
        g = tg.parse_graph("1 2\n2 3\n1 3")
        assert g.n == 3
        assert g.edges == ((1, 2), (1, 3), (2, 3))

    def test_header_allows_extra_vertices(self):
        g = tg.parse_graph("n 4\n1 2\n3 4")
        assert g.n == 4
        assert tg.connected_components(g) == [[1, 2], [3, 4]]

    def test_comments_and_blank_lines(self):
        g = tg.parse_graph("# a triangle\n\n1 2  # first\n2 3\n1 3\n")
        assert g.n == 3

    def test_loop_edge(self):
        with pytest.raises(GraphFormatError, match="line 1.*loop"):
            tg.parse_graph("1 1")

    def test_duplicate_edge(self):
        with pytest.raises(GraphFormatError, match="line 3.*duplicate"):
            tg.parse_graph("1 2\n2 3\n2 1")

    def test_isolated_vertex(self):
        with pytest.raises(GraphFormatError, match="isolated vertex 3"):
            tg.parse_graph("n 3\n1 2")

    def test_non_positive_label(self):
        with pytest.raises(GraphFormatError, match="line 1.*non-positive"):
            tg.parse_graph("0 2")

    def test_malformed_line(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            tg.parse_graph("1 2\n3 4 5")

    def test_label_beyond_header(self):
        with pytest.raises(GraphFormatError, match="line 2.*exceeds"):
            tg.parse_graph("n 2\n1 3")

    def test_round_trip_family_text(self):
        g = tg.whiskered_cycle([3, 2, 1, 0, 1])
        assert tg.parse_graph(tg.edge_list_text(g)) == g


class TestComponentsAndBipartition:
    def test_components(self):
        assert tg.connected_components(tg.cycle(3)) == [[1, 2, 3]]
        g = tg.Graph.from_edges(4, [(1, 2), (3, 4)])
        assert tg.connected_components(g) == [[1, 2], [3, 4]]
        assert tg.connected_components(tg.cycle(6)) == [[1, 2, 3, 4, 5, 6]]

    def test_bipartition_even_cycles(self):
        res = tg.bipartition(tg.cycle(4))
        assert res.is_bipartite
        assert set(map(frozenset, res.parts)) == {frozenset({1, 3}), frozenset({2, 4})}
        res = tg.bipartition(tg.cycle(6))
        assert set(map(frozenset, res.parts)) == {
            frozenset({1, 3, 5}),
            frozenset({2, 4, 6}),
        }

    def test_odd_witness_walk(self):
        res = tg.bipartition(tg.cycle(3))
        assert not res.is_bipartite
        walk = res.odd_closed_walk
        assert walk[0] == walk[-1]
        assert (len(walk) - 1) % 2 == 1
        g = tg.cycle(3)
        for u, v in zip(walk, walk[1:]):
            assert g.has_edge(u, v)

    def test_bipartite_iff_no_induced_odd_cycle(self, corpus):
        for g in corpus.values():
            assert tg.bipartition(g).is_bipartite == (not tg.induced_odd_cycles(g))


class TestMinimalVertexCovers:
    def test_triangle(self):
        assert tg.minimal_vertex_covers(tg.cycle(3)) == [(1, 2), (1, 3), (2, 3)]

    def test_c6_contains_both_sizes(self):
        covers = tg.minimal_vertex_covers(tg.cycle(6))
        assert (1, 3, 5) in covers
        assert (1, 2, 4, 5) in covers

    def test_whiskered_triangle(self):
        covers = tg.minimal_vertex_covers(tg.whiskered_cycle([1, 1, 1]))
        assert len(covers) == 4
        assert all(len(c) == 3 for c in covers)
        assert (1, 2, 3) in covers

    def test_cover_and_minimality(self, corpus):
        from toricgraph.graphs import is_minimal_vertex_cover, is_vertex_cover

        for g in corpus.values():
            for c in tg.minimal_vertex_covers(g):
                assert is_vertex_cover(g, c)
                assert is_minimal_vertex_cover(g, c)

    def test_matches_subset_oracle(self, corpus):
        for name, g in corpus.items():
            if g.n <= 12:
                assert tg.minimal_vertex_covers(g) == oracle.brute_minimal_covers(g), name

    def test_whisker_cover_dichotomy(self):
        # in a minimal cover, a whiskered cycle vertex is either present or
        # all of its whiskers are
        for counts in [(1, 1, 1), (2, 0, 1), (1, 1, 2), (3, 2, 1, 0, 1), (0, 2, 0, 1, 0)]:
            g = tg.whiskered_cycle(list(counts))
            k = len(counts)
            whiskers = {}
            nxt = k + 1
            for i, a in enumerate(counts, start=1):
                whiskers[i] = list(range(nxt, nxt + a))
                nxt += a
            for cover in tg.minimal_vertex_covers(g):
                cset = set(cover)
                for i, a in enumerate(counts, start=1):
                    if a == 0:
                        continue
                    if i in cset:
                        assert not (cset & set(whiskers[i]))
                    else:
                        assert set(whiskers[i]) <= cset


class TestUnmixed:
    def test_examples(self):
        assert tg.is_unmixed(tg.cycle(5)) == (True, (3, 3, 3, 3, 3))
        unmixed, sizes = tg.is_unmixed(tg.cycle(6))
        assert not unmixed
        assert {3, 4} <= set(sizes)
        unmixed, sizes = tg.is_unmixed(tg.cycle(9))
        assert not unmixed
        assert {5, 6} <= set(sizes)


class TestInducedCycles:
    def test_cycle_is_its_own_witness(self):
        assert tg.induced_odd_cycles(tg.cycle(5)) == [(1, 2, 3, 4, 5)]
        assert tg.induced_odd_cycles(tg.cycle(4)) == []

    def test_two_triangles_linked_by_path(self, corpus):
        cycles = tg.induced_odd_cycles(corpus["linked_triangles"])
        assert cycles == [(1, 2, 3), (4, 5, 6)]

    def test_exhaustive_chordless_search(self):
        # cross-check against brute-force enumeration over vertex subsets
        graphs = [
            tg.cycle(6),
            tg.whiskered_cycle([1, 1, 0]),
            tg.Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (2, 5)]),
            tg.complete_bipartite(2, 3),
        ]
        for g in graphs:
            expected = _brute_chordless_cycles(g)
            assert sorted(induced_cycles(g), key=lambda c: (len(c), c)) == expected

    def test_canonical_rotation(self):
        for c in induced_cycles(tg.complete_bipartite(3, 3)):
            assert c[0] == min(c)
            assert c[1] < c[-1]


def _brute_chordless_cycles(g):
    found = []
    for size in range(3, g.n + 1):
        for subset in itertools.combinations(g.vertices, size):
            sub_edges = [
                (u, v) for u, v in g.edges if u in subset and v in subset
            ]
            if len(sub_edges) != size:
                continue
            deg = {v: 0 for v in subset}
            for u, v in sub_edges:
                deg[u] += 1
                deg[v] += 1
            if any(d != 2 for d in deg.values()):
                continue
            adj = {v: set() for v in subset}
            for u, v in sub_edges:
                adj[u].add(v)
                adj[v].add(u)
            # connectivity of the 2-regular subgraph means a single cycle
            seen = {subset[0]}
            stack = [subset[0]]
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != size:
                continue
            start = min(subset)
            nbrs = sorted(adj[start])
            cyc = [start, nbrs[0]]
            while len(cyc) < size:
                nxt = (adj[cyc[-1]] - {cyc[-2]}).pop()
                cyc.append(nxt)
            found.append(tuple(cyc))
    return sorted(found, key=lambda c: (len(c), c))


class TestOddCycleCondition:
    def test_examples(self, corpus):
        assert tg.odd_cycle_condition(tg.cycle(3))
        assert not tg.odd_cycle_condition(corpus["linked_triangles"])
        assert tg.odd_cycle_condition(tg.cycle(6))

    def test_requires_connected(self, corpus):
        with pytest.raises(ValueError):
            tg.odd_cycle_condition(corpus["two_triangles"])


class TestUnicyclic:
    def test_examples(self):
        assert tg.is_unicyclic(tg.whiskered_cycle([3, 2, 1, 0, 1]))
        assert tg.is_unicyclic(tg.cycle(4))
        assert not tg.is_unicyclic(tg.path(3))
        assert not tg.is_unicyclic(tg.Graph.from_edges(4, [(1, 2), (3, 4)]))


class TestDominatedOddCycleCondition:
    def test_examples(self, corpus):
        assert tg.dominated_odd_cycle_condition(tg.whiskered_cycle([2, 1, 0]))
        assert tg.dominated_odd_cycle_condition(tg.whiskered_cycle([1, 1, 1, 0, 2]))
        assert not tg.dominated_odd_cycle_condition(corpus["triangle_tail"])
        assert not tg.dominated_odd_cycle_condition(tg.cycle(4))


class TestWhiskeredRecognition:
    def test_figure_graph(self):
        g = tg.whiskered_cycle([3, 2, 1, 0, 1])
        assert g.n == 12
        shape = tg.recognize_whiskered_cycle(g)
        assert shape is not None
        assert shape.k == 5
        # least rotation/reflection of (3, 2, 1, 0, 1)
        assert shape.whisker_counts == (0, 1, 2, 3, 1)

    def test_bare_cycle(self):
        shape = tg.recognize_whiskered_cycle(tg.cycle(5))
        assert shape.k == 5
        assert shape.whisker_counts == (0, 0, 0, 0, 0)

    def test_pendant_path_is_not_whiskered(self, corpus):
        assert tg.recognize_whiskered_cycle(corpus["triangle_tail"]) is None

    def test_other_non_examples(self, corpus):
        assert tg.recognize_whiskered_cycle(tg.path(4)) is None
        assert tg.recognize_whiskered_cycle(corpus["k2"]) is None
        assert tg.recognize_whiskered_cycle(corpus["two_triangles"]) is None
        assert tg.recognize_whiskered_cycle(tg.complete_bipartite(2, 3)) is None

    def test_vertex_map_is_isomorphism(self):
        for counts in [(1, 1, 1), (3, 2, 1, 0, 1), (0, 0, 2), (2, 0, 0, 1)]:
            g = tg.whiskered_cycle(list(counts))
            shape = tg.recognize_whiskered_cycle(g)
            abstract = tg.whiskered_cycle(list(shape.whisker_counts))
            vmap = shape.vertex_map
            mapped = {
                tuple(sorted((vmap[u - 1], vmap[v - 1]))) for u, v in abstract.edges
            }
            assert mapped == set(g.edges)

    def test_round_trip_canonical(self):
        # every type with k <= 9 and at most 6 whiskers is recognized, up
        # to rotation and reflection
        seen = set()
        for k in range(3, 10):
            for counts in _compositions_up_to(k, 6):
                canon = _canonical(counts)
                if canon in seen:
                    continue
                seen.add(canon)
                shape = tg.recognize_whiskered_cycle(tg.whiskered_cycle(list(counts)))
                assert shape is not None
                assert shape.k == k
                assert shape.whisker_counts == canon


def _compositions_up_to(k, total):
    def rec(prefix, slots, budget):
        if slots == 0:
            yield tuple(prefix)
            return
        for a in range(budget + 1):
            yield from rec(prefix + [a], slots - 1, budget - a)

    yield from rec([], k, total)


def _canonical(counts):
    k = len(counts)
    candidates = []
    for seq in (list(counts), list(counts)[::-1]):
        for shift in range(k):
            candidates.append(tuple(seq[shift:] + seq[:shift]))
    return min(candidates)
