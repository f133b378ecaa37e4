"""Shared fixtures: the named graph corpus and the exhaustive corpus of
connected bipartite graphs on up to 8 vertices (one representative per
isomorphism class)."""

from __future__ import annotations

from itertools import permutations

import pytest

import toricgraph as tg


def _g(n, edges):
    return tg.Graph.from_edges(n, edges)


def core_corpus() -> dict[str, tg.Graph]:
    corpus = {
        "k2": _g(2, [(1, 2)]),
        "path3": tg.path(3),
        "path4": tg.path(4),
        "path5": tg.path(5),
        "star3": tg.complete_bipartite(1, 3),
        "k23": tg.complete_bipartite(2, 3),
        "k33": tg.complete_bipartite(3, 3),
        "c3": tg.cycle(3),
        "c4": tg.cycle(4),
        "c5": tg.cycle(5),
        "c6": tg.cycle(6),
        "c7": tg.cycle(7),
        "c8": tg.cycle(8),
        "c9": tg.cycle(9),
        "paw": tg.whiskered_cycle([1, 0, 0]),
        "bull": tg.whiskered_cycle([1, 1, 0]),
        "whisk111": tg.whiskered_cycle([1, 1, 1]),
        "whisk112": tg.whiskered_cycle([1, 1, 2]),
        "whisk101": tg.whiskered_cycle([1, 0, 1]),
        "whisk00101": tg.whiskered_cycle([0, 0, 1, 0, 1]),
        "triangle_tail": _g(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]),
        "two_triangles": _g(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]),
        "linked_triangles": _g(
            7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 7), (4, 7)]
        ),
        "two_edges": _g(4, [(1, 2), (3, 4)]),
    }
    return corpus


@pytest.fixture(scope="session")
def corpus() -> dict[str, tg.Graph]:
    return core_corpus()


@pytest.fixture(scope="session")
def normal_corpus(corpus) -> dict[str, tg.Graph]:
    return {name: g for name, g in corpus.items() if tg.is_normal(g).normal}


# ---------------------------------------------------------------------------
# exhaustive connected bipartite graphs, n <= 8, up to isomorphism


def _connected_mask(rows, a, full_right) -> bool:
    left_reached = 1
    right_reached = rows[0]
    changed = True
    while changed:
        changed = False
        for i in range(1, a):
            if not (left_reached >> i) & 1 and rows[i] & right_reached:
                left_reached |= 1 << i
                right_reached |= rows[i]
                changed = True
    return left_reached == (1 << a) - 1 and right_reached == full_right


def _profile(rows, a, b):
    rdeg = [bin(r).count("1") for r in rows]
    cdeg = [sum((rows[i] >> j) & 1 for i in range(a)) for j in range(b)]
    rprof = sorted(
        (rdeg[i], tuple(sorted(cdeg[j] for j in range(b) if (rows[i] >> j) & 1)))
        for i in range(a)
    )
    cprof = sorted(
        (cdeg[j], tuple(sorted(rdeg[i] for i in range(a) if (rows[i] >> j) & 1)))
        for j in range(b)
    )
    return (a, b, sum(rdeg), tuple(rprof), tuple(cprof))


def _transpose(rows, a, b):
    return [
        sum(((rows[i] >> j) & 1) << i for i in range(a)) for j in range(b)
    ]


def _iso_oriented(rows1, rows2, a, b) -> bool:
    cols2 = sorted(
        tuple((rows2[i] >> j) & 1 for i in range(a)) for j in range(b)
    )
    for perm in permutations(range(a)):
        cols1 = sorted(
            tuple((rows1[perm[i]] >> j) & 1 for i in range(a)) for j in range(b)
        )
        if cols1 == cols2:
            return True
    return False


def _bipartite_iso(rows1, rows2, a, b) -> bool:
    if _iso_oriented(rows1, rows2, a, b):
        return True
    if a == b:
        return _iso_oriented(_transpose(rows1, a, b), rows2, a, b)
    return False


def enumerate_connected_bipartite(max_n: int) -> list[tg.Graph]:
    """One representative per isomorphism class of connected bipartite
    graphs with 2..max_n vertices and no isolated vertices."""
    reps: list[tg.Graph] = []
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[list[int]]] = {}
        for a in range(1, n // 2 + 1):
            b = n - a
            full_right = (1 << b) - 1
            for mask in range(1, 1 << (a * b)):
                rows = [(mask >> (i * b)) & full_right for i in range(a)]
                if any(r == 0 for r in rows):
                    continue
                covered = 0
                for r in rows:
                    covered |= r
                if covered != full_right:
                    continue
                if not _connected_mask(rows, a, full_right):
                    continue
                key = _profile(rows, a, b)
                if a == b:
                    key = min(key, _profile(_transpose(rows, a, b), a, b))
                bucket = buckets.setdefault(key, [])
                if any(_bipartite_iso(rows, other, a, b) for other in bucket):
                    continue
                bucket.append(rows)
                edges = [
                    (i + 1, a + j + 1)
                    for i in range(a)
                    for j in range(b)
                    if (rows[i] >> j) & 1
                ]
                reps.append(tg.Graph.from_edges(n, edges))
    return reps


@pytest.fixture(scope="session")
def bipartite_corpus() -> list[tg.Graph]:
    graphs = enumerate_connected_bipartite(8)
    # known counts per vertex number: 1, 1, 3, 5, 17, 44, 182
    by_n = {}
    for g in graphs:
        by_n[g.n] = by_n.get(g.n, 0) + 1
    assert by_n == {2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44, 8: 182}
    return graphs
