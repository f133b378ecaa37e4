"""Finite simple graphs and the combinatorial predicates feeding the
polyhedral computations: vertex covers, bipartitions, induced odd cycles,
whiskered-cycle recognition.

Vertices are labelled 1..n throughout.  Graphs never contain isolated
vertices; the parser and the constructor both enforce this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphFormatError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n with no isolated vertices."""

    n: int
    edges: tuple[Edge, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {n}")
        normalized = []
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphFormatError(f"loop edge at vertex {u}")
            if u > v:
                u, v = v, u
            if not (1 <= u and v <= n):
                raise GraphFormatError(f"edge {{{u},{v}}} out of range 1..{n}")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))
            normalized.append((u, v))
        covered = {w for e in normalized for w in e}
        for w in range(1, n + 1):
            if w not in covered:
                raise GraphFormatError(f"isolated vertex {w}")
        return Graph(n, tuple(sorted(normalized)))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    An optional first significant line ``n <count>`` declares the vertex
    count; otherwise it is the maximum label seen.  Every other significant
    line is ``u v``.  ``#`` starts a comment, tokens are whitespace
    separated.  All validation failures carry the offending line number
    where one exists.
    """
    declared_n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    first_significant = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first_significant and tokens[0] == "n":
            first_significant = False
            if len(tokens) != 2:
                raise GraphFormatError("header must be 'n <count>'", lineno)
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(
                    f"header count {tokens[1]!r} is not an integer", lineno
                ) from None
            if declared_n < 1:
                raise GraphFormatError(
                    f"vertex count must be positive, got {declared_n}", lineno
                )
            continue
        first_significant = False
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex label in {line!r}", lineno) from None
        if u < 1 or v < 1:
            raise GraphFormatError(f"non-positive vertex label in {line!r}", lineno)
        if u == v:
            raise GraphFormatError(f"loop edge at vertex {u}", lineno)
        if declared_n is not None and max(u, v) > declared_n:
            raise GraphFormatError(
                f"vertex label {max(u, v)} exceeds declared count {declared_n}", lineno
            )
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge {{{u},{v}}}", lineno)
        seen.add((u, v))
        edges.append((u, v))
    if not edges:
        raise GraphFormatError("no edges given")
    n = declared_n if declared_n is not None else max(v for e in edges for v in e)
    return Graph.from_edges(n, edges)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by
    their minimum element."""
    unseen = set(g.vertices)
    comps = []
    while unseen:
        root = min(unseen)
        stack = [root]
        comp = {root}
        unseen.discard(root)
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if w in unseen:
                    unseen.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return sorted(comps, key=lambda c: c[0])


@dataclass(frozen=True)
class BipartitionResult:
    """Either a proper 2-coloring or an odd closed walk certifying that
    none exists."""

    parts: tuple[frozenset[int], frozenset[int]] | None
    odd_closed_walk: tuple[int, ...] | None

    @property
    def is_bipartite(self) -> bool:
        return self.parts is not None


def bipartition(g: Graph) -> BipartitionResult:
    """Two-color the graph or exhibit a closed walk of odd length.

    The walk is built from the BFS tree as soon as an edge joins two
    vertices of equal depth parity; vertices may repeat, the edge steps are
    all real edges and the length is odd.
    """
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    for comp in connected_components(g):
        root = comp[0]
        color[root] = 0
        parent[root] = None
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.adjacency[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    walk = _odd_walk(v, w, parent)
                    return BipartitionResult(parts=None, odd_closed_walk=walk)
    part0 = frozenset(v for v, c in color.items() if c == 0)
    part1 = frozenset(v for v, c in color.items() if c == 1)
    return BipartitionResult(parts=(part0, part1), odd_closed_walk=None)


def _odd_walk(u: int, w: int, parent: dict[int, int | None]) -> tuple[int, ...]:
    def to_root(x):
        path = [x]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    up = to_root(u)  # u .. root
    down = to_root(w)[::-1]  # root .. w
    return tuple(up + down[1:] + [u])


def is_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    cover = set(cover)
    return all(u in cover or v in cover for u, v in g.edges)


def is_minimal_vertex_cover(g: Graph, cover: Iterable[int]) -> bool:
    cover = set(cover)
    if not is_vertex_cover(g, cover):
        return False
    return all(not is_vertex_cover(g, cover - {v}) for v in cover)


def minimal_vertex_covers(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-minimal vertex covers, each sorted, the list in
    lexicographic order.

    A set is a minimal cover exactly when its complement is a maximal
    independent set, so we run pivoting Bron-Kerbosch on the complement
    graph and complement its maximal cliques.
    """
    verts = set(g.vertices)
    comp_adj = {v: verts - g.adjacency[v] - {v} for v in verts}
    independent: list[frozenset[int]] = []

    def expand(clique: set[int], candidates: set[int], excluded: set[int]):
        if not candidates and not excluded:
            independent.append(frozenset(clique))
            return
        pivot = max(candidates | excluded, key=lambda v: len(comp_adj[v] & candidates))
        for v in sorted(candidates - comp_adj[pivot]):
            expand(clique | {v}, candidates & comp_adj[v], excluded & comp_adj[v])
            candidates.discard(v)
            excluded.add(v)

    expand(set(), set(verts), set())
    covers = [tuple(sorted(verts - ind)) for ind in independent]
    return sorted(covers)


def is_unmixed(g: Graph) -> tuple[bool, tuple[int, ...]]:
    """Whether all minimal vertex covers share one cardinality, plus the
    multiset of cover sizes (sorted)."""
    sizes = tuple(sorted(len(c) for c in minimal_vertex_covers(g)))
    return len(set(sizes)) <= 1, sizes


def induced_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All chordless cycles, each rotated canonically: minimal vertex
    first, then its smaller cycle neighbor.

    DFS over chordless paths anchored at the cycle's minimal vertex; the
    worst case is exponential, which is acceptable at desk scale (n up to
    roughly 16).
    """
    adj = g.adjacency
    out: list[tuple[int, ...]] = []

    def extend(path: list[int], members: set[int], start: int):
        last = path[-1]
        for x in sorted(adj[last]):
            if x <= start or x in members:
                continue
            inner = set(adj[x] & members)
            inner.discard(last)
            if not inner:
                path.append(x)
                members.add(x)
                extend(path, members, start)
                members.discard(x)
                path.pop()
            elif inner == {start} and len(path) >= 2 and path[1] < x:
                out.append(tuple(path) + (x,))

    for start in g.vertices:
        extend([start], {start}, start)
    return sorted(out, key=lambda c: (len(c), c))


def induced_odd_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Chordless cycles of odd length, canonically rotated."""
    return [c for c in induced_cycles(g) if len(c) % 2 == 1]


def _cycles_linked(g: Graph, c1: Sequence[int], c2: Sequence[int]) -> bool:
    s1, s2 = set(c1), set(c2)
    if s1 & s2:
        return True
    return any(g.adjacency[u] & s2 for u in s1)


def odd_cycle_condition(g: Graph) -> bool:
    """Every pair of induced odd cycles shares a vertex or is joined by an
    edge.  Requires a connected graph."""
    if len(connected_components(g)) != 1:
        raise ValueError("odd cycle condition is defined for connected graphs")
    cycles = induced_odd_cycles(g)
    return all(
        _cycles_linked(g, c1, c2) for c1, c2 in itertools.combinations(cycles, 2)
    )


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly one cycle, i.e. |E| = |V|."""
    return len(connected_components(g)) == 1 and len(g.edges) == g.n


def dominated_odd_cycle_condition(g: Graph) -> bool:
    """Non-bipartite, and every vertex off any induced odd cycle has a
    neighbor on that cycle.  Requires a connected graph."""
    if len(connected_components(g)) != 1:
        raise ValueError("dominated odd cycle condition is defined for connected graphs")
    cycles = induced_odd_cycles(g)
    if not cycles:
        return False
    for cycle in cycles:
        on_cycle = set(cycle)
        for v in g.vertices:
            if v not in on_cycle and not (g.adjacency[v] & on_cycle):
                return False
    return True


@dataclass(frozen=True)
class WhiskeredShape:
    """A graph recognized as a cycle of length k with pendant vertices
    ("whiskers") attached to its cycle vertices.

    ``whisker_counts`` is canonical: the lexicographically least sequence
    over all rotations and reflections.  ``vertex_map[i]`` is the concrete
    vertex playing the role of abstract vertex i+1, where the abstract
    graph labels the cycle 1..k and then appends whiskers in cycle order.
    """

    k: int
    whisker_counts: tuple[int, ...]
    vertex_map: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.k + sum(self.whisker_counts)


def recognize_whiskered_cycle(g: Graph) -> WhiskeredShape | None:
    """Match the graph against the whiskered-cycle shape, structurally.

    Degree-1 vertices must be pendant on a single chordless cycle formed by
    all remaining vertices; no generic isomorphism search is involved.
    """
    leaves = {v for v in g.vertices if g.degree(v) == 1}
    core = [v for v in g.vertices if v not in leaves]
    k = len(core)
    if k < 3:
        return None
    core_set = set(core)
    for v in leaves:
        (nbr,) = g.adjacency[v]
        if nbr not in core_set:
            return None
    core_nbrs = {}
    for v in core:
        inner = g.adjacency[v] & core_set
        if len(inner) != 2:
            return None
        core_nbrs[v] = inner
    # walk the 2-regular core; it must close up through all k vertices
    start = min(core)
    cycle = [start, min(core_nbrs[start])]
    while len(cycle) < k:
        prev, cur = cycle[-2], cycle[-1]
        (nxt,) = core_nbrs[cur] - {prev}
        if nxt in cycle:
            return None
        cycle.append(nxt)
    if cycle[0] not in core_nbrs[cycle[-1]]:
        return None

    whiskers = {v: sorted(g.adjacency[v] & leaves) for v in cycle}

    def counts_for(order):
        return tuple(len(whiskers[v]) for v in order)

    best = None
    for rotated in _rotations_and_reflections(cycle):
        key = (counts_for(rotated), tuple(rotated))
        if best is None or key < best:
            best = key
    counts, order = best
    vmap = list(order)
    for v in order:
        vmap.extend(whiskers[v])
    return WhiskeredShape(k=k, whisker_counts=counts, vertex_map=tuple(vmap))


def _rotations_and_reflections(cycle: Sequence[int]):
    k = len(cycle)
    for direction in (list(cycle), list(cycle)[::-1]):
        for shift in range(k):
            yield direction[shift:] + direction[:shift]
