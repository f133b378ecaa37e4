"""Generators for the named graph families used throughout: cycles,
whiskered cycles, complete bipartite graphs and paths.

Labelling is deterministic: cycle vertices come first as 1..k, whiskers are
appended in cycle order, a complete bipartite graph lists its left part
first, paths run 1..k.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"cycle length must be at least 3, got {k}")
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return Graph.from_edges(k, edges)


def path(k: int) -> Graph:
    if k < 2:
        raise ValueError(f"path needs at least 2 vertices, got {k}")
    return Graph.from_edges(k, [(i, i + 1) for i in range(1, k)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite parts must be nonempty")
    edges = [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)]
    return Graph.from_edges(m + n, edges)


def whiskered_cycle(counts: Sequence[int]) -> Graph:
    """Cycle of length k = len(counts) with counts[i] pendant vertices
    attached to the (i+1)-st cycle vertex."""
    k = len(counts)
    if k < 3:
        raise ValueError(f"whiskered cycle needs at least 3 cycle vertices, got {k}")
    if any(a < 0 for a in counts):
        raise ValueError("whisker counts must be nonnegative")
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    nxt = k + 1
    for i, a in enumerate(counts, start=1):
        for _ in range(a):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edges(k + sum(counts), edges)


def edge_list_text(g: Graph) -> str:
    """Serialize a graph in the edge-list format, header included."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
