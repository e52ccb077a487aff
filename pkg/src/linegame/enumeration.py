"""Exhaustive generation of small graphs up to isomorphism.

Graphs are grown one edge at a time and deduplicated by canonical form.
Nothing clever, but it is exact and the sizes involved are small
(156 graphs on 6 vertices, 1044 on 7).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph import Graph, build_graph, canonical_form, empty_graph, is_connected


def _grow(n: int, g: Graph, seen: set[bytes]) -> list[Graph]:
    out = []
    for u, v in combinations(range(n), 2):
        if g.has_edge(u, v):
            continue
        h = build_graph(n, list(g.edges) + [(u, v)])
        key = canonical_form(h)
        if key not in seen:
            seen.add(key)
            out.append(h)
    return out


def graphs_on(n: int) -> list[Graph]:
    """One representative of every graph on exactly ``n`` vertices, by edge count."""
    level = [empty_graph(n)]
    out = list(level)
    while level:
        seen: set[bytes] = set()
        nxt = []
        for g in level:
            nxt.extend(_grow(n, g, seen))
        out.extend(nxt)
        level = nxt
    return out


def graphs_up_to(max_vertices: int, min_vertices: int = 1) -> Iterator[Graph]:
    for n in range(min_vertices, max_vertices + 1):
        yield from graphs_on(n)


def connected_graphs_up_to(max_vertices: int) -> Iterator[Graph]:
    return (g for g in graphs_up_to(max_vertices) if is_connected(g))


def isofree_graphs(max_edges: int) -> Iterator[Graph]:
    """Graphs without isolated vertices and with 1..max_edges edges.

    A graph with m edges arises from one with m - 1 edges by adding an edge
    between old vertices, from an old vertex to a new one, or between two
    new vertices.
    """
    level = [empty_graph(0)]
    for _ in range(max_edges):
        seen: set[bytes] = set()
        nxt = []
        for g in level:
            n = g.n
            cands = [(u, v, n) for u, v in combinations(range(n), 2) if not g.has_edge(u, v)]
            cands += [(u, n, n + 1) for u in range(n)]
            cands.append((n, n + 1, n + 2))
            for u, v, size in cands:
                h = build_graph(size, list(g.edges) + [(u, v)])
                key = canonical_form(h)
                if key not in seen:
                    seen.add(key)
                    nxt.append(h)
        yield from nxt
        level = nxt
