"""Subgraph containment by backtracking, and the Beineke line-graph test.

Patterns here are tiny (at most a dozen or so edges), so a plain
backtracking search with degree pruning is enough.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


class PatternError(GraphError):
    pass


@dataclass(frozen=True)
class Embedding:
    vertex_map: tuple[int, ...]  # pattern vertex -> host vertex
    edge_map: tuple[int, ...]  # pattern edge -> host edge

    def host_edges(self) -> list[int]:
        return sorted(self.edge_map)


def _search_order(p: Graph) -> list[int]:
    order: list[int] = []
    placed = [False] * p.n
    adj = [set(p.neighbours(v)) for v in range(p.n)]
    while len(order) < p.n:
        # new component: start at its highest-degree vertex
        start = max((v for v in range(p.n) if not placed[v]), key=lambda v: (len(adj[v]), -v))
        order.append(start)
        placed[start] = True
        while True:
            frontier = [v for v in range(p.n) if not placed[v] and any(placed[w] for w in adj[v])]
            if not frontier:
                break
            nxt = max(frontier, key=lambda v: (sum(placed[w] for w in adj[v]), len(adj[v]), -v))
            order.append(nxt)
            placed[nxt] = True
    return order


def _embed(host: Graph, pattern: Graph, induced: bool) -> Embedding | None:
    if pattern.n > host.n or pattern.m > host.m:
        return None
    hadj = [set(host.neighbours(v)) for v in range(host.n)]
    padj = [set(pattern.neighbours(v)) for v in range(pattern.n)]
    hdeg = [len(a) for a in hadj]
    # same size and induced: this is an isomorphism test, so degrees must match
    exact = induced and pattern.n == host.n and pattern.m == host.m
    order = _search_order(pattern)
    mapping = [-1] * pattern.n
    used = [False] * host.n

    def candidates(p: int):
        anchor = next((q for q in padj[p] if mapping[q] >= 0), None)
        pool = sorted(hadj[mapping[anchor]]) if anchor is not None else range(host.n)
        need = len(padj[p])
        for h in pool:
            if used[h] or hdeg[h] < need or (exact and hdeg[h] != need):
                continue
            ok = True
            for q in padj[p]:
                if mapping[q] >= 0 and mapping[q] not in hadj[h]:
                    ok = False
                    break
            if ok and induced:
                for q, hq in enumerate(mapping):
                    if hq >= 0 and q not in padj[p] and hq in hadj[h]:
                        ok = False
                        break
            if ok:
                yield h

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        for h in candidates(p):
            mapping[p] = h
            used[h] = True
            if rec(i + 1):
                return True
            used[h] = False
            mapping[p] = -1
        return False

    if not rec(0):
        return None
    emap = []
    for a, b in pattern.edges:
        e = host.edge_id(mapping[a], mapping[b])
        assert e is not None
        emap.append(e)
    return Embedding(tuple(mapping), tuple(emap))


def contains_edge_induced(host: Graph, pattern: Graph) -> Embedding | None:
    """Embedding of ``pattern`` as an edge-induced subgraph of ``host``.

    For an iso-free pattern this is ordinary (not necessarily induced)
    subgraph containment: choosing an edge subset says nothing about the
    host edges left out.
    """
    if pattern.isolated_vertices():
        raise PatternError("edge-induced patterns must not have isolated vertices")
    return _embed(host, pattern, induced=False)


def contains_vertex_induced(host: Graph, pattern: Graph) -> Embedding | None:
    """Embedding preserving both adjacency and non-adjacency."""
    return _embed(host, pattern, induced=True)


def is_line_graph(g: Graph) -> tuple[bool, tuple[str, Embedding] | None]:
    """Beineke test: ``(True, None)`` or ``(False, (name, embedding))``."""
    from .catalog import beineke_graphs

    for name, pattern in beineke_graphs().items():
        emb = contains_vertex_induced(g, pattern)
        if emb is not None:
            return False, (name, emb)
    return True, None
