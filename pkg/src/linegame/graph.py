"""Simple undirected graphs with stable integer vertex and edge ids.

A :class:`Graph` is immutable. Vertices are ``0..n-1``; edges are numbered
in the order they were supplied, and every query iterates in that order so
that solver runs and transcripts are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence


class GraphError(ValueError):
    """Base class for malformed graph input."""


class LoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class EdgeIdError(GraphError):
    pass


class GraphTooLargeError(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    incident: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self.incident]

    def neighbours(self, v: int) -> list[int]:
        out = []
        for e in self.incident[v]:
            a, b = self.edges[e]
            out.append(b if a == v else a)
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def edge_id(self, u: int, v: int) -> int | None:
        for e in self.incident[u]:
            a, b = self.edges[e]
            if (a == v) or (b == v):
                return e
        return None

    def adjacent_edges(self, e: int) -> list[int]:
        """Edges sharing an endpoint with ``e``, in increasing id order."""
        a, b = self.edges[e]
        out = {f for f in self.incident[a] if f != e}
        out.update(f for f in self.incident[b] if f != e)
        return sorted(out)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.incident[v]]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def build_graph(n_vertices: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a graph; edge ids follow the order of ``edge_list``.

    Raises :class:`LoopError`, :class:`DuplicateEdgeError` or
    :class:`VertexRangeError` on malformed input.
    """
    if n_vertices < 0:
        raise VertexRangeError(f"negative vertex count {n_vertices}")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    incident: list[list[int]] = [[] for _ in range(n_vertices)]
    for pair in edge_list:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n_vertices - 1}")
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        incident[u].append(len(edges))
        incident[v].append(len(edges))
        edges.append(key)
    return Graph(n_vertices, tuple(edges), tuple(tuple(i) for i in incident))


def empty_graph(n: int = 0) -> Graph:
    return build_graph(n, [])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``; edge order is kept."""
    return build_graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((a + offset, b + offset) for a, b in g.edges)
        offset += g.n
    return build_graph(offset, edges)


def line_graph(g: Graph) -> tuple[Graph, list[int]]:
    """Line graph of ``g`` and the map edge id of ``g`` -> vertex id of L(g).

    Vertex ``i`` of the result is edge ``i`` of ``g``, so the map is the
    identity; it is returned for callers that compose maps.
    """
    pairs = []
    for e in range(g.m):
        for f in g.adjacent_edges(e):
            if f > e:
                pairs.append((e, f))
    return build_graph(g.m, pairs), list(range(g.m))


def max_degree(g: Graph) -> int:
    return max((len(i) for i in g.incident), default=0)


def omega_line(g: Graph) -> int:
    """Clique number of L(g), read off the degrees (Whitney)."""
    if g.m == 0:
        return 0
    delta = max_degree(g)
    if delta >= 3:
        return delta
    if delta == 2 and _has_triangle_component(g):
        return 3
    return delta


def _has_triangle_component(g: Graph) -> bool:
    for comp in components(g):
        h = comp.graph
        if h.n == 3 and h.m == 3:
            return True
    return False


class Component(NamedTuple):
    graph: Graph
    vertices: list[int]  # local vertex id -> id in the parent graph
    edges: list[int]  # local edge id -> id in the parent graph


def components(g: Graph) -> list[Component]:
    """Connected components, ordered by smallest vertex; isolated vertices kept."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        verts = []
        while stack:
            v = stack.pop()
            verts.append(v)
            for w in g.neighbours(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        verts.sort()
        local = {v: i for i, v in enumerate(verts)}
        eids = sorted({e for v in verts for e in g.incident[v]})
        h = build_graph(len(verts), [(local[g.edges[e][0]], local[g.edges[e][1]]) for e in eids])
        out.append(Component(h, verts, eids))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[frozenset[int]]
    cut_vertices: frozenset[int]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected blocks as edge-id sets (bridges are singleton blocks)."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    out: list[frozenset[int]] = []
    cuts: set[int] = set()
    edge_stack: list[int] = []

    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # frames: (vertex, parent edge, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            inc = g.incident[v]
            if i < len(inc):
                stack[-1] = (v, pe, i + 1)
                e = inc[i]
                if e == pe:
                    continue
                a, b = g.edges[e]
                w = b if a == v else a
                if disc[w] == -1:
                    edge_stack.append(e)
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, e, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    continue
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cuts.add(u)
                    block = set()
                    while True:
                        f = edge_stack.pop()
                        block.add(f)
                        if f == pe:
                            break
                    out.append(frozenset(block))
        if root_children >= 2:
            cuts.add(root)
    out.sort(key=min)
    return BlockDecomposition(out, frozenset(cuts))


def edge_subgraph_maps(g: Graph, edge_ids: Iterable[int]) -> tuple[Graph, list[int], list[int]]:
    ids = sorted(set(edge_ids))
    for e in ids:
        if not 0 <= e < g.m:
            raise EdgeIdError(f"no edge with id {e}")
    verts = sorted({x for e in ids for x in g.edges[e]})
    local = {v: i for i, v in enumerate(verts)}
    h = build_graph(len(verts), [(local[g.edges[e][0]], local[g.edges[e][1]]) for e in ids])
    return h, verts, ids


def edge_subgraph(g: Graph, edge_ids: Iterable[int]) -> Graph:
    """The graph formed by the chosen edges and their endpoints."""
    return edge_subgraph_maps(g, edge_ids)[0]


def induced_subgraph(g: Graph, vertex_ids: Iterable[int]) -> Graph:
    verts = sorted(set(vertex_ids))
    local = {v: i for i, v in enumerate(verts)}
    return build_graph(len(verts), [(local[a], local[b]) for a, b in g.edges if a in local and b in local])


def delete_edge(g: Graph, e: int) -> Graph:
    """``g - e`` keeping all vertices (ids unchanged)."""
    return build_graph(g.n, [p for i, p in enumerate(g.edges) if i != e])


def strip_isolated(g: Graph) -> Graph:
    return edge_subgraph(g, range(g.m))


def complement(g: Graph) -> Graph:
    return build_graph(g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)])


# --- canonical forms -------------------------------------------------------

CANONICAL_MAX_VERTICES = 12  # per connected component


def refine(g: Graph, initial: Sequence[int] | None = None) -> list[int]:
    """Colour refinement (1-WL) with isomorphism-invariant colour names."""
    colours = list(initial) if initial is not None else [0] * g.n
    adj = [g.neighbours(v) for v in range(g.n)]
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in adj[v]))) for v in range(g.n)]
        names = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [names[s] for s in sigs]
        if len(names) == len(set(colours)):
            return new
        colours = new


def _twins_below(g: Graph) -> list[list[int]]:
    # u and v are twins when N(u) - {v} == N(v) - {u}; swapping them is an automorphism
    groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        nb = frozenset(g.neighbours(v))
        groups.setdefault(("open", nb), []).append(v)
        groups.setdefault(("closed", nb | {v}), []).append(v)
    below: list[list[int]] = [[] for _ in range(g.n)]
    for members in groups.values():
        for i, v in enumerate(members):
            below[v].extend(members[:i])
    return below


def _canonical_connected(g: Graph) -> bytes:
    n = g.n
    colours = refine(g, g.degrees())
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colours[v], []).append(v)
    order_cells = [cells[c] for c in sorted(cells)]
    adj = [0] * n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    twins = _twins_below(g)

    # slot i of the final ordering is filled from cell slot_cell[i]
    slot_cell = [ci for ci, cell in enumerate(order_cells) for _ in cell]
    best: list[tuple[int, ...]] = [None]  # type: ignore[list-item]
    chosen: list[int] = []
    code: list[int] = []
    used = [False] * n

    def rec(i: int) -> None:
        if i == n:
            t = tuple(code)
            if best[0] is None or t < best[0]:
                best[0] = t
            return
        for v in order_cells[slot_cell[i]]:
            if used[v] or any(not used[u] for u in twins[v]):
                continue
            row = 0
            for j, u in enumerate(chosen):
                if adj[v] >> u & 1:
                    row |= 1 << j
            code.append(row)
            if best[0] is not None and tuple(code) > best[0][: i + 1]:
                code.pop()
                continue
            used[v] = True
            chosen.append(v)
            rec(i + 1)
            chosen.pop()
            used[v] = False
            code.pop()

    rec(0)
    header = bytes([n]) + bytes(len(c) for c in order_cells) + b"|"
    body = b"".join(x.to_bytes(2, "big") for x in best[0] or ())
    return header + body


def canonical_form(g: Graph) -> bytes:
    """Byte string that is equal for two graphs iff they are isomorphic.

    Each component is coded separately: vertices are split into cells by
    colour refinement and the adjacency code is minimised over cell-respecting
    orderings, with prefix pruning and twins kept in a fixed order. Component
    codes are then sorted. Components are limited to
    :data:`CANONICAL_MAX_VERTICES` vertices.
    """
    codes = []
    for c in components(g):
        if c.graph.n > CANONICAL_MAX_VERTICES:
            raise GraphTooLargeError(
                f"canonical_form supports components of at most {CANONICAL_MAX_VERTICES} vertices"
            )
        code = _canonical_connected(c.graph)
        codes.append(len(code).to_bytes(2, "big") + code)
    return b"".join(sorted(codes))


def automorphisms(g: Graph, limit: int | None = None) -> list[tuple[int, ...]]:
    """Vertex automorphisms of ``g`` (identity first), at most ``limit`` of them.

    A truncated list is still a set of genuine automorphisms, which is all
    the solver needs for sound symmetry reduction.
    """
    n = g.n
    colours = refine(g, g.degrees())
    nbrs = [set(g.neighbours(v)) for v in range(n)]
    image = [-1] * n
    taken = [False] * n
    out: list[tuple[int, ...]] = []

    def rec(v: int) -> bool:
        if v == n:
            out.append(tuple(image))
            return limit is not None and len(out) >= limit
        # try the identity first so it is always found
        for w in [v] + [u for u in range(n) if u != v]:
            if taken[w] or colours[w] != colours[v]:
                continue
            if any((image[u] in nbrs[w]) != (u in nbrs[v]) for u in range(v)):
                continue
            image[v] = w
            taken[w] = True
            stop = rec(v + 1)
            taken[w] = False
            image[v] = -1
            if stop:
                return True
        return False

    rec(0)
    return out


def edge_automorphisms(g: Graph, limit: int | None = None) -> list[tuple[int, ...]]:
    """Edge permutations induced by vertex automorphisms, deduplicated."""
    seen = {}
    for p in automorphisms(g, limit):
        ep = tuple(g.edge_id(p[a], p[b]) for a, b in g.edges)
        seen.setdefault(ep, None)
    return list(seen)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    if all(c.graph.n <= CANONICAL_MAX_VERTICES for c in components(g1)) and all(
        c.graph.n <= CANONICAL_MAX_VERTICES for c in components(g2)
    ):
        return canonical_form(g1) == canonical_form(g2)
    return find_isomorphism(g1, g2) is not None


def find_isomorphism(pattern: Graph, host: Graph) -> list[int] | None:
    """Vertex map ``pattern -> host`` that is an isomorphism, or ``None``."""
    from .subgraph import contains_vertex_induced

    if pattern.n != host.n or pattern.m != host.m:
        return None
    emb = contains_vertex_induced(host, pattern)
    return None if emb is None else list(emb.vertex_map)


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Reference isomorphism test over all vertex permutations."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    target = set(g2.edges)
    for p in permutations(range(g1.n)):
        if all(((p[a], p[b]) if p[a] < p[b] else (p[b], p[a])) in target for a, b in g1.edges):
            return True
    return False
