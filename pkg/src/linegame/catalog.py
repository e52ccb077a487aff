"""Constructors for every named graph used by the characterisations.

Forbidden configurations are built by :func:`make_named`; the parameterised
permitted shapes are dataclasses whose :meth:`build` returns the graph
together with the role of each vertex (``v1``, ``w``, leaves, ...), which the
strategy scripts rely on.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, fields
from functools import lru_cache

from .graph import Graph, build_graph, complement, disjoint_union, omega_line

Roles = dict[str, "int | list[int]"]


class ParameterError(ValueError):
    pass


class UnknownNameError(KeyError):
    pass


# --- small standard graphs ---------------------------------------------------


def path(n: int) -> Graph:
    """P_n: the path on ``n`` vertices."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycles need at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel(rim: int) -> Graph:
    """Hub 0 joined to a rim cycle on ``rim`` vertices."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def triangular_book(n: int) -> Graph:
    """K_{1,1,n}: ``n`` triangles sharing the edge 0-1."""
    edges = [(0, 1)] + [e for i in range(2, n + 2) for e in ((0, i), (1, i))]
    return build_graph(n + 2, edges)


# --- forbidden configurations ------------------------------------------------


def _bull() -> Graph:
    # triangle 0,1,2 with horns at 1 and 2
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def _diamond() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


# Edge labels of the three caterpillar-like configurations, by edge id.
F1_EDGES = ("e0", "e1", "e2", "f11", "f12", "f21", "f22")
F2_EDGES = F1_EDGES + ("f0",)
F3_EDGES = ("e0", "e1", "e2", "f01", "f02", "f11", "f12", "f21", "f22")


def _f1() -> Graph:
    # spine u1=0, u2=1, u3=2; leaves 3,4 at u1, 5,6 at u3, leaf 7 at u2
    return build_graph(8, [(1, 7), (0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)])


def _f2() -> Graph:
    # F1 with the middle leaf edge extended by f0 = 7-8
    return build_graph(9, [(1, 7), (0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6), (7, 8)])


def _f3() -> Graph:
    # triangle v0=0, v1=1, v2=2; e_i is the triangle edge opposite v_i;
    # f_{i,1}, f_{i,2} are the two leaf edges at v_i
    return build_graph(
        9,
        [(1, 2), (0, 2), (0, 1), (0, 3), (0, 4), (1, 5), (1, 6), (2, 7), (2, 8)],
    )


def _beineke() -> dict[str, Graph]:
    return {
        "N1": star(3),
        "N2": complement(disjoint_union(path(2), path(3))),
        "N3": build_graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5) if (i, j) != (3, 4)]),
        # diamond with a pendant edge at each tip
        "N4": build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5)]),
        # diamond whose tips are joined by a path of length 3
        "N5": build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 5), (4, 5)]),
        # K4 plus a vertex on one of its edges and a pendant edge there
        "N6": build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (4, 5)]),
        # K2 joined to 2K2
        "N7": build_graph(6, [(0, 1)] + [(a, b) for a in (0, 1) for b in (2, 3, 4, 5)] + [(2, 3), (4, 5)]),
        "N8": build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 4), (3, 5)]),
        "N9": wheel(5),
    }


@lru_cache(maxsize=None)
def beineke_graphs() -> dict[str, Graph]:
    """The nine minimal non-line graphs, N1..N9."""
    return _beineke()


_NAMED = {
    "P5": lambda: path(5),
    "C4": lambda: cycle(4),
    "P5uP2": lambda: disjoint_union(path(5), path(2)),
    "C4uP2": lambda: disjoint_union(cycle(4), path(2)),
    "P6": lambda: path(6),
    "C5": lambda: cycle(5),
    "Bull": _bull,
    "Diamond": _diamond,
    "F1": _f1,
    "F2": _f2,
    "F3": _f3,
    "F1uF1": lambda: disjoint_union(_f1(), _f1()),
    "K3": lambda: complete(3),
}

NAMED_CONFIGURATIONS = tuple(_NAMED) + tuple(f"N{i}" for i in range(1, 10))

_ALIASES = {"P5∪P2": "P5uP2", "C4∪P2": "C4uP2", "F1∪F1": "F1uF1", "BULL": "Bull", "DIAMOND": "Diamond"}


def make_named(name: str) -> Graph:
    """Named configuration, or a standard family member such as ``P7``,
    ``C6``, ``K4``, ``K1_5``, ``K2_3``, ``W5``."""
    name = _ALIASES.get(name, name)
    if name in _NAMED:
        return _NAMED[name]()
    if name in beineke_graphs():
        return beineke_graphs()[name]
    m = re.fullmatch(r"([PCKW])(\d+)(?:_(\d+))?", name)
    if m:
        kind, a, b = m.group(1), int(m.group(2)), m.group(3)
        if b is not None:
            if kind != "K":
                raise UnknownNameError(name)
            return star(int(b)) if a == 1 else complete_bipartite(a, int(b))
        return {"P": path, "C": cycle, "K": complete, "W": wheel}[kind](a)
    raise UnknownNameError(name)


# --- permitted component types -----------------------------------------------


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def vertices(self, k: int) -> list[int]:
        return [self.vertex() for _ in range(k)]

    def edge(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)


@dataclass(frozen=True)
class PermittedParams:
    """Base for the parameterised permitted shapes."""

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise ParameterError(f"{type(self).__name__}: {f.name} must be >= 0")

    @property
    def kind(self) -> str:
        return type(self).__name__

    def params(self) -> tuple[int, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    def build(self) -> tuple[Graph, Roles]:
        raise NotImplementedError

    def __str__(self) -> str:
        return f"{self.kind}({', '.join(map(str, self.params()))})"


@dataclass(frozen=True)
class IsolatedVertex(PermittedParams):
    def build(self):
        return build_graph(1, []), {"v": 0}


@dataclass(frozen=True)
class VaseOfFlowers(PermittedParams):
    n: int

    def build(self):
        b = _Builder()
        w1, w2, w3 = b.vertices(3)
        b.edge(w1, w2)
        b.edge(w1, w3)
        b.edge(w2, w3)
        vs = b.vertices(self.n)
        for v in vs:
            b.edge(w1, v)
        return b.graph(), {"w1": w1, "w2": w2, "w3": w3, "v": vs}


@dataclass(frozen=True)
class DoubleStar(PermittedParams):
    m: int
    n: int

    def build(self):
        b = _Builder()
        w1, w2 = b.vertices(2)
        b.edge(w1, w2)
        us = b.vertices(self.m)
        for u in us:
            b.edge(w1, u)
        vs = b.vertices(self.n)
        for v in vs:
            b.edge(w2, v)
        return b.graph(), {"w1": w1, "w2": w2, "u": us, "v": vs}


def _candy_like(m: int, n1: int, n2: int, book: bool) -> tuple[Graph, Roles]:
    b = _Builder()
    v1, v2 = b.vertices(2)
    if book:
        b.edge(v1, v2)
    ws = b.vertices(m)
    for w in ws:
        b.edge(v1, w)
        b.edge(w, v2)
    xs = b.vertices(n1)
    for x in xs:
        b.edge(x, v1)
    ys = b.vertices(n2)
    for y in ys:
        b.edge(v2, y)
    return b.graph(), {"v1": v1, "v2": v2, "w": ws, "x": xs, "y": ys}


@dataclass(frozen=True)
class Candy(PermittedParams):
    m: int
    n1: int
    n2: int

    def __post_init__(self):
        super().__post_init__()
        if self.m < 1:
            raise ParameterError("Candy: m must be >= 1")

    def build(self):
        return _candy_like(self.m, self.n1, self.n2, book=False)


@dataclass(frozen=True)
class StarBook(PermittedParams):
    m: int
    n1: int
    n2: int

    def __post_init__(self):
        super().__post_init__()
        if self.m < 1:
            raise ParameterError("StarBook: m must be >= 1")

    def build(self):
        return _candy_like(self.m, self.n1, self.n2, book=True)


@dataclass(frozen=True)
class ShootingStar(PermittedParams):
    m: int
    n: int

    def build(self):
        b = _Builder()
        v, w, a, c = b.vertices(4)
        b.edge(w, v)
        b.edge(v, a)
        b.edge(a, c)
        xs = b.vertices(self.m)
        for x in xs:
            b.edge(w, x)
        ys = b.vertices(self.n)
        for y in ys:
            b.edge(v, y)
        return b.graph(), {"v": v, "w": w, "a": a, "b": c, "x": xs, "y": ys}


@dataclass(frozen=True)
class DoubleVase(PermittedParams):
    n: int

    def build(self):
        b = _Builder()
        v, x1, x2, y1, y2 = b.vertices(5)
        for p, q in ((v, x1), (x1, x2), (x2, v), (v, y1), (y1, y2), (y2, v)):
            b.edge(p, q)
        ws = b.vertices(self.n)
        for w in ws:
            b.edge(v, w)
        return b.graph(), {"v": v, "x1": x1, "x2": x2, "y1": y1, "y2": y2, "w": ws}


@dataclass(frozen=True)
class Amaryllis(PermittedParams):
    m: int
    n: int

    def build(self):
        b = _Builder()
        v, w, c1, c2 = b.vertices(4)
        for p, q in ((w, v), (v, c1), (c1, c2), (c2, v)):
            b.edge(p, q)
        xs = b.vertices(self.m)
        for x in xs:
            b.edge(w, x)
        ys = b.vertices(self.n)
        for y in ys:
            b.edge(v, y)
        return b.graph(), {"v": v, "w": w, "c1": c1, "c2": c2, "x": xs, "y": ys}


@dataclass(frozen=True)
class DiamondOfFlowers(PermittedParams):
    n: int

    def build(self):
        b = _Builder()
        v, u1, u2, w = b.vertices(4)
        for p, q in ((v, u1), (v, u2), (u1, u2), (w, u1), (w, u2)):
            b.edge(p, q)
        xs = b.vertices(self.n)
        for x in xs:
            b.edge(v, x)
        return b.graph(), {"v": v, "u1": u1, "u2": u2, "w": w, "x": xs}


@dataclass(frozen=True)
class TetrahedronOfFlowers(PermittedParams):
    n: int

    def build(self):
        b = _Builder()
        v, u1, u2, u3 = b.vertices(4)
        for p, q in ((v, u1), (v, u2), (v, u3), (u1, u2), (u1, u3), (u2, u3)):
            b.edge(p, q)
        xs = b.vertices(self.n)
        for x in xs:
            b.edge(v, x)
        return b.graph(), {"v": v, "u1": u1, "u2": u2, "u3": u3, "x": xs}


def _galaxy(b: _Builder, v: int, k: int, l: int) -> Roles:
    cs, ds = [], []
    for _ in range(k):
        c, d = b.vertices(2)
        b.edge(v, c)
        b.edge(v, d)
        b.edge(c, d)
        cs.append(c)
        ds.append(d)
    xs, ys = [], []
    for _ in range(l):
        x, y = b.vertices(2)
        b.edge(v, x)
        b.edge(x, y)
        xs.append(x)
        ys.append(y)
    return {"c": cs, "d": ds, "x": xs, "y": ys}


@dataclass(frozen=True)
class SingleGalaxy(PermittedParams):
    k: int
    l: int

    def build(self):
        b = _Builder()
        v = b.vertex()
        roles = _galaxy(b, v, self.k, self.l)
        return b.graph(), {"v": v, **roles}


@dataclass(frozen=True)
class DoubleGalaxy(PermittedParams):
    k: int
    l: int
    m: int
    n: int

    def build(self):
        b = _Builder()
        v, z = b.vertices(2)
        b.edge(v, z)
        roles = _galaxy(b, v, self.k, self.l)
        us = b.vertices(self.m)
        for u in us:
            b.edge(z, u)
        ws = b.vertices(self.n)
        for w in ws:
            b.edge(v, w)
        return b.graph(), {"v": v, "z": z, **roles, "u": us, "w": ws}


@dataclass(frozen=True)
class FullTree(PermittedParams):
    n: int
    m1: int
    m2: int

    def build(self):
        b = _Builder()
        w1, v, w2 = b.vertices(3)
        b.edge(w1, v)
        b.edge(v, w2)
        xs = b.vertices(self.m1)
        for x in xs:
            b.edge(w1, x)
        ys = b.vertices(self.n)
        for y in ys:
            b.edge(v, y)
        zs = b.vertices(self.m2)
        for z in zs:
            b.edge(w2, z)
        return b.graph(), {"w1": w1, "v": v, "w2": w2, "x": xs, "y": ys, "z": zs}


@dataclass(frozen=True)
class Satellite(PermittedParams):
    m1: int
    m2: int

    def build(self):
        b = _Builder()
        w0, w1, w2, y = b.vertices(4)
        for p, q in ((w0, w1), (w0, w2), (w1, w2), (w0, y)):
            b.edge(p, q)
        z1 = b.vertices(self.m1)
        for z in z1:
            b.edge(w1, z)
        z2 = b.vertices(self.m2)
        for z in z2:
            b.edge(w2, z)
        return b.graph(), {"w0": w0, "w1": w1, "w2": w2, "y": y, "z1": z1, "z2": z2}


PERMITTED_TYPES: dict[str, type[PermittedParams]] = {
    cls.__name__: cls
    for cls in (
        IsolatedVertex,
        VaseOfFlowers,
        DoubleStar,
        Candy,
        StarBook,
        ShootingStar,
        DoubleVase,
        Amaryllis,
        DiamondOfFlowers,
        TetrahedronOfFlowers,
        SingleGalaxy,
        DoubleGalaxy,
        FullTree,
        Satellite,
    )
}


# weakest game each shape is proved nice for (it is then nice for every game
# between that one and [A,A] in the class inclusions)
HOME_GAME = {
    "IsolatedVertex": "BB",
    "VaseOfFlowers": "BB",
    "DoubleStar": "BB",
    "Candy": "B-",
    "ShootingStar": "B-",
    "DoubleVase": "B-",
    "Amaryllis": "B-",
    "StarBook": "BA",
    "DiamondOfFlowers": "BA",
    "TetrahedronOfFlowers": "BA",
    "SingleGalaxy": "BA",
    "DoubleGalaxy": "BA",
    "FullTree": "AA",
    "Satellite": "AA",
}


def permitted_grid(max_edges: int, kinds: tuple[str, ...] | None = None) -> list[PermittedParams]:
    """Every parameter choice of the permitted shapes with at most
    ``max_edges`` edges (isolated vertex once). Isomorphic duplicates inside
    one shape are kept: their scripts read the parameters differently."""
    out: list[PermittedParams] = []
    for name, cls in PERMITTED_TYPES.items():
        if kinds is not None and name not in kinds:
            continue
        arity = len(fields(cls))
        for params in itertools.product(range(max_edges + 1), repeat=arity):
            try:
                p = cls(*params)
            except ParameterError:
                continue
            if make_permitted(p).m <= max_edges:
                out.append(p)
    return out


def make_permitted(p: PermittedParams) -> Graph:
    return p.build()[0]


def parse_permitted(text: str) -> PermittedParams:
    """Parse ``"Candy(4,2,3)"`` style names."""
    m = re.fullmatch(r"\s*(\w+)\s*\(([\d,\s]*)\)\s*", text)
    if not m or m.group(1) not in PERMITTED_TYPES:
        raise UnknownNameError(text)
    args = [int(a) for a in m.group(2).split(",") if a.strip()]
    try:
        return PERMITTED_TYPES[m.group(1)](*args)
    except TypeError as exc:
        raise ParameterError(str(exc)) from None


def graph_from_name(name: str) -> Graph:
    """Named configuration or permitted type, whichever parses."""
    if "(" in name:
        return make_permitted(parse_permitted(name))
    return make_named(name)


# --- precoloured configurations ----------------------------------------------


@dataclass(frozen=True)
class PrecolouredConfig:
    name: str
    graph: Graph
    colouring: tuple[int, ...]  # 0 = uncoloured
    k: int
    to_move: str  # "A" or "B"


def make_precoloured(name: str) -> PrecolouredConfig:
    """``F1_1``: F1 with e0 coloured 1, three colours, Alice to move.
    ``F3_1``: F3 with e0 coloured 1 and f01 coloured 2, four colours,
    Alice to move."""
    if name in ("F1_1", "F1^1"):
        g = _f1()
        col = [0] * g.m
        col[F1_EDGES.index("e0")] = 1
        return PrecolouredConfig("F1_1", g, tuple(col), 3, "A")
    if name in ("F3_1", "F3^1"):
        g = _f3()
        col = [0] * g.m
        col[F3_EDGES.index("e0")] = 1
        col[F3_EDGES.index("f01")] = 2
        return PrecolouredConfig("F3_1", g, tuple(col), 4, "A")
    raise UnknownNameError(name)


def catalog_rows() -> list[dict]:
    """One summary row per named configuration (``catalog list``)."""
    from .graph import max_degree

    rows = []
    for name in NAMED_CONFIGURATIONS:
        g = make_named(name)
        rows.append({"name": name, "V": g.n, "E": g.m, "Delta": max_degree(g), "omega_L": omega_line(g)})
    return rows
