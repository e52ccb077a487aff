"""Deciding line [X,Y]-perfectness three ways, plus line-perfectness.

* ``check_forbidden``: search for the game's forbidden edge-induced
  configurations.
* ``is_line_xy_perfect_structural``: classify every component into one of
  the permitted shapes and apply the global side conditions.
* ``is_line_xy_perfect_definitional``: solve the game on every edge-induced
  subgraph with omega(L(H)) colours.

The three agree on every small graph; the test suite checks that
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from . import catalog as cat
from .catalog import PermittedParams, make_named
from .game import (
    AA,
    ALICE,
    ALL_VARIANTS,
    BA,
    B_,
    BudgetExceeded,
    GameVariant,
    solve_graph,
)
from .graph import (
    Graph,
    GraphError,
    are_isomorphic,
    blocks,
    canonical_form,
    components,
    delete_edge,
    edge_subgraph,
    is_connected,
    omega_line,
    refine,
    strip_isolated,
)
from .subgraph import Embedding, contains_edge_induced

DEFINITIONAL_BUDGET = 9


class NotConnectedError(GraphError):
    pass


class Witness(NamedTuple):
    name: str
    embedding: Embedding

    def edges(self) -> list[int]:
        return self.embedding.host_edges()


# --- forbidden configurations ------------------------------------------------

_FORBIDDEN_NAMES = {
    "BB": ("P5", "C4"),
    "B-": ("P5uP2", "C4uP2", "P6", "C5", "Bull", "Diamond", "F1"),
    "BA": ("P6", "C5", "F1"),
    "AA": ("P6", "C5", "F2", "F3", "F1uF1"),
}
_FORBIDDEN_NAMES["AB"] = _FORBIDDEN_NAMES["A-"] = _FORBIDDEN_NAMES["BB"]


def forbidden_configurations(v: GameVariant) -> tuple[str, ...]:
    return _FORBIDDEN_NAMES[v.code]


def find_forbidden(g: Graph, names) -> Witness | None:
    for name in names:
        emb = contains_edge_induced(g, make_named(name))
        if emb is not None:
            return Witness(name, emb)
    return None


class ForbiddenVerdict(NamedTuple):
    perfect: bool
    witness: Witness | None


def check_forbidden(g: Graph, v: GameVariant) -> ForbiddenVerdict:
    w = find_forbidden(g, forbidden_configurations(v))
    return ForbiddenVerdict(w is None, w)


def is_edge_xy_perfect(g: Graph, v: GameVariant) -> bool:
    """Forbidden configurations of ``v`` plus the triangle."""
    return find_forbidden(g, forbidden_configurations(v) + ("K3",)) is None


# --- component classification ------------------------------------------------

# Parameter candidates for each shape, from vertex count V and edge count E.
# Pairs that are symmetric in the shape are listed in ascending order, except
# for the double star, which is written larger side first.


def _cand_isolated(V, E):
    if V == 1 and E == 0:
        yield cat.IsolatedVertex()


def _cand_vase(V, E):
    if E == V and V >= 3:
        yield cat.VaseOfFlowers(V - 3)


def _cand_double_star(V, E):
    if E == V - 1 and V >= 2:
        for b in range((V - 2) // 2 + 1):
            yield cat.DoubleStar(V - 2 - b, b)


def _cand_candy(V, E):
    m = E - V + 2
    rest = V - 2 - m
    if m >= 1 and rest >= 0:
        for n1 in range(rest // 2 + 1):
            yield cat.Candy(m, n1, rest - n1)


def _cand_star_book(V, E):
    m = E - V + 1
    rest = V - 2 - m
    if m >= 1 and rest >= 0:
        for n1 in range(rest // 2 + 1):
            yield cat.StarBook(m, n1, rest - n1)


def _cand_shooting_star(V, E):
    if E == V - 1 and V >= 4:
        for m in range(V - 3):
            yield cat.ShootingStar(m, V - 4 - m)


def _cand_double_vase(V, E):
    if E == V + 1 and V >= 5:
        yield cat.DoubleVase(V - 5)


def _cand_amaryllis(V, E):
    if E == V and V >= 4:
        for m in range(V - 3):
            yield cat.Amaryllis(m, V - 4 - m)


def _cand_diamond(V, E):
    if E == V + 1 and V >= 4:
        yield cat.DiamondOfFlowers(V - 4)


def _cand_tetrahedron(V, E):
    if E == V + 2 and V >= 4:
        yield cat.TetrahedronOfFlowers(V - 4)


def _cand_single_galaxy(V, E):
    k = E - V + 1
    if k >= 0 and (V - 1 - 2 * k) >= 0 and (V - 1 - 2 * k) % 2 == 0:
        yield cat.SingleGalaxy(k, (V - 1 - 2 * k) // 2)


def _cand_double_galaxy(V, E):
    k = E - V + 1
    rest = V - 2 - 2 * k
    if k >= 0 and rest >= 0:
        for l in range(rest // 2 + 1):
            for m in range(rest - 2 * l + 1):
                yield cat.DoubleGalaxy(k, l, m, rest - 2 * l - m)


def _cand_full_tree(V, E):
    if E == V - 1 and V >= 3:
        for n in range(V - 2):
            rest = V - 3 - n
            for m1 in range(rest // 2 + 1):
                yield cat.FullTree(n, m1, rest - m1)


def _cand_satellite(V, E):
    if E == V and V >= 4:
        rest = V - 4
        for m1 in range(rest // 2 + 1):
            yield cat.Satellite(m1, rest - m1)


# The fixed precedence order used to name a component that fits several shapes.
PRECEDENCE = (
    ("IsolatedVertex", _cand_isolated),
    ("VaseOfFlowers", _cand_vase),
    ("DoubleStar", _cand_double_star),
    ("Candy", _cand_candy),
    ("StarBook", _cand_star_book),
    ("ShootingStar", _cand_shooting_star),
    ("DoubleVase", _cand_double_vase),
    ("Amaryllis", _cand_amaryllis),
    ("DiamondOfFlowers", _cand_diamond),
    ("TetrahedronOfFlowers", _cand_tetrahedron),
    ("SingleGalaxy", _cand_single_galaxy),
    ("DoubleGalaxy", _cand_double_galaxy),
    ("FullTree", _cand_full_tree),
    ("Satellite", _cand_satellite),
)

_BB_KINDS = frozenset({"IsolatedVertex", "VaseOfFlowers", "DoubleStar"})
_B_KINDS = _BB_KINDS | {"Candy", "ShootingStar", "DoubleVase", "Amaryllis"}
# every B- shape is also one of the [B,A] shapes under another name
_BA_KINDS = frozenset(k for k, _ in PRECEDENCE) - {"FullTree", "Satellite"}
_AA_KINDS = frozenset(k for k, _ in PRECEDENCE)
SPECIAL_KINDS = frozenset({"FullTree", "Satellite"})


def allowed_kinds(v: GameVariant) -> frozenset[str]:
    return {"BB": _BB_KINDS, "AB": _BB_KINDS, "A-": _BB_KINDS, "B-": _B_KINDS, "BA": _BA_KINDS, "AA": _AA_KINDS}[v.code]


def _invariant(g: Graph) -> tuple:
    return tuple(sorted(g.degrees())), tuple(sorted(refine(g, g.degrees())))


def match_kind(h: Graph, kind: str) -> PermittedParams | None:
    """Parameters ``p`` with ``make_permitted(p)`` isomorphic to ``h``, if any."""
    gen = dict(PRECEDENCE)[kind]
    inv = None
    for p in gen(h.n, h.m):
        g = p.build()[0]
        if inv is None:
            inv = _invariant(h)
        if _invariant(g) == inv and are_isomorphic(g, h):
            return p
    return None


@dataclass(frozen=True)
class ComponentClass:
    """Either permitted shape parameters or a forbidden-configuration witness."""

    params: PermittedParams | None
    witness: Witness | None = None
    special: bool = False  # full tree of type E1 or satellite of type E2

    @property
    def permitted(self) -> bool:
        return self.params is not None

    def __str__(self) -> str:
        if self.params is not None:
            return str(self.params) + (" [special]" if self.special else "")
        if self.witness is not None:
            return f"NotPermitted({self.witness.name})"
        return "NotPermitted"


def classify_component(h: Graph, v: GameVariant, amended: bool = False) -> ComponentClass:
    """First permitted shape (in precedence order) that ``h`` is isomorphic to.

    Under [A,A] a full tree or satellite is only reached when no earlier
    shape matched, which is exactly the type E1 / E2 exclusion; such a
    component is marked ``special``.

    With ``amended`` the [B,A] list also admits the (m, 1)-satellites. They
    contain none of P6, C5, F1 and exact search shows they are line
    [B,A]-perfect, but the base [B,A] list leaves them out (the
    smallest is the net, a triangle with one leaf at each corner).
    """
    if h.n == 0 or not is_connected(h):
        raise NotConnectedError("classify_component needs a connected graph")
    kinds = allowed_kinds(v)
    for kind, _ in PRECEDENCE:
        if kind not in kinds:
            continue
        p = match_kind(h, kind)
        if p is not None:
            return ComponentClass(p, special=kind in SPECIAL_KINDS)
    if amended and v == BA:
        p = match_kind(h, "Satellite")
        if p is not None and 1 in p.params():
            return ComponentClass(p)
    return ComponentClass(None, find_forbidden(h, forbidden_configurations(v)))


class StructuralReport(NamedTuple):
    perfect: bool
    classes: list[ComponentClass]
    reason: str


def structural_report(g: Graph, v: GameVariant, amended: bool = False) -> StructuralReport:
    comps = components(g)
    classes = [classify_component(c.graph, v, amended) for c in comps]
    bad = next((c for c in classes if not c.permitted), None)
    if v == B_:
        # either all components are double stars / vases / isolated vertices,
        # or there is at most one nontrivial component
        if all(c.permitted and c.params.kind in _BB_KINDS for c in classes):
            return StructuralReport(True, classes, "")
        nontrivial = sum(1 for c in comps if c.graph.m > 0)
        if nontrivial > 1:
            return StructuralReport(False, classes, "more than one nontrivial component")
    if bad is not None:
        return StructuralReport(False, classes, f"component {bad} is not permitted")
    if v == AA and sum(c.special for c in classes) > 1:
        return StructuralReport(False, classes, "more than one special component")
    return StructuralReport(True, classes, "")


def is_line_xy_perfect_structural(g: Graph, v: GameVariant, amended: bool = False) -> bool:
    """Component test of the structural characterisation. ``amended`` adds
    the (m, 1)-satellites to the [B,A] list (see :func:`classify_component`)."""
    return structural_report(g, v, amended).perfect


# --- definitional decider ----------------------------------------------------


def is_line_xy_nice(g: Graph, v: GameVariant, budget: int | None = None) -> bool:
    """Alice wins on ``g`` with omega(L(g)) colours."""
    if g.m == 0:
        return True
    kw = {} if budget is None else {"budget": budget}
    return solve_graph(g, v, omega_line(g), **kw) is ALICE


_PERFECT_MEMO: dict[tuple[bytes, str], bool] = {}


def _perfect_cached(key: bytes, g: Graph, v: GameVariant) -> bool:
    hit = _PERFECT_MEMO.get((key, v.code))
    if hit is None:
        hit = _PERFECT_MEMO[key, v.code] = _perfect_uncached(g, v)
    return hit


def _perfect_uncached(g: Graph, v: GameVariant) -> bool:
    # subgraphs first: small counterexamples are cheap and usually exist
    seen = set()
    for e in range(g.m):
        h = strip_isolated(delete_edge(g, e))
        hk = canonical_form(h)
        if hk in seen:
            continue
        seen.add(hk)
        if h.m and not _perfect_cached(hk, h, v):
            return False
    return is_line_xy_nice(g, v)


def is_line_xy_perfect_definitional(g: Graph, v: GameVariant, budget: int = DEFINITIONAL_BUDGET) -> bool:
    """Every edge-induced subgraph is nice, checked by exact game search.

    Subgraphs are reached by single-edge deletions and deduplicated by
    canonical form. ``budget`` caps the edge count of the input.
    """
    h = strip_isolated(g)
    if h.m > budget:
        raise BudgetExceeded(f"definitional check limited to {budget} edges, got {h.m}")
    if h.m == 0:
        return True
    return _perfect_cached(canonical_form(h), h, v)


def is_edge_xy_perfect_definitional(g: Graph, v: GameVariant, budget: int = DEFINITIONAL_BUDGET) -> bool:
    """Every edge-induced subgraph H has game chromatic index Delta(H)."""
    h = strip_isolated(g)
    if h.m > budget:
        raise BudgetExceeded(f"definitional check limited to {budget} edges, got {h.m}")
    seen = set()
    for mask in range(1, 1 << h.m):
        sub = edge_subgraph(h, [e for e in range(h.m) if mask >> e & 1])
        key = canonical_form(sub)
        if key in seen:
            continue
        seen.add(key)
        if omega_line(sub) != max(sub.degrees()):
            return False
        if not is_line_xy_nice(sub, v):
            return False
    return True


# --- line-perfectness --------------------------------------------------------


class RouteDisagreement(AssertionError):
    pass


def line_perfect_trotter(g: Graph) -> bool:
    """No odd cycle of length at least 5 as a subgraph."""
    limit = min(g.n, g.m)
    for length in range(5, limit + 1, 2):
        if contains_edge_induced(g, cat.cycle(length)) is not None:
            return False
    return True


def _bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbours(u):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def _triangular_book(g: Graph) -> bool:
    # K_{1,1,n}: a spine edge whose ends see every other vertex, which has degree 2
    n = g.n - 2
    if n < 1 or g.m != 2 * n + 1:
        return False
    spine = [v for v in range(g.n) if g.degree(v) == n + 1]
    if n == 1:
        return g.m == 3
    if len(spine) != 2 or not g.has_edge(*spine):
        return False
    return all(g.degree(v) == 2 for v in range(g.n) if v not in spine)


def line_perfect_maffray(g: Graph) -> bool:
    """Every block is bipartite, a K4, or a triangular book."""
    for block in blocks(g).blocks:
        b = edge_subgraph(g, block)
        if _bipartite(b):
            continue
        if b.n == 4 and b.m == 6:
            continue
        if _triangular_book(b):
            continue
        return False
    return True


def is_line_perfect(g: Graph) -> bool:
    a = line_perfect_trotter(g)
    b = line_perfect_maffray(g)
    if a != b:
        raise RouteDisagreement(f"line-perfect routes disagree on {g.edges}")
    return a


# --- summary -----------------------------------------------------------------


@dataclass
class PerfectnessVerdict:
    line_xy: dict[str, bool]  # variant code -> line [X,Y]-perfect
    line_perfect: bool
    edge_xy: dict[str, bool]  # variant code -> edge [X,Y]-perfect
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    classes: dict[str, list[str]] = field(default_factory=dict)

    def chain_violations(self) -> list[str]:
        """Inclusions between the classes that fail on this graph."""
        p = self.line_xy
        chains = [("BB", "AB"), ("AB", "A-"), ("A-", "AA"), ("BB", "B-"), ("B-", "BA"), ("BA", "AA")]
        out = [f"{a} => {b}" for a, b in chains if p[a] and not p[b]]
        if p["AA"] and not self.line_perfect:
            out.append("AA => line perfect")
        return out

    def to_json(self) -> dict:
        return {
            "line_xy_perfect": self.line_xy,
            "line_perfect": self.line_perfect,
            "edge_xy_perfect": self.edge_xy,
            "witnesses": self.witnesses,
            "components": self.classes,
        }


def perfectness_verdict(g: Graph) -> PerfectnessVerdict:
    """Structural verdicts for all six games, with forbidden witnesses."""
    line_xy, edge_xy, witnesses, classes = {}, {}, {}, {}
    for v in ALL_VARIANTS:
        rep = structural_report(g, v)
        line_xy[v.code] = rep.perfect
        classes[v.code] = [str(c) for c in rep.classes]
        fv = check_forbidden(g, v)
        if fv.witness is not None:
            witnesses[v.code] = [fv.witness.name] + fv.witness.edges()
        edge_xy[v.code] = is_edge_xy_perfect(g, v)
    return PerfectnessVerdict(line_xy, is_line_perfect(g), edge_xy, witnesses, classes)


__all__ = [
    "ComponentClass",
    "DEFINITIONAL_BUDGET",
    "ForbiddenVerdict",
    "NotConnectedError",
    "PRECEDENCE",
    "PerfectnessVerdict",
    "RouteDisagreement",
    "StructuralReport",
    "Witness",
    "allowed_kinds",
    "check_forbidden",
    "classify_component",
    "find_forbidden",
    "forbidden_configurations",
    "is_edge_xy_perfect",
    "is_edge_xy_perfect_definitional",
    "is_line_perfect",
    "is_line_xy_nice",
    "is_line_xy_perfect_definitional",
    "is_line_xy_perfect_structural",
    "line_perfect_maffray",
    "line_perfect_trotter",
    "match_kind",
    "perfectness_verdict",
    "structural_report",
]
