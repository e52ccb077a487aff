"""The six [X,Y] edge colouring games and an exact solver.

X in {A, B} moves first; Y in {A, B, -} is the only player allowed to pass.
Players alternately colour an uncoloured edge with one of ``k`` colours so
that adjacent edges get different colours. Alice wins iff every edge ends up
coloured.

The solver is a memoised minimax over partial colourings. Colours are
interchangeable, so states are keyed after relabelling colours by first use,
and coloured edges with no uncoloured neighbour are forgotten (they cannot
influence any later move). When the graph has nontrivial symmetry the key is
also minimised over its edge automorphisms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import IO, Iterable, Union

import numpy as np

from .graph import Graph, edge_automorphisms, max_degree, omega_line

DEFAULT_BUDGET = 10**8
SYMMETRY_LIMIT = 5040  # automorphisms kept for key reduction


class Player(str, Enum):
    ALICE = "A"
    BOB = "B"

    @property
    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


ALICE, BOB = Player.ALICE, Player.BOB


@dataclass(frozen=True)
class GameVariant:
    first_mover: Player
    skipper: Player | None

    @property
    def name(self) -> str:
        return f"[{self.first_mover.value},{self.skipper.value if self.skipper else '-'}]"

    @property
    def code(self) -> str:
        return self.first_mover.value + (self.skipper.value if self.skipper else "-")

    @classmethod
    def parse(cls, text: str) -> "GameVariant":
        t = text.strip().strip("[]").replace(",", "").replace(" ", "").upper()
        t = t.replace("−", "-")
        if len(t) != 2 or t[0] not in "AB" or t[1] not in "AB-":
            raise ValueError(f"unknown game variant {text!r}")
        return cls(Player(t[0]), None if t[1] == "-" else Player(t[1]))

    def __str__(self) -> str:
        return self.name


AA = GameVariant(ALICE, ALICE)
A_ = GameVariant(ALICE, None)
AB = GameVariant(ALICE, BOB)
BA = GameVariant(BOB, ALICE)
B_ = GameVariant(BOB, None)
BB = GameVariant(BOB, BOB)
ALL_VARIANTS = (AA, A_, AB, BA, B_, BB)


@dataclass(frozen=True)
class ColourMove:
    edge: int
    colour: int


@dataclass(frozen=True)
class Pass:
    pass


PASS = Pass()
Move = Union[ColourMove, Pass]


class IllegalMoveError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than its budget allows."""


@dataclass(frozen=True)
class GameState:
    graph: Graph
    k: int
    colouring: tuple[int, ...]  # colour per edge id, 0 = uncoloured
    to_move: Player
    history: tuple[tuple[Player, Move], ...] = field(default=(), compare=False)

    @classmethod
    def initial(cls, graph: Graph, k: int, variant: GameVariant) -> "GameState":
        return cls(graph, k, (0,) * graph.m, variant.first_mover)

    @classmethod
    def precoloured(cls, graph: Graph, k: int, colouring: Iterable[int], to_move: Player) -> "GameState":
        s = cls(graph, k, tuple(colouring), to_move)
        s.check()
        return s

    def check(self) -> None:
        g = self.graph
        if len(self.colouring) != g.m:
            raise ValueError("colouring length differs from edge count")
        for e, c in enumerate(self.colouring):
            if c == 0:
                continue
            if not 1 <= c <= self.k:
                raise ValueError(f"colour {c} on edge {e} outside 1..{self.k}")
            for f in g.adjacent_edges(e):
                if self.colouring[f] == c:
                    raise ValueError(f"adjacent edges {e} and {f} share colour {c}")

    def uncoloured(self) -> list[int]:
        return [e for e, c in enumerate(self.colouring) if c == 0]

    def feasible_colours(self, e: int) -> list[int]:
        used = {self.colouring[f] for f in self.graph.adjacent_edges(e)}
        return [c for c in range(1, self.k + 1) if c not in used]


def legal_moves(s: GameState, v: GameVariant) -> list[Move]:
    moves: list[Move] = []
    for e in s.uncoloured():
        moves.extend(ColourMove(e, c) for c in s.feasible_colours(e))
    if moves and v.skipper is s.to_move:
        moves.append(PASS)
    return moves


def terminal(s: GameState, dead_edge_shortcut: bool = False) -> Player | None:
    """Winner if the game is over, else ``None``.

    With ``dead_edge_shortcut`` Bob is declared winner as soon as one
    uncoloured edge has no feasible colour; colours are never removed, so
    such an edge stays uncoloured.
    """
    unc = s.uncoloured()
    if not unc:
        return ALICE
    dead = [not s.feasible_colours(e) for e in unc]
    if all(dead) or (dead_edge_shortcut and any(dead)):
        return BOB
    return None


def play_move(s: GameState, m: Move, v: GameVariant) -> GameState:
    if isinstance(m, Pass):
        if v.skipper is not s.to_move:
            raise IllegalMoveError(f"{s.to_move.name} may not pass in {v}")
        if terminal(s) is not None:
            raise IllegalMoveError("game is over")
        return replace(s, to_move=s.to_move.other, history=s.history + ((s.to_move, m),))
    if not 0 <= m.edge < s.graph.m or s.colouring[m.edge] != 0:
        raise IllegalMoveError(f"edge {m.edge} is not an uncoloured edge")
    if m.colour not in s.feasible_colours(m.edge):
        raise IllegalMoveError(f"colour {m.colour} is not feasible for edge {m.edge}")
    col = list(s.colouring)
    col[m.edge] = m.colour
    return replace(s, colouring=tuple(col), to_move=s.to_move.other, history=s.history + ((s.to_move, m),))


# --- solver -------------------------------------------------------------------


def _popcount(x: int) -> int:
    return bin(x).count("1")


class Solver:
    """Exact solver for a fixed conflict structure, palette and variant.

    ``adjacency[i]`` lists the items that conflict with item ``i`` (adjacent
    edges for the edge game). The memo table persists across calls, so
    reuse one instance for many positions of the same game.
    """

    def __init__(
        self,
        adjacency: list[list[int]],
        k: int,
        variant: GameVariant,
        budget: int = DEFAULT_BUDGET,
        dead_edge_shortcut: bool = True,
        safety_shortcut: bool = True,
        memo: bool = True,
        symmetries: list[tuple[int, ...]] | None = None,
    ):
        self.adj = [tuple(a) for a in adjacency]
        self.n = len(adjacency)
        self.k = k
        self.variant = variant
        self.budget = budget
        self.dead_edge_shortcut = dead_edge_shortcut
        self.safety_shortcut = safety_shortcut
        self.use_memo = memo
        self.memo: dict[tuple, bool] = {}
        self.nodes = 0
        self._full = (1 << (k + 1)) - 2
        self._tables = None
        if symmetries is not None and len(symmetries) > 1 and self.n <= 62:
            # _tables[c][byte] = image of that byte of an edge mask under every symmetry
            count = len(symmetries)
            chunks = (self.n + 7) // 8
            tables = np.zeros((chunks, 256, count), dtype=np.int64)
            for c in range(chunks):
                for j in range(8):
                    i = 8 * c + j
                    if i >= self.n:
                        break
                    img = np.array([1 << p[i] for p in symmetries], dtype=np.int64)
                    bit = 1 << j
                    for byte in range(256):
                        if byte & bit:
                            tables[c, byte] |= img
            self._tables = tables

    @classmethod
    def for_graph(cls, g: Graph, k: int, variant: GameVariant, symmetry: bool = True, **kw) -> "Solver":
        syms = edge_automorphisms(g, SYMMETRY_LIMIT) if symmetry and g.m > 1 else None
        return cls([g.adjacent_edges(e) for e in range(g.m)], k, variant, symmetries=syms, **kw)

    def _image(self, mask: int):
        tables = self._tables
        out = tables[0, mask & 255]
        for c in range(1, len(tables)):
            mask >>= 8
            out = out | tables[c, mask & 255]
        return out

    def _symmetric_key(self, uncoloured: int, classes: list[int]):
        # smallest (image of uncoloured set, sorted images of colour classes)
        # over all symmetries; equal keys mean equivalent positions
        u = self._image(uncoloured)
        best = int(u.min())
        if not classes:
            return best, ()
        rows = np.flatnonzero(u == best)
        imgs = np.stack([self._image(c)[rows] for c in classes], axis=1)
        imgs.sort(axis=1)
        if len(rows) > 1:
            top = np.lexsort(imgs.T[::-1])[0]
        else:
            top = 0
        return best, tuple(imgs[top].tolist())

    def winner(self, colouring: Iterable[int], to_move: Player) -> Player:
        col = list(colouring)
        return ALICE if self._alice_wins(col, to_move is ALICE) else BOB

    def _alice_wins(self, col: list[int], alice: bool) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search exceeded {self.budget} nodes")
        adj = self.adj
        full = self._full
        unc = [i for i in range(self.n) if col[i] == 0]
        if not unc:
            return True
        feas = {}
        all_safe = True
        any_live = False
        for i in unc:
            forb = 0
            free_nb = 0
            for j in adj[i]:
                c = col[j]
                if c:
                    forb |= 1 << c
                else:
                    free_nb += 1
            f = full & ~forb
            if not f:
                if self.dead_edge_shortcut:
                    return False
                all_safe = False
                continue
            any_live = True
            feas[i] = f
            if all_safe and _popcount(f) <= free_nb:
                all_safe = False
        if not any_live:
            return False
        if all_safe and self.safety_shortcut:
            return True

        # canonical key: relabel colours of edges that still matter
        relabel: dict[int, int] = {}
        key = []
        for i in range(self.n):
            c = col[i]
            if c == 0:
                key.append(0)
            elif any(col[j] == 0 for j in adj[i]):
                r = relabel.get(c)
                if r is None:
                    r = relabel[c] = len(relabel) + 1
                key.append(r)
            else:
                key.append(-1)
        if self._tables is not None:
            unc_mask = 0
            class_masks = [0] * len(relabel)
            for i, r in enumerate(key):
                if r == 0:
                    unc_mask |= 1 << i
                elif r > 0:
                    class_masks[r - 1] |= 1 << i
            key_t = (self._symmetric_key(unc_mask, class_masks), alice)
        else:
            key.append(alice)
            key_t = tuple(key)
        if self.use_memo:
            hit = self.memo.get(key_t)
            if hit is not None:
                return hit

        fresh = next((c for c in range(1, self.k + 1) if c not in relabel), 0)
        used = sorted(relabel, key=relabel.get)
        moves = []
        for i, f in feas.items():
            for c in used:
                if f >> c & 1:
                    moves.append((i, c))
            if fresh:
                moves.append((i, fresh))
        moves = self._order(moves, feas, col, alice)

        may_pass = self.variant.skipper is (ALICE if alice else BOB)
        result = not alice
        for i, c in moves:
            col[i] = c
            r = self._alice_wins(col, not alice)
            col[i] = 0
            if r == alice:
                result = alice
                break
        else:
            if may_pass and self._alice_wins(col, not alice) == alice:
                result = alice
        if self.use_memo:
            self.memo[key_t] = result
        return result

    def _order(self, moves, feas, col, alice):
        adj = self.adj

        def pressure(move):
            # how many uncoloured neighbours lose an option, weighted by scarcity
            i, c = move
            bit = 1 << c
            s = 0
            for j in adj[i]:
                fj = feas.get(j)
                if fj is not None and fj & bit:
                    s += 8 >> min(3, _popcount(fj) - 1)
            return s

        if alice:
            # colour the tightest edge first, with the least disruptive colour
            def key(move):
                i, _ = move
                return (_popcount(feas[i]), pressure(move))
            return sorted(moves, key=key)
        return sorted(moves, key=pressure, reverse=True)


@lru_cache(maxsize=256)
def _cached_solver(g: Graph, k: int, variant: GameVariant, budget: int, dead: bool, safe: bool) -> Solver:
    return Solver.for_graph(g, k, variant, budget=budget, dead_edge_shortcut=dead, safety_shortcut=safe)


def solve(
    s: GameState,
    v: GameVariant,
    budget: int = DEFAULT_BUDGET,
    dead_edge_shortcut: bool = True,
    safety_shortcut: bool = True,
) -> Player:
    """Winner of the position ``s`` under optimal play.

    Solvers are cached per (graph, k, variant), so repeated positions of one
    game share a memo table. Raises :class:`BudgetExceeded` rather than
    guessing when the budget runs out.
    """
    if s.k < 0:
        raise ValueError("palette size must be non-negative")
    solver = _cached_solver(s.graph, s.k, v, budget, dead_edge_shortcut, safety_shortcut)
    solver.nodes = 0
    return solver.winner(s.colouring, s.to_move)


def solve_graph(g: Graph, v: GameVariant, k: int, **kw) -> Player:
    return solve(GameState.initial(g, k, v), v, **kw)


@dataclass(frozen=True)
class IndexResult:
    index: int
    profile: dict[int, Player]  # k -> winner, for k in [omega(L), 2*Delta - 1]


def game_chromatic_index(
    g: Graph, v: GameVariant, budget: int = DEFAULT_BUDGET, full_profile: bool = True
) -> IndexResult:
    """Smallest k for which Alice wins, plus the win/loss profile.

    Winning is not assumed monotone in k, so by default the whole range from
    omega(L(g)) to 2*Delta - 1 is solved. With ``full_profile=False`` the
    profile stops at the first k that Alice wins.
    """
    if g.m == 0:
        return IndexResult(0, {0: ALICE})
    lo = omega_line(g)
    hi = max(lo, 2 * max_degree(g) - 1)
    profile = {}
    for k in range(lo, hi + 1):
        profile[k] = solve_graph(g, v, k, budget=budget)
        if profile[k] is ALICE and not full_profile:
            break
    index = min(k for k, w in profile.items() if w is ALICE)
    return IndexResult(index, profile)


def chromatic_index(g: Graph) -> int:
    """Exact chromatic index by backtracking (desk-scale graphs only)."""
    if g.m == 0:
        return 0
    adj = [g.adjacent_edges(e) for e in range(g.m)]
    order = sorted(range(g.m), key=lambda e: -len(adj[e]))
    k = max(max_degree(g), omega_line(g))
    while True:
        col = [0] * g.m

        def rec(t: int) -> bool:
            if t == len(order):
                return True
            e = order[t]
            used = {col[f] for f in adj[e]}
            top = max(col) if t else 0
            for c in range(1, min(k, top + 1) + 1):
                if c not in used:
                    col[e] = c
                    if rec(t + 1):
                        return True
                    col[e] = 0
            return False

        if rec(0):
            return k
        k += 1


# --- vertex game --------------------------------------------------------------


def solve_vertex_game(h: Graph, v: GameVariant, k: int, budget: int = DEFAULT_BUDGET) -> Player:
    """Winner of the [X,Y] vertex colouring game on ``h`` with ``k`` colours.

    A separate, plain implementation: memo on colour-relabelled states, one
    representative unused colour per vertex, and the game ends only when no
    move is possible.
    """
    nbrs = [h.neighbours(x) for x in range(h.n)]
    memo: dict[tuple, bool] = {}
    count = [0]

    def key_of(col: tuple[int, ...], alice: bool) -> tuple:
        names: dict[int, int] = {}
        out = []
        for c in col:
            if c:
                out.append(names.setdefault(c, len(names) + 1))
            else:
                out.append(0)
        return (tuple(out), alice)

    def alice_wins(col: tuple[int, ...], alice: bool) -> bool:
        count[0] += 1
        if count[0] > budget:
            raise BudgetExceeded(f"vertex game search exceeded {budget} nodes")
        key = key_of(col, alice)
        if key in memo:
            return memo[key]
        in_use = set(col) - {0}
        options = []
        for x in range(h.n):
            if col[x]:
                continue
            blocked = {col[y] for y in nbrs[x]}
            tried_new = False
            for c in range(1, k + 1):
                if c in blocked:
                    continue
                if c not in in_use:
                    if tried_new:
                        continue
                    tried_new = True
                options.append((x, c))
        if not options:
            res = all(col)
            memo[key] = res
            return res
        me_wins = False
        for x, c in options:
            nxt = col[:x] + (c,) + col[x + 1:]
            if alice_wins(nxt, not alice) == alice:
                me_wins = True
                break
        if not me_wins and v.skipper is (ALICE if alice else BOB):
            me_wins = alice_wins(col, not alice) == alice
        res = alice if me_wins else not alice
        memo[key] = res
        return res

    return ALICE if alice_wins((0,) * h.n, v.first_mover is ALICE) else BOB


# --- transcripts ----------------------------------------------------------------


def move_record(player: Player, m: Move) -> dict:
    if isinstance(m, Pass):
        return {"player": player.value, "pass": True}
    return {"player": player.value, "edge": m.edge, "colour": m.colour}


def write_transcript(out: IO[str], s: GameState, winner: Player | None) -> None:
    """JSON lines: one record per move, then ``{"winner", "k"}``."""
    for player, m in s.history:
        out.write(json.dumps(move_record(player, m)) + "\n")
    out.write(json.dumps({"winner": winner.value if winner else None, "k": s.k}) + "\n")


def read_transcript(lines: Iterable[str]) -> tuple[list[tuple[Player, Move]], Player | None, int | None]:
    moves: list[tuple[Player, Move]] = []
    winner = k = None
    for line in lines:
        line = line.strip()
        if not line:
            continue
        rec = json.loads(line)
        if "winner" in rec:
            winner = Player(rec["winner"]) if rec["winner"] else None
            k = rec.get("k")
            continue
        if rec.get("resign"):
            continue
        p = Player(rec["player"])
        moves.append((p, PASS if rec.get("pass") else ColourMove(int(rec["edge"]), int(rec["colour"]))))
    return moves, winner, k


def replay(g: Graph, k: int, v: GameVariant, moves: Iterable[tuple[Player, Move]], start: GameState | None = None) -> GameState:
    s = start if start is not None else GameState.initial(g, k, v)
    for player, m in moves:
        if player is not s.to_move:
            raise IllegalMoveError(f"transcript has {player.name} moving out of turn")
        s = play_move(s, m, v)
    return s
