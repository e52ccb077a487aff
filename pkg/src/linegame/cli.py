"""Command line: solve, classify, check, enumerate, catalog, play.

Exit codes: 0 success, 2 parse error, 3 budget exceeded, 4 internal
invariant violation (deciders disagree, a strategy script fails, ...).
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict

from . import catalog
from .enumeration import connected_graphs_up_to, graphs_up_to
from .game import (
    ALICE,
    ALL_VARIANTS,
    BOB,
    DEFAULT_BUDGET,
    PASS,
    BudgetExceeded,
    ColourMove,
    GameState,
    GameVariant,
    IllegalMoveError,
    Pass,
    Player,
    chromatic_index,
    game_chromatic_index,
    legal_moves,
    move_record,
    play_move,
    solve,
    terminal,
)
from .graph import (
    Graph,
    GraphError,
    are_isomorphic,
    canonical_form,
    components,
    line_graph,
    max_degree,
    omega_line,
    refine,
)
from .io import ParseError, read_graph
from .recognizer import (
    DEFINITIONAL_BUDGET,
    RouteDisagreement,
    check_forbidden,
    is_edge_xy_perfect,
    is_line_perfect,
    is_line_xy_perfect_definitional,
    structural_report,
)
from .strategies import SCRIPTED_KINDS, StrategyError, StrategyKind, advise, make_plan

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_INVARIANT = 0, 2, 3, 4


class InvariantViolation(RuntimeError):
    pass


class UsageError(ValueError):
    pass


# --- shared helpers -------------------------------------------------------------


def load_input(args) -> tuple[str, Graph]:
    if args.named:
        return args.named, catalog.graph_from_name(args.named)
    if args.input:
        return args.input, read_graph(args.input)
    raise UsageError("give a graph with --named NAME or --input FILE")


def parse_variants(text: str | None) -> list[GameVariant]:
    if not text or text.lower() == "all":
        return list(ALL_VARIANTS)
    return [GameVariant.parse(t) for t in text.split(",")]


def emit(args, payload: dict, human: list[str]) -> None:
    text = json.dumps(payload, indent=2) + "\n" if args.format == "json" else "\n".join(human) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


# --- solve ----------------------------------------------------------------------


def cmd_solve(args) -> int:
    name = args.named or ""
    if name in ("F1_1", "F1^1", "F3_1", "F3^1"):
        pc = catalog.make_precoloured(name)
        v = GameVariant.parse(args.variant)
        k = args.k or pc.k
        s = GameState.precoloured(pc.graph, k, pc.colouring, Player(pc.to_move))
        w = solve(s, v, budget=args.budget)
        emit(args, {"graph": pc.name, "variant": v.code, "k": k, "winner": w.value},
             [f"{pc.name} {v.name} k={k} (precoloured, {Player(pc.to_move).name} to move): {w.name} wins"])
        return EXIT_OK
    label, g = load_input(args)
    v = GameVariant.parse(args.variant)
    if args.k is not None:
        w = solve(GameState.initial(g, args.k, v), v, budget=args.budget)
        emit(args, {"graph": label, "variant": v.code, "k": args.k, "winner": w.value},
             [f"{label} {v.name} k={args.k}: {w.name} wins"])
        return EXIT_OK
    res = game_chromatic_index(g, v, budget=args.budget)
    profile = {str(k): w.value for k, w in res.profile.items()}
    human = [f"{label} {v.name}: game chromatic index {res.index}",
             f"  omega(L) = {omega_line(g)}, Delta = {max_degree(g)}"]
    human += [f"  k={k}: {w.name}" for k, w in res.profile.items()]
    emit(args, {"graph": label, "variant": v.code, "index": res.index, "omega_L": omega_line(g),
                "Delta": max_degree(g), "profile": profile}, human)
    return EXIT_OK


# --- classify / check -----------------------------------------------------------


def _class_json(c, comp) -> dict:
    out = {"class": str(c), "permitted": c.permitted, "special": c.special,
           "edges": [list(comp.graph.edges[e]) for e in range(comp.graph.m)]}
    if c.witness is not None:
        out["witness"] = {"name": c.witness.name,
                          "edges": [list(comp.graph.edges[e]) for e in c.witness.edges()]}
    return out


def cmd_classify(args) -> int:
    label, g = load_input(args)
    v = GameVariant.parse(args.variant)
    rep = structural_report(g, v, amended=args.amended)
    comps = components(g)
    fv = check_forbidden(g, v)
    payload = {"graph": label, "variant": v.code, "permitted": rep.perfect, "reason": rep.reason,
               "components": [_class_json(c, comp) for c, comp in zip(rep.classes, comps)]}
    if fv.witness is not None:
        payload["witness"] = {"name": fv.witness.name, "edges": [list(g.edges[e]) for e in fv.witness.edges()]}
    human = [f"{label} {v.name}: {'permitted' if rep.perfect else 'not permitted'}"
             + (f" ({rep.reason})" if rep.reason else "")]
    for c in rep.classes:
        human.append(f"  {c}")
    if fv.witness is not None:
        human.append(f"  witness {fv.witness.name}: edges {[g.edges[e] for e in fv.witness.edges()]}")
    emit(args, payload, human)
    return EXIT_OK


def cmd_check(args) -> int:
    label, g = load_input(args)
    rows, human, disagree = {}, [f"{label}: line perfect = {is_line_perfect(g)}"], []
    for v in parse_variants(args.variant):
        fv = check_forbidden(g, v)
        structural = structural_report(g, v, amended=args.amended).perfect
        try:
            definitional = is_line_xy_perfect_definitional(g, v, budget=args.edge_cap)
        except BudgetExceeded:
            definitional = None
        row = {"forbidden": fv.perfect, "structural": structural, "definitional": definitional,
               "edge_perfect": is_edge_xy_perfect(g, v)}
        if fv.witness is not None:
            row["witness"] = fv.witness.name
        verdicts = {x for x in (fv.perfect, structural, definitional) if x is not None}
        if len(verdicts) > 1:
            disagree.append(v.code)
        rows[v.code] = row
        human.append(f"  {v.name}: forbidden={fv.perfect} structural={structural} "
                     f"definitional={'skipped' if definitional is None else definitional} "
                     f"edge-perfect={row['edge_perfect']}"
                     + (f" witness={fv.witness.name}" if fv.witness else ""))
    if disagree:
        human.append(f"  deciders disagree on {', '.join(disagree)}")
    emit(args, {"graph": label, "line_perfect": is_line_perfect(g), "variants": rows,
                "disagreements": disagree}, human)
    return EXIT_INVARIANT if disagree else EXIT_OK


# --- enumerate ------------------------------------------------------------------


def _agreement(g: Graph, variants, amended: bool) -> dict:
    out = {}
    for v in variants:
        d = is_line_xy_perfect_definitional(g, v, budget=g.m)
        f = check_forbidden(g, v).perfect
        s = structural_report(g, v, amended=amended).perfect
        out[v.code] = {"definitional": d, "forbidden": f, "structural": s, "agree": d == f == s}
    return out


def _chains(g: Graph, budget: int) -> tuple[dict, list[str]]:
    idx = {v.code: game_chromatic_index(g, v, budget=budget, full_profile=False).index for v in ALL_VARIANTS}
    lo = [omega_line(g), chromatic_index(g)]
    bad = []
    for chain in (("AA", "A-", "AB", "BB"), ("AA", "BA", "B-", "BB")):
        seq = lo + [idx[c] for c in chain]
        if any(a > b for a, b in zip(seq, seq[1:])):
            bad.append(f"chain {'<='.join(chain)} fails: {seq}")
    perfect = {v.code: is_line_xy_perfect_definitional(g, v, budget=g.m) for v in ALL_VARIANTS}
    for a, b in (("BB", "AB"), ("AB", "A-"), ("A-", "AA"), ("BB", "B-"), ("B-", "BA"), ("BA", "AA")):
        if perfect[a] and not perfect[b]:
            bad.append(f"class inclusion {a} in {b} fails")
    if perfect["AA"] and not is_line_perfect(g):
        bad.append("class inclusion AA in line perfect fails")
    if not perfect["BB"] == perfect["AB"] == perfect["A-"]:
        bad.append("BB, AB, A- verdicts differ")
    return {"index": idx, "omega_L": lo[0], "chromatic_index": lo[1], "perfect": perfect}, bad


def whitney_collisions(max_vertices: int) -> list[list[Graph]]:
    """Groups of non-isomorphic connected graphs with isomorphic line graphs.

    Line graphs can exceed the canonical form's size limit, so they are
    bucketed by invariants and compared pairwise inside each bucket.
    """
    buckets: dict[tuple, list[tuple[Graph, Graph]]] = defaultdict(list)
    for g in connected_graphs_up_to(max_vertices):
        if g.m:
            lg = line_graph(g)[0]
            buckets[lg.n, lg.m, tuple(sorted(lg.degrees())), tuple(sorted(refine(lg)))].append((g, lg))
    out = []
    for items in buckets.values():
        groups: list[list[tuple[Graph, Graph]]] = []
        for g, lg in items:
            for grp in groups:
                if are_isomorphic(grp[0][1], lg):
                    grp.append((g, lg))
                    break
            else:
                groups.append([(g, lg)])
        out += [[g for g, _ in grp] for grp in groups if len(grp) > 1]
    return out


def cmd_enumerate(args) -> int:
    checks = set(args.checks.split(","))
    unknown = checks - {"agreement", "chain", "whitney"}
    if unknown:
        raise UsageError(f"unknown checks {sorted(unknown)}")
    variants = parse_variants(args.variant)
    out = open(args.out, "w") if args.out else sys.stdout
    problems = 0
    count = 0
    try:
        if checks & {"agreement", "chain"}:
            for i, g in enumerate(graphs_up_to(args.max_vertices)):
                count += 1
                rec = {"graph": i, "n": g.n, "edges": [list(e) for e in g.edges]}
                issues = []
                if "agreement" in checks:
                    rec["agreement"] = _agreement(g, variants, args.amended)
                    issues += [f"deciders disagree on {c}" for c, r in rec["agreement"].items() if not r["agree"]]
                if "chain" in checks:
                    rec["chain"], bad = _chains(g, args.budget)
                    issues += bad
                rec["issues"] = issues
                problems += len(issues)
                if args.format == "json":
                    out.write(json.dumps(rec) + "\n")
                elif issues or args.verbose:
                    out.write(f"graph {i} n={g.n} edges={list(g.edges)}: {'; '.join(issues) or 'ok'}\n")
        if "whitney" in checks:
            cols = whitney_collisions(args.max_vertices)
            for gs in cols:
                rec = {"whitney_collision": [[list(e) for e in g.edges] for g in gs]}
                out.write(json.dumps(rec) + "\n" if args.format == "json"
                          else f"line graph collision: {[list(g.edges) for g in gs]}\n")
            # the only allowed collision is K3 with K1,3
            expected = sorted([canonical_form(catalog.complete(3)), canonical_form(catalog.star(3))])
            if [sorted(canonical_form(g) for g in gs) for gs in cols] != [expected]:
                problems += 1
        summary = {"summary": {"graphs": count, "checks": sorted(checks), "problems": problems}}
        out.write(json.dumps(summary) + "\n" if args.format == "json"
                  else f"{count} graphs, checks {','.join(sorted(checks))}: {problems} problems\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_INVARIANT if problems else EXIT_OK


# --- catalog --------------------------------------------------------------------


def cmd_catalog(args) -> int:
    rows = catalog.catalog_rows()
    human = [f"{'name':8} {'|V|':>4} {'|E|':>4} {'Delta':>5} {'w(L)':>5}"]
    human += [f"{r['name']:8} {r['V']:>4} {r['E']:>4} {r['Delta']:>5} {r['omega_L']:>5}" for r in rows]
    human.append("permitted shapes: " + ", ".join(catalog.PERMITTED_TYPES))
    emit(args, {"named": rows, "permitted": list(catalog.PERMITTED_TYPES)}, human)
    return EXIT_OK


# --- play -----------------------------------------------------------------------


def engine_move(s: GameState, v: GameVariant, kind: StrategyKind, budget: int):
    """The engine's move: Alice follows her strategy, Bob any winning move."""
    if s.to_move is ALICE:
        try:
            return advise(kind, s, v).move
        except StrategyError:
            # no winning move left: play on with any legal move
            return legal_moves(s, v)[0]
    moves = legal_moves(s, v)
    for m in moves:
        if solve(play_move(s, m, v), v, budget=budget) is BOB:
            return m
    return moves[0]


def parse_human(text: str, s: GameState, v: GameVariant):
    """``edge colour``, ``pass`` or ``resign``; edge is an id or ``u-v``."""
    words = text.replace(",", " ").split()
    if not words:
        raise IllegalMoveError("empty input")
    if words[0].lower() == "resign":
        return "resign"
    if words[0].lower() == "pass":
        m = PASS
    else:
        if len(words) != 2:
            raise IllegalMoveError("expected 'edge colour', 'pass' or 'resign'")
        e = words[0]
        try:
            if "-" in e:
                a, b = map(int, e.split("-"))
                edge = s.graph.edge_id(a, b)
                if edge is None:
                    raise IllegalMoveError(f"no edge {a}-{b}")
            else:
                edge = int(e)
            m = ColourMove(edge, int(words[1]))
        except ValueError:
            raise IllegalMoveError(f"cannot read {text!r}") from None
    if m not in legal_moves(s, v):
        raise IllegalMoveError(f"{text.strip()!r} is not a legal move here")
    return m


def cmd_play(args) -> int:
    label, g = load_input(args)
    v = GameVariant.parse(args.variant)
    k = args.k if args.k is not None else omega_line(g)
    human = ALICE if args.human.lower().startswith("a") else BOB
    if args.strategy == "auto":
        try:
            explicit = v.skipper is ALICE and any(p.kind in SCRIPTED_KINDS for p in make_plan(g, v).parts)
        except (StrategyError, ValueError):
            explicit = False
        kind = StrategyKind.EXPLICIT if explicit else StrategyKind.ORACLE
    else:
        kind = StrategyKind(args.strategy)
    inp, say = sys.stdin, sys.stderr.write
    say(f"{label} {v.name} with {k} colours; you are {human.name}. Edges:\n")
    for e, (a, b) in enumerate(g.edges):
        say(f"  {e}: {a}-{b}\n")
    s = GameState.initial(g, k, v)
    records, winner = [], None
    while True:
        winner = terminal(s)
        if winner is not None:
            break
        if s.to_move is human:
            say(f"{human.name} to move> ")
            line = inp.readline()
            if not line:
                line = "resign"
            try:
                m = parse_human(line, s, v)
            except IllegalMoveError as exc:
                say(f"illegal: {exc}\n")
                continue
            if m == "resign":
                winner = human.other
                records.append({"player": human.value, "resign": True})
                break
        else:
            m = engine_move(s, v, kind, args.budget)
            say(f"{s.to_move.name} plays {'pass' if isinstance(m, Pass) else f'{m.edge} {m.colour}'}\n")
        records.append(move_record(s.to_move, m))
        s = play_move(s, m, v)
    say(f"{winner.name} wins\n")
    records.append({"winner": winner.value, "k": k})
    text = "".join(json.dumps(r) + "\n" for r in records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# --- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linegame", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_args(sp, variant_default=None):
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--named", help="catalog name (P6, F1, N3, ...) or shape like 'Candy(4,2,3)'")
        src.add_argument("--input", help="graph file, .el edge list or .g6 graph6")
        sp.add_argument("--variant", default=variant_default, required=variant_default is None,
                        help="AA, A-, AB, BA, B- or BB")
        sp.add_argument("--budget", type=positive, default=DEFAULT_BUDGET, help="solver node budget")
        sp.add_argument("--format", choices=("human", "json"), default="human")
        sp.add_argument("--out", help="write the result here instead of stdout")

    sp = sub.add_parser("solve", help="winner for a given k, or the game chromatic index")
    graph_args(sp)
    sp.add_argument("--k", type=int, help="palette size; omitted means compute the index")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("classify", help="permitted shape of every component")
    graph_args(sp)
    sp.add_argument("--amended", action="store_true", help="admit (m,1)-satellites under BA")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("check", help="run the forbidden, structural and definitional deciders")
    graph_args(sp, variant_default="all")
    sp.add_argument("--edge-cap", type=positive, default=DEFINITIONAL_BUDGET,
                    help="largest edge count for the definitional decider")
    sp.add_argument("--amended", action="store_true", help="admit (m,1)-satellites under BA")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("enumerate", help="exhaustive consistency checks over small graphs")
    sp.add_argument("--max-vertices", type=positive, default=5)
    sp.add_argument("--variant", default="all", help="comma separated list or 'all'")
    sp.add_argument("--checks", default="agreement", help="comma separated: agreement, chain, whitney")
    sp.add_argument("--budget", type=positive, default=DEFAULT_BUDGET)
    sp.add_argument("--amended", action="store_true", help="admit (m,1)-satellites under BA")
    sp.add_argument("--format", choices=("human", "json"), default="human")
    sp.add_argument("--out")
    sp.add_argument("--verbose", action="store_true", help="print every graph, not only problems")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("catalog", help="named configurations")
    sp.add_argument("action", choices=("list",))
    sp.add_argument("--format", choices=("human", "json"), default="human")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("play", help="play against the engine; moves are 'edge colour', 'pass' or 'resign'")
    graph_args(sp)
    sp.add_argument("--k", type=int)
    sp.add_argument("--human", default="bob", help="alice or bob")
    sp.add_argument("--strategy", choices=("auto", "explicit", "oracle"), default="auto")
    sp.set_defaults(func=cmd_play)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (StrategyError, RouteDisagreement, InvariantViolation) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ParseError, GraphError, catalog.UnknownNameError, catalog.ParameterError,
            UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
