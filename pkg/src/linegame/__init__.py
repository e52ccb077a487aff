"""Edge colouring games on graphs: exact solver, recognisers and strategies.

The six games [X,Y] let X in {A, B} move first and allow only Y in
{A, B, -} to pass. Alice wins when every edge gets coloured.
"""

from .catalog import (
    HOME_GAME,
    PERMITTED_TYPES,
    PermittedParams,
    graph_from_name,
    make_named,
    make_permitted,
    make_precoloured,
    parse_permitted,
    permitted_grid,
)
from .game import (
    AA,
    AB,
    ALICE,
    ALL_VARIANTS,
    A_,
    BA,
    BB,
    BOB,
    B_,
    PASS,
    BudgetExceeded,
    ColourMove,
    GameState,
    GameVariant,
    IllegalMoveError,
    Pass,
    Player,
    game_chromatic_index,
    legal_moves,
    play_move,
    solve,
    solve_graph,
    solve_vertex_game,
    terminal,
)
from .graph import (
    Graph,
    GraphError,
    are_isomorphic,
    blocks,
    build_graph,
    canonical_form,
    components,
    edge_subgraph,
    line_graph,
    max_degree,
    omega_line,
)
from .io import from_graph6, parse_edge_list, read_graph, to_graph6
from .recognizer import (
    ComponentClass,
    check_forbidden,
    classify_component,
    is_edge_xy_perfect,
    is_line_perfect,
    is_line_xy_perfect_definitional,
    is_line_xy_perfect_structural,
    perfectness_verdict,
)
from .strategies import StrategyAdvice, StrategyKind, advise, unsafe_edges, validate_strategy
from .subgraph import contains_edge_induced, contains_vertex_induced, is_line_graph

__version__ = "0.1.0"
