"""
Staggered quantum walks on simple graphs.

Build a walk from two tessellations of a graph, decide which graph class it
lives in, convert it to Szegedy or coined form where that is possible, and
run spatial search with a partial tessellation.
"""

from .catalog import named_graph
from .classify import (
    ClassEvidence,
    check_two_b_prime,
    classify_graph,
    find_krausz_partition,
    is_line_graph,
    root_graph,
)
from .coined import CoinedWalk, coined_reduce, grover_coin
from .errors import SQWError
from .graph import (
    Graph,
    are_isomorphic,
    clique_graph,
    find_induced_subgraph,
    graph_from_edge_list,
    is_diamond_free,
    line_graph,
    maximal_cliques,
    two_coloring,
)
from .models import honeycomb, honeycomb_walk, three_state
from .operators import (
    EvolutionOperator,
    PolygonStateVector,
    Reflection,
    apply_step,
    dense_matrix,
    reflection_from,
    staggered_walk,
    uniform_polygon_vector,
)
from .search import (
    ScalingFit,
    SearchResult,
    amplified_cost,
    peak,
    run_search,
    scaling_experiment,
    torus_instance,
    uniform_state,
)
from .szegedy import SzegedyInstance, szegedy_convert, szegedy_from_matrices, verify_block_structure
from .tessellation import (
    Tessellation,
    TessellationPair,
    brute_force_two_tessellable,
    build_two_tessellation,
    intersection_edges,
    is_two_tessellable,
    union_covers_edges,
    validate_tessellation,
)

__version__ = "0.1.0"
