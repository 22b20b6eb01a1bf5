"""Exact maximum independent set and vertex cover for sparse graphs.

Branch-and-reduce solving with degree folding, dominance removal,
structure folding, bottle / 4-cycle branching, measure-decrease
instrumentation, and LP-based vertex cover kernelization.
"""

from .errors import InputError, InternalError
from .generators import NAMED_GRAPHS, gen_named, gen_random_cubic
from .graph import (
    Graph,
    build_graph,
    components,
    induced_subgraph,
    is_independent_set,
    is_vertex_cover,
    measure,
    remove_vertices,
    second_neighborhood,
)
from .graphio import (
    format_stats,
    parse_dimacs,
    parse_edgelist,
    parse_graph,
    write_dimacs,
    write_edgelist,
    write_graph,
)
from .kernel import (
    Kernelization,
    VcResult,
    max_bipartite_matching,
    mvc_solve,
    mvc_solve_detailed,
    nt_kernel,
    vc_decide,
)
from .oracle import OracleResult, brute_force_mis, brute_force_vc_decide
from .reductions import (
    Bottle,
    FourCycle,
    ReductionEvent,
    Structure,
    find_4cycle,
    find_bottle,
    find_dominated,
    find_structure,
    fold_degree1,
    fold_degree2,
    fold_structure,
    reconstruct,
    reduce_exhaustively,
    reduce_step,
    remove_dominated,
    take_isolated,
    trace_gain,
)
from .solver import (
    BranchContext,
    LemmaViolation,
    SearchStats,
    SolveOptions,
    SolveResult,
    check_branch_decrease,
    mis_solve,
    solve_component_small,
)

__version__ = "0.1.0"

__all__ = [
    "InputError",
    "InternalError",
    "Graph",
    "build_graph",
    "remove_vertices",
    "induced_subgraph",
    "second_neighborhood",
    "measure",
    "components",
    "is_independent_set",
    "is_vertex_cover",
    "ReductionEvent",
    "Structure",
    "Bottle",
    "FourCycle",
    "take_isolated",
    "fold_degree1",
    "fold_degree2",
    "find_dominated",
    "remove_dominated",
    "find_structure",
    "fold_structure",
    "find_bottle",
    "find_4cycle",
    "reduce_step",
    "reduce_exhaustively",
    "trace_gain",
    "reconstruct",
    "SolveOptions",
    "SolveResult",
    "SearchStats",
    "LemmaViolation",
    "BranchContext",
    "check_branch_decrease",
    "solve_component_small",
    "mis_solve",
    "OracleResult",
    "brute_force_mis",
    "brute_force_vc_decide",
    "Kernelization",
    "VcResult",
    "max_bipartite_matching",
    "nt_kernel",
    "vc_decide",
    "mvc_solve",
    "mvc_solve_detailed",
    "gen_random_cubic",
    "gen_named",
    "NAMED_GRAPHS",
    "parse_dimacs",
    "write_dimacs",
    "parse_edgelist",
    "write_edgelist",
    "parse_graph",
    "write_graph",
    "format_stats",
    "__version__",
]
