"""Exact maximum independent set by branch-and-reduce.

``mis_solve`` drives one search. Each node of the search:

1. solves connected components of at most ``small_component_threshold``
   vertices directly with the naive oracle;
2. applies reduction rules (degree folds, dominance, structure folds)
   until none fires, re-checking components after every application;
3. on a reduced component, branches: on a bottle (include the apex or its
   odd neighbor), else on a 4-cycle (exclude one diagonal pair or the
   other), else on a vertex of maximum degree (include it or exclude it).

If a reduction disconnects the graph, remaining oversized components are
solved independently and summed.

With ``assert_lemmas`` the solver additionally checks measure-decrease
lower bounds that the branching strategy is designed to guarantee, and
records any miss in ``SearchStats.lemma_violations``:

* every dominance removal or structure fold on a graph of minimum degree 3
  drops the measure by at least 4 (``reduction_drop4``);
* both bottle branches on a connected reduced component of more than 7
  vertices drop it by at least 8, after the child is exhaustively reduced
  (``bottle_branch_drop8``);
* likewise both 4-cycle branches when the component is also bottle-free
  (``cycle4_branch_drop8``);
* branching on a degree->=4 vertex of a connected reduced bottle-free
  4-cycle-free component of more than 15 vertices drops at least 6 on the
  exclude side and 14 on the include side (``maxdeg_exclude_drop6`` /
  ``maxdeg_include_drop14``);
* the same branch on a 3-regular component drops at least 10 on the
  include side (``cubic_include_drop10``).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import reductions as red
from .errors import InputError, InternalError
from .graph import Graph, components, induced_subgraph, is_independent_set, measure, remove_vertices
from .oracle import DEFAULT_ORACLE_LIMIT, brute_force_mis

__all__ = [
    "SolveOptions",
    "SearchStats",
    "SolveResult",
    "LemmaViolation",
    "BranchContext",
    "check_branch_decrease",
    "solve_component_small",
    "mis_solve",
]

STEP_BOTTLE = 6
STEP_4CYCLE = 7
STEP_MAXDEG = 8

INCLUDE = "include"
EXCLUDE = "exclude"


@dataclass(frozen=True)
class SolveOptions:
    want_certificate: bool = False
    assert_lemmas: bool = False
    small_component_threshold: int = 15
    oracle_limit: int = DEFAULT_ORACLE_LIMIT

    def __post_init__(self) -> None:
        if self.small_component_threshold > self.oracle_limit:
            raise InputError(
                f"component threshold {self.small_component_threshold} exceeds "
                f"oracle limit {self.oracle_limit}"
            )


@dataclass(frozen=True)
class LemmaViolation:
    """A missed measure-decrease bound: observed < required."""

    check: str
    node_id: int
    observed: int
    required: int


@dataclass
class SearchStats:
    """Counters for one solve.

    ``leaves`` counts terminated descents of the search. Binary branching
    keeps ``leaves == branch_nodes + 1``; every disconnection event that
    splits a node into k independent subproblems adds k - 1 extra
    descents, tracked under ``rule_counts["component_split"]``, so
    ``leaves == branch_nodes + 1 + rule_counts["component_split"]`` holds
    exactly.
    """

    branch_nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    initial_measure: int = 0
    rule_counts: dict[str, int] = field(default_factory=dict)
    lemma_violations: list[LemmaViolation] = field(default_factory=list)

    def count(self, key: str, amount: int = 1) -> None:
        self.rule_counts[key] = self.rule_counts.get(key, 0) + amount


@dataclass(frozen=True)
class SolveResult:
    alpha: int
    certificate: frozenset[int] | None
    stats: SearchStats


@dataclass(frozen=True)
class BranchContext:
    """Facts about the component a branch fired on, for bound selection."""

    step: int
    side: str
    connected: bool
    reduced: bool
    vertex_count: int
    three_regular: bool
    has_bottle: bool
    has_four_cycle: bool
    node_id: int = 0


def check_branch_decrease(
    parent_measure: int, child_measure_after_reduction: int, ctx: BranchContext
) -> LemmaViolation | None:
    """Check the measure-decrease lower bound applicable to one branch edge.

    ``child_measure_after_reduction`` must be taken after the child graph
    has been exhaustively reduced. Returns a violation record when a bound
    fails; when the context does not meet a bound's preconditions, no
    check applies and None is returned.
    """
    if not (ctx.connected and ctx.reduced):
        return None
    if ctx.step == STEP_BOTTLE:
        if ctx.vertex_count <= 7:
            return None
        check, required = "bottle_branch_drop8", 8
    elif ctx.step == STEP_4CYCLE:
        if ctx.has_bottle or ctx.vertex_count <= 7:
            return None
        check, required = "cycle4_branch_drop8", 8
    elif ctx.step == STEP_MAXDEG:
        if ctx.has_bottle or ctx.has_four_cycle or ctx.vertex_count <= 15:
            return None
        if ctx.three_regular:
            if ctx.side != INCLUDE:
                return None
            check, required = "cubic_include_drop10", 10
        elif ctx.side == INCLUDE:
            check, required = "maxdeg_include_drop14", 14
        else:
            check, required = "maxdeg_exclude_drop6", 6
    else:
        return None
    observed = parent_measure - child_measure_after_reduction
    if observed < required:
        return LemmaViolation(check, ctx.node_id, observed, required)
    return None


def solve_component_small(
    g: Graph, oracle_limit: int = DEFAULT_ORACLE_LIMIT
) -> tuple[int, frozenset[int]]:
    """Solve one small component exactly with the naive oracle."""
    if len(g) > oracle_limit:
        raise InputError(f"component too large for the oracle: {len(g)} > {oracle_limit}")
    res = brute_force_mis(g, oracle_limit)
    return res.size, res.witness


def mis_solve(g: Graph, opts: SolveOptions | None = None) -> SolveResult:
    """Exact independence number of ``g``, with optional certificate and checks."""
    opts = opts or SolveOptions()
    stats = SearchStats(initial_measure=measure(g))
    run = _SolveRun(opts, stats)
    alpha, trace = run.solve(g.copy(), depth=0)
    certificate: frozenset[int] | None = None
    if opts.want_certificate:
        lifted = red.reconstruct(trace, set())
        if len(lifted) != alpha or not is_independent_set(g, lifted):
            raise InternalError("reconstructed certificate is inconsistent")
        certificate = frozenset(lifted)
    return SolveResult(alpha, certificate, stats)


class _SolveRun:
    def __init__(self, opts: SolveOptions, stats: SearchStats) -> None:
        self.opts = opts
        self.stats = stats

    def solve(self, g: Graph, depth: int) -> tuple[int, list[red.ReductionEvent]]:
        opts = self.opts
        stats = self.stats
        stats.max_depth = max(stats.max_depth, depth)
        total = 0
        trace: list[red.ReductionEvent] = []
        while True:
            if len(g) == 0:
                stats.leaves += 1
                return total, trace

            comps = components(g)
            if len(comps) == 1 and len(g) <= opts.small_component_threshold:
                size, chosen = solve_component_small(g, opts.oracle_limit)
                stats.count("component_oracle")
                total += size
                trace.append(
                    red.ReductionEvent(
                        red.COMPONENT_SOLVED,
                        tuple(sorted(g.vertices())),
                        payload={"chosen": chosen},
                    )
                )
                stats.leaves += 1
                return total, trace

            if len(comps) > 1:
                small = [c for c in comps if len(c) <= opts.small_component_threshold]
                if small:
                    for comp in small:
                        size, chosen = solve_component_small(
                            induced_subgraph(g, comp), opts.oracle_limit
                        )
                        stats.count("component_oracle")
                        total += size
                        trace.append(
                            red.ReductionEvent(
                                red.COMPONENT_SOLVED,
                                tuple(sorted(comp)),
                                payload={"chosen": chosen},
                            )
                        )
                    g = remove_vertices(g, set().union(*small))
                    continue
                # All components exceed the threshold: solve independently.
                stats.count("component_split", len(comps) - 1)
                for comp in comps:
                    sub_alpha, sub_trace = self.solve(induced_subgraph(g, comp), depth)
                    total += sub_alpha
                    trace.extend(sub_trace)
                return total, trace

            step = self._reduce_step_checked(g)
            if step is not None:
                g, gain, event = step
                total += gain
                trace.append(event)
                stats.count(event.kind)
                continue

            branch_alpha, branch_trace = self._branch(g, depth)
            return total + branch_alpha, trace + branch_trace

    def _reduce_step_checked(
        self, g: Graph
    ) -> tuple[Graph, int, red.ReductionEvent] | None:
        if not self.opts.assert_lemmas:
            return red.reduce_step(g)
        before = measure(g)
        step = red.reduce_step(g)
        if step is None:
            return None
        reduced_g, _, event = step
        # Dominance and structure folds fire only once no vertex of degree
        # <= 2 remains, which is exactly when the drop-4 bound applies.
        if event.kind in (red.DOMINANCE, red.FOLD23, red.FOLD33, red.FOLD34):
            observed = before - measure(reduced_g)
            if observed < 4:
                self.stats.lemma_violations.append(
                    LemmaViolation("reduction_drop4", self.stats.branch_nodes, observed, 4)
                )
        return step

    def _branch(self, g: Graph, depth: int) -> tuple[int, list[red.ReductionEvent]]:
        stats = self.stats
        stats.branch_nodes += 1
        node_id = stats.branch_nodes

        bottle = red.find_bottle(g)
        cycle = None
        if bottle is not None:
            step = STEP_BOTTLE
            stats.count("branch_bottle")
            sides = [
                (INCLUDE, g.closed_neighborhood(bottle.a), bottle.a),
                (INCLUDE, g.closed_neighborhood(bottle.b), bottle.b),
            ]
        else:
            cycle = red.find_4cycle(g)
            if cycle is not None:
                step = STEP_4CYCLE
                stats.count("branch_cycle4")
                sides = [
                    (EXCLUDE, {cycle.a, cycle.c}, None),
                    (EXCLUDE, {cycle.b, cycle.d}, None),
                ]
            else:
                step = STEP_MAXDEG
                stats.count("branch_maxdeg")
                max_deg = g.max_degree()
                v = next(u for u in g.vertices() if g.degree(u) == max_deg)
                sides = [
                    (INCLUDE, g.closed_neighborhood(v), v),
                    (EXCLUDE, {v}, v),
                ]

        check_ctx = None
        parent_measure = 0
        if self.opts.assert_lemmas:
            if step == STEP_BOTTLE:
                has_four_cycle = red.find_4cycle(g) is not None
            else:
                has_four_cycle = cycle is not None
            check_ctx = BranchContext(
                step=step,
                side="",
                connected=True,
                reduced=True,
                vertex_count=len(g),
                three_regular=all(g.degree(u) == 3 for u in g.vertices()),
                has_bottle=bottle is not None,
                has_four_cycle=has_four_cycle,
                node_id=node_id,
            )
            parent_measure = measure(g)

        best_alpha = -1
        best_trace: list[red.ReductionEvent] = []
        for side, removed, included_vertex in sides:
            child = remove_vertices(g, removed)
            if check_ctx is not None:
                reduced_child, _, _ = red.reduce_exhaustively(child)
                violation = check_branch_decrease(
                    parent_measure,
                    measure(reduced_child),
                    replace(check_ctx, side=side),
                )
                if violation is not None:
                    stats.lemma_violations.append(violation)
            gain = 1 if side == INCLUDE else 0
            sub_alpha, sub_trace = self.solve(child, depth + 1)
            candidate = gain + sub_alpha
            if candidate > best_alpha:
                if side == INCLUDE:
                    event = red.ReductionEvent(
                        red.BRANCH_INCLUDE,
                        tuple(sorted(removed)),
                        payload={"v": included_vertex},
                    )
                else:
                    event = red.ReductionEvent(
                        red.BRANCH_EXCLUDE, tuple(sorted(removed)), payload={}
                    )
                best_alpha = candidate
                best_trace = [event] + sub_trace
        return best_alpha, best_trace
