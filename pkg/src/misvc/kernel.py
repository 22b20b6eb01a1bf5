"""Vertex cover via LP kernelization on top of the independent set solver.

``nt_kernel`` computes the classical Nemhauser-Trotter partition from the
half-integral optimum of the vertex cover LP relaxation: every vertex v is
split into a left copy and a right copy, every edge uv becomes the two
bipartite edges uL-vR and vL-uR, and a maximum matching plus a Koenig
minimum vertex cover of that doubled graph assign each original vertex a
value x(v) in {0, 1/2, 1}. The partition is

* C0 = {x = 1}:  forced into some minimum vertex cover,
* V0 = {x = 1/2}: the kernel, with |V0| <= 2 * vc(G(V0)),
* I0 = {x = 0}:  excluded; independent, with all incident edges covered by C0,

and any minimum vertex cover of the induced kernel G(V0) plus C0 is a
minimum vertex cover of G.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass, replace
from fractions import Fraction

from .errors import InputError, InternalError
from .graph import Graph, induced_subgraph, is_vertex_cover
from .solver import SolveOptions, SolveResult, mis_solve

__all__ = [
    "Kernelization",
    "VcResult",
    "max_bipartite_matching",
    "nt_kernel",
    "vc_decide",
    "mvc_solve",
    "mvc_solve_detailed",
]


@dataclass(frozen=True)
class Kernelization:
    """Partition (C0, V0, I0) of the vertex set, plus the LP optimum."""

    c0: frozenset[int]
    v0: frozenset[int]
    i0: frozenset[int]
    lp_value: Fraction


@dataclass(frozen=True)
class VcResult:
    decision: bool
    cover: frozenset[int] | None
    k: int


def max_bipartite_matching(
    left: Iterable[Hashable],
    right: Iterable[Hashable],
    edges: Iterable[tuple[Hashable, Hashable]],
) -> set[tuple[Hashable, Hashable]]:
    """Maximum-cardinality matching of an explicitly two-sided bipartite graph.

    Augmenting-path search in deterministic (sorted) order, so the matching
    is a pure function of the input. Edges may be given in either
    orientation; an edge inside one side or touching an unknown vertex is
    an ``InputError``. Returns (left, right) pairs.
    """
    left = set(left)
    right = set(right)
    overlap = left & right
    if overlap:
        raise InputError(f"sides are not disjoint: {sorted(map(repr, overlap))}")
    adj: dict[Hashable, list[Hashable]] = {u: [] for u in left}
    seen_edges: set[tuple[Hashable, Hashable]] = set()
    for a, b in edges:
        if a in left and b in right:
            u, v = a, b
        elif a in right and b in left:
            u, v = b, a
        else:
            raise InputError(f"edge ({a!r}, {b!r}) does not join the two sides")
        if (u, v) not in seen_edges:
            seen_edges.add((u, v))
            adj[u].append(v)
    for u in adj:
        adj[u].sort(key=repr)

    match_of_right: dict[Hashable, Hashable] = {}

    def try_augment(u: Hashable, visited: set[Hashable]) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            if v not in match_of_right or try_augment(match_of_right[v], visited):
                match_of_right[v] = u
                return True
        return False

    for u in sorted(left, key=repr):
        try_augment(u, set())
    return {(u, v) for v, u in match_of_right.items()}


def _koenig_cover(
    left: set[Hashable],
    adj: dict[Hashable, list[Hashable]],
    match_of_right: dict[Hashable, Hashable],
    match_of_left: dict[Hashable, Hashable],
) -> tuple[set[Hashable], set[Hashable]]:
    """Minimum vertex cover of a bipartite graph from a maximum matching.

    Alternating reachability from unmatched left vertices: the cover is
    (unreached left) union (reached right).
    """
    reached_left = {u for u in left if u not in match_of_left}
    reached_right: set[Hashable] = set()
    frontier = list(reached_left)
    while frontier:
        u = frontier.pop()
        for v in adj[u]:
            if v in reached_right:
                continue
            reached_right.add(v)
            partner = match_of_right.get(v)
            if partner is not None and partner not in reached_left:
                reached_left.add(partner)
                frontier.append(partner)
    return left - reached_left, reached_right


def nt_kernel(g: Graph) -> Kernelization:
    """LP-optimal half-integral partition of the vertex set of ``g``."""
    verts = g.vertices()
    lefts = [("L", v) for v in verts]
    rights = [("R", v) for v in verts]
    doubled_edges = []
    for u, v in g.edges():
        doubled_edges.append((("L", u), ("R", v)))
        doubled_edges.append((("L", v), ("R", u)))
    matching = max_bipartite_matching(lefts, rights, doubled_edges)

    adj: dict[Hashable, list[Hashable]] = {u: [] for u in lefts}
    for lu, rv in doubled_edges:
        adj[lu].append(rv)
    match_of_right = {rv: lu for lu, rv in matching}
    match_of_left = {lu: rv for lu, rv in matching}
    cover_left, cover_right = _koenig_cover(
        set(lefts), adj, match_of_right, match_of_left
    )
    if len(cover_left) + len(cover_right) != len(matching):
        raise InternalError("Koenig cover size does not match the matching size")

    c0, v0, i0 = [], [], []
    for v in verts:
        halves = (("L", v) in cover_left) + (("R", v) in cover_right)
        (i0, v0, c0)[halves].append(v)
    kern = Kernelization(
        c0=frozenset(c0),
        v0=frozenset(v0),
        i0=frozenset(i0),
        lp_value=Fraction(2 * len(c0) + len(v0), 2),
    )
    _check_partition(g, kern)
    return kern


def _check_partition(g: Graph, kern: Kernelization) -> None:
    for v in kern.i0:
        nbrs = g.neighbors(v)
        if nbrs & kern.i0 or nbrs & kern.v0:
            raise InternalError("excluded side of the kernel partition touches an uncovered edge")


def vc_decide(g: Graph, k: int, opts: SolveOptions | None = None) -> VcResult:
    """Decide whether ``g`` has a vertex cover of size at most ``k``.

    Kernelizes first and rejects outright when the LP bound
    |C0| + |V0|/2 already exceeds k (which subsumes the coarser
    |V0| > 2k test); otherwise solves the kernel exactly and answers
    with a witness cover on yes.
    """
    if k < 0:
        raise InputError(f"cover size bound must be non-negative, got {k}")
    kern = nt_kernel(g)
    if kern.lp_value > k:
        return VcResult(False, None, k)
    cover = _cover_from_kernel(g, kern, opts)
    if len(cover) <= k:
        return VcResult(True, frozenset(cover), k)
    return VcResult(False, None, k)


def mvc_solve(g: Graph, opts: SolveOptions | None = None) -> tuple[int, frozenset[int]]:
    """Minimum vertex cover size and one witness cover."""
    size, cover, _, _ = mvc_solve_detailed(g, opts)
    return size, cover


def mvc_solve_detailed(
    g: Graph, opts: SolveOptions | None = None
) -> tuple[int, frozenset[int], Kernelization, SolveResult]:
    """Like ``mvc_solve`` but also returns the kernelization and solve stats."""
    kern = nt_kernel(g)
    cover, result = _cover_from_kernel_detailed(g, kern, opts)
    return len(cover), frozenset(cover), kern, result


def _cover_from_kernel(
    g: Graph, kern: Kernelization, opts: SolveOptions | None
) -> set[int]:
    cover, _ = _cover_from_kernel_detailed(g, kern, opts)
    return cover


def _cover_from_kernel_detailed(
    g: Graph, kern: Kernelization, opts: SolveOptions | None
) -> tuple[set[int], SolveResult]:
    solve_opts = replace(opts or SolveOptions(), want_certificate=True)
    kernel_graph = induced_subgraph(g, kern.v0)
    result = mis_solve(kernel_graph, solve_opts)
    assert result.certificate is not None
    cover = set(kern.c0) | (set(kern.v0) - result.certificate)
    if not is_vertex_cover(g, cover):
        raise InternalError("kernel-based cover misses an edge")
    return cover, result
