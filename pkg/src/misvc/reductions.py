"""Reduction rules, branch-structure detection, and certificate lifting.

Every rule is a pure function: it returns a new graph, the amount the
independence number shifted (the *gain*), and a ``ReductionEvent`` carrying
enough vertex roles to lift a solution of the reduced graph back through
the rule. ``reconstruct`` replays a trace of events newest-to-oldest to
turn a solution of the final graph into one of the original graph.

Rules and gains:

* ``fold_degree1``      remove a degree-1 vertex and its neighbor, gain 1.
* ``take_isolated``     remove a degree-0 vertex (always in some optimum), gain 1.
* ``fold_degree2``      contract a degree-2 vertex; gain 1. Adjacent
  neighbors: drop all three. Non-adjacent: merge into a fresh vertex.
* dominance             when N[u] is contained in N[v], drop v; gain 0.
* ``fold_structure``    contract an s23 / s33 / s34 structure; gain 2, 2, 3.

Structures (each a pair of vertex lists A-B):

* s23: two non-adjacent degree-3 vertices sharing all three neighbors.
* s33: a degree-3 vertex v plus an adjacent pair u, w of degree >= 3 whose
  joint outside neighborhood is exactly N(v).
* s34: three pairwise non-adjacent vertices of degree >= 3 with exactly
  four distinct neighbors in total.

Branch witnesses (detected here, consumed by the solver):

* a *bottle* b-a-{c,d}: a degree-3 vertex a whose neighborhood {b, c, d}
  contains the adjacent pair c, d.
* a *4-cycle* abcd: edges ab, bc, cd, da all present (chords permitted).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import InputError, InternalError
from .graph import Graph

__all__ = [
    "FOLD1",
    "FOLD2A",
    "FOLD2B",
    "DOMINANCE",
    "FOLD23",
    "FOLD33",
    "FOLD34",
    "COMPONENT_SOLVED",
    "BRANCH_INCLUDE",
    "BRANCH_EXCLUDE",
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
]

FOLD1 = "fold1"
FOLD2A = "fold2a"
FOLD2B = "fold2b"
DOMINANCE = "dominance"
FOLD23 = "fold23"
FOLD33 = "fold33"
FOLD34 = "fold34"
COMPONENT_SOLVED = "component_solved"
BRANCH_INCLUDE = "branch_include"
BRANCH_EXCLUDE = "branch_exclude"

_FIXED_GAIN = {
    FOLD1: 1,
    FOLD2A: 1,
    FOLD2B: 1,
    DOMINANCE: 0,
    FOLD23: 2,
    FOLD33: 2,
    FOLD34: 3,
    BRANCH_INCLUDE: 1,
    BRANCH_EXCLUDE: 0,
}


@dataclass(frozen=True)
class ReductionEvent:
    """One applied rule: what was removed, what was introduced, vertex roles."""

    kind: str
    removed: tuple[int, ...]
    introduced: int | None = None
    payload: dict[str, Any] = field(default_factory=dict)

    @property
    def gain(self) -> int:
        if self.kind == COMPONENT_SOLVED:
            return len(self.payload["chosen"])
        return _FIXED_GAIN[self.kind]


@dataclass(frozen=True)
class Structure:
    """A foldable A-B configuration; ``kind`` is one of s23, s33, s34.

    For s33 the A tuple is ordered (v, u, w): v the degree-3 vertex, u and w
    the adjacent pair with u < w.
    """

    kind: str
    a: tuple[int, ...]
    b: tuple[int, ...]


@dataclass(frozen=True)
class Bottle:
    b: int
    a: int
    c: int
    d: int


@dataclass(frozen=True)
class FourCycle:
    a: int
    b: int
    c: int
    d: int


# -- single rules ------------------------------------------------------


def take_isolated(g: Graph, v: int) -> tuple[Graph, int, ReductionEvent]:
    """Remove a degree-0 vertex; it belongs to some maximum independent set."""
    if g.degree(v) != 0:
        raise InputError(f"vertex {v} has degree {g.degree(v)}, expected 0")
    out = g.copy()
    out.remove_vertex(v)
    return out, 1, ReductionEvent(FOLD1, (v,), payload={"v": v})


def fold_degree1(g: Graph, v: int) -> tuple[Graph, int, ReductionEvent]:
    """Remove a degree-1 vertex and its unique neighbor; gain 1."""
    if g.degree(v) != 1:
        raise InputError(f"vertex {v} has degree {g.degree(v)}, expected 1")
    (u,) = g.neighbors(v)
    out = g.copy()
    out.remove_vertex(v)
    out.remove_vertex(u)
    return out, 1, ReductionEvent(FOLD1, (v, u), payload={"v": v, "u": u})


def fold_degree2(g: Graph, v: int) -> tuple[Graph, int, ReductionEvent]:
    """Contract a degree-2 vertex v with neighbors u, w; gain 1.

    If u and w are adjacent, all three vertices are removed. Otherwise the
    three are replaced by a fresh vertex adjacent to every other neighbor
    of u and w (duplicates merged).
    """
    if g.degree(v) != 2:
        raise InputError(f"vertex {v} has degree {g.degree(v)}, expected 2")
    u, w = sorted(g.neighbors(v))
    out = g.copy()
    if g.has_edge(u, w):
        for x in (v, u, w):
            out.remove_vertex(x)
        return out, 1, ReductionEvent(FOLD2A, (v, u, w), payload={"v": v, "u": u, "w": w})
    outside = (g.neighbors(u) | g.neighbors(w)) - {v}
    for x in (v, u, w):
        out.remove_vertex(x)
    s = out.add_vertex()
    for x in sorted(outside):
        out.add_edge(s, x)
    event = ReductionEvent(
        FOLD2B, (v, u, w), introduced=s, payload={"v": v, "u": u, "w": w, "s": s}
    )
    return out, 1, event


def find_dominated(g: Graph) -> tuple[int, int] | None:
    """First (v, u) pair with N[u] contained in N[v], scanning u then v ascending.

    Removing the dominated vertex v preserves the independence number.
    """
    verts = g.vertices()
    closed = {x: g.closed_neighborhood(x) for x in verts}
    for u in verts:
        nu = closed[u]
        for v in verts:
            if v != u and nu <= closed[v]:
                return v, u
    return None


def remove_dominated(g: Graph, v: int, u: int) -> tuple[Graph, int, ReductionEvent]:
    """Remove dominated vertex v (dominator u); gain 0."""
    if not g.closed_neighborhood(u) <= g.closed_neighborhood(v):
        raise InputError(f"vertex {u} does not dominate {v}")
    out = g.copy()
    out.remove_vertex(v)
    return out, 0, ReductionEvent(DOMINANCE, (v,), payload={"v": v, "u": u})


# -- structure detection -----------------------------------------------


def find_structure(g: Graph) -> Structure | None:
    """First s23, else first s33, else first s34 structure, by ascending ids."""
    return _find_s23(g) or _find_s33(g) or _find_s34(g)


def _find_s23(g: Graph) -> Structure | None:
    for u in g.vertices():
        if g.degree(u) != 3:
            continue
        nu = g.neighbors(u)
        candidates: set[int] = set()
        for x in nu:
            candidates |= g.neighbors(x)
        for v in sorted(candidates):
            if v > u and g.degree(v) == 3 and g.neighbors(v) == nu:
                return Structure("s23", (u, v), tuple(sorted(nu)))
    return None


def _find_s33(g: Graph) -> Structure | None:
    for u, w in g.edges():
        if g.degree(u) < 3 or g.degree(w) < 3:
            continue
        b = (g.neighbors(u) | g.neighbors(w)) - {u, w}
        if len(b) != 3:
            continue
        common: set[int] | None = None
        for x in b:
            common = g.neighbors(x) if common is None else common & g.neighbors(x)
        for v in sorted(common or ()):
            if v not in (u, w) and g.degree(v) == 3 and g.neighbors(v) == b:
                return Structure("s33", (v, u, w), tuple(sorted(b)))
    return None


def _find_s34(g: Graph) -> Structure | None:
    candidates = [v for v in g.vertices() if 3 <= g.degree(v) <= 4]
    for i, u in enumerate(candidates):
        nu = g.neighbors(u)
        for j in range(i + 1, len(candidates)):
            v = candidates[j]
            if v in nu:
                continue
            nuv = nu | g.neighbors(v)
            if len(nuv) > 4:
                continue
            for k in range(j + 1, len(candidates)):
                w = candidates[k]
                if w in nu or w in g.neighbors(v):
                    continue
                b = nuv | g.neighbors(w)
                if len(b) == 4:
                    return Structure("s34", (u, v, w), tuple(sorted(b)))
    return None


def _structure_valid(g: Graph, s: Structure) -> bool:
    if any(x not in g for x in s.a + s.b):
        return False
    a_set, b_set = set(s.a), set(s.b)
    if s.kind == "s23":
        u, v = s.a
        return (
            len(s.a) == 2
            and len(s.b) == 3
            and g.degree(u) == 3
            and g.degree(v) == 3
            and not g.has_edge(u, v)
            and g.neighbors(u) == b_set
            and g.neighbors(v) == b_set
        )
    if s.kind == "s33":
        v, u, w = s.a
        return (
            len(s.b) == 3
            and g.has_edge(u, w)
            and g.degree(v) == 3
            and g.degree(u) >= 3
            and g.degree(w) >= 3
            and g.neighbors(v) == b_set
            and (g.neighbors(u) | g.neighbors(w)) - {u, w} == b_set
        )
    if s.kind == "s34":
        union: set[int] = set()
        for x in s.a:
            if g.degree(x) < 3:
                return False
            union |= g.neighbors(x)
        return (
            len(s.a) == 3
            and len(s.b) == 4
            and all(not g.has_edge(x, y) for x in s.a for y in s.a if x < y)
            and union == b_set
            and not (a_set & b_set)
        )
    return False


_STRUCTURE_KIND_TO_EVENT = {"s23": FOLD23, "s33": FOLD33, "s34": FOLD34}


def fold_structure(g: Graph, s: Structure) -> tuple[Graph, int, ReductionEvent]:
    """Fold structure A-B out of the graph; gain 2 (s23/s33) or 3 (s34).

    If B is independent, a fresh vertex inherits B's outside neighbors;
    otherwise A and B are simply removed.
    """
    if not _structure_valid(g, s):
        raise InputError(f"stale or invalid {s.kind} structure {s.a}-{s.b}")
    gain = 3 if s.kind == "s34" else 2
    removed = tuple(sorted(set(s.a) | set(s.b)))
    b_independent = all(
        not g.has_edge(x, y) for x in s.b for y in s.b if x < y
    )
    out = g.copy()
    payload: dict[str, Any] = {"a": s.a, "b": s.b}
    if s.kind == "s33":
        payload = {"v": s.a[0], "u": s.a[1], "w": s.a[2], "b": s.b}
    introduced = None
    if b_independent:
        outside: set[int] = set()
        for x in s.b:
            outside |= g.neighbors(x)
        outside -= set(removed)
        for x in removed:
            out.remove_vertex(x)
        introduced = out.add_vertex()
        for x in sorted(outside):
            out.add_edge(introduced, x)
        payload["s"] = introduced
    else:
        for x in removed:
            out.remove_vertex(x)
    kind = _STRUCTURE_KIND_TO_EVENT[s.kind]
    return out, gain, ReductionEvent(kind, removed, introduced, payload)


# -- branch-structure detection ----------------------------------------


def find_bottle(g: Graph) -> Bottle | None:
    """First bottle by ascending apex id a, then ascending odd-neighbor b."""
    for a in g.vertices():
        if g.degree(a) != 3:
            continue
        nbrs = sorted(g.neighbors(a))
        for b in nbrs:
            c, d = (x for x in nbrs if x != b)
            if g.has_edge(c, d):
                return Bottle(b=b, a=a, c=c, d=d)
    return None


def find_4cycle(g: Graph) -> FourCycle | None:
    """Lexicographically first (a, b, c, d) with edges ab, bc, cd, da.

    Chords are permitted; only the four cycle edges are required.
    """
    for a in g.vertices():
        na = g.neighbors(a)
        for b in sorted(na):
            for c in sorted(g.neighbors(b)):
                if c == a:
                    continue
                for d in sorted(g.neighbors(c) & na):
                    if d != b:
                        return FourCycle(a, b, c, d)
    return None


# -- exhaustive reduction ----------------------------------------------


def reduce_step(g: Graph) -> tuple[Graph, int, ReductionEvent] | None:
    """Apply the single highest-priority applicable rule, or None.

    Priority: isolated vertex, degree-1 fold, degree-2 fold, dominance
    removal, structure fold (s23/s33 before s34 via ``find_structure``).
    Within a rule the lowest-id witness fires first.
    """
    for target_degree, rule in ((0, take_isolated), (1, fold_degree1), (2, fold_degree2)):
        for v in g.vertices():
            if g.degree(v) == target_degree:
                return rule(g, v)
    dom = find_dominated(g)
    if dom is not None:
        return remove_dominated(g, *dom)
    s = find_structure(g)
    if s is not None:
        return fold_structure(g, s)
    return None


def reduce_exhaustively(g: Graph) -> tuple[Graph, int, list[ReductionEvent]]:
    """Apply rules until none fires; returns (reduced graph, total gain, trace).

    The result has no vertex of degree <= 2, no dominated vertex, and no
    s23/s33/s34 structure. Terminates because every rule strictly shrinks
    the vertex set.
    """
    offset = 0
    trace: list[ReductionEvent] = []
    while True:
        step = reduce_step(g)
        if step is None:
            return g, offset, trace
        g, gain, event = step
        offset += gain
        trace.append(event)


def trace_gain(trace: list[ReductionEvent]) -> int:
    return sum(e.gain for e in trace)


# -- certificate lifting -----------------------------------------------


def reconstruct(trace: list[ReductionEvent], s_reduced: set[int]) -> set[int]:
    """Lift an independent set of the final graph back through a trace.

    Replays events newest-to-oldest. The result has size
    ``len(s_reduced) + trace_gain(trace)`` and is independent in the graph
    the trace started from (callers can verify with an edge scan).
    """
    s = set(s_reduced)
    for event in reversed(trace):
        stale = s.intersection(event.removed)
        if stale:
            raise InternalError(
                f"trace mismatch: removed vertices {sorted(stale)} present in solution"
            )
        p = event.payload
        kind = event.kind
        if kind == FOLD1 or kind == FOLD2A:
            s.add(p["v"])
        elif kind == FOLD2B:
            if p["s"] in s:
                s.remove(p["s"])
                s.add(p["u"])
                s.add(p["w"])
            else:
                s.add(p["v"])
        elif kind == DOMINANCE or kind == BRANCH_EXCLUDE:
            pass
        elif kind == FOLD23 or kind == FOLD34:
            if "s" in p and p["s"] in s:
                s.remove(p["s"])
                s.update(p["b"])
            else:
                s.update(p["a"])
        elif kind == FOLD33:
            if "s" in p and p["s"] in s:
                s.remove(p["s"])
                s.update(p["b"])
            else:
                s.add(p["v"])
                s.add(min(p["u"], p["w"]))
        elif kind == COMPONENT_SOLVED:
            s.update(p["chosen"])
        elif kind == BRANCH_INCLUDE:
            s.add(p["v"])
        else:
            raise InternalError(f"unknown event kind {kind!r}")
    return s
