"""Mutable simple undirected graph with stable integer vertex identifiers.

Vertex ids are positive integers. Ids of removed vertices are never reused
within one solve; vertices introduced by folds always receive fresh ids
strictly greater than every id seen so far. All "find first" style queries
in this package scan vertices in ascending id order, so runs are
reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import InputError

__all__ = [
    "Graph",
    "build_graph",
    "remove_vertices",
    "induced_subgraph",
    "second_neighborhood",
    "measure",
    "components",
    "is_independent_set",
    "is_vertex_cover",
]


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges.

    Mutation methods maintain adjacency symmetry. The package-level
    operations (``remove_vertices``, the fold rules, ...) are pure: they
    copy the graph and mutate the copy, so callers observe them as
    graph-to-graph functions.
    """

    __slots__ = ("_adj", "_next_id")

    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        self._next_id: int = 1

    # -- basic queries -------------------------------------------------

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: int) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._adj))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(n={len(self._adj)}, m={self.num_edges})"

    def vertices(self) -> list[int]:
        """All vertex ids in ascending order."""
        return sorted(self._adj)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs, sorted."""
        return sorted(
            (v, u) for v, nb in self._adj.items() for u in nb if v < u
        )

    def degree(self, v: int) -> int:
        self._require(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        """The open neighborhood of ``v``. Treat the result as read-only."""
        self._require(v)
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> set[int]:
        self._require(v)
        return self._adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        self._require(u)
        self._require(v)
        return v in self._adj[u]

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    # -- mutation ------------------------------------------------------

    def add_vertex(self, v: int | None = None) -> int:
        """Add a vertex and return its id.

        With ``v=None`` a fresh id strictly greater than every id ever used
        in this graph is allocated.
        """
        if v is None:
            v = self._next_id
        elif v < 1:
            raise InputError(f"vertex id must be positive, got {v}")
        elif v in self._adj:
            raise InputError(f"vertex {v} already present")
        self._adj[v] = set()
        self._next_id = max(self._next_id, v + 1)
        return v

    def add_edge(self, u: int, v: int) -> None:
        """Insert edge uv; inserting an existing edge is a no-op."""
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        self._require(u)
        self._require(v)
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_vertex(self, v: int) -> None:
        self._require(v)
        for u in self._adj.pop(v):
            self._adj[u].discard(v)

    def copy(self) -> Graph:
        g = Graph()
        g._adj = {v: set(nb) for v, nb in self._adj.items()}
        g._next_id = self._next_id
        return g

    def fresh_id(self) -> int:
        """Next id ``add_vertex(None)`` would allocate (without allocating)."""
        return self._next_id

    def _require(self, v: int) -> None:
        if v not in self._adj:
            raise InputError(f"unknown vertex id {v}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on vertices 1..n with the given edges.

    Duplicate pairs collapse to a single edge; a pair (x, x) or an endpoint
    outside [1, n] is an ``InputError``.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    g = Graph()
    for v in range(1, n + 1):
        g.add_vertex(v)
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise InputError(f"edge ({u}, {v}) out of range 1..{n}")
        g.add_edge(u, v)
    return g


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices(g) - drop`` (pure)."""
    drop = set(drop)
    for v in drop:
        if v not in g:
            raise InputError(f"unknown vertex id {v}")
    out = g.copy()
    for v in drop:
        out.remove_vertex(v)
    return out


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on ``keep`` (pure)."""
    keep = set(keep)
    return remove_vertices(g, set(g.vertices()) - keep)


def second_neighborhood(g: Graph, v: int) -> set[int]:
    """Vertices at distance exactly 2 from ``v``."""
    close = g.closed_neighborhood(v)
    out: set[int] = set()
    for u in g.neighbors(v):
        out |= g.neighbors(u)
    return out - close


def measure(g: Graph) -> int:
    """Degree-weighted size measure: sum of d(v) - 2 over vertices of degree >= 3.

    A degree-d vertex with d >= 3 counts as d - 2; vertices of degree <= 2
    count zero. Removing a vertex never increases the measure.
    """
    return sum(d - 2 for v in g.vertices() if (d := g.degree(v)) >= 3)


def components(g: Graph) -> list[set[int]]:
    """Connected components, ordered by smallest contained id."""
    seen: set[int] = set()
    out: list[set[int]] = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    frontier.append(u)
        seen |= comp
        out.append(comp)
    return out


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    """True if ``s`` is a set of existing vertices with no internal edge."""
    s = set(s)
    if any(v not in g for v in s):
        return False
    return all(not (g.neighbors(v) & s) for v in s)


def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    """True if ``s`` consists of existing vertices and touches every edge."""
    s = set(s)
    if any(v not in g for v in s):
        return False
    return all(u in s or v in s for u, v in g.edges())
