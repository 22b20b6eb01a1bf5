"""Deterministic graph generators for tests, benchmarks, and the CLI.

``gen_random_cubic`` draws a uniform-ish random 3-regular simple graph via
the pairing model (rejecting pairings with loops or parallel edges) and is
a pure function of (n, seed).

``gen_named`` builds fixed fixtures: paths, cycles, the Petersen graph,
small complete and complete-bipartite graphs, and four gadget graphs that
each embed exactly one detection target (a bottle or an s23/s33/s34
structure) in a host that no reduction rule touches first.
"""

from __future__ import annotations

import random

from .errors import InputError
from .graph import Graph, build_graph, components

__all__ = ["gen_random_cubic", "gen_connected_cubic", "gen_named", "NAMED_GRAPHS"]


def gen_random_cubic(n: int, seed: int) -> Graph:
    """Random 3-regular simple graph on n vertices (n even, n >= 4)."""
    if n < 4 or n % 2:
        raise InputError(f"3-regular graphs need an even vertex count >= 4, got {n}")
    rng = random.Random(seed)
    stubs = [v for v in range(1, n + 1) for _ in range(3)]
    while True:
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (min(u, v), max(u, v))
            if key in edges:
                ok = False
                break
            edges.add(key)
        if ok:
            return build_graph(n, sorted(edges))


def gen_connected_cubic(n: int, seed: int, max_attempts: int = 1000) -> Graph:
    """First connected graph in a deterministic stream of cubic samples."""
    for attempt in range(max_attempts):
        g = gen_random_cubic(n, seed * 1_000_003 + attempt)
        if len(components(g)) == 1:
            return g
    raise InputError(f"no connected 3-regular graph found for n={n}, seed={seed}")


def _path(k: int) -> Graph:
    if k < 1:
        raise InputError(f"path length must be >= 1, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(1, k)])


def _cycle(k: int) -> Graph:
    if k < 3:
        raise InputError(f"cycle length must be >= 3, got {k}")
    return build_graph(k, [(i, i + 1) for i in range(1, k)] + [(k, 1)])


def _complete(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)])


def _complete_bipartite(a: int, b: int) -> Graph:
    left = range(1, a + 1)
    right = range(a + 1, a + b + 1)
    return build_graph(a + b, [(i, j) for i in left for j in right])


def _petersen(offset: int = 0) -> list[tuple[int, int]]:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    return [(u + offset, v + offset) for u, v in outer + spokes + inner]


def _gadget(gadget_edges: list[tuple[int, int]], n_gadget: int, hooks: list[tuple[int, int]]) -> Graph:
    """Gadget vertices 1..n_gadget plus a Petersen host; hooks join the two."""
    edges = list(gadget_edges)
    edges += _petersen(offset=n_gadget)
    edges += [(u, v + n_gadget) for u, v in hooks]
    return build_graph(n_gadget + 10, edges)


def _bottle_gadget() -> Graph:
    # Apex 1 with neighbors 2, 3, 4 and the edge 3-4; everything brought to
    # degree 3 through distinct host vertices.
    gadget = [(1, 2), (1, 3), (1, 4), (3, 4)]
    hooks = [(2, 1), (2, 4), (3, 7), (4, 9)]
    return _gadget(gadget, 4, hooks)


def _s23_gadget() -> Graph:
    # 1 and 2 non-adjacent, both with neighborhood {3, 4, 5}.
    gadget = [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]
    hooks = [(3, 1), (4, 3), (5, 8)]
    return _gadget(gadget, 5, hooks)


def _s33_gadget() -> Graph:
    # Degree-3 vertex 1 with N(1) = {4, 5, 6}; adjacent pair 2, 3 whose
    # joint outside neighborhood is exactly {4, 5, 6}.
    gadget = [(2, 3), (1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (3, 5), (3, 6)]
    hooks = [(4, 1), (6, 4)]
    return _gadget(gadget, 6, hooks)


def _s34_gadget() -> Graph:
    # Independent 1, 2, 3 with joint neighborhood exactly {4, 5, 6, 7}.
    gadget = [(1, 4), (1, 5), (1, 6), (2, 5), (2, 6), (2, 7), (3, 4), (3, 6), (3, 7)]
    hooks = [(4, 1), (5, 4), (7, 8)]
    return _gadget(gadget, 7, hooks)


NAMED_GRAPHS = (
    "path-<k>",
    "cycle-<k>",
    "petersen",
    "k4",
    "k23",
    "k33",
    "k34",
    "bottle-gadget",
    "s23-gadget",
    "s33-gadget",
    "s34-gadget",
)

_FIXED = {
    "petersen": lambda: build_graph(10, _petersen()),
    "k4": lambda: _complete(4),
    "k23": lambda: _complete_bipartite(2, 3),
    "k33": lambda: _complete_bipartite(3, 3),
    "k34": lambda: _complete_bipartite(3, 4),
    "bottle-gadget": _bottle_gadget,
    "s23-gadget": _s23_gadget,
    "s33-gadget": _s33_gadget,
    "s34-gadget": _s34_gadget,
}


def gen_named(name: str) -> Graph:
    """Build a named fixture graph; see ``NAMED_GRAPHS`` for the grammar."""
    if name in _FIXED:
        return _FIXED[name]()
    for prefix, builder in (("path-", _path), ("cycle-", _cycle)):
        if name.startswith(prefix):
            try:
                k = int(name[len(prefix):])
            except ValueError:
                raise InputError(f"unknown graph name {name!r}") from None
            return builder(k)
    raise InputError(f"unknown graph name {name!r}")
