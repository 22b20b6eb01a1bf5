"""Shared builders for randomized and planted test instances."""

from __future__ import annotations

import random

from misvc import Graph, build_graph, components
from misvc.oracle import brute_force_mis
from misvc.reductions import Structure


def oracle_alpha(g: Graph) -> int:
    return brute_force_mis(g).size


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return build_graph(n, edges)


def random_max_deg3(rng: random.Random, n: int) -> Graph:
    """Random simple graph with every degree at most 3."""
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    rng.shuffle(pairs)
    p = rng.uniform(0.3, 1.0)
    deg = {v: 0 for v in range(1, n + 1)}
    edges = []
    for u, v in pairs:
        if deg[u] < 3 and deg[v] < 3 and rng.random() < p:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
    return build_graph(n, edges)


# -- planted rule instances ---------------------------------------------
#
# Each plant_* builder returns (graph, witness) where the witness is the
# argument the rule under test should be applied to. Hosts are arbitrary
# random graphs, so the planted configuration sits in varied surroundings.


def plant_fold1(rng: random.Random, max_host: int = 15) -> tuple[Graph, int]:
    n = rng.randint(1, max_host)
    g = random_graph(rng, n, rng.uniform(0.1, 0.5))
    v = g.add_vertex()
    g.add_edge(v, rng.randint(1, n))
    return g, v


def plant_fold2a(rng: random.Random, max_host: int = 15) -> tuple[Graph, int]:
    while True:
        n = rng.randint(2, max_host)
        g = random_graph(rng, n, rng.uniform(0.2, 0.6))
        edges = g.edges()
        if edges:
            break
    u, w = rng.choice(edges)
    v = g.add_vertex()
    g.add_edge(v, u)
    g.add_edge(v, w)
    return g, v


def plant_fold2b(rng: random.Random, max_host: int = 15) -> tuple[Graph, int]:
    while True:
        n = rng.randint(2, max_host)
        g = random_graph(rng, n, rng.uniform(0.2, 0.7))
        non_edges = [
            (u, w)
            for u in range(1, n + 1)
            for w in range(u + 1, n + 1)
            if not g.has_edge(u, w)
        ]
        if non_edges:
            break
    u, w = rng.choice(non_edges)
    v = g.add_vertex()
    g.add_edge(v, u)
    g.add_edge(v, w)
    return g, v


def plant_dominance(rng: random.Random, max_host: int = 16) -> tuple[Graph, int, int]:
    """Returns (graph, dominated vertex v, dominator u)."""
    n = rng.randint(1, max_host)
    g = random_graph(rng, n, rng.uniform(0.1, 0.5))
    v = rng.randint(1, n)
    u = g.add_vertex()
    g.add_edge(u, v)
    for x in sorted(g.neighbors(v) - {u}):
        if rng.random() < 0.5:
            g.add_edge(u, x)
    return g, v, u


def plant_s23(rng: random.Random, max_host: int = 13) -> tuple[Graph, Structure]:
    n = rng.randint(3, max_host)
    g = random_graph(rng, n, rng.uniform(0.1, 0.5))
    b = rng.sample(range(1, n + 1), 3)
    a = []
    for _ in range(2):
        x = g.add_vertex()
        a.append(x)
        for y in b:
            g.add_edge(x, y)
    return g, Structure("s23", tuple(sorted(a)), tuple(sorted(b)))


def plant_s33(rng: random.Random, max_host: int = 12) -> tuple[Graph, Structure]:
    n = rng.randint(3, max_host)
    g = random_graph(rng, n, rng.uniform(0.1, 0.5))
    b = rng.sample(range(1, n + 1), 3)
    v = g.add_vertex()
    for y in b:
        g.add_edge(v, y)
    u = g.add_vertex()
    w = g.add_vertex()
    g.add_edge(u, w)
    # Split coverage of b between u and w, each taking at least two.
    su = set(rng.sample(b, rng.randint(2, 3)))
    remaining = set(b) - su
    sw = remaining | set(rng.sample(sorted(su), max(0, 2 - len(remaining))))
    for y in sorted(su):
        g.add_edge(u, y)
    for y in sorted(sw):
        g.add_edge(w, y)
    return g, Structure("s33", (v, u, w), tuple(sorted(b)))


def plant_s34(rng: random.Random, max_host: int = 11) -> tuple[Graph, Structure]:
    n = rng.randint(4, max_host)
    g = random_graph(rng, n, rng.uniform(0.1, 0.5))
    b = rng.sample(range(1, n + 1), 4)
    a = []
    cover: set[int] = set()
    for i in range(3):
        x = g.add_vertex()
        a.append(x)
        nbhd = set(rng.sample(b, rng.randint(3, 4)))
        if i == 2:
            nbhd |= set(b) - cover
        cover |= nbhd
        for y in sorted(nbhd):
            g.add_edge(x, y)
    return g, Structure("s34", tuple(sorted(a)), tuple(sorted(b)))


def plant_bottle(rng: random.Random, max_host: int = 10) -> Graph:
    n = rng.randint(3, max_host)
    g = random_graph(rng, n, rng.uniform(0.15, 0.5))
    b, c, d = rng.sample(range(1, n + 1), 3)
    a = g.add_vertex()
    for x in (b, c, d):
        g.add_edge(a, x)
    g.add_edge(c, d)
    return g


def plant_4cycle(rng: random.Random, max_host: int = 12) -> Graph:
    n = rng.randint(4, max_host)
    g = random_graph(rng, n, rng.uniform(0.1, 0.45))
    a, b, c, d = rng.sample(range(1, n + 1), 4)
    for x, y in ((a, b), (b, c), (c, d), (d, a)):
        g.add_edge(x, y)
    return g
