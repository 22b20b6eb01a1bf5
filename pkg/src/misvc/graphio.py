"""Graph text formats and stats serialization.

DIMACS dialect: optional ``c`` comment lines, one ``p edge <n> <m>``
header, then ``e <u> <v>`` lines with 1-based endpoints. Writing is
canonical (header, then edges sorted by (min, max)) and therefore
bit-exact per graph; graphs whose ids are not exactly 1..n are remapped
to 1..n in ascending id order on output.

Edge-list format: one ``u v`` pair per line, vertices implied by the
endpoints (isolated vertices are not representable and are dropped with a
warning).
"""

from __future__ import annotations

import warnings

from .errors import InputError
from .graph import Graph, build_graph
from .solver import SolveResult

__all__ = [
    "parse_dimacs",
    "write_dimacs",
    "parse_edgelist",
    "write_edgelist",
    "parse_graph",
    "write_graph",
    "format_stats",
]


def parse_dimacs(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise InputError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise InputError(f"line {lineno}: malformed problem line {line!r}") from None
            if n < 0 or declared_m < 0:
                raise InputError(f"line {lineno}: negative counts in problem line")
        elif tokens[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before problem line")
            if len(tokens) != 3:
                raise InputError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise InputError(f"line {lineno}: malformed edge line {line!r}") from None
            if u == v:
                raise InputError(f"line {lineno}: self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: vertex out of range 1..{n}")
            key = (min(u, v), max(u, v))
            if key in seen:
                duplicates += 1
            else:
                seen.add(key)
                edges.append(key)
        else:
            raise InputError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise InputError("missing problem line")
    if duplicates:
        warnings.warn(f"{duplicates} duplicate edge line(s) ignored", stacklevel=2)
    if len(edges) != declared_m:
        warnings.warn(
            f"problem line declares {declared_m} edges, found {len(edges)} distinct",
            stacklevel=2,
        )
    return build_graph(n, edges)


def write_dimacs(g: Graph) -> str:
    ids = g.vertices()
    rank = {v: i + 1 for i, v in enumerate(ids)}
    lines = [f"p edge {len(ids)} {g.num_edges}"]
    lines.extend(f"e {rank[u]} {rank[v]}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InputError(f"line {lineno}: expected integers, got {line!r}") from None
        if u == v:
            raise InputError(f"line {lineno}: self-loop at vertex {u}")
        if u < 1 or v < 1:
            raise InputError(f"line {lineno}: vertex ids must be positive")
        pairs.append((u, v))
    g = Graph()
    for u, v in pairs:
        for x in (u, v):
            if x not in g:
                g.add_vertex(x)
        g.add_edge(u, v)
    return g


def write_edgelist(g: Graph) -> str:
    isolated = [v for v in g.vertices() if g.degree(v) == 0]
    if isolated:
        warnings.warn(
            f"{len(isolated)} isolated vertex(es) are not representable in edge-list format",
            stacklevel=2,
        )
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        return parse_dimacs(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return write_dimacs(g)
    if fmt == "edgelist":
        return write_edgelist(g)
    raise InputError(f"unknown graph format {fmt!r}")


def format_stats(result: SolveResult) -> str:
    """Flat ``key value`` document describing one solve.

    Fields: alpha, nodes, leaves, max_depth, measure, growth (only when
    the initial measure is positive), rule_counts.<rule> (sorted), and
    violations followed by one detail line per missed bound.
    """
    stats = result.stats
    lines = [
        f"alpha {result.alpha}",
        f"nodes {stats.branch_nodes}",
        f"leaves {stats.leaves}",
        f"max_depth {stats.max_depth}",
        f"measure {stats.initial_measure}",
    ]
    if stats.initial_measure > 0:
        growth = stats.leaves ** (1.0 / stats.initial_measure)
        lines.append(f"growth {growth:.6f}")
    for key in sorted(stats.rule_counts):
        lines.append(f"rule_counts.{key} {stats.rule_counts[key]}")
    lines.append(f"violations {len(stats.lemma_violations)}")
    for v in stats.lemma_violations:
        lines.append(
            f"violation {v.check} node={v.node_id} observed={v.observed} required={v.required}"
        )
    return "\n".join(lines) + "\n"
