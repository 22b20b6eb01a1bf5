"""Naive exact solvers used as ground truth and for small components.

Deliberately independent of the reduction/branching machinery in
``reductions``/``solver``: this module must never import them, so tests
that compare the two sides stay non-circular.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputError, InternalError
from .graph import Graph

__all__ = ["OracleResult", "brute_force_mis", "brute_force_vc_decide"]

ENUMERATION_LIMIT = 20
DEFAULT_ORACLE_LIMIT = 25


@dataclass(frozen=True)
class OracleResult:
    size: int
    witness: frozenset[int]


def brute_force_mis(g: Graph, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> OracleResult:
    """Exact maximum independent set by exhaustive search.

    Subset enumeration (vectorized over all 2^n bitmasks) up to
    ``ENUMERATION_LIMIT`` vertices, plain maximum-degree branching above
    that. Deterministic: among optima the enumeration picks the smallest
    bitmask over ascending-id bit order, the branching path keeps the
    first optimum found.
    """
    ids = g.vertices()
    n = len(ids)
    if n > oracle_limit:
        raise InputError(f"graph too large for the oracle: {n} > {oracle_limit}")
    if n == 0:
        return OracleResult(0, frozenset())
    index = {v: i for i, v in enumerate(ids)}
    adj = [0] * n
    for u, v in g.edges():
        adj[index[u]] |= 1 << index[v]
        adj[index[v]] |= 1 << index[u]

    if n <= ENUMERATION_LIMIT:
        size, mask = _mis_enumerate(adj, n)
    else:
        size, mask = _mis_branch(adj, (1 << n) - 1)

    witness = frozenset(ids[i] for i in range(n) if mask >> i & 1)
    if len(witness) != size or not _independent(adj, index, witness):
        raise InternalError("oracle produced an inconsistent witness")
    return OracleResult(size, witness)


def brute_force_vc_decide(g: Graph, k: int, oracle_limit: int = DEFAULT_ORACLE_LIMIT) -> bool:
    """True iff g has a vertex cover of size at most k (via complementation)."""
    if k < 0:
        raise InputError(f"cover size bound must be non-negative, got {k}")
    return len(g) - brute_force_mis(g, oracle_limit).size <= k


def _mis_enumerate(adj: list[int], n: int) -> tuple[int, int]:
    """Scan all 2^n subsets with a lowest-bit DP over numpy arrays."""
    total = 1 << n
    indep = np.zeros(total, dtype=bool)
    indep[0] = True
    size = np.zeros(total, dtype=np.int8)
    for b in range(n - 1, -1, -1):
        bit = 1 << b
        rest = np.arange(0, total, bit << 1, dtype=np.int64)
        masks = rest + bit
        indep[masks] = indep[rest] & ((masks & adj[b]) == 0)
        size[masks] = size[rest] + 1
    scores = np.where(indep, size, -1)
    best_mask = int(scores.argmax())  # first occurrence = smallest mask
    return int(scores[best_mask]), best_mask


def _mis_branch(adj: list[int], alive: int) -> tuple[int, int]:
    """Maximum-degree branching on bitmasks; no reduction rules."""
    best_v = -1
    best_d = 0
    m = alive
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        d = (adj[v] & alive).bit_count()
        if d > best_d:
            best_d = d
            best_v = v
    if best_d == 0:
        return alive.bit_count(), alive
    v = best_v
    bit = 1 << v
    inc_size, inc_mask = _mis_branch(adj, alive & ~(adj[v] | bit))
    inc_size += 1
    inc_mask |= bit
    exc_size, exc_mask = _mis_branch(adj, alive & ~bit)
    if inc_size >= exc_size:
        return inc_size, inc_mask
    return exc_size, exc_mask


def _independent(adj: list[int], index: dict[int, int], s: frozenset[int]) -> bool:
    mask = 0
    for v in s:
        mask |= 1 << index[v]
    return all(adj[index[v]] & mask == 0 for v in s)
