"""Vertex connectivity.

:func:`vertex_connectivity` is exact: the minimum, over the non-adjacent
pairs chosen by the Esfahanian-Hakimi rule, of the number of internally
disjoint paths, computed as a unit-capacity max flow on the node-split
digraph.  :func:`vertex_connectivity_oracle` enumerates vertex subsets and
shares no code with it.
"""

from __future__ import annotations

import itertools

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .powergraph import Graph

ORACLE_MAX_VERTICES = 20


class OracleRefused(ValueError):
    """The exponential oracle refuses an input that is too large."""


def _split_network(g: Graph) -> sparse.csr_matrix:
    # vertex v -> in-node 2v, out-node 2v+1; the in->out arc carries the unit vertex capacity
    n = g.n
    big = n + 1
    a = g.adjacency.tocoo()
    rows = np.concatenate([2 * np.arange(n), 2 * a.row + 1])
    cols = np.concatenate([2 * np.arange(n) + 1, 2 * a.col])
    caps = np.concatenate([np.ones(n, dtype=np.int32), np.full(a.nnz, big, dtype=np.int32)])
    return sparse.csr_matrix((caps, (rows, cols)), shape=(2 * n, 2 * n), dtype=np.int32)


def local_vertex_connectivity(g: Graph, s: int, t: int, network=None) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent)."""
    if s == t:
        raise ValueError("s and t must differ")
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity needs a non-adjacent pair")
    if network is None:
        network = _split_network(g)
    return int(csgraph.maximum_flow(network, 2 * s + 1, 2 * t).flow_value)


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; ``n - 1`` for complete graphs, 0 if disconnected."""
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if g.is_complete():
        return n - 1
    ncomp, _ = csgraph.connected_components(g.adjacency, directed=False)
    if ncomp > 1:
        return 0
    network = _split_network(g)
    deg = g.degrees
    v = int(np.argmin(deg))
    best = int(deg[v])
    nbrs = g.neighbor_sets
    for u in range(n):
        if u != v and u not in nbrs[v]:
            best = min(best, local_vertex_connectivity(g, v, u, network))
    around = sorted(nbrs[v])
    for x, y in itertools.combinations(around, 2):
        if best == 0:
            break
        if y not in nbrs[x]:
            best = min(best, local_vertex_connectivity(g, x, y, network))
    return best


def _bit_connected(remaining: int, masks: list[int]) -> bool:
    seen = frontier = remaining & -remaining
    while frontier:
        nxt = 0
        f = frontier
        while f:
            bit = f & -f
            nxt |= masks[bit.bit_length() - 1]
            f ^= bit
        frontier = nxt & remaining & ~seen
        seen |= frontier
    return seen == remaining


def vertex_connectivity_oracle(g: Graph, max_vertices: int = ORACLE_MAX_VERTICES) -> int:
    """Smallest vertex set whose removal disconnects ``g`` or leaves one vertex."""
    n = g.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if n > max_vertices:
        raise OracleRefused(f"oracle limited to {max_vertices} vertices, got {n}")
    masks = [sum(1 << int(u) for u in g.neighbor_lists[v]) for v in range(n)]
    full = (1 << n) - 1
    # a complete graph stays complete under deletion: only the n-1 bound applies
    if all(masks[v] | (1 << v) == full for v in range(n)):
        return n - 1
    for k in range(n - 1):
        for removed in itertools.combinations(range(n), k):
            rem = full
            for v in removed:
                rem &= ~(1 << v)
            if not _bit_connected(rem, masks):
                return k
    return n - 1
