"""Power graphs P(G) and proper power graphs P*(G) of finite abelian groups.

Two vertices are adjacent when one lies in the cyclic subgroup generated by
the other.  Graphs are simple and undirected, stored as a symmetric CSR
matrix.  Vertices follow the lexicographic element order of the group; the
identity (index 0 of the group) is dropped in the proper variant.
"""

from __future__ import annotations

import json
from functools import cached_property

import numpy as np
from scipy import sparse

from .groups import (AbelianGroup, GroupElement, cyclic_subgroup, element_order,
                     is_cyclic, is_prime, parse_group)

FULL = "full"
PROPER = "proper"
VARIANTS = (FULL, PROPER)
EXPORT_FORMATS = ("dot", "json", "edgelist")


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, adjacency):
        a = sparse.csr_matrix(adjacency)
        a.data = (a.data != 0).astype(np.int8)
        a = ((a + a.T) > 0).astype(np.int8)
        a.setdiag(0)
        a.eliminate_zeros()
        a.sort_indices()
        self.adjacency = a

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        edges = list(edges)
        if not edges:
            return cls(sparse.csr_matrix((n, n), dtype=np.int8))
        u, v = np.array(edges, dtype=np.int64).T
        data = np.ones(len(u), dtype=np.int8)
        return cls(sparse.coo_matrix((data, (u, v)), shape=(n, n)))

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def __len__(self):
        return self.n

    @property
    def n_edges(self) -> int:
        return self.adjacency.nnz // 2

    @cached_property
    def neighbor_lists(self) -> tuple[np.ndarray, ...]:
        a = self.adjacency
        return tuple(a.indices[a.indptr[i]:a.indptr[i + 1]] for i in range(self.n))

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(nb.tolist()) for nb in self.neighbor_lists)

    def neighbors(self, v: int) -> np.ndarray:
        return self.neighbor_lists[v]

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.adjacency.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, sorted."""
        upper = sparse.triu(self.adjacency, k=1).tocoo()
        order = np.lexsort((upper.col, upper.row))
        return [(int(i), int(j)) for i, j in zip(upper.row[order], upper.col[order])]

    def is_complete(self) -> bool:
        n = self.n
        return self.n_edges == n * (n - 1) // 2

    def induced_subgraph(self, vertices) -> "Graph":
        idx = np.asarray(sorted(vertices), dtype=np.int64)
        return Graph(self.adjacency[idx][:, idx])

    def relabeled(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = np.asarray(perm, dtype=np.int64)
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def to_networkx(self):
        import networkx as nx
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def same_edges(self, other: "Graph") -> bool:
        return self.n == other.n and (self.adjacency != other.adjacency).nnz == 0


class PowerGraph(Graph):
    """A power graph with its vertices labelled by group elements."""

    def __init__(self, group: AbelianGroup, variant: str, element_ids, adjacency):
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
        super().__init__(adjacency)
        self.group = group
        self.variant = variant
        self.element_ids = np.asarray(element_ids, dtype=np.int64)

    @property
    def source(self) -> str:
        return self.group.spec

    @cached_property
    def orders(self) -> np.ndarray:
        return self.group.orders_array[self.element_ids]

    @cached_property
    def coords(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in row) for row in self.group.coords_array[self.element_ids])

    def element(self, v: int) -> GroupElement:
        return self.group.element(self.coords[v])

    def vertex_of(self, x) -> int:
        """Vertex index of an element (or coordinate tuple)."""
        coords = x.coords if isinstance(x, GroupElement) else tuple(x)
        eid = self.group.index_of(coords)
        pos = int(np.searchsorted(self.element_ids, eid))
        if pos >= self.n or self.element_ids[pos] != eid:
            raise KeyError(f"{coords} is not a vertex of this graph")
        return pos

    def vertices_of_order(self, k: int) -> list[int]:
        return np.flatnonzero(self.orders == k).tolist()

    def __repr__(self):
        return f"PowerGraph({self.group.name}, {self.variant}, n={self.n}, m={self.n_edges})"


# -- adjacency predicates --------------------------------------------------------

def adjacent(a: GroupElement, b: GroupElement) -> bool:
    if a.group != b.group:
        raise TypeError("elements belong to different groups")
    if a == b:
        raise ValueError("adjacency of a vertex with itself is undefined (graphs are simple)")
    return a in cyclic_subgroup(b) or b in cyclic_subgroup(a)


def adjacent_cyclic_fast(G: AbelianGroup, a: GroupElement, b: GroupElement) -> bool:
    """Order-divisibility adjacency, valid only in cyclic groups."""
    if not is_cyclic(G):
        raise ValueError(f"{G.name} is not cyclic; divisibility does not decide adjacency")
    if a.group != G or b.group != G:
        raise TypeError("elements must belong to G")
    if a == b:
        raise ValueError("adjacency of a vertex with itself is undefined (graphs are simple)")
    oa, ob = element_order(a), element_order(b)
    return ob % oa == 0 or oa % ob == 0


# -- builders ---------------------------------------------------------------------

def _membership_adjacency(G: AbelianGroup) -> sparse.csr_matrix:
    # entry (a, b) set when a is in <b>; symmetrised by Graph
    n = G.order
    rows, cols = [], []
    for b in range(n):
        members = G.subgroup_indices(b)
        rows.append(members)
        cols.append(np.full(members.shape, b, dtype=np.int64))
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    return sparse.coo_matrix((np.ones(r.size, dtype=np.int8), (r, c)), shape=(n, n)).tocsr()


def _divisibility_adjacency(G: AbelianGroup) -> sparse.csr_matrix:
    n = G.order
    orders = G.orders_array
    classes = {int(k): np.flatnonzero(orders == k) for k in np.unique(orders)}
    rows, cols = [], []
    for k, members in classes.items():
        for m, others in classes.items():
            if m % k == 0:
                rows.append(np.repeat(members, others.size))
                cols.append(np.tile(others, members.size))
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    return sparse.coo_matrix((np.ones(r.size, dtype=np.int8), (r, c)), shape=(n, n)).tocsr()


def build_power_graph(G: AbelianGroup, variant: str = PROPER, *, method: str = "auto") -> PowerGraph:
    """Build P(G) (``variant="full"``) or P*(G) (``variant="proper"``).

    ``method`` is ``"auto"`` (divisibility for cyclic G, membership
    otherwise), ``"membership"`` or ``"divisibility"``.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    if method == "auto":
        method = "divisibility" if is_cyclic(G) else "membership"
    if method == "divisibility":
        if not is_cyclic(G):
            raise ValueError(f"divisibility construction requires a cyclic group, got {G.name}")
        adj = _divisibility_adjacency(G)
    elif method == "membership":
        adj = _membership_adjacency(G)
    else:
        raise ValueError(f"unknown construction method {method!r}")
    ids = np.arange(G.order, dtype=np.int64)
    if variant == PROPER:
        ids = ids[1:]
        adj = adj[1:][:, 1:]
    return PowerGraph(G, variant, ids, adj)


def power_graph(spec, variant: str = PROPER) -> PowerGraph:
    """Convenience wrapper accepting a spec string or a group."""
    G = spec if isinstance(spec, AbelianGroup) else parse_group(str(spec))
    return build_power_graph(G, variant)


# -- export / import ---------------------------------------------------------------

def _order_classes(g: PowerGraph) -> dict[int, str]:
    """Figure-style vertex names by order class.

    Prime-order vertices are ``q_i`` when that prime's Sylow subgroup is
    cyclic and ``p_i`` otherwise; composite orders are ``r_i``.
    """
    counters: dict[str, int] = {}
    labels = {}
    for v in range(g.n):
        o = int(g.orders[v])
        if o == 1:
            letter = "e"
        elif is_prime(o):
            letter = "q" if len(g.group.sylow_factors(o)) == 1 else "p"
        else:
            letter = "r"
        counters[letter] = counters.get(letter, 0) + 1
        labels[v] = f"{letter}{counters[letter]}"
    return labels


def _coords_text(coords) -> str:
    return "(" + ",".join(str(c) for c in coords) + ")"


def to_dot(g: PowerGraph, *, class_labels: bool = False) -> str:
    labels = _order_classes(g) if class_labels else None
    lines = [f'graph "{g.variant}_{g.group.name}" {{']
    for v in range(g.n):
        text = labels[v] if labels else _coords_text(g.coords[v])
        lines.append(f'  {v} [label="{text}", order={int(g.orders[v])}];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: PowerGraph) -> str:
    doc = {
        "spec": g.source,
        "variant": g.variant,
        "vertices": [{"coords": list(c), "order": int(o)} for c, o in zip(g.coords, g.orders)],
        "edges": [list(e) for e in g.edges()],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def from_json(text: str) -> PowerGraph:
    doc = json.loads(text)
    G = parse_group(doc["spec"])
    ids = [G.index_of(v["coords"]) for v in doc["vertices"]]
    n = len(ids)
    edges = doc["edges"]
    if edges:
        u, v = np.array(edges, dtype=np.int64).T
        adj = sparse.coo_matrix((np.ones(len(u), dtype=np.int8), (u, v)), shape=(n, n))
    else:
        adj = sparse.csr_matrix((n, n), dtype=np.int8)
    return PowerGraph(G, doc["variant"], ids, adj)


def to_edgelist(g: PowerGraph) -> str:
    """One ``i-j`` line per edge, vertices named by their group element index."""
    ids = g.element_ids
    header = f"# {g.group.name} {g.variant} vertices={g.n} edges={g.n_edges}"
    body = [f"{ids[u]}-{ids[v]}" for u, v in g.edges()]
    return "\n".join([header, *body]) + "\n"


def export_graph(g: PowerGraph, fmt: str, **kwargs) -> str:
    if fmt == "dot":
        return to_dot(g, **kwargs)
    if fmt == "json":
        return to_json(g)
    if fmt == "edgelist":
        return to_edgelist(g)
    raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(EXPORT_FORMATS)}")
