"""Planarity with Kuratowski certificates.

:func:`is_planar` runs the left-right planarity test (networkx) block by
block.  On a non-planar block it shrinks the edge set to an edge-minimal
non-planar subgraph, which is always a subdivision of K5 or K3,3, and
returns it as branch vertices plus internally disjoint paths.

:func:`planarity_oracle` is independent of all of that: an edge-count
filter followed by an exhaustive search for K5 and K3,3 subdivisions in the
reduced blocks of a small graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .connectivity import OracleRefused
from .powergraph import Graph

K5 = "K5-subdivision"
K33 = "K33-subdivision"
ORACLE_MAX_EDGES = 60


@dataclass(frozen=True)
class KuratowskiWitness:
    """A K5 or K3,3 subdivision inside a graph.

    For K3,3 the first three branch vertices form one side.  Each path runs
    from one branch vertex to another and lists every vertex on the way.
    """

    kind: str
    branch_vertices: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind,
                "branch_vertices": list(self.branch_vertices),
                "paths": [list(p) for p in self.paths]}

    @classmethod
    def from_dict(cls, d: dict) -> "KuratowskiWitness":
        return cls(d["kind"], tuple(d["branch_vertices"]), tuple(tuple(p) for p in d["paths"]))


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    witness: KuratowskiWitness | None = None

    def __bool__(self):
        return self.planar


class InvalidWitness(ValueError):
    pass


def _planar(edges) -> bool:
    h = nx.Graph()
    h.add_edges_from(edges)
    return nx.check_planarity(h)[0]


def _minimal_nonplanar(edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Edge-minimal non-planar subset of a non-planar edge list.

    Repeatedly finds the shortest prefix that is non-planar together with
    the edges kept so far; its last edge is then indispensable.
    """
    kept: list[tuple[int, int]] = []
    rest = list(edges)
    while _planar(kept):
        lo, hi = 1, len(rest)
        while lo < hi:
            mid = (lo + hi) // 2
            if _planar(kept + rest[:mid]):
                lo = mid + 1
            else:
                hi = mid
        kept.append(rest[lo - 1])
        rest = rest[:lo - 1]
    return kept


def _witness_from_edges(edges) -> KuratowskiWitness:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    branch = sorted(v for v, nb in adj.items() if len(nb) >= 3)
    paths = []
    seen_edges = set()
    for b in branch:
        for first in sorted(adj[b]):
            if frozenset((b, first)) in seen_edges:
                continue
            path = [b, first]
            seen_edges.add(frozenset((b, first)))
            while len(adj[path[-1]]) == 2:
                prev, cur = path[-2], path[-1]
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                seen_edges.add(frozenset((cur, nxt)))
                path.append(nxt)
            if path[0] > path[-1]:
                path.reverse()
            paths.append(tuple(path))
    paths.sort()
    if len(branch) == 5:
        return KuratowskiWitness(K5, tuple(branch), tuple(paths))
    if len(branch) == 6:
        a = branch[0]
        linked = {p[-1] if p[0] == a else p[0] for p in paths if a in (p[0], p[-1])}
        side_a = tuple(sorted(set(branch) - linked))
        side_b = tuple(sorted(linked))
        return KuratowskiWitness(K33, side_a + side_b, tuple(paths))
    raise AssertionError(f"minimal non-planar subgraph has {len(branch)} branch vertices")


def is_planar(g: Graph) -> PlanarityResult:
    """Planarity verdict; non-planar verdicts carry a Kuratowski witness."""
    n, m = g.n, g.n_edges
    if m < 9:
        return PlanarityResult(True)
    h = g.to_networkx()
    if m <= 3 * n - 6 and nx.check_planarity(h)[0]:
        return PlanarityResult(True)
    # colex edge order makes the first non-planar prefix of a clique a K5
    for block in sorted((sorted((tuple(sorted(e)) for e in b), key=lambda e: (e[1], e[0]))
                         for b in nx.biconnected_component_edges(h)), key=min):
        if len(block) >= 9 and not _planar(block):
            witness = _witness_from_edges(_minimal_nonplanar(block))
            return PlanarityResult(False, witness)
    raise AssertionError("non-planar graph with only planar blocks")


def validate_witness(g: Graph, w: KuratowskiWitness) -> None:
    """Check structurally that ``w`` is a K5/K3,3 subdivision in ``g``.

    Raises :class:`InvalidWitness` describing the first defect.
    """
    bv = list(w.branch_vertices)
    if len(set(bv)) != len(bv):
        raise InvalidWitness("repeated branch vertex")
    if w.kind == K5:
        if len(bv) != 5:
            raise InvalidWitness("K5 needs 5 branch vertices")
        required = {frozenset(p) for p in itertools.combinations(bv, 2)}
    elif w.kind == K33:
        if len(bv) != 6:
            raise InvalidWitness("K3,3 needs 6 branch vertices")
        required = {frozenset((a, b)) for a in bv[:3] for b in bv[3:]}
    else:
        raise InvalidWitness(f"unknown witness kind {w.kind!r}")
    if len(w.paths) != len(required):
        raise InvalidWitness(f"expected {len(required)} paths, got {len(w.paths)}")
    interiors: set[int] = set()
    covered = set()
    for path in w.paths:
        if len(path) < 2:
            raise InvalidWitness(f"degenerate path {path}")
        ends = frozenset((path[0], path[-1]))
        if ends not in required:
            raise InvalidWitness(f"path {path} does not join a required branch pair")
        if ends in covered:
            raise InvalidWitness(f"branch pair {sorted(ends)} joined twice")
        covered.add(ends)
        for u, v in zip(path, path[1:]):
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise InvalidWitness(f"{u}-{v} is not an edge of the graph")
        inner = path[1:-1]
        if len(set(inner)) != len(inner):
            raise InvalidWitness(f"path {path} is not simple")
        clash = set(inner) & (interiors | set(bv))
        if clash:
            raise InvalidWitness(f"path {path} reuses vertices {sorted(clash)}")
        interiors |= set(inner)


# -- oracle ---------------------------------------------------------------------------

def _blocks(adj: dict[int, set[int]]) -> list[set[tuple[int, int]]]:
    """Biconnected components (as edge sets), Hopcroft-Tarjan."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out = []
    counter = itertools.count()

    def visit(v, parent):
        index[v] = low[v] = next(counter)
        for w in sorted(adj[v]):
            if w == parent:
                continue
            if w not in index:
                stack.append((v, w))
                visit(w, v)
                low[v] = min(low[v], low[w])
                if low[w] >= index[v]:
                    comp = set()
                    while True:
                        e = stack.pop()
                        comp.add(tuple(sorted(e)))
                        if e == (v, w):
                            break
                    out.append(comp)
            elif index[w] < index[v]:
                stack.append((v, w))
                low[v] = min(low[v], index[w])

    for v in sorted(adj):
        if v not in index:
            visit(v, None)
    return out


def _reduce(adj: dict[int, set[int]]) -> dict[int, set[int]]:
    """Drop vertices of degree <= 1 and suppress degree-2 vertices until stable."""
    adj = {v: set(nb) for v, nb in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            nb = adj[v]
            if len(nb) <= 1:
                for u in nb:
                    adj[u].discard(v)
                del adj[v]
                changed = True
            elif len(nb) == 2:
                a, b = nb
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    return adj


def _route(adj, pairs, blocked) -> bool:
    """Can every pair be joined by paths with pairwise disjoint interiors avoiding ``blocked``?"""
    todo = [p for p in pairs if p[1] not in adj[p[0]]]
    used = set(blocked)

    def reachable(u, v):
        seen = {u}
        frontier = [u]
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if y == v:
                        return True
                    if y not in seen and y not in used:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return False

    def paths(u, v):
        path = [u]
        on_path = {u}

        def dfs(x):
            for y in sorted(adj[x]):
                if y == v:
                    yield path[1:]
                elif y not in used and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    yield from dfs(y)
                    path.pop()
                    on_path.discard(y)

        yield from dfs(u)

    def rec(i):
        if i == len(todo):
            return True
        if not all(reachable(*todo[j]) for j in range(i, len(todo))):
            return False
        u, v = todo[i]
        for inner in paths(u, v):
            used.update(inner)
            ok = rec(i + 1)
            used.difference_update(inner)
            if ok:
                return True
        return False

    return rec(0)


def _has_subdivision(adj: dict[int, set[int]]) -> bool:
    verts = sorted(adj)
    deg4 = [v for v in verts if len(adj[v]) >= 4]
    for branch in itertools.combinations(deg4, 5):
        if _route(adj, list(itertools.combinations(branch, 2)), branch):
            return True
    deg3 = [v for v in verts if len(adj[v]) >= 3]
    for six in itertools.combinations(deg3, 6):
        first, others = six[0], six[1:]
        for mates in itertools.combinations(others, 2):
            side_a = (first,) + mates
            side_b = tuple(v for v in others if v not in mates)
            pairs = [(a, b) for a in side_a for b in side_b]
            if _route(adj, pairs, six):
                return True
    return False


def _separation_pair(adj):
    """Some ``(a, b, components)`` splitting a 2-connected graph, or None."""
    verts = sorted(adj)
    for a, b in itertools.combinations(verts, 2):
        rest = set(verts) - {a, b}
        comps = []
        while rest:
            start = min(rest)
            comp = {start}
            frontier = [start]
            while frontier:
                x = frontier.pop()
                for y in adj[x]:
                    if y in rest and y not in comp:
                        comp.add(y)
                        frontier.append(y)
            rest -= comp
            comps.append(comp)
        if len(comps) > 1:
            return a, b, comps
    return None


def _planar_2connected(adj) -> bool:
    """Planarity of a reduced 2-connected graph (min degree >= 3)."""
    n = len(adj)
    if n <= 4:
        return True
    m = sum(len(nb) for nb in adj.values()) // 2
    if m > 3 * n - 6:
        return False
    split = _separation_pair(adj)
    if split is None:
        return not _has_subdivision(adj)
    a, b, comps = split
    # each piece, closed by the virtual edge ab, is a minor of the whole graph
    for comp in comps:
        keep = comp | {a, b}
        piece = {v: adj[v] & keep for v in keep}
        piece[a].add(b)
        piece[b].add(a)
        if not _planar_2connected(_reduce(piece)):
            return False
    return True


def planarity_oracle(g: Graph, max_edges: int = ORACLE_MAX_EDGES) -> bool:
    """Exhaustive planarity decision for small graphs.

    Blocks are reduced, split along separation pairs, filtered by the edge
    bound and finally searched for K5 and K3,3 subdivisions.
    """
    if g.n_edges > max_edges:
        raise OracleRefused(f"planarity oracle limited to {max_edges} edges, got {g.n_edges}")
    adj = {v: set(g.neighbor_lists[v].tolist()) for v in range(g.n)}
    for block in _blocks(adj):
        badj: dict[int, set[int]] = {}
        for u, v in block:
            badj.setdefault(u, set()).add(v)
            badj.setdefault(v, set()).add(u)
        if not _planar_2connected(_reduce(badj)):
            return False
    return True
