"""Exact graph invariants: components, distances, eccentricity, center.

Vertex connectivity lives in :mod:`powerlab.connectivity` and planarity in
:mod:`powerlab.planarity`; :func:`analyze` bundles everything into an
:class:`InvariantReport`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csgraph

from .powergraph import Graph, PowerGraph

INFINITE = math.inf

# above these sizes analyze() skips the expensive invariants
KAPPA_MAX_VERTICES = 400
PLANARITY_MAX_EDGES = 200_000
DISTANCE_MAX_VERTICES = 5_000


class EmptyGraphError(ValueError):
    """An invariant is undefined on the empty graph."""


class DisconnectedGraphError(ValueError):
    """An invariant is undefined on a disconnected graph."""


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    if g.n == 0:
        return []
    _, labels = csgraph.connected_components(g.adjacency, directed=False)
    groups: dict[int, list[int]] = {}
    for v, lab in enumerate(labels.tolist()):
        groups.setdefault(lab, []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def all_pairs_distances(g: Graph) -> np.ndarray:
    """BFS distance matrix; unreachable pairs are ``inf``."""
    if g.n == 0:
        raise EmptyGraphError("distances are undefined on the empty graph")
    return csgraph.shortest_path(g.adjacency, method="D", directed=False, unweighted=True)


def eccentricities(g: Graph, dist: np.ndarray | None = None) -> np.ndarray:
    if dist is None:
        dist = all_pairs_distances(g)
    return dist.max(axis=1)


def diameter(g: Graph, dist: np.ndarray | None = None) -> float | int:
    ecc = eccentricities(g, dist)
    d = ecc.max()
    return INFINITE if math.isinf(d) else int(d)


def radius(g: Graph, dist: np.ndarray | None = None) -> float | int:
    r = eccentricities(g, dist).min()
    return INFINITE if math.isinf(r) else int(r)


@dataclass(frozen=True)
class Center:
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    eccentricity: int

    @property
    def is_complete(self) -> bool:
        k = len(self.vertices)
        return len(self.edges) == k * (k - 1) // 2


def center(g: Graph, dist: np.ndarray | None = None) -> Center:
    """Vertices of minimum eccentricity and the subgraph they induce."""
    if g.n == 0:
        raise EmptyGraphError("the center of the empty graph is undefined")
    ecc = eccentricities(g, dist)
    if math.isinf(ecc.max()):
        raise DisconnectedGraphError("the center is only defined for connected graphs")
    best = ecc.min()
    verts = tuple(int(v) for v in np.flatnonzero(ecc == best))
    vs = set(verts)
    edges = tuple((u, w) for u in verts for w in g.neighbor_lists[u].tolist() if u < w and w in vs)
    return Center(verts, edges, int(best))


# -- report ----------------------------------------------------------------------

@dataclass
class InvariantReport:
    n_vertices: int
    n_edges: int
    connected: bool
    component_count: int
    diameter: float | int | None
    eccentricities: list | None
    center_vertices: list[int] | None
    center_is_complete: bool | None
    kappa: int | None
    planar: bool | None
    kuratowski_witness: dict | None
    min_degree: int | None
    labels: list[str] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    group: str | None = None
    variant: str | None = None

    def to_dict(self) -> dict:
        def enc(x):
            if isinstance(x, float) and math.isinf(x):
                return "inf"
            return x

        return {
            "schema_version": 1,
            "group": self.group,
            "variant": self.variant,
            "n_vertices": self.n_vertices,
            "n_edges": self.n_edges,
            "connected": self.connected,
            "component_count": self.component_count,
            "diameter": enc(self.diameter),
            "eccentricities": None if self.eccentricities is None
            else [enc(e) for e in self.eccentricities],
            "center_vertices": self.center_vertices,
            "center_labels": None if self.center_vertices is None or not self.labels
            else [self.labels[v] for v in self.center_vertices],
            "center_is_complete": self.center_is_complete,
            "kappa": self.kappa,
            "min_degree": self.min_degree,
            "planar": self.planar,
            "kuratowski_witness": self.kuratowski_witness,
            "skipped": self.skipped,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        d = self.to_dict()
        lines = []
        for key, value in d.items():
            if key in ("eccentricities",) and value is not None and len(value) > 20:
                value = f"[{len(value)} values]"
            if key == "kuratowski_witness" and value is not None:
                value = f"{value['kind']} branch={value['branch_vertices']}"
            lines.append(f"{key:>20}: {value}")
        return "\n".join(lines) + "\n"


def _labels(g: Graph) -> list[str]:
    # residues for cyclic groups, coordinate tuples otherwise
    if not isinstance(g, PowerGraph):
        return [str(v) for v in range(g.n)]
    G = g.group
    if len(set(G.primes)) == len(G.factors):
        inverse = np.argsort(G.residue_indices)
        return [str(int(inverse[e])) for e in g.element_ids]
    return ["(" + ",".join(map(str, c)) + ")" for c in g.coords]


def analyze(g: Graph, *, kappa_max_vertices: int = KAPPA_MAX_VERTICES,
            planarity_max_edges: int = PLANARITY_MAX_EDGES) -> InvariantReport:
    """Compute every invariant of ``g`` that fits the size thresholds."""
    from .connectivity import vertex_connectivity
    from .planarity import is_planar

    skipped = []
    comps = components(g)
    connected = len(comps) == 1
    diam = ecc_list = center_vertices = center_complete = None
    if g.n == 0:
        skipped.append("distances: empty graph")
    elif g.n > DISTANCE_MAX_VERTICES:
        skipped.append(f"distances: {g.n} vertices > {DISTANCE_MAX_VERTICES}")
    else:
        dist = all_pairs_distances(g)
        ecc = eccentricities(g, dist)
        diam = diameter(g, dist)
        ecc_list = [INFINITE if math.isinf(e) else int(e) for e in ecc]
        if connected:
            c = center(g, dist)
            center_vertices, center_complete = list(c.vertices), c.is_complete
    kappa = None
    if g.n < 2:
        skipped.append("kappa: fewer than 2 vertices")
    elif g.n > kappa_max_vertices and connected and not g.is_complete():
        skipped.append(f"kappa: {g.n} vertices > {kappa_max_vertices}")
    else:
        kappa = vertex_connectivity(g)
    planar = witness = None
    if g.n_edges > planarity_max_edges:
        skipped.append(f"planarity: {g.n_edges} edges > {planarity_max_edges}")
    else:
        result = is_planar(g)
        planar = result.planar
        witness = None if result.witness is None else result.witness.to_dict()
    return InvariantReport(
        n_vertices=g.n,
        n_edges=g.n_edges,
        connected=connected,
        component_count=len(comps),
        diameter=diam,
        eccentricities=ecc_list,
        center_vertices=center_vertices,
        center_is_complete=center_complete,
        kappa=kappa,
        planar=planar,
        kuratowski_witness=witness,
        min_degree=int(g.degrees.min()) if g.n else None,
        labels=_labels(g),
        skipped=skipped,
        group=g.group.name if isinstance(g, PowerGraph) else None,
        variant=g.variant if isinstance(g, PowerGraph) else None,
    )
