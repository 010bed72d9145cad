"""Exhaustive checks of the structural claims about proper power graphs.

Every claim has a per-group check and a family filter.  A sweep runs the
check on each abelian group of the family with order in a range and folds
the outcomes into a :class:`TheoremVerdict`.  Counterexamples carry enough
data to be re-checked on their own (see :func:`recheck`).

Checks are pure functions of the group, so sweeps may fan out over worker
processes; results are merged in canonical group order, which keeps
reports byte-identical for any worker count.
"""

from __future__ import annotations

import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .connectivity import (ORACLE_MAX_VERTICES, vertex_connectivity,
                           vertex_connectivity_oracle)
from .groups import (AbelianGroup, abelian_groups_in_range, euler_phi, factorize,
                     is_cyclic, is_p_group, p_group_prime, parse_group)
from .invariants import KAPPA_MAX_VERTICES, all_pairs_distances, center, components
from .planarity import (ORACLE_MAX_EDGES, InvalidWitness, is_planar, planarity_oracle,
                        validate_witness)
from .powergraph import FULL, PROPER, PowerGraph, build_power_graph

HOLDS = "holds"
FAILS = "fails"
VACUOUS = "vacuous"  # no group in the range belongs to the claim's family
SCHEMA_VERSION = 1


# -- cached per-group data ------------------------------------------------------------

@lru_cache(maxsize=256)
def proper_graph(G: AbelianGroup) -> PowerGraph:
    return build_power_graph(G, PROPER)


@lru_cache(maxsize=64)
def full_graph(G: AbelianGroup) -> PowerGraph:
    return build_power_graph(G, FULL)


@lru_cache(maxsize=256)
def proper_distances(G: AbelianGroup) -> np.ndarray:
    return all_pairs_distances(proper_graph(G))


@lru_cache(maxsize=256)
def proper_kappa(G: AbelianGroup) -> int:
    return vertex_connectivity(proper_graph(G))


@lru_cache(maxsize=64)
def _dense(G: AbelianGroup, variant: str) -> np.ndarray:
    g = proper_graph(G) if variant == PROPER else full_graph(G)
    return g.adjacency.toarray().astype(bool)


def _c(g: PowerGraph, v: int) -> list[int]:
    return list(g.coords[v])


def _coords(G: AbelianGroup, idx: int) -> list[int]:
    return [int(c) for c in G.coords_array[idx]]


def _diam(G: AbelianGroup) -> int | None:
    d = proper_distances(G).max()
    return None if math.isinf(d) else int(d)


def _connected(G: AbelianGroup) -> bool:
    return len(components(proper_graph(G))) == 1


def _noncyclic_nonp(G: AbelianGroup) -> bool:
    return G.order > 1 and not is_cyclic(G) and not is_p_group(G)


def _noncyclic_primes(G: AbelianGroup) -> list[int]:
    return sorted(p for p in set(G.primes) if len(G.sylow_factors(p)) > 1)


def _cyclic_sylow_primes(G: AbelianGroup) -> list[int]:
    return sorted(p for p in set(G.primes) if len(G.sylow_factors(p)) == 1)


# -- outcomes -----------------------------------------------------------------------

@dataclass
class Outcome:
    """Result of one claim on one group."""

    status: str  # "ok", "fail" or "skip"
    witness: dict | None = None
    info: dict = field(default_factory=dict)


OK = "ok"
FAIL = "fail"
SKIP = "skip"


# -- per-group checks ----------------------------------------------------------------

def check_subgroup_dichotomy(G: AbelianGroup) -> Outcome:
    """Same-order elements generate equal or trivially intersecting subgroups."""
    orders = G.orders_array
    subs = [frozenset(G.subgroup_indices(i).tolist()) for i in range(G.order)]
    first = None
    count = 0
    for a, b in itertools.combinations(range(1, G.order), 2):
        if orders[a] != orders[b] or subs[a] == subs[b]:
            continue
        shared = subs[a] & subs[b]
        if len(shared) > 1:
            count += 1
            if first is None:
                first = {"a": _coords(G, a), "b": _coords(G, b), "order": int(orders[a]),
                         "shared": _coords(G, min(shared - {0}))}
    if first is None:
        return Outcome(OK)
    first["violating_pairs"] = count
    return Outcome(FAIL, first)


def check_adjacency_implies_divisibility(G: AbelianGroup) -> Outcome:
    """Adjacent in P(G) implies one order divides the other; also logs converse failures."""
    g = full_graph(G)
    o = g.orders
    for u, v in g.edges():
        if o[v] % o[u] and o[u] % o[v]:
            return Outcome(FAIL, {"a": _c(g, u), "b": _c(g, v),
                                  "orders": [int(o[u]), int(o[v])]})
    adj = _dense(G, FULL)
    div = (o[None, :] % o[:, None] == 0) | (o[:, None] % o[None, :] == 0)
    gap = np.argwhere(np.triu(div & ~adj, k=1))
    info = {}
    if gap.size:
        u, v = (int(x) for x in gap[0])
        info["converse_failure"] = {"a": _c(g, u), "b": _c(g, v),
                                    "orders": [int(o[u]), int(o[v])]}
    return Outcome(OK, info=info)


def check_cyclic_adjacency_iff_divisibility(G: AbelianGroup) -> Outcome:
    """Cyclic G: adjacency iff order divisibility, and both constructions agree."""
    member = build_power_graph(G, FULL, method="membership")
    fast = build_power_graph(G, FULL, method="divisibility")
    o = member.orders
    adj = member.adjacency.toarray().astype(bool)
    div = (o[None, :] % o[:, None] == 0) | (o[:, None] % o[None, :] == 0)
    np.fill_diagonal(div, False)
    diff = np.argwhere(np.triu(adj != div, k=1))
    if diff.size:
        u, v = (int(x) for x in diff[0])
        return Outcome(FAIL, {"a": _c(member, u), "b": _c(member, v),
                              "adjacent": bool(adj[u, v]), "orders": [int(o[u]), int(o[v])]})
    if not member.same_edges(fast):
        return Outcome(FAIL, {"construction_mismatch": True})
    return Outcome(OK)


def check_p_group_connectivity(G: AbelianGroup) -> Outcome:
    """Abelian p-groups: P*(G) connected iff G is cyclic."""
    conn = _connected(G)
    if conn != is_cyclic(G):
        return Outcome(FAIL, {"connected": conn, "cyclic": is_cyclic(G)})
    return Outcome(OK)


def check_non_p_group_diameter(G: AbelianGroup) -> Outcome:
    """Abelian G, not a p-group (so Z(G) = G is not): connected with diameter <= 6."""
    d = _diam(G)
    if d is None or d > 6:
        return Outcome(FAIL, {"connected": d is not None, "diameter": "inf" if d is None else d})
    return Outcome(OK, info={"diameter": d})


def check_connectivity_iff(G: AbelianGroup) -> Outcome:
    predicted = is_cyclic(G) or not is_p_group(G)
    comps = len(components(proper_graph(G)))
    if (comps == 1) != predicted:
        return Outcome(FAIL, {"components": comps, "predicted_connected": predicted})
    return Outcome(OK, info={"components": comps})


def check_coprime_path(G: AbelianGroup) -> Outcome:
    """Coprime-order a, b: a ~ a+b ~ b in P*(G)."""
    n = G.order
    if n < 3:
        return Outcome(OK)
    o = G.orders_array
    adj = _dense(G, FULL)  # identity never occurs on these paths
    c = G.coords_array
    f = np.array(G.factors, dtype=np.int64)
    sums = ((c[:, None, :] + c[None, :, :]) % f) @ G.strides
    coprime = np.gcd(o[:, None], o[None, :]) == 1
    coprime[0, :] = coprime[:, 0] = False
    a_idx, b_idx = np.nonzero(coprime)
    s = sums[a_idx, b_idx]
    good = adj[a_idx, s] & adj[s, b_idx]
    if not good.all():
        k = int(np.flatnonzero(~good)[0])
        return Outcome(FAIL, {"a": _coords(G, a_idx[k]), "b": _coords(G, b_idx[k]),
                              "a+b": _coords(G, s[k])})
    return Outcome(OK, info={"pairs": int(a_idx.size)})


def check_diameter_bound(G: AbelianGroup) -> Outcome:
    if not _connected(G):
        return Outcome(SKIP, info={"reason": "disconnected"})
    d = _diam(G)
    if d > 4:
        return Outcome(FAIL, {"diameter": d})
    return Outcome(OK, info={"diameter": d})


def cyclic_case(n: int) -> str:
    f = factorize(n)
    if len(f) == 1:
        return "prime-power"
    if len(f) == 2 and all(e == 1 for e in f.values()):
        return "pq"
    return "other"


def check_kappa_cyclic(G: AbelianGroup) -> Outcome:
    n = G.order
    if n - 1 > KAPPA_MAX_VERTICES:
        return Outcome(SKIP, info={"reason": f"{n - 1} vertices above the exact-kappa limit"})
    kappa = proper_kappa(G)
    phi = euler_phi(n)
    case = cyclic_case(n)
    ok = {"prime-power": kappa == n - 2, "pq": kappa == phi, "other": kappa > phi}[case]
    data = {"case": case, "kappa": kappa, "phi": phi}
    return Outcome(OK if ok else FAIL, data if not ok else None, info=data)


def _nonadjacent_same_prime(G: AbelianGroup):
    g = proper_graph(G)
    for p in _noncyclic_primes(G):
        verts = g.vertices_of_order(p)
        for u, v in itertools.combinations(verts, 2):
            if not g.has_edge(u, v):
                return p, u, v
    return None


def check_nonadjacent_same_prime(G: AbelianGroup) -> Outcome:
    found = _nonadjacent_same_prime(G)
    if found is None:
        return Outcome(FAIL, {"reason": "no non-adjacent pair of equal prime order"})
    p, u, v = found
    g = proper_graph(G)
    return Outcome(OK, info={"prime": p, "a": _c(g, u), "b": _c(g, v)})


def check_kappa_bound(G: AbelianGroup) -> Outcome:
    """kappa(P*(G)) <= number of order-p elements, for each prime p with non-cyclic Sylow."""
    g = proper_graph(G)
    if g.n > KAPPA_MAX_VERTICES:
        return Outcome(SKIP, info={"reason": f"{g.n} vertices above the exact-kappa limit"})
    kappa = proper_kappa(G)
    prime_counts = {p: len(g.vertices_of_order(p)) for p in sorted(set(G.primes))}
    total = sum(prime_counts.values())
    bounds = {str(p): prime_counts[p] for p in _noncyclic_primes(G)}
    # the complementary reading |r| = elements of the other prime orders, for the notes
    other = {str(p): total - prime_counts[p] for p in _noncyclic_primes(G)}
    info = {"kappa": kappa, "prime_order_elements": total, "bound": bounds,
            "complement_bound": other}
    violated = [p for p, b in bounds.items() if kappa > b]
    if violated:
        return Outcome(FAIL, dict(info, violated_primes=violated), info=info)
    return Outcome(OK, info=info)


def check_center_cyclic(G: AbelianGroup) -> Outcome:
    g = proper_graph(G)
    c = center(g, proper_distances(G))
    n = G.order
    data = {"center": [_c(g, v) for v in c.vertices], "complete": c.is_complete}
    if not c.is_complete:
        return Outcome(FAIL, data)
    if cyclic_case(n) != "prime-power":
        generators = g.vertices_of_order(n)
        if list(c.vertices) != generators or len(generators) != euler_phi(n):
            data["generators"] = [_c(g, v) for v in generators]
            return Outcome(FAIL, data)
    return Outcome(OK, info={"center_size": len(c.vertices)})


def center_subgroup_Z(G: AbelianGroup) -> list[int] | None:
    """Group indices of Z minus the identity, or None when no prime qualifies.

    Z is generated by the sum of one order-q element for every prime q whose
    Sylow subgroup is cyclic; its order is the product of those primes.
    """
    qs = _cyclic_sylow_primes(G)
    if not qs:
        return None
    coords = [0] * len(G.factors)
    for i, (f, p) in enumerate(zip(G.factors, G.primes)):
        if p in qs:
            coords[i] = f // p
    z = G.index_of(coords)
    return sorted(set(G.subgroup_indices(z).tolist()) - {0})


def _cyclic_sylow_sum(G: AbelianGroup) -> list[int]:
    # the larger candidate: every element whose only nonzero coordinates sit in cyclic Sylows
    qs = set(_cyclic_sylow_primes(G))
    c = G.coords_array
    mask = np.ones(G.order, dtype=bool)
    for i, p in enumerate(G.primes):
        if p not in qs:
            mask &= c[:, i] == 0
    return sorted(set(np.flatnonzero(mask).tolist()) - {0})


def check_center_noncyclic(G: AbelianGroup) -> Outcome:
    predicted = center_subgroup_Z(G)
    if predicted is None:
        return Outcome(SKIP, info={"reason": "no prime with cyclic Sylow subgroup"})
    if not _connected(G):
        return Outcome(SKIP, info={"reason": "disconnected"})
    g = proper_graph(G)
    c = center(g, proper_distances(G))
    actual = [int(g.element_ids[v]) for v in c.vertices]
    if actual != predicted:
        alt = _cyclic_sylow_sum(G)
        return Outcome(FAIL, {
            "center": [_coords(G, i) for i in actual],
            "predicted": [_coords(G, i) for i in predicted],
            "center_eccentricity": c.eccentricity,
            "matches_cyclic_sylow_sum": actual == alt,
        })
    return Outcome(OK, info={"center_size": len(actual)})


def check_clique_subgraph(G: AbelianGroup) -> Outcome:
    """Each prime p dividing |G| gives a K_p in P(G) (K_{p-1} in P*(G))."""
    g = full_graph(G)
    adj = _dense(G, FULL)
    for p in sorted(set(G.primes)):
        candidates = np.flatnonzero(g.orders == p)
        if candidates.size == 0:
            return Outcome(FAIL, {"prime": p, "reason": "no element of order p"})
        x = int(candidates[0])
        clique = G.subgroup_indices(x)
        sub = adj[np.ix_(clique, clique)]
        if not (sub | np.eye(len(clique), dtype=bool)).all():
            return Outcome(FAIL, {"prime": p, "generator": _coords(G, x)})
    return Outcome(OK)


def _planarity_outcome(G: AbelianGroup, expect_planar: bool, extra: dict | None = None) -> Outcome:
    g = proper_graph(G)
    r = is_planar(g)
    data = dict(extra or {})
    data["planar"] = r.planar
    if r.witness is not None:
        try:
            validate_witness(g, r.witness)
        except InvalidWitness as exc:
            data["invalid_witness"] = str(exc)
            return Outcome(FAIL, data)
        data["witness_kind"] = r.witness.kind
    if r.planar != expect_planar:
        return Outcome(FAIL, data)
    return Outcome(OK, info=data)


def check_planar_cyclic(G: AbelianGroup) -> Outcome:
    return _planarity_outcome(G, G.order <= 6)


def check_planar_exponent_p(G: AbelianGroup) -> Outcome:
    p = p_group_prime(G)
    k = len(G.factors)
    g = proper_graph(G)
    comps = components(g)
    expected = (p**k - 1) // (p - 1)
    cliques = all(len(cmp) == p - 1 and g.induced_subgraph(cmp).is_complete() for cmp in comps)
    if len(comps) != expected or not cliques:
        return Outcome(FAIL, {"components": len(comps), "expected_components": expected,
                              "all_K_p_minus_1": cliques})
    return _planarity_outcome(G, p <= 5, {"components": len(comps)})


def check_planar_pn(G: AbelianGroup) -> Outcome:
    p = p_group_prime(G)
    g = proper_graph(G)
    x = g.vertices_of_order(p)[0]
    clique = [g.vertex_of(G.element_at(int(i))) for i in G.subgroup_indices(g.element_ids[x])[1:]]
    if len(clique) < p - 1 or not g.induced_subgraph(clique).is_complete():
        return Outcome(FAIL, {"clique": [_c(g, v) for v in clique]})
    return _planarity_outcome(G, False, {"clique_size": len(clique)})


def mixed_23_case(G: AbelianGroup) -> str | None:
    """'i' for C3+C2^k, 'ii' for C2+C3^k (C6 is both; reported as 'i')."""
    twos, threes = G.sylow_factors(2), G.sylow_factors(3)
    if len(twos) + len(threes) != len(G.factors) or not twos or not threes:
        return None
    if threes == (3,) and all(q == 2 for q in twos):
        return "i"
    if twos == (2,) and all(q == 3 for q in threes):
        return "ii"
    return None


def degree_profile(g: PowerGraph) -> dict[int, list[int]]:
    prof: dict[int, set[int]] = {}
    for v in range(g.n):
        prof.setdefault(int(g.orders[v]), set()).add(int(g.degrees[v]))
    return {o: sorted(d) for o, d in sorted(prof.items())}


def check_planar_23(G: AbelianGroup) -> Outcome:
    g = proper_graph(G)
    prof = degree_profile(g)
    expected = []
    if G.sylow_factors(3) == (3,):
        expected.append({2: [2], 6: [4]})
    if G.sylow_factors(2) == (2,):
        expected.append({3: [3], 6: [4]})
    bad = [{str(o): d for o, d in e.items()} for e in expected
           if any(prof.get(o) != d for o, d in e.items())]
    if bad:
        return Outcome(FAIL, {"degree_profile": {str(o): d for o, d in prof.items()},
                              "expected": bad})
    return _planarity_outcome(G, True, {"degree_profile": {str(o): d for o, d in prof.items()}})


def check_oracles(G: AbelianGroup) -> Outcome:
    """Exact algorithms agree with the brute-force oracles where those accept."""
    g = proper_graph(G)
    info = {}
    if 2 <= g.n <= ORACLE_MAX_VERTICES:
        k, ko = proper_kappa(G), vertex_connectivity_oracle(g)
        info["kappa"] = k
        if k != ko:
            return Outcome(FAIL, {"kappa": k, "kappa_oracle": ko})
    if g.n_edges <= ORACLE_MAX_EDGES:
        r, ro = is_planar(g), planarity_oracle(g)
        info["planar"] = r.planar
        if r.planar != ro:
            return Outcome(FAIL, {"planar": r.planar, "planar_oracle": ro})
    if not info:
        return Outcome(SKIP, info={"reason": "beyond oracle limits"})
    return Outcome(OK, info=info)


# -- registry ------------------------------------------------------------------------

@dataclass(frozen=True)
class Claim:
    theorem_id: str
    title: str
    family: Callable[[AbelianGroup], bool]
    check: Callable[[AbelianGroup], Outcome]
    expected: str = HOLDS
    report_only: bool = False


def _is_elementary(G):
    p = p_group_prime(G)
    return p is not None and all(q == p for q in G.factors)


def _is_large_pn(G):
    p = p_group_prime(G)
    return p is not None and p >= 7 and not is_cyclic(G)


CLAIMS: dict[str, Claim] = {c.theorem_id: c for c in [
    Claim("L2.1", "same-order cyclic subgroups coincide or meet trivially",
          lambda G: G.order >= 2, check_subgroup_dichotomy, expected=FAILS),
    Claim("L2.2", "adjacent in P(G) => orders divide", lambda G: G.order >= 2, check_adjacency_implies_divisibility),
    Claim("L2.3", "cyclic G: adjacent <=> orders divide", is_cyclic, check_cyclic_adjacency_iff_divisibility),
    Claim("C3.1-abelian", "abelian p-group: P*(G) connected <=> cyclic",
          is_p_group, check_p_group_connectivity),
    Claim("T3.2-abelian", "abelian non-p-group: P*(G) connected, diam <= 6",
          lambda G: G.order > 1 and not is_p_group(G), check_non_p_group_diameter),
    Claim("T-con", "P*(G) connected <=> G not a non-cyclic p-group",
          lambda G: G.order >= 2, check_connectivity_iff),
    Claim("L3.4", "coprime orders: a ~ ab ~ b", lambda G: G.order >= 2, check_coprime_path),
    Claim("T-diam4", "connected P*(G) has diameter <= 4",
          lambda G: G.order >= 2, check_diameter_bound),
    Claim("T-kappa-cyclic", "kappa(P*(C_n)): n-2 / phi(n) / > phi(n)",
          lambda G: is_cyclic(G) and G.order >= 3, check_kappa_cyclic),
    Claim("L-Na", "non-adjacent pair of equal prime order", _noncyclic_nonp,
          check_nonadjacent_same_prime),
    Claim("T-kappa-bound", "kappa(P*(G)) <= #elements of order p", _noncyclic_nonp,
          check_kappa_bound, report_only=True),
    Claim("T-center-cyclic", "center of P*(C_n) is complete (generators if not a p-group)",
          lambda G: is_cyclic(G) and G.order >= 2, check_center_cyclic),
    Claim("T-center-noncyclic", "center of P*(G) is P*(Z)", _noncyclic_nonp,
          check_center_noncyclic, report_only=True),
    Claim("L-CS", "P(G) contains K_p for each prime p dividing |G|",
          lambda G: G.order >= 2, check_clique_subgraph),
    Claim("T-planar-cyclic", "P*(C_n) non-planar <=> n >= 7",
          lambda G: is_cyclic(G) and G.order >= 2, check_planar_cyclic),
    Claim("T-planar-exp-p", "exponent-p p-group: P*(G) planar <=> p <= 5",
          _is_elementary, check_planar_exponent_p),
    Claim("T-planar-pn", "non-cyclic p-group, p >= 7: P*(G) non-planar",
          _is_large_pn, check_planar_pn),
    Claim("T-planar-23", "C3+C2^k and C2+C3^k: P*(G) planar",
          lambda G: mixed_23_case(G) is not None, check_planar_23),
]}

ORACLE_ID = "oracle-agreement"
ORACLE_CLAIM = Claim(ORACLE_ID, "exact kappa/planarity agree with brute-force oracles",
                     lambda G: G.order >= 3, check_oracles)

THEOREM_IDS = tuple(CLAIMS)

PLANARITY_FAMILIES = {
    "cyclic": "T-planar-cyclic",
    "exponent-p": "T-planar-exp-p",
    "noncyclic-pn-large-p": "T-planar-pn",
    "mixed-23": "T-planar-23",
}


def claim(theorem_id: str) -> Claim:
    if theorem_id == ORACLE_ID:
        return ORACLE_CLAIM
    try:
        return CLAIMS[theorem_id]
    except KeyError:
        raise ValueError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}") from None


# -- verdicts ------------------------------------------------------------------------

@dataclass
class TheoremVerdict:
    theorem_id: str
    min_order: int
    max_order: int
    status: str
    counterexamples: list[dict]
    groups_checked: int
    skipped: list[dict]
    notes: dict
    expected: str = HOLDS
    report_only: bool = False
    wall_time: float = 0.0

    @property
    def matches_expectation(self) -> bool:
        return self.status in (self.expected, VACUOUS) or self.report_only

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "theorem_id": self.theorem_id,
            "range": [self.min_order, self.max_order],
            "status": self.status,
            "expected": self.expected,
            "report_only": self.report_only,
            "groups_checked": self.groups_checked,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "notes": self.notes,
        }
        if timings:
            d["wall_time"] = round(self.wall_time, 3)
        return d


def _summarize(theorem_id: str, results: list[tuple[AbelianGroup, Outcome]]) -> dict:
    ok = [(G, o) for G, o in results if o.status == OK]
    if theorem_id in ("T-diam4", "T3.2-abelian"):
        diams = [(o.info["diameter"], G) for G, o in ok]
        if not diams:
            return {}
        top = max(d for d, _ in diams)
        return {"max_diameter": top, "attained_by": [G.name for d, G in diams if d == top]}
    if theorem_id == "L2.2":
        conv = [dict(group=G.name, **o.info["converse_failure"])
                for G, o in ok if "converse_failure" in o.info]
        return {"converse_failures": len(conv), "converse_examples": conv[:10]}
    if theorem_id == "L2.1":
        bad_cyclic = [G.name for G, o in results if o.status == FAIL and is_cyclic(G)]
        return {"cyclic_groups_violating": bad_cyclic}
    if theorem_id == "L-Na":
        return {"witnesses": [dict(group=G.name, **o.info) for G, o in ok]}
    if theorem_id == "T-kappa-cyclic":
        counts: dict[str, int] = {}
        for _, o in results:
            if "case" in o.info:
                counts[o.info["case"]] = counts.get(o.info["case"], 0) + 1
        return {"cases": dict(sorted(counts.items()))}
    if theorem_id == "T-kappa-bound":
        comp_ok = all(o.info["kappa"] <= b for _, o in results if o.status != SKIP
                      for b in o.info["complement_bound"].values())
        return {"complement_reading_holds": comp_ok,
                "instances": [{"group": G.name, "kappa": o.info["kappa"],
                               "bound": o.info["bound"],
                               "complement_bound": o.info["complement_bound"]}
                              for G, o in results if o.status != SKIP]}
    if theorem_id == "T-center-noncyclic":
        fails = [o.witness for _, o in results if o.status == FAIL]
        return {"mismatches": len(fails),
                "mismatches_matching_cyclic_sylow_sum":
                    sum(1 for w in fails if w["matches_cyclic_sylow_sum"])}
    if theorem_id == ORACLE_ID:
        return {"kappa_compared": sum(1 for _, o in ok if "kappa" in o.info),
                "planarity_compared": sum(1 for _, o in ok if "planar" in o.info)}
    if theorem_id.startswith("T-planar"):
        return {"planar": [G.name for G, o in ok if o.info.get("planar")],
                "non_planar": [G.name for G, o in ok if o.info.get("planar") is False]}
    return {}


def _run_one(args):
    theorem_id, factors = args
    start = time.perf_counter()
    out = claim(theorem_id).check(AbelianGroup(factors))
    return out, time.perf_counter() - start


def family_groups(theorem_id: str, min_order: int, max_order: int,
                  where: Callable[[AbelianGroup], bool] | None = None) -> list[AbelianGroup]:
    fam = claim(theorem_id).family
    return [G for G in abelian_groups_in_range(min_order, max_order)
            if fam(G) and (where is None or where(G))]


def run_claims(theorem_ids, min_order: int, max_order: int, *, workers: int = 1,
               where: Callable[[AbelianGroup], bool] | None = None) -> list[TheoremVerdict]:
    """Sweep several claims; output order follows ``theorem_ids``.

    ``where`` further restricts each claim's family (it is evaluated in the
    calling process, so a lambda is fine).
    """
    theorem_ids = list(theorem_ids)
    tasks = [(tid, G) for tid in theorem_ids
             for G in family_groups(tid, min_order, max_order, where)]
    args = [(t, G.factors) for t, G in tasks]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_one, args, chunksize=4))
    else:
        outcomes = [_run_one(a) for a in args]
    by_id: dict[str, list[tuple[AbelianGroup, Outcome]]] = {t: [] for t in theorem_ids}
    seconds = {t: 0.0 for t in theorem_ids}
    for (t, G), (out, dt) in zip(tasks, outcomes):
        by_id[t].append((G, out))
        seconds[t] += dt
    checked = {t: sum(1 for _, o in by_id[t] if o.status != SKIP) for t in theorem_ids}
    verdicts = []
    for t in theorem_ids:
        c = claim(t)
        results = sorted(by_id[t], key=lambda r: r[0].sort_key)
        cex = [{"group": G.name, "spec": G.spec, "witness": o.witness}
               for G, o in results if o.status == FAIL]
        skipped = [{"group": G.name, "reason": o.info.get("reason", "")}
                   for G, o in results if o.status == SKIP]
        verdicts.append(TheoremVerdict(
            theorem_id=t, min_order=min_order, max_order=max_order,
            status=FAILS if cex else (HOLDS if checked[t] else VACUOUS), counterexamples=cex,
            groups_checked=checked[t],
            skipped=skipped, notes=_summarize(t, results),
            expected=c.expected, report_only=c.report_only,
            wall_time=seconds[t]))
    return verdicts


def run_claim(theorem_id: str, min_order: int, max_order: int, *, workers: int = 1) -> TheoremVerdict:
    return run_claims([theorem_id], min_order, max_order, workers=workers)[0]


def recheck(theorem_id: str, counterexample: dict) -> bool:
    """Re-run the single-group check named by a counterexample; True if it still fails
    with the same witness."""
    G = parse_group(counterexample["spec"])
    out = claim(theorem_id).check(G)
    return out.status == FAIL and out.witness == counterexample["witness"]


# -- named entry points ------------------------------------------------------------------

def check_connectivity_iff_range(lo, hi, **kw):
    return run_claim("T-con", lo, hi, **kw)


def audit_subgroup_dichotomy(lo, hi, **kw):
    return run_claim("L2.1", lo, hi, **kw)


def check_planarity_family(family_id: str, lo: int, hi: int, **kw) -> TheoremVerdict:
    try:
        tid = PLANARITY_FAMILIES[family_id]
    except KeyError:
        raise ValueError(f"unknown planarity family {family_id!r}; "
                         f"choose from {', '.join(PLANARITY_FAMILIES)}") from None
    return run_claim(tid, lo, hi, **kw)


# -- reports ---------------------------------------------------------------------------

def report_json(verdicts: list[TheoremVerdict], config: dict | None = None,
                timings: bool = False) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "config": config or {},
           "verdicts": [v.to_dict(timings) for v in verdicts]}
    return json.dumps(doc, indent=2) + "\n"


def _max_witness(v: TheoremVerdict) -> str:
    if v.counterexamples:
        return v.counterexamples[-1]["group"]
    if "max_diameter" in v.notes:
        return f"diam {v.notes['max_diameter']}"
    return "-"


def report_text(verdicts: list[TheoremVerdict], timings: bool = False) -> str:
    head = f"{'theorem':<20} {'range':<10} {'status':<7} {'expected':<12} {'groups':>6} {'#cex':>5}  max witness"
    lines = [head, "-" * len(head)]
    for v in verdicts:
        expected = v.expected + ("*" if v.report_only else "")
        line = (f"{v.theorem_id:<20} {f'{v.min_order}..{v.max_order}':<10} {v.status:<7} "
                f"{expected:<12} {v.groups_checked:>6} {len(v.counterexamples):>5}  {_max_witness(v)}")
        if timings:
            line += f"  {v.wall_time:.2f}s"
        lines.append(line)
    lines.append("(* report-only: a counterexample is recorded, not treated as an error)")
    return "\n".join(lines) + "\n"
