import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from powerlab.groups import enumerate_abelian_groups, is_cyclic, parse_group
from powerlab.powergraph import (FULL, PROPER, Graph, adjacent, adjacent_cyclic_fast,
                                 build_power_graph, export_graph, from_json, power_graph,
                                 to_dot, to_edgelist, to_json)

small_groups = st.integers(2, 64).flatmap(lambda n: st.sampled_from(enumerate_abelian_groups(n)))
cyclic_orders = st.integers(2, 200)


def edge_tuples(g):
    """Edges as pairs of coordinate tuples, for comparison with the oracle."""
    return {frozenset((g.coords[u], g.coords[v])) for u, v in g.edges()}


# -- adjacency predicate -----------------------------------------------------------------

def test_adjacent_examples():
    c6 = parse_group("6")
    assert adjacent(c6.residue(2), c6.residue(4))
    v4 = parse_group("2,2")
    assert not adjacent(v4.element((1, 0)), v4.element((0, 1)))


@given(small_groups, st.data())
def test_identity_adjacent_to_everything(g, data):
    x = g.element_at(data.draw(st.integers(1, g.order - 1)))
    assert adjacent(g.identity, x) and adjacent(x, g.identity)


def test_adjacent_rejects_loops_and_mixed_groups():
    c6 = parse_group("6")
    with pytest.raises(ValueError):
        adjacent(c6.residue(1), c6.residue(1))
    with pytest.raises(TypeError):
        adjacent(c6.residue(1), parse_group("2,2").element((1, 0)))


def test_fast_path_examples():
    c6 = parse_group("6")
    assert adjacent_cyclic_fast(c6, c6.residue(2), c6.residue(1))  # orders 3 and 6
    assert not adjacent_cyclic_fast(c6, c6.residue(3), c6.residue(2))  # orders 2 and 3
    c12 = parse_group("12")
    assert adjacent_cyclic_fast(c12, c12.residue(3), c12.residue(9))


def test_fast_path_refuses_noncyclic():
    v4 = parse_group("2,2")
    with pytest.raises(ValueError):
        adjacent_cyclic_fast(v4, v4.element((1, 0)), v4.element((0, 1)))


@given(cyclic_orders, st.data())
def test_fast_path_agrees_with_membership(n, data):
    g = parse_group(str(n))
    a, b = data.draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
    x, y = g.residue(a), g.residue(b)
    assert adjacent_cyclic_fast(g, x, y) == adjacent(x, y)


# -- graph construction ----------------------------------------------------------------

def test_small_graphs():
    assert power_graph("4", FULL).is_complete() and power_graph("4", FULL).n == 4
    p4 = power_graph("4")
    assert p4.n == 3 and p4.is_complete()
    v4 = power_graph("2,2")
    assert (v4.n, v4.n_edges) == (3, 0)


def test_proper_c6():
    g = power_graph("6")
    G = g.group
    v = {k: g.vertex_of(G.residue(k)) for k in range(1, 6)}
    for gen in (1, 5):
        assert set(g.neighbors(v[gen]).tolist()) == {v[k] for k in range(1, 6) if k != gen}
    assert g.has_edge(v[2], v[4])
    assert set(g.neighbors(v[3]).tolist()) == {v[1], v[5]}
    # the generators, 2~4, and 3's two edges: 4 + 3 + 1 = 8 edges in total
    assert g.n == 5 and g.n_edges == 8


@given(small_groups)
def test_membership_graph_matches_oracle(G):
    g = build_power_graph(G, PROPER, method="membership")
    assert edge_tuples(g) == oracles.power_graph_edges(G.factors)


@pytest.mark.parametrize("n", range(1, 201))
def test_divisibility_edge_identical_to_membership(n):
    G = parse_group(str(n))
    for variant in (FULL, PROPER):
        fast = build_power_graph(G, variant, method="divisibility")
        slow = build_power_graph(G, variant, method="membership")
        assert fast.same_edges(slow)


def test_divisibility_refuses_noncyclic():
    with pytest.raises(ValueError):
        build_power_graph(parse_group("2,2"), method="divisibility")
    with pytest.raises(ValueError):
        build_power_graph(parse_group("4"), method="bogus")
    with pytest.raises(ValueError):
        build_power_graph(parse_group("4"), "half")


@given(small_groups)
def test_graph_is_simple_and_symmetric(G):
    g = build_power_graph(G, FULL)
    a = g.adjacency
    assert (a != a.T).nnz == 0
    assert not a.diagonal().any()
    assert set(np.unique(a.data).tolist()) <= {1}
    # the identity is a universal vertex of P(G)
    assert g.degrees[0] == g.n - 1


@given(small_groups)
def test_proper_is_full_minus_identity(G):
    full = build_power_graph(G, FULL)
    proper = build_power_graph(G, PROPER)
    assert proper.same_edges(full.induced_subgraph(range(1, full.n)))


@given(small_groups, st.randoms(use_true_random=False))
def test_relabel_preserves_structure(G, rnd):
    g = build_power_graph(G)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabeled(perm)
    assert h.n_edges == g.n_edges
    assert sorted(h.degrees.tolist()) == sorted(g.degrees.tolist())
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_graph_from_edges():
    g = Graph.from_edges(4, [(0, 1), (1, 0), (2, 3)])
    assert g.edges() == [(0, 1), (2, 3)]
    assert not g.is_complete()


# -- export -----------------------------------------------------------------------------

def test_edgelist_c3():
    text = to_edgelist(power_graph("3"))
    assert text.splitlines()[1:] == ["1-2"]


def test_edgelist_klein():
    lines = to_edgelist(power_graph("2,2")).splitlines()
    assert lines == ["# C2xC2 proper vertices=3 edges=0"]


def test_dot_output():
    text = to_dot(power_graph("7"))
    assert text.startswith('graph "proper_C7" {')
    assert text.count(" -- ") == 15
    labelled = to_dot(power_graph("2,2,3"), class_labels=True)
    assert 'label="q1"' in labelled and 'label="p1"' in labelled and 'label="r1"' in labelled


@given(small_groups, st.sampled_from([FULL, PROPER]))
def test_json_round_trip(G, variant):
    g = build_power_graph(G, variant)
    text = to_json(g)
    back = from_json(text)
    assert back.group == G and back.variant == variant
    assert back.same_edges(g)
    assert to_json(back) == text


def test_unknown_format():
    with pytest.raises(ValueError):
        export_graph(power_graph("3"), "graphml")


def test_vertex_lookup():
    g = power_graph("2,4")
    v = g.vertex_of((1, 1))
    assert g.element(v).coords == (1, 1) and g.orders[v] == 4
    with pytest.raises(KeyError):
        g.vertex_of((0, 0))
    assert len(g.vertices_of_order(2)) == 3


def test_cyclic_check_used_by_auto():
    assert is_cyclic(parse_group("6"))
    assert power_graph("6").same_edges(build_power_graph(parse_group("6"), method="membership"))
