import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from powerlab.connectivity import (OracleRefused, local_vertex_connectivity,
                                   vertex_connectivity, vertex_connectivity_oracle)
from powerlab.groups import abelian_groups_in_range
from powerlab.powergraph import Graph, power_graph


@st.composite
def random_graphs(draw, max_n=11):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.mark.parametrize("spec, kappa", [("4", 2), ("6", 2), ("2,2", 0), ("9", 7), ("15", 8)])
def test_kappa_examples(spec, kappa):
    assert vertex_connectivity(power_graph(spec)) == kappa


def test_c12_above_phi():
    assert vertex_connectivity(power_graph("12")) > 4


def test_oracle_examples():
    k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert vertex_connectivity_oracle(k3) == 2
    assert vertex_connectivity_oracle(path) == 1
    assert vertex_connectivity_oracle(power_graph("10")) == 4


def test_single_vertex_is_an_error():
    one = Graph.from_edges(1, [])
    with pytest.raises(ValueError):
        vertex_connectivity(one)
    with pytest.raises(ValueError):
        vertex_connectivity_oracle(one)


def test_oracle_refuses_large_graphs():
    with pytest.raises(OracleRefused):
        vertex_connectivity_oracle(power_graph("22"))


def test_local_connectivity_needs_nonadjacent_pair():
    g = power_graph("6")
    with pytest.raises(ValueError):
        local_vertex_connectivity(g, 0, 0)
    with pytest.raises(ValueError):
        local_vertex_connectivity(g, *g.edges()[0])


@given(random_graphs())
def test_exact_matches_oracle_on_random_graphs(g):
    assert vertex_connectivity(g) == vertex_connectivity_oracle(g)


@given(random_graphs(max_n=14))
def test_exact_matches_networkx(g):
    # networkx returns 0 for a disconnected graph and n-1 for K_n, as we do
    assert vertex_connectivity(g) == nx.node_connectivity(g.to_networkx())


@given(random_graphs())
def test_kappa_at_most_min_degree(g):
    assert vertex_connectivity(g) <= int(g.degrees.min())


def test_sweep_graphs_agree_with_oracle():
    checked = 0
    for G in abelian_groups_in_range(3, 21):
        g = power_graph(G)
        assert vertex_connectivity(g) == vertex_connectivity_oracle(g), G.name
        checked += 1
    assert checked > 20
