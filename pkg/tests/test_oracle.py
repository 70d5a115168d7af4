import random
from fractions import Fraction as F

import networkx as nx
import pytest

from graphcount.errors import OracleCapError
from graphcount.oracle import (HARD_CAP, PER_COMPONENT, SIZE_WEIGHTED, AvoidComponents,
                               LabeledGraph, component_profile, components,
                               count_two_colorings, enumerate_graphs, has_no_isolated_vertex,
                               is_bipartite, oracle_table, oracle_tables, vertex_pairs,
                               weighted_nu)
from graphcount.series import WeightVector
from graphcount.tables import CountTable
from golden import TABLE_1

TRIANGLE = LabeledGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
TWO_EDGES = LabeledGraph.from_edges(4, [(1, 2), (3, 4)])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edge_list())
    return h


def test_pair_order_is_lexicographic():
    assert vertex_pairs(4) == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    assert LabeledGraph.from_edges(4, [(1, 3)]).edges == 0b10


@pytest.mark.parametrize("n, predicate, expected", [
    (2, None, 2), (4, None, 64), (3, is_bipartite, 7), (1, None, 1)])
def test_enumerate_counts(n, predicate, expected):
    assert sum(1 for _ in enumerate_graphs(n, predicate)) == expected


def test_enumerate_yields_each_pattern_once():
    seen = [g.edges for g in enumerate_graphs(4)]
    assert sorted(seen) == list(range(64))


def test_cap_guard():
    with pytest.raises(OracleCapError):
        next(enumerate_graphs(8))
    with pytest.raises(OracleCapError):
        next(enumerate_graphs(9, cap=HARD_CAP + 1))
    assert next(enumerate_graphs(8, cap=8)).edges == 0


def test_is_bipartite_examples():
    assert is_bipartite(LabeledGraph.from_edges(2, [(1, 2)]))
    assert not is_bipartite(TRIANGLE)
    assert is_bipartite(LabeledGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]))


def test_is_bipartite_agrees_with_networkx():
    for g in enumerate_graphs(5):
        assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


def test_components_examples():
    assert components(LabeledGraph(3)) == [1, 1, 1]
    assert components(TWO_EDGES) == [2, 2]
    assert components(LabeledGraph.from_edges(3, [(1, 2), (2, 3)])) == [3]


def test_components_agree_with_networkx():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 7)
        g = LabeledGraph(n, rng.getrandbits(len(vertex_pairs(n))))
        h = to_nx(g)
        expected = sorted((len(c), h.subgraph(c).number_of_edges())
                          for c in nx.connected_components(h))
        assert component_profile(g) == expected


def test_weighted_nu_examples():
    assert weighted_nu(LabeledGraph(3), WeightVector()) == 3
    w = WeightVector([1, F(1, 2)])
    assert weighted_nu(TWO_EDGES, w, PER_COMPONENT) == 1
    assert weighted_nu(TWO_EDGES, w, SIZE_WEIGHTED) == 2


def test_oracle_table_examples():
    t4 = oracle_table(4, predicate=lambda g: is_bipartite(g) and has_no_isolated_vertex(g))
    assert {key: t4[(4, key[1], key[2])] for key in TABLE_1 if key[0] == 4} == \
        {key: c for key, c in TABLE_1.items() if key[0] == 4}
    t5 = oracle_table(5, predicate=is_bipartite)
    assert t5[(5, 4, 1)] == 125
    assert oracle_table(2) == CountTable({(2, 0, 2): 1, (2, 1, 1): 1})


def test_isolated_vertices_change_the_order_four_row():
    assert oracle_table(4, predicate=is_bipartite)[(4, 2, 2)] == 15


@pytest.mark.parametrize("n", range(1, 6))
def test_totality(n):
    table = oracle_table(n, WeightVector(["1/3", 2]))
    assert sum(c for _, c in table.items()) == 2 ** (n * (n - 1) // 2)


def test_bipartite_components_are_bipartite():
    for g in enumerate_graphs(5, is_bipartite):
        h = to_nx(g)
        for c in nx.connected_components(h):
            assert nx.is_bipartite(h.subgraph(c))


def test_connected_bipartite_graphs_have_two_colourings():
    for g in enumerate_graphs(5, is_bipartite):
        if components(g) == [5]:
            assert count_two_colorings(g) == 2
    assert count_two_colorings(TRIANGLE) == 0


def test_avoid_components_predicate():
    pred = AvoidComponents(frozenset({(2, (1,))}), is_bipartite)
    assert not pred(TWO_EDGES)
    assert pred(LabeledGraph.from_edges(4, [(1, 2), (2, 3), (3, 4)]))
    assert not pred(TRIANGLE)


def test_parallel_tally_matches_serial():
    w = WeightVector(["1/2"])
    serial = oracle_table(6, w, is_bipartite)
    assert oracle_table(6, w, is_bipartite, workers=3) == serial


def test_oracle_tables_merge_orders():
    table = oracle_tables(3, predicate=is_bipartite)
    assert table.orders() == [1, 2, 3]
    assert table[(3, 2, 1)] == 3
