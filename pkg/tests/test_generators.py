from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from burngame.engine import game_value
from burngame.generators import (
    FamilySpec,
    cartesian,
    complete,
    corona,
    cycle,
    disjoint_union,
    empty_graph,
    family,
    figure1_graph,
    figure2_graph,
    hypercube,
    lexicographic,
    parse_family,
    path,
    star,
    strong,
)
from burngame.graph import GraphError, components, distances, is_connected, max_degree
from burngame.engine import STALLER
from oracles import adjacency, bfs, isomorphic
from strategies import graphs


def test_family_examples():
    assert family(FamilySpec("path", 1)) == complete(1)
    assert isomorphic(hypercube(2), cycle(4))
    s = star(3)
    assert s.n == 4 and s.degree(0) == 3
    assert all(hypercube(d).n == 2 ** d and max_degree(hypercube(d)) == d for d in range(1, 6))
    q = hypercube(4)
    assert all(q.has_edge(u, v) == (bin(u ^ v).count("1") == 1) for u in range(16) for v in range(16))


@pytest.mark.parametrize("kind, size", [("path", 0), ("cycle", 2), ("hypercube", 0), ("hypercube", 7), ("star", 64), ("wheel", 4)])
def test_family_rejects_bad_sizes(kind, size):
    with pytest.raises(GraphError):
        FamilySpec(kind, size)


def test_product_examples():
    assert isomorphic(cartesian(complete(2), complete(2)), cycle(4))
    assert strong(complete(2), complete(2)) == complete(4)
    assert isomorphic(lexicographic(complete(2), empty_graph(2)), cycle(4))
    assert isomorphic(corona(complete(1), complete(2)), complete(3))
    assert isomorphic(corona(complete(2), complete(1)), path(4))
    assert corona(path(3), path(2)).n == 9
    union = disjoint_union(complete(2), complete(1))
    assert union.n == 3 and union.num_edges == 1
    triple = disjoint_union(complete(2), disjoint_union(complete(2), complete(2)))
    assert len(components(triple)) == 3
    with pytest.raises(GraphError):
        cartesian(path(9), path(8))


@given(graphs(max_n=4), graphs(max_n=4))
def test_products_follow_their_definitions(g, h):
    ga, ha = adjacency(g), adjacency(h)
    cart, strg, lex = cartesian(g, h), strong(g, h), lexicographic(g, h)
    for (u, v), (x, y) in itertools.combinations(itertools.product(range(g.n), range(h.n)), 2):
        a, b = u * h.n + v, x * h.n + y
        ge, he = x in ga[u], y in ha[v]
        assert cart.has_edge(a, b) == ((u == x and he) or (ge and v == y))
        assert strg.has_edge(a, b) == ((u == x and he) or (ge and v == y) or (ge and he))
        assert lex.has_edge(a, b) == (ge or (u == x and he))
    cor = corona(g, h)
    assert cor.n == g.n * (1 + h.n)
    assert cor.num_edges == g.num_edges + g.n * (h.num_edges + h.n)


def test_prop_4_7_tight_example():
    g = disjoint_union(path(3), empty_graph(4))
    assert g.n == 7
    assert game_value(g, 0, STALLER) == g.n - 2
    from burngame.graph import complement

    assert game_value(complement(g), 0, STALLER) == 3


def test_figure1_facts():
    g, labels = figure1_graph()
    assert g.n == 52
    assert g.degree(labels["u"]) == 7
    assert is_connected(g)
    dist = bfs(adjacency(g), labels["u"])
    assert dist[labels["y"]] == distances(g)[labels["u"]][labels["y"]] == 8
    assert g.has_edge(labels["v"], labels["w"])


def test_figure2_facts():
    g, labels = figure2_graph()
    assert g.n == 11 and g.degree(labels["v"]) == 5
    assert is_connected(g)


def test_parse_family():
    assert parse_family("path:9") == path(9)
    assert parse_family(" hypercube:3 ") == hypercube(3)
    assert parse_family("cartesian(path:3, cycle:4)") == cartesian(path(3), cycle(4))
    assert parse_family("corona(star:2,complete:1)") == corona(star(2), complete(1))
    assert parse_family("figure2") == figure2_graph()[0]
    for bad in ("path", "path:", "mystery(path:2,path:2)", "cartesian(path:2 path:2)", "path:3 extra", "cycle:2"):
        with pytest.raises(GraphError):
            parse_family(bad)
