from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burngame.corpus import isomorphism_classes
from burngame.generators import complete, cycle, disjoint_union, hypercube, path, star
from burngame.graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    bits,
    closed_neighborhood,
    complement,
    components,
    diameter,
    distances,
    eccentricity,
    empty_graph,
    is_connected,
    laplacian_count,
    make_graph,
    mask_of,
    radius,
    remove_edge,
    spanning_trees,
    square,
)
from oracles import adjacency, bfs, isomorphic, kirchhoff
from strategies import graphs


def test_make_graph_builds_exact_edges():
    assert make_graph(3, [(0, 1), (1, 2)]) == path(3)
    assert make_graph(1, []).n == 1
    dup = make_graph(3, [(0, 1), (0, 1)])
    assert dup.edges() == [(0, 1)]
    assert dup.degree(2) == 0


@pytest.mark.parametrize(
    "n, edges",
    [(0, []), (65, []), (3, [(0, 3)]), (3, [(-1, 0)]), (3, [(1, 1)])],
)
def test_make_graph_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        make_graph(n, edges)


def test_graph_validates_raw_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b00))
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))


def test_complement_examples():
    assert complement(complete(4)) == empty_graph(4)
    assert complement(complement(path(4))) == path(4)
    assert isomorphic(complement(cycle(5)), cycle(5))


def test_square_examples():
    assert square(path(3)) == complete(3)
    assert square(complete(1)) == complete(1)
    p5 = square(path(5))
    assert set(p5.edges()) == {(i, j) for i in range(5) for j in range(i + 1, 5) if j - i <= 2}


def test_remove_edge_examples():
    assert isomorphic(remove_edge(cycle(4), 0, 1), path(4))
    assert remove_edge(complete(2), 0, 1) == empty_graph(2)
    with pytest.raises(GraphError):
        remove_edge(path(3), 0, 2)


def test_distance_examples():
    assert distances(path(5))[0][4] == 4
    split = disjoint_union(complete(2), complete(1))
    assert distances(split)[0][2] is UNREACHABLE
    assert distances(hypercube(3))[0][7] == 3
    assert radius(path(5)) == 2 and diameter(path(5)) == 4
    assert all(radius(complete(n)) == 1 for n in range(2, 7))
    assert eccentricity(star(5), 0) == 1
    assert radius(split) is UNREACHABLE and diameter(split) is UNREACHABLE


def test_unreachable_is_not_a_number():
    with pytest.raises(TypeError):
        UNREACHABLE + 1  # noqa: B018
    with pytest.raises(TypeError):
        UNREACHABLE < 3  # noqa: B018


def test_closed_neighborhood_examples():
    assert closed_neighborhood(path(5), 1 << 2, 1) == mask_of([1, 2, 3])
    assert closed_neighborhood(path(5), 0, 3) == 0
    q3 = hypercube(3)
    assert closed_neighborhood(q3, 1, 2) == q3.full & ~(1 << 7)


def test_connectivity_examples():
    assert is_connected(path(4))
    triple = disjoint_union(complete(2), disjoint_union(complete(2), complete(2)))
    comps = components(triple)
    assert len(comps) == 3 and all(c.bit_count() == 2 for c in comps)
    assert not is_connected(complement(star(4)))


def test_spanning_tree_examples():
    assert len(list(spanning_trees(cycle(4), 100))) == 4
    assert len(list(spanning_trees(complete(4), 100))) == 16
    t = star(4)
    assert list(spanning_trees(t, 10)) == [t]
    with pytest.raises(GraphError):
        list(spanning_trees(complete(6), 100))
    with pytest.raises(GraphError):
        list(spanning_trees(empty_graph(3), 100))


@pytest.mark.parametrize("n", range(1, 7))
def test_spanning_tree_count_matches_kirchhoff(n):
    for g in isomorphism_classes(n):
        if not is_connected(g):
            continue
        expected = kirchhoff(g)
        assert laplacian_count(g) == expected
        if expected <= 2000:
            trees = list(spanning_trees(g, 2000))
            assert len(trees) == expected
            assert len({t.adj for t in trees}) == expected
            assert all(t.num_edges == n - 1 and is_connected(t) for t in trees)
            assert all(set(t.edges()) <= set(g.edges()) for t in trees)


@given(graphs(max_n=9))
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    h = complement(g)
    for u, v in itertools.combinations(range(g.n), 2):
        assert g.has_edge(u, v) != h.has_edge(u, v)


@given(graphs(max_n=9))
def test_square_contains_graph_and_matches_bfs(g):
    sq = square(g)
    assert set(g.edges()) <= set(sq.edges())
    adj = adjacency(g)
    for u in range(g.n):
        dist = bfs(adj, u)
        assert set(bits(sq.adj[u])) == {v for v, d in dist.items() if 1 <= d <= 2}


@given(graphs(max_n=9))
def test_distances_match_bfs_oracle(g):
    adj = adjacency(g)
    dm = distances(g)
    for u in range(g.n):
        dist = bfs(adj, u)
        for v in range(g.n):
            assert dm[u][v] == dist.get(v, UNREACHABLE)
        assert dm[u][u] == 0
    finite = [[d for d in row if d is not UNREACHABLE] for row in dm]
    for u in range(g.n):
        if len(finite[u]) == g.n:
            assert eccentricity(g, u) == max(finite[u])
        else:
            assert eccentricity(g, u) is UNREACHABLE
    for u, v, w in itertools.product(range(g.n), repeat=3):
        if UNREACHABLE not in (dm[u][v], dm[v][w]):
            assert dm[u][w] <= dm[u][v] + dm[v][w]
        assert dm[u][v] == dm[v][u]


@given(graphs(max_n=9, connected=True))
def test_radius_diameter_relation(g):
    assert radius(g) <= diameter(g) <= 2 * radius(g)


@given(graphs(max_n=9), st.integers(0, 4), st.integers(0, 511))
@settings(max_examples=150)
def test_closed_neighborhood_composes(g, k, raw):
    s = raw & g.full
    assert closed_neighborhood(g, s, k + 1) == closed_neighborhood(g, closed_neighborhood(g, s, k), 1)
    adj = adjacency(g)
    expected = {v for x in bits(s) for v, d in bfs(adj, x).items() if d <= k}
    assert set(bits(closed_neighborhood(g, s, k))) == expected
