from __future__ import annotations

import itertools
import random

from hypothesis import given
from hypothesis import strategies as st

from burngame.canon import canonical_form, canonical_graph
from burngame.graph import is_connected, make_graph, relabel
from oracles import isomorphic, orbit_classes
from strategies import graphs, random_graph


def _labeled(n):
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield make_graph(n, [p for i, p in enumerate(pairs) if code >> i & 1])


def test_four_vertex_classes_match_permutation_oracle():
    all_forms = {canonical_form(g) for g in _labeled(4)}
    connected_forms = {canonical_form(g) for g in _labeled(4) if is_connected(g)}
    assert len(all_forms) == orbit_classes(4) == 11
    assert len(connected_forms) == orbit_classes(4, connected_only=True) == 6


def test_five_vertex_classes_match_permutation_oracle():
    assert len({canonical_form(g) for g in _labeled(5)}) == orbit_classes(5) == 34


@given(graphs(max_n=10), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(h) == canonical_form(g)
    assert canonical_graph(h) == canonical_graph(g)
    assert isomorphic(canonical_graph(g), g) if g.n <= 7 else True


def test_canonical_form_separates_non_isomorphic_graphs():
    rng = random.Random("canon-separation")
    for _ in range(300):
        n = rng.randint(2, 6)
        g, h = random_graph(rng, n), random_graph(rng, n)
        assert (canonical_form(g) == canonical_form(h)) == isomorphic(g, h)
