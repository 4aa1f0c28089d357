"""Graph generators shared by the property tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from burngame.graph import make_graph


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, connected: bool = False):
    """Random labeled graph; with ``connected`` a random spanning tree is added first."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen) if keep]
    if connected:
        parents = [draw(st.integers(0, v - 1)) for v in range(1, n)]
        edges += [(p, v) for v, p in enumerate(parents, 1)]
    return make_graph(n, edges)


def random_graph(rng: random.Random, n: int, p: float = 0.5):
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
