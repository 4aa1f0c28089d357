"""Burning number, distance-k domination, and the tree bipartite-square pair."""

from __future__ import annotations

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    bits,
    closed_neighborhood,
    components,
    induced_subgraph,
    is_tree,
    neighborhood,
    square,
)


class BallCover:
    """Decides whether balls of prescribed radii can finish covering a graph.

    ``feasible(covered, radii)`` asks for centres ``x_i`` such that
    ``covered | N_{r_1}[x_1] | ... | N_{r_k}[x_k]`` is everything.  Failed
    subproblems are memoized.
    """

    def __init__(self, g: Graph) -> None:
        self.g = g
        self._balls: dict[int, list[int]] = {0: [1 << v for v in g.vertices]}
        self._failed: set[tuple[int, tuple[int, ...]]] = set()

    def balls(self, r: int) -> list[int]:
        if r not in self._balls:
            self._balls[r] = [closed_neighborhood(self.g, 1 << v, r) for v in self.g.vertices]
        return self._balls[r]

    def _pick(self, covered: VertexSet) -> int:
        """Uncovered vertex farthest from the covered region (peripheral if nothing is covered)."""
        g = self.g
        uncovered = g.full & ~covered
        if covered:
            region = covered
            while True:
                grown = neighborhood(g, region)
                if grown & uncovered == uncovered or grown == region:
                    break
                region = grown
            last = uncovered & ~region
            return (last & -last).bit_length() - 1
        best_v, best_ecc = -1, -1
        for v in bits(uncovered):
            reach, ecc = 1 << v, 0
            while True:
                grown = neighborhood(g, reach)
                if grown == reach:
                    break
                reach, ecc = grown, ecc + 1
            if ecc > best_ecc:
                best_v, best_ecc = v, ecc
        return best_v

    def search(self, covered: VertexSet, radii: tuple[int, ...]) -> dict[int, int] | None:
        """Return ``{position: centre}`` with positions indexing ``radii``, or None."""
        full = self.g.full
        if covered == full:
            return {}
        if not radii:
            return None
        key = (covered, radii)
        if key in self._failed:
            return None
        u = self._pick(covered)
        tried = set()
        for pos, r in enumerate(radii):
            if r in tried:
                continue
            tried.add(r)
            rest = radii[:pos] + radii[pos + 1:]
            ball = self.balls(r)
            for x in bits(ball[u]):
                found = self.search(covered | ball[x], rest)
                if found is not None:
                    shifted = {(p if p < pos else p + 1): c for p, c in found.items()}
                    shifted[pos] = x
                    return shifted
        self._failed.add(key)
        return None

    def feasible(self, covered: VertexSet, radii: tuple[int, ...]) -> bool:
        return self.search(covered, tuple(sorted(radii, reverse=True))) is not None


def burning_number(g: Graph) -> tuple[int, list[int]]:
    """Smallest ``k`` with sources ``x_1..x_k`` such that the union of ``N_{k-i}[x_i]`` is ``V``.

    Iterative deepening on ``k``.  Returns ``k`` and a certifying sequence.
    """
    cover = BallCover(g)
    k = 1
    while True:
        radii = tuple(range(k - 1, -1, -1))
        found = cover.search(0, radii)
        if found is not None:
            # radii left unassigned when coverage completed early take any spare vertex
            spare = (v for v in g.vertices if v not in found.values())
            return k, [found[i] if i in found else next(spare) for i in range(k)]
        k += 1


def b(g: Graph) -> int:
    return burning_number(g)[0]


def is_burning_sequence(g: Graph, seq: list[int]) -> bool:
    k = len(seq)
    covered = 0
    for i, x in enumerate(seq, 1):
        covered |= closed_neighborhood(g, 1 << x, k - i)
    return covered == g.full


def _gamma_connected(g: Graph, within: VertexSet, balls: list[int]) -> int:
    """Minimum number of balls (centres in ``within``) covering ``within``."""
    cand = list(bits(within))
    biggest = max((balls[x] & within).bit_count() for x in cand)
    # greedy upper bound
    covered, best = 0, 0
    while covered != within:
        x = max(cand, key=lambda c: ((balls[c] & within & ~covered).bit_count(), -c))
        covered |= balls[x] & within
        best += 1
    failed: dict[int, int] = {}

    def rec(covered: int, used: int) -> None:
        nonlocal best
        if covered == within:
            best = min(best, used)
            return
        uncovered = within & ~covered
        lower = -(-uncovered.bit_count() // biggest)
        if used + lower >= best or failed.get(covered, 1 << 30) <= used:
            return
        failed[covered] = used
        u = min(bits(uncovered), key=lambda v: (balls[v] & within).bit_count())
        options = sorted(bits(balls[u] & within), key=lambda x: -(balls[x] & uncovered).bit_count())
        for x in options:
            rec(covered | (balls[x] & within), used + 1)

    rec(0, 0)
    return best


def gamma_k(g: Graph, k: int) -> int:
    """Distance-k domination number; sums component optima on disconnected graphs."""
    if k < 1:
        raise GraphError("k must be at least 1")
    balls = [closed_neighborhood(g, 1 << v, k) for v in g.vertices]
    return sum(_gamma_connected(g, comp, balls) for comp in components(g))


def bipartition(t: Graph) -> tuple[VertexSet, VertexSet]:
    """Two-colouring of a connected bipartite graph; the first class contains vertex 0."""
    side = [0, 0]
    frontier, seen, parity = 1, 1, 0
    while frontier:
        side[parity] |= frontier
        nxt = neighborhood(t, frontier) & ~seen
        seen |= nxt
        frontier, parity = nxt, 1 - parity
    return side[0], side[1]


def bipartite_square_pair(t: Graph) -> tuple[Graph, VertexSet, list[int]]:
    """Smaller partite set ``X`` of tree ``t`` and ``H = T^2[X]``.

    Ties go to the class containing vertex 0.  The returned list maps
    vertices of ``H`` back to vertices of ``t``.
    """
    if not is_tree(t):
        raise GraphError("bipartite_square_pair requires a tree")
    if t.n < 2:
        raise GraphError("bipartite_square_pair requires at least two vertices")
    a, c = bipartition(t)
    x = a if a.bit_count() <= c.bit_count() else c
    index = list(bits(x))
    return induced_subgraph(square(t), index), x, index
