"""Canonical labelling for small graphs.

Colour refinement splits vertices by degree and iterated neighbour-colour
multisets; the search then individualizes each vertex of the first
non-singleton cell in turn and refines again.  Every discrete leaf gives a
relabelling, and the one whose graph6 string is smallest wins.  The only
automorphism pruning is for twins: two vertices of the target cell with the
same neighbours (apart from each other) give identical subtrees, so only
one of them is individualized.  That keeps empty, complete and other
twin-heavy graphs cheap up to n = 10.
"""

from __future__ import annotations

from .formats import emit_graph6
from .graph import Graph, GraphError, bits, relabel

CANON_MAX_VERTICES = 10

# _REVERSED[j][m]: the low j bits of m in reverse order
_REVERSED = [
    [int(format(m, f"0{j}b")[::-1], 2) if j else 0 for m in range(1 << j)]
    for j in range(CANON_MAX_VERTICES)
]


def _refine(nbrs: list[list[int]], colors: list[int]) -> list[int]:
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in row]))) for v, row in enumerate(nbrs)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new
        colors = new
        ncolors = len(ranking)


def _leaves(nbrs: list[list[int]], adj: tuple[int, ...], colors: list[int]):
    colors = _refine(nbrs, colors)
    n = len(nbrs)
    if len(set(colors)) == n:
        yield colors
        return
    counts = [0] * n
    for c in colors:
        counts[c] += 1
    target = next(c for c in range(n) if counts[c] > 1)
    tried: list[int] = []
    for v in range(n):
        if colors[v] != target:
            continue
        # swapping twins fixes every other vertex, so it preserves the colouring
        if any((adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for u in tried):
            continue
        tried.append(v)
        individualized = [2 * c + (1 if c == target and u != v else 0) for u, c in enumerate(colors)]
        yield from _leaves(nbrs, adj, individualized)


def _code(nbrs: list[list[int]], perm: list[int]) -> int:
    """Upper-triangle bits of the relabelled graph in graph6 order, first bit most significant."""
    n = len(nbrs)
    rows = [0] * n
    for v, row in enumerate(nbrs):
        pv = perm[v]
        acc = 0
        for u in row:
            acc |= 1 << perm[u]
        rows[pv] = acc
    code = 0
    for j in range(1, n):
        code = (code << j) | _REVERSED[j][rows[j] & ((1 << j) - 1)]
    return code


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class."""
    if g.n > CANON_MAX_VERTICES:
        raise GraphError(f"canonical form limited to {CANON_MAX_VERTICES} vertices, got {g.n}")
    nbrs = [list(bits(row)) for row in g.adj]
    best_perm, best_code = None, -1
    for perm in _leaves(nbrs, g.adj, [0] * g.n):
        code = _code(nbrs, perm)
        if best_perm is None or code < best_code:
            best_perm, best_code = perm, code
    return relabel(g, best_perm)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return emit_graph6(canonical_graph(g)).encode("ascii")
