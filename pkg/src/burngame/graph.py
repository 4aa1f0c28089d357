"""Immutable simple graphs on at most 64 vertices.

Vertex sets are plain Python ints used as bitmasks: bit ``v`` is set when
vertex ``v`` belongs to the set.  Every graph stores its open neighbourhoods
as one such mask per vertex.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

MAX_VERTICES = 64

VertexSet = int


class GraphError(ValueError):
    """Raised for invalid graph construction or an operation's precondition failing."""


class _Unreachable:
    """Distance between vertices in different components.

    Deliberately supports no arithmetic and no ordering, so code that forgets
    to handle disconnected input fails loudly instead of computing with a
    fake large number.
    """

    _instance: _Unreachable | None = None

    def __new__(cls) -> _Unreachable:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


def bits(mask: VertexSet) -> Iterator[int]:
    """Yield the vertex indices of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    _spread_tables: tuple = field(default=(), init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has bits beyond vertex {self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def unchecked(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Construct without validation; for internal transforms that preserve the invariants."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_spread_tables", ())
        return g

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def spread_tables(self) -> tuple:
        """Byte-chunked lookup tables: OR of neighbourhoods for every 8-bit slice.

        ``spread`` uses these to compute ``N[B]`` in ``ceil(n/8)`` lookups.
        Built lazily and cached on the instance.
        """
        if not self._spread_tables:
            tables = []
            for base in range(0, self.n, 8):
                table = [0] * 256
                for m in range(1, 256):
                    low = m & -m
                    i = base + low.bit_length() - 1
                    table[m] = table[m ^ low] | (self.adj[i] if i < self.n else 0)
                tables.append((base, tuple(table)))
            object.__setattr__(self, "_spread_tables", tuple(tables))
        return self._spread_tables

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph.unchecked(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def neighborhood(g: Graph, s: VertexSet) -> VertexSet:
    """Closed neighbourhood ``N[S]``."""
    out = s
    for base, table in g.spread_tables():
        out |= table[(s >> base) & 255]
    return out


def closed_neighborhood(g: Graph, s: VertexSet, k: int) -> VertexSet:
    """All vertices within distance ``k`` of some vertex of ``s``."""
    if k < 0:
        raise GraphError("radius must be non-negative")
    for _ in range(k):
        nxt = neighborhood(g, s)
        if nxt == s:
            break
        s = nxt
    return s


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distance from ``source`` to each vertex, ``-1`` where unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = neighborhood(g, frontier) & ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


class DistanceMatrix:
    """All-pairs shortest-path distances with ``UNREACHABLE`` across components."""

    __slots__ = ("_rows",)

    def __init__(self, rows: list[list[int]]) -> None:
        self._rows = tuple(tuple(UNREACHABLE if d < 0 else d for d in row) for row in rows)

    def __getitem__(self, u: int) -> tuple:
        return self._rows[u]

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self):
        return iter(self._rows)


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs_layers(g, v) for v in g.vertices])


def eccentricity(g: Graph, v: int):
    dist = bfs_layers(g, v)
    if min(dist) < 0:
        return UNREACHABLE
    return max(dist)


def radius(g: Graph):
    eccs = [eccentricity(g, v) for v in g.vertices]
    if UNREACHABLE in eccs:
        return UNREACHABLE
    return min(eccs)


def diameter(g: Graph):
    eccs = [eccentricity(g, v) for v in g.vertices]
    if UNREACHABLE in eccs:
        return UNREACHABLE
    return max(eccs)


def square(g: Graph) -> Graph:
    return power(g, 2)


def power(g: Graph, k: int) -> Graph:
    """``G^k``: vertices adjacent iff at distance 1..k."""
    return Graph(g.n, tuple(closed_neighborhood(g, 1 << v, k) & ~(1 << v) for v in g.vertices))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: list[int]) -> Graph:
    """Subgraph induced by ``vertices``; vertex ``i`` of the result is ``vertices[i]``."""
    index = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        adj.append(mask_of(index[u] for u in bits(g.adj[v]) if u in index))
    return Graph(len(vertices), tuple(adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    adj = [0] * g.n
    for v in g.vertices:
        adj[perm[v]] = mask_of(perm[u] for u in bits(g.adj[v]))
    return Graph.unchecked(g.n, tuple(adj))


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    out = []
    remaining = g.full
    while remaining:
        comp = closed_neighborhood(g, remaining & -remaining, g.n)
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return closed_neighborhood(g, 1, g.n) == g.full


def max_degree(g: Graph) -> int:
    return max(row.bit_count() for row in g.adj)


def min_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)


def laplacian_count(g: Graph) -> int:
    """Number of spanning trees by the matrix-tree theorem (exact, Bareiss elimination)."""
    n = g.n
    if n == 1:
        return 1
    m = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(1, n):
        m[i - 1][i - 1] = g.degree(i)
        for j in bits(g.adj[i]):
            if j >= 1:
                m[i - 1][j - 1] = -1
    size = n - 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def spanning_trees(g: Graph, limit: int) -> Iterator[Graph]:
    """Yield each spanning tree of ``g`` once.

    The Kirchhoff count is checked against ``limit`` before enumeration
    starts.  Enumeration branches on each edge: contract it into the forest
    (if it joins two fragments) or delete it (if the rest stays connected).
    """
    if not is_connected(g):
        raise GraphError("spanning trees requested for a disconnected graph")
    count = laplacian_count(g)
    if count > limit:
        raise GraphError(f"{count} spanning trees exceed the limit of {limit}")
    edges = g.edges()
    n = g.n

    def find(parent: list[int], x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def connected_without(excluded: set[int], start: int) -> bool:
        adj = [0] * n
        for idx, (u, v) in enumerate(edges):
            if idx not in excluded:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return closed_neighborhood(Graph(n, tuple(adj)), 1, n) == g.full

    def rec(i: int, chosen: list[int], parent: list[int], excluded: set[int]):
        if len(chosen) == n - 1:
            yield make_graph(n, [edges[idx] for idx in chosen])
            return
        if i == len(edges):
            return
        u, v = edges[i]
        ru, rv = find(parent, u), find(parent, v)
        if ru != rv:
            new_parent = parent[:]
            new_parent[ru] = rv
            chosen.append(i)
            yield from rec(i + 1, chosen, new_parent, excluded)
            chosen.pop()
        excluded.add(i)
        if connected_without(excluded, 0):
            yield from rec(i + 1, chosen, parent, excluded)
        excluded.discard(i)

    yield from rec(0, [], list(range(n)), set())
