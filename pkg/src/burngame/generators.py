"""Graph families, products, and the two example graphs.

All constructions use deterministic vertex numbering.  Products index the
pair ``(u, v)`` as ``u * v(H) + v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import MAX_VERTICES, Graph, GraphError, empty_graph, make_graph

FAMILY_KINDS = ("path", "cycle", "complete", "star", "empty", "hypercube")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    size: int

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family {self.kind!r}")
        lo = {"cycle": 3, "star": 1, "hypercube": 1}.get(self.kind, 1)
        if self.size < lo:
            raise GraphError(f"{self.kind} needs size >= {lo}, got {self.size}")
        order = {"star": self.size + 1, "hypercube": 1 << min(self.size, 7)}.get(self.kind, self.size)
        if order > MAX_VERTICES:
            raise GraphError(f"{self.kind}:{self.size} exceeds {MAX_VERTICES} vertices")


def path(n: int) -> Graph:
    return family(FamilySpec("path", n))


def cycle(n: int) -> Graph:
    return family(FamilySpec("cycle", n))


def complete(n: int) -> Graph:
    return family(FamilySpec("complete", n))


def star(n: int) -> Graph:
    """``K_{1,n}`` with the centre at vertex 0."""
    return family(FamilySpec("star", n))


def hypercube(d: int) -> Graph:
    return family(FamilySpec("hypercube", d))


def family(spec: FamilySpec) -> Graph:
    n = spec.size
    if spec.kind == "path":
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if spec.kind == "cycle":
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if spec.kind == "complete":
        return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if spec.kind == "star":
        return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])
    if spec.kind == "empty":
        return empty_graph(n)
    # hypercube: vertex index is the binary tuple read most-significant first
    size = 1 << n
    return make_graph(size, [(v, v ^ (1 << b)) for v in range(size) for b in range(n) if not v >> b & 1])


def _check_product_size(order: int) -> None:
    if order > MAX_VERTICES:
        raise GraphError(f"product would have {order} vertices (limit {MAX_VERTICES})")


def _product(g: Graph, h: Graph, adjacent) -> Graph:
    _check_product_size(g.n * h.n)
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            for x in range(g.n):
                for y in range(h.n):
                    a, b = u * h.n + v, x * h.n + y
                    if a < b and adjacent(u, v, x, y):
                        edges.append((a, b))
    return make_graph(g.n * h.n, edges)


def cartesian(g: Graph, h: Graph) -> Graph:
    return _product(g, h, lambda u, v, x, y: (u == x and h.has_edge(v, y)) or (g.has_edge(u, x) and v == y))


def strong(g: Graph, h: Graph) -> Graph:
    def adjacent(u, v, x, y):
        ge, he = g.has_edge(u, x), h.has_edge(v, y)
        return (u == x and he) or (ge and v == y) or (ge and he)
    return _product(g, h, adjacent)


def lexicographic(g: Graph, h: Graph) -> Graph:
    """``G[H]``: copy ``u`` of ``H`` fully joined to copy ``x`` whenever ``ux`` is an edge."""
    return _product(g, h, lambda u, v, x, y: g.has_edge(u, x) or (u == x and h.has_edge(v, y)))


def corona(g: Graph, h: Graph) -> Graph:
    """``G o H``: the ``G`` vertices first, then the copy of ``H`` hung on each in order."""
    order = g.n * (1 + h.n)
    _check_product_size(order)
    edges = list(g.edges())
    for i in range(g.n):
        base = g.n + i * h.n
        edges.extend((base + a, base + b) for a, b in h.edges())
        edges.extend((i, base + a) for a in range(h.n))
    return make_graph(order, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    _check_product_size(g.n + h.n)
    return make_graph(g.n + h.n, g.edges() + [(a + g.n, b + g.n) for a, b in h.edges()])


class _Builder:
    def __init__(self) -> None:
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.labels: dict[str, int] = {}

    def vertex(self, label: str | None = None) -> int:
        v = self.n
        self.n += 1
        if label is not None:
            self.labels[label] = v
        return v

    def path_from(self, start: int, length: int, tip: str | None = None, end: int | None = None) -> int:
        """Hang a path of ``length`` edges off ``start``; optionally close it at ``end``."""
        prev = start
        inner = length - 1 if end is not None else length
        for step in range(inner):
            v = self.vertex(tip if (end is None and step == inner - 1) else None)
            self.edges.append((prev, v))
            prev = v
        if end is not None:
            self.edges.append((prev, end))
            return end
        return prev

    def build(self) -> tuple[Graph, dict[str, int]]:
        return make_graph(self.n, self.edges), dict(self.labels)


def figure1_graph() -> tuple[Graph, dict[str, int]]:
    """The 52-vertex graph whose game burning number jumps by two when ``vw`` is removed.

    Labels returned: ``u, v, w, x, y``, ``v1..v3`` (detour between ``v`` and
    ``w``), and arm tips ``u1..u6``, ``w1..w4``, ``x1..x4``.
    """
    b = _Builder()
    u = b.vertex("u")
    for i in range(1, 7):
        b.path_from(u, 4, tip=f"u{i}")
    v = b.vertex("v")
    b.edges.append((u, v))
    w = b.vertex("w")
    b.edges.append((v, w))
    prev = v
    for i in range(1, 4):
        d = b.vertex(f"v{i}")
        b.edges.append((prev, d))
        prev = d
    b.edges.append((prev, w))
    for i in range(1, 5):
        b.path_from(w, 2, tip=f"w{i}")
    x = b.vertex("x")
    b.path_from(w, 3, end=x)
    for i in range(1, 5):
        b.path_from(x, 2, tip=f"x{i}")
    b.path_from(x, 3, tip="y")
    return b.build()


def figure2_graph() -> tuple[Graph, dict[str, int]]:
    """The 11-vertex graph with ``b_g = 3`` whose spanning trees all have ``b_g >= 4``."""
    names = ["v", "u1", "u2", "u3", "w1", "w2", "x1", "x2", "y1", "y2", "z"]
    idx = {name: i for i, name in enumerate(names)}
    pairs = [
        ("v", "u1"), ("v", "u2"), ("v", "u3"), ("v", "w1"), ("v", "w2"),
        ("w1", "x1"), ("x1", "y1"), ("y1", "z"),
        ("w2", "x2"), ("x2", "y2"), ("y2", "z"),
        ("x1", "y2"), ("y2", "y1"), ("y1", "x2"),
    ]
    return make_graph(len(names), [(idx[a], idx[b]) for a, b in pairs]), idx


_PRODUCTS = {
    "cartesian": cartesian,
    "strong": strong,
    "lexicographic": lexicographic,
    "corona": corona,
    "union": disjoint_union,
}

_NAMED = {
    "figure1": lambda: figure1_graph()[0],
    "figure2": lambda: figure2_graph()[0],
}

_TOKEN = re.compile(r"\s*([A-Za-z0-9_]+)\s*(?:(:)\s*(\d+)|(\())?")


def parse_family(text: str) -> Graph:
    """Parse strings such as ``path:9``, ``hypercube:4``, ``cartesian(path:3,cycle:4)``."""
    graph, pos = _parse_expr(text, 0)
    if text[pos:].strip():
        raise GraphError(f"trailing text in family spec: {text[pos:]!r}")
    return graph


def _parse_expr(text: str, pos: int) -> tuple[Graph, int]:
    m = _TOKEN.match(text, pos)
    if not m:
        raise GraphError(f"cannot parse family spec at {text[pos:]!r}")
    name = m.group(1)
    pos = m.end()
    if m.group(2):
        return family(FamilySpec(name, int(m.group(3)))), pos
    if m.group(4):
        if name not in _PRODUCTS:
            raise GraphError(f"unknown product {name!r}")
        left, pos = _parse_expr(text, pos)
        if text[pos:pos + 1] != ",":
            raise GraphError("expected ',' between product factors")
        right, pos = _parse_expr(text, pos + 1)
        pos = len(text) - len(text[pos:].lstrip())
        if text[pos:pos + 1] != ")":
            raise GraphError("expected ')' closing product")
        return _PRODUCTS[name](left, right), pos + 1
    if name in _NAMED:
        return _NAMED[name](), pos
    raise GraphError(f"family {name!r} needs a size, e.g. {name}:4")
