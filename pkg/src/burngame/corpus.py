"""Exhaustive small-graph corpora.

Labeled corpora walk every edge subset of the upper triangle.  Isomorphism
classes are built by vertex extension: every graph on ``n`` vertices is a
graph on ``n - 1`` vertices plus one vertex with some neighbourhood, so
extending one representative per class in all ``2^(n-1)`` ways and
deduplicating by canonical form reaches every class.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_form, canonical_graph
from .formats import FormatError, emit_graph6, parse_graph6
from .graph import Graph, GraphError, complement, is_connected, make_graph

LABELED_MAX = 7
DEDUP_MAX = 8


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class CorpusSpec:
    n: int
    connected_only: bool = False
    both_connected: bool = False
    dedup: bool = True

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CorpusError("corpus needs n >= 1")
        if self.dedup:
            if self.n > DEDUP_MAX:
                raise CorpusError(f"deduplicated corpora stop at n = {DEDUP_MAX}")
            if self.n == DEDUP_MAX and not self.both_connected:
                raise CorpusError(f"n = {DEDUP_MAX} is only available with both_connected")
        elif self.n > LABELED_MAX:
            raise CorpusError(f"labeled corpora stop at n = {LABELED_MAX}")

    def accepts(self, g: Graph) -> bool:
        if self.both_connected:
            return is_connected(g) and is_connected(complement(g))
        if self.connected_only:
            return is_connected(g)
        return True


def _labeled(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield make_graph(n, [p for i, p in enumerate(pairs) if code >> i & 1])


def _extend(g: Graph) -> Iterator[Graph]:
    n = g.n
    for nbrs in range(1 << n):
        adj = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.adj)]
        adj.append(nbrs)
        yield Graph.unchecked(n + 1, tuple(adj))


def _classes(n: int, accept=None) -> tuple[Graph, ...]:
    # accept must be isomorphism-invariant; it prunes before canonicalization
    if n == 1:
        base = (make_graph(1, []),)
        return tuple(g for g in base if accept is None or accept(g))
    seen: dict[bytes, Graph] = {}
    for g in isomorphism_classes(n - 1):
        for h in _extend(g):
            if accept is not None and not accept(h):
                continue
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
    return tuple(canonical_graph(seen[k]) for k in sorted(seen))


@lru_cache(maxsize=None)
def isomorphism_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per class, sorted by canonical form."""
    return _classes(n)


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """Non-isomorphic trees on ``n`` vertices, by leaf extension."""
    if n == 1:
        return (make_graph(1, []),)
    seen: dict[bytes, Graph] = {}
    for t in trees(n - 1):
        for v in range(t.n):
            h = make_graph(n, t.edges() + [(v, n - 1)])
            key = canonical_form(h)
            if key not in seen:
                seen[key] = h
    return tuple(canonical_graph(seen[k]) for k in sorted(seen))


def enumerate_graphs(spec: CorpusSpec) -> Iterator[Graph]:
    if spec.dedup and spec.n == DEDUP_MAX:
        source = _classes(spec.n, spec.accepts)
    elif spec.dedup:
        source = isomorphism_classes(spec.n)
    else:
        source = _labeled(spec.n)
    for g in source:
        if spec.accepts(g):
            yield g


def stream_to_file(spec: CorpusSpec, path: str) -> int:
    """Write the corpus as graph6 lines; returns the number of graphs written."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in enumerate_graphs(spec):
            fh.write(emit_graph6(g) + "\n")
            count += 1
    return count


def load_corpus(path: str) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except (FormatError, GraphError) as exc:
                raise CorpusError(f"{path}: line {lineno}: {exc}") from None
